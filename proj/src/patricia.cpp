#include "amsi/patricia.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "amsi/suffix_array.hpp"

namespace amsi {

patricia_tree::patricia_tree() {
    parent_ = {no_node};
    depth_ = {0};
    key_ = {0};
    child_begin_ = {0, 0};
    rep_ = {0};
    leaf_begin_ = {0, 0};
    finalize();
}

template <class CharAt>
patricia_tree patricia_tree::from_sorted(tree_kind kind, const std::vector<sorted_group>& groups,
                                         const std::vector<std::size_t>& lcps, std::size_t boundary_count,
                                         CharAt char_at) {
    struct tmp_node {
        std::size_t depth;
        bool leaf;
        std::uint32_t group;
        std::vector<std::uint32_t> children;
    };
    std::vector<tmp_node> nodes;
    nodes.push_back({0, false, 0, {}});
    // Leaves compare as if followed by a terminator, one past their length.
    auto cmp_depth = [&](std::uint32_t v) { return nodes[v].leaf ? nodes[v].depth + 1 : nodes[v].depth; };

    std::vector<std::uint32_t> stack = {0};
    for (std::size_t g = 0; g < groups.size(); ++g) {
        std::size_t h = g == 0 ? 0 : lcps[g];
        std::uint32_t last = no_node;
        while (cmp_depth(stack.back()) > h) {
            last = stack.back();
            stack.pop_back();
        }
        if (nodes[stack.back()].depth < h) {
            auto x = static_cast<std::uint32_t>(nodes.size());
            nodes.push_back({h, false, 0, {last}});
            nodes[stack.back()].children.back() = x;
            stack.push_back(x);
        }
        auto leaf = static_cast<std::uint32_t>(nodes.size());
        nodes.push_back({groups[g].length, true, static_cast<std::uint32_t>(g), {}});
        nodes[stack.back()].children.push_back(leaf);
        stack.push_back(leaf);
    }

    patricia_tree t;
    t.kind_ = kind;
    const std::size_t count = nodes.size();
    t.parent_.assign(count, no_node);
    t.depth_.assign(count, 0);
    t.key_.assign(count, 0);
    t.rep_.assign(count, 0);
    t.child_begin_.assign(count + 1, 0);
    t.child_list_.clear();
    t.child_list_.reserve(count);
    t.leaf_begin_.assign(count + 1, 0);
    t.leaf_bounds_.clear();
    t.leaf_bounds_.reserve(boundary_count);

    // Renumber in preorder.
    std::vector<node_id> order;
    order.reserve(count);
    std::vector<std::uint32_t> dfs = {0};
    while (!dfs.empty()) {
        std::uint32_t v = dfs.back();
        dfs.pop_back();
        order.push_back(v);
        const auto& ch = nodes[v].children;
        for (auto it = ch.rbegin(); it != ch.rend(); ++it) dfs.push_back(*it);
    }
    std::vector<node_id> new_id(count);
    for (std::size_t i = 0; i < count; ++i) new_id[order[i]] = static_cast<node_id>(i);

    for (std::size_t i = 0; i < count; ++i) {
        const tmp_node& tn = nodes[order[i]];
        t.depth_[i] = tn.depth;
        t.child_begin_[i] = static_cast<std::uint32_t>(t.child_list_.size());
        for (std::uint32_t c : tn.children) {
            t.child_list_.push_back(new_id[c]);
            t.parent_[new_id[c]] = static_cast<node_id>(i);
        }
        t.leaf_begin_[i] = static_cast<std::uint32_t>(t.leaf_bounds_.size());
        if (tn.leaf) {
            const auto& b = groups[tn.group].boundaries;
            t.leaf_bounds_.insert(t.leaf_bounds_.end(), b.begin(), b.end());
        }
    }
    t.child_begin_[count] = static_cast<std::uint32_t>(t.child_list_.size());
    t.leaf_begin_[count] = static_cast<std::uint32_t>(t.leaf_bounds_.size());

    // Representatives bottom-up (children have larger preorder ids).
    for (std::size_t i = count; i-- > 0;) {
        if (t.leaf_begin_[i] != t.leaf_begin_[i + 1])
            t.rep_[i] = t.leaf_bounds_[t.leaf_begin_[i]];
        else if (t.child_begin_[i] != t.child_begin_[i + 1])
            t.rep_[i] = t.rep_[t.child_list_[t.child_begin_[i]]];
    }
    for (std::size_t i = 1; i < count; ++i) {
        node_id par = t.parent_[i];
        bool leaf = t.leaf_begin_[i] != t.leaf_begin_[i + 1];
        if (leaf && t.depth_[i] == t.depth_[par])
            t.key_[i] = terminal_key;
        else
            t.key_[i] = static_cast<std::int16_t>(static_cast<unsigned char>(char_at(t.rep_[i], t.depth_[par])));
    }
    t.finalize();
    return t;
}

patricia_tree patricia_tree::build_reversed_phrases(const parsing& p, std::string_view text) {
    const std::size_t B = p.size();
    // Character `off` of reversed phrase k.
    auto char_at = [&](std::uint32_t k, std::size_t off) { return text[p.boundary(k) - 1 - off]; };
    auto rev_lcp = [&](std::uint32_t a, std::uint32_t b) {
        std::size_t la = p.phrase_length(a), lb = p.phrase_length(b), l = 0;
        std::size_t lim = std::min(la, lb);
        while (l < lim && char_at(a, l) == char_at(b, l)) ++l;
        return l;
    };

    std::vector<std::uint32_t> order(B);
    for (std::uint32_t k = 0; k < B; ++k) order[k] = k;
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        std::size_t l = rev_lcp(a, b);
        std::size_t la = p.phrase_length(a), lb = p.phrase_length(b);
        if (l == la || l == lb) return la < lb;
        return static_cast<unsigned char>(char_at(a, l)) < static_cast<unsigned char>(char_at(b, l));
    });

    std::vector<sorted_group> groups;
    std::vector<std::size_t> lcps;
    for (std::size_t r = 0; r < B; ++r) {
        std::uint32_t k = order[r];
        std::size_t len = p.phrase_length(k);
        if (r > 0) {
            std::size_t l = rev_lcp(order[r - 1], k);
            if (l == len && l == groups.back().length) {
                groups.back().boundaries.push_back(k);
                continue;
            }
            lcps.push_back(l);
        } else {
            lcps.push_back(0);
        }
        groups.push_back({len, {k}});
    }
    return from_sorted(tree_kind::reversed_phrases, groups, lcps, B, char_at);
}

patricia_tree patricia_tree::build_boundary_suffixes(const parsing& p, std::string_view text) {
    if (text.empty()) return build_boundary_suffixes(p, text, suffix_data{});
    return build_boundary_suffixes(p, text, suffix_data::build(text));
}

patricia_tree patricia_tree::build_boundary_suffixes(const parsing& p, std::string_view text, const suffix_data& sd) {
    const std::size_t B = p.size();
    const std::size_t n = text.size();
    auto char_at = [&](std::uint32_t k, std::size_t off) { return text[p.boundary(k) + off]; };

    // The empty suffix (boundary n) sorts first; the rest follow SA order.
    std::vector<std::uint32_t> order;
    order.reserve(B);
    std::vector<std::uint32_t> by_rank;
    for (std::uint32_t k = 0; k < B; ++k) {
        if (p.boundary(k) == n)
            order.push_back(k);
        else
            by_rank.push_back(k);
    }
    std::sort(by_rank.begin(), by_rank.end(),
              [&](std::uint32_t a, std::uint32_t b) { return sd.isa[p.boundary(a)] < sd.isa[p.boundary(b)]; });
    order.insert(order.end(), by_rank.begin(), by_rank.end());

    std::vector<sorted_group> groups;
    std::vector<std::size_t> lcps;
    for (std::size_t r = 0; r < order.size(); ++r) {
        groups.push_back({n - p.boundary(order[r]), {order[r]}});
        lcps.push_back(0);
    }
    // LCP of SA-adjacent boundary suffixes: running minimum over the LCP
    // array between their ranks.
    std::size_t first = order.size() - by_rank.size();
    for (std::size_t r = first + 1; r < order.size(); ++r) {
        std::uint32_t lo = sd.isa[p.boundary(order[r - 1])], hi = sd.isa[p.boundary(order[r])];
        std::uint32_t m = sd.lcp[lo + 1];
        for (std::uint32_t q = lo + 2; q <= hi; ++q) m = std::min(m, sd.lcp[q]);
        lcps[r] = m;
    }
    return from_sorted(tree_kind::boundary_suffixes, groups, lcps, B, char_at);
}

void patricia_tree::finalize() {
    const std::size_t count = parent_.size();
    level_.assign(count, 0);
    for (std::size_t v = 1; v < count; ++v) level_[v] = level_[parent_[v]] + 1;

    subtree_end_.resize(count);
    for (std::size_t v = 0; v < count; ++v) subtree_end_[v] = static_cast<node_id>(v);
    for (std::size_t v = count; v-- > 1;) subtree_end_[parent_[v]] = std::max(subtree_end_[parent_[v]], subtree_end_[v]);

    leaf_count_ = 0;
    leaf_of_rank_.clear();
    rank_of_boundary_.assign(leaf_bounds_.size(), 0);
    lmost_.assign(count, 1);
    rmost_.assign(count, 0);
    for (std::size_t v = 0; v < count; ++v) {
        auto bounds = leaf_boundaries(static_cast<node_id>(v));
        if (bounds.empty()) continue;
        ++leaf_count_;
        lmost_[v] = static_cast<std::uint32_t>(leaf_of_rank_.size() + 1);
        for (std::uint32_t k : bounds) {
            leaf_of_rank_.push_back(static_cast<node_id>(v));
            if (k >= rank_of_boundary_.size()) throw format_error("boundary index out of range");
            rank_of_boundary_[k] = static_cast<std::uint32_t>(leaf_of_rank_.size());
        }
        rmost_[v] = static_cast<std::uint32_t>(leaf_of_rank_.size());
    }
    for (std::size_t v = count; v-- > 1;) {
        node_id par = parent_[v];
        if (lmost_[v] > rmost_[v]) continue;
        if (lmost_[par] > rmost_[par]) {
            lmost_[par] = lmost_[v];
            rmost_[par] = rmost_[v];
        } else {
            lmost_[par] = std::min(lmost_[par], lmost_[v]);
            rmost_[par] = std::max(rmost_[par], rmost_[v]);
        }
    }

    // lca(u, v) for u < v, v not in u's subtree, is the parent of the
    // shallowest node in preorder range (u, v].
    min_level_.clear();
    min_level_.emplace_back(count);
    for (std::size_t v = 0; v < count; ++v) min_level_[0][v] = static_cast<std::uint32_t>(v);
    for (std::size_t j = 1; (std::size_t{1} << j) <= count; ++j) {
        const auto& prev = min_level_[j - 1];
        std::vector<std::uint32_t> cur(count - (std::size_t{1} << j) + 1);
        for (std::size_t i = 0; i < cur.size(); ++i) {
            std::uint32_t a = prev[i], b = prev[i + (std::size_t{1} << (j - 1))];
            cur[i] = level_[a] <= level_[b] ? a : b;
        }
        min_level_.push_back(std::move(cur));
    }
}

node_id patricia_tree::lca(node_id u, node_id v) const {
    if (u == v) return u;
    if (u > v) std::swap(u, v);
    if (is_ancestor(u, v)) return u;
    std::size_t lo = u + 1, hi = v;
    auto j = static_cast<std::size_t>(std::bit_width(hi - lo + 1) - 1);
    std::uint32_t a = min_level_[j][lo], b = min_level_[j][hi - (std::size_t{1} << j) + 1];
    return parent_[level_[a] <= level_[b] ? a : b];
}

node_id patricia_tree::child_toward(node_id v, node_id d) const {
    auto ch = children(v);
    // Children are in preorder, so the last child with id <= d is the one.
    auto it = std::upper_bound(ch.begin(), ch.end(), d);
    if (it == ch.begin()) throw std::logic_error("child_toward: not a proper descendant");
    return *(it - 1);
}

std::string patricia_tree::label(node_id v, std::size_t len, const text_oracle& text, const parsing& p) const {
    if (len == 0) return {};
    std::size_t b = p.boundary(rep_[v]);
    if (kind_ == tree_kind::reversed_phrases) return text.extract_reversed(b - len + 1, len);
    return text.extract(b + 1, len);
}

locus patricia_tree::search(std::string_view pattern, const text_oracle& text, const parsing& p,
                            query_counters* counters) const {
    node_id v = 0;
    while (depth_[v] < pattern.size()) {
        auto ch = children(v);
        auto want = static_cast<std::int16_t>(static_cast<unsigned char>(pattern[depth_[v]]));
        auto it = std::lower_bound(ch.begin(), ch.end(), want,
                                   [&](node_id c, std::int16_t key) { return key_[c] < key; });
        if (it == ch.end() || key_[*it] != want) break;
        v = *it;
    }
    if (v == 0) return {0, 0};

    std::size_t len = std::min<std::size_t>(depth_[v], pattern.size());
    std::string lab = label(v, len, text, p);
    if (counters) counters->chars_extracted += len;
    std::size_t matched = 0;
    while (matched < len && lab[matched] == pattern[matched]) ++matched;

    while (parent_[v] != no_node && depth_[parent_[v]] >= matched) v = parent_[v];
    return {v, matched};
}

void patricia_tree::check_invariants(const parsing& p) const {
    const std::size_t count = node_count();
    auto fail = [](const std::string& what) { throw std::logic_error("patricia invariant: " + what); };
    if (leaf_bounds_.size() != p.size()) fail("boundary count differs from parsing");
    if (kind_ == tree_kind::boundary_suffixes && leaf_count_ != p.size()) fail("suffix tree leaf count differs from B");
    for (std::uint32_t k = 0; k < rank_of_boundary_.size(); ++k)
        if (rank_of_boundary_[k] == 0) fail("boundary " + std::to_string(k) + " stored in no leaf");
    for (node_id v = 0; v < count; ++v)
        for (std::uint32_t k : leaf_boundaries(v)) {
            std::size_t len = kind_ == tree_kind::reversed_phrases ? p.phrase_length(k)
                                                                   : p.text_length() - p.boundary(k);
            if (depth_[v] != len) fail("leaf depth differs from its string length");
        }
    for (node_id v = 1; v < count; ++v) {
        node_id par = parent_[v];
        if (depth_[v] < depth_[par] || (depth_[v] == depth_[par] && !is_terminal(v)))
            fail("string depth does not increase at node " + std::to_string(v));
        if (is_terminal(v) && !is_leaf(v)) fail("terminal edge to an internal node");
    }
    for (node_id v = 0; v < count; ++v) {
        auto ch = children(v);
        if (ch.empty()) {
            if (v != 0 && !is_leaf(v)) fail("childless node without boundaries");
            continue;
        }
        std::uint32_t expect = lmost_[v];
        for (std::size_t i = 0; i < ch.size(); ++i) {
            if (i > 0 && key_[ch[i - 1]] >= key_[ch[i]]) fail("children out of order");
            if (lmost_[ch[i]] != expect) fail("child intervals do not partition the parent");
            expect = rmost_[ch[i]] + 1;
        }
        if (expect != rmost_[v] + 1) fail("child intervals do not cover the parent");
    }
}

void patricia_tree::serialize(binary_writer& out) const {
    out.put<std::uint8_t>(static_cast<std::uint8_t>(kind_));
    out.put_vector(parent_);
    out.put_vector(depth_);
    std::vector<std::uint16_t> keys(key_.size());
    for (std::size_t i = 0; i < key_.size(); ++i) keys[i] = static_cast<std::uint16_t>(key_[i]);
    out.put_vector(keys);
    out.put_vector(child_begin_);
    out.put_vector(child_list_);
    out.put_vector(rep_);
    out.put_vector(leaf_begin_);
    out.put_vector(leaf_bounds_);
}

patricia_tree patricia_tree::deserialize(binary_reader& in) {
    patricia_tree t;
    auto kind = in.get<std::uint8_t>();
    if (kind > 1) throw format_error("unknown tree kind");
    t.kind_ = static_cast<tree_kind>(kind);
    t.parent_ = in.get_vector<node_id>();
    t.depth_ = in.get_vector<std::uint64_t>();
    auto keys = in.get_vector<std::uint16_t>();
    t.key_.resize(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) t.key_[i] = static_cast<std::int16_t>(keys[i]);
    t.child_begin_ = in.get_vector<std::uint32_t>();
    t.child_list_ = in.get_vector<node_id>();
    t.rep_ = in.get_vector<std::uint32_t>();
    t.leaf_begin_ = in.get_vector<std::uint32_t>();
    t.leaf_bounds_ = in.get_vector<std::uint32_t>();

    const std::size_t count = t.parent_.size();
    if (count == 0 || t.depth_.size() != count || t.key_.size() != count || t.rep_.size() != count ||
        t.child_begin_.size() != count + 1 || t.leaf_begin_.size() != count + 1 ||
        t.child_begin_.back() != t.child_list_.size() || t.leaf_begin_.back() != t.leaf_bounds_.size())
        throw format_error("inconsistent tree arrays");
    for (std::size_t v = 1; v < count; ++v)
        if (t.parent_[v] >= v) throw format_error("tree is not in preorder");
    for (std::size_t v = 0; v < count; ++v)
        if (t.child_begin_[v] > t.child_begin_[v + 1] || t.leaf_begin_[v] > t.leaf_begin_[v + 1])
            throw format_error("inconsistent tree offsets");
    for (node_id c : t.child_list_)
        if (c == 0 || c >= count) throw format_error("child id out of range");
    t.finalize();
    return t;
}

std::size_t patricia_tree::memory_bytes() const {
    std::size_t total = parent_.capacity() * sizeof(node_id) + depth_.capacity() * sizeof(std::uint64_t) +
                        key_.capacity() * sizeof(std::int16_t) + child_begin_.capacity() * 4 +
                        child_list_.capacity() * 4 + rep_.capacity() * 4 + leaf_begin_.capacity() * 4 +
                        leaf_bounds_.capacity() * 4 + level_.capacity() * 4 + subtree_end_.capacity() * 4 +
                        lmost_.capacity() * 4 + rmost_.capacity() * 4 + leaf_of_rank_.capacity() * 4 +
                        rank_of_boundary_.capacity() * 4;
    for (const auto& row : min_level_) total += row.capacity() * 4;
    return total;
}

split_loci find_all_loci(std::string_view pattern, const patricia_tree& rev, const patricia_tree& suf,
                         const text_oracle& text, const parsing& p, query_counters* counters) {
    const std::size_t m = pattern.size();
    split_loci out;
    out.left.reserve(m);
    out.right.reserve(m);
    std::string reversed;
    for (std::size_t i = 1; i <= m; ++i) {
        reversed.assign(pattern.rbegin() + static_cast<std::ptrdiff_t>(m - i), pattern.rend());
        out.left.push_back(rev.search(reversed, text, p, counters));
        out.right.push_back(i < m ? suf.search(pattern.substr(i), text, p, counters) : locus{suf.root(), 0});
    }
    if (m > 0) out.last_char_suffix = suf.search(pattern.substr(m - 1), text, p, counters);
    return out;
}

}  // namespace amsi
