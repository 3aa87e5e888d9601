#include "amsi/special_structures.hpp"

#include <algorithm>

namespace amsi {

special_structures special_structures::build(const patricia_tree& rev, const patricia_tree& suf, const grid& g,
                                             const heavy_path_decomposition& suf_hp) {
    special_structures s;
    s.lights_ = suf_hp.light_nodes();
    s.begin_.push_back(0);
    std::vector<node_id> members;
    std::vector<std::uint32_t> stack;
    for (node_id w : s.lights_) {
        members.clear();
        auto iv = suf.interval(w);
        if (!iv.empty()) {
            for (std::uint32_t y = iv.lo; y <= iv.hi; ++y) members.push_back(rev.leaf_of_rank(g.x_of(y)));
            std::sort(members.begin(), members.end());
            members.erase(std::unique(members.begin(), members.end()), members.end());
            std::size_t leaves = members.size();
            for (std::size_t i = 1; i < leaves; ++i) members.push_back(rev.lca(members[i - 1], members[i]));
            std::sort(members.begin(), members.end());
            members.erase(std::unique(members.begin(), members.end()), members.end());
        }

        const auto base = static_cast<std::uint32_t>(s.nodes_.size());
        node_id target = suf_hp.hp_leaf(w);
        stack.clear();
        for (node_id v : members) {
            while (!stack.empty() && !rev.is_ancestor(s.nodes_[base + stack.back()].orig, v)) stack.pop_back();
            local_node ln{v, stack.empty() ? none : stack.back(), none, g.partner_in_suf(rev, v, suf, target),
                          false, rev.is_leaf(v) && rev.children(v).empty()};
            if (ln.parent != none) {
                const local_node& par = s.nodes_[base + ln.parent];
                node_id c = rev.child_toward(par.orig, v);
                ln.cut = !g.induced(rev, c, suf, par.partner);
                ln.up = ln.cut ? ln.parent : par.up;
            }
            stack.push_back(static_cast<std::uint32_t>(s.nodes_.size() - base));
            s.nodes_.push_back(ln);
        }
        s.begin_.push_back(static_cast<std::uint32_t>(s.nodes_.size()));
    }
    s.derive_children();
    return s;
}

void special_structures::derive_children() {
    const std::size_t total = nodes_.size();
    child_begin_.assign(total + 1, 0);
    for (std::size_t sl = 0; sl + 1 < begin_.size(); ++sl)
        for (std::uint32_t i = begin_[sl]; i < begin_[sl + 1]; ++i)
            if (nodes_[i].parent != none) ++child_begin_[begin_[sl] + nodes_[i].parent + 1];
    for (std::size_t i = 0; i < total; ++i) child_begin_[i + 1] += child_begin_[i];
    child_list_.assign(child_begin_[total], 0);
    std::vector<std::uint32_t> fill(child_begin_.begin(), child_begin_.end() - 1);
    for (std::size_t sl = 0; sl + 1 < begin_.size(); ++sl)
        for (std::uint32_t i = begin_[sl]; i < begin_[sl + 1]; ++i)
            if (nodes_[i].parent != none) child_list_[fill[begin_[sl] + nodes_[i].parent]++] = i - begin_[sl];
}

std::optional<std::size_t> special_structures::slot(node_id w) const {
    auto it = std::lower_bound(lights_.begin(), lights_.end(), w);
    if (it == lights_.end() || *it != w) return std::nullopt;
    return static_cast<std::size_t>(it - lights_.begin());
}

std::optional<std::uint32_t> special_structures::find(std::size_t sl, node_id orig) const {
    auto ns = nodes(sl);
    auto it = std::lower_bound(ns.begin(), ns.end(), orig, [](const local_node& a, node_id b) { return a.orig < b; });
    if (it == ns.end() || it->orig != orig) return std::nullopt;
    return static_cast<std::uint32_t>(it - ns.begin());
}

std::optional<std::uint32_t> special_structures::child_toward(std::size_t sl, std::uint32_t local,
                                                              const patricia_tree& rev, rank_interval r) const {
    auto ns = nodes(sl);
    std::size_t g = begin_[sl] + local;
    auto first = child_list_.begin() + child_begin_[g], last = child_list_.begin() + child_begin_[g + 1];
    // Children are in preorder, so their rank intervals are disjoint and ascending.
    auto it = std::lower_bound(first, last, r.lo,
                               [&](std::uint32_t c, std::uint32_t lo) { return rev.interval(ns[c].orig).hi < lo; });
    if (it == last) return std::nullopt;
    auto iv = rev.interval(ns[*it].orig);
    if (iv.lo > r.hi) return std::nullopt;
    return *it;
}

bool special_structures::is_skyline(std::size_t sl, std::uint32_t local) const {
    auto ns = nodes(sl);
    std::size_t g = begin_[sl] + local;
    for (std::uint32_t i = child_begin_[g]; i < child_begin_[g + 1]; ++i) {
        const local_node& c = ns[child_list_[i]];
        if (c.cut && !c.leaf) return true;
    }
    return false;
}

void special_structures::serialize(binary_writer& out) const {
    out.put_vector(lights_);
    out.put_vector(begin_);
    out.put<std::uint64_t>(nodes_.size());
    for (const auto& n : nodes_) {
        out.put<std::uint32_t>(n.orig);
        out.put<std::uint32_t>(n.parent);
        out.put<std::uint32_t>(n.up);
        out.put<std::uint32_t>(n.partner);
        out.put<std::uint8_t>(static_cast<std::uint8_t>((n.cut ? 1 : 0) | (n.leaf ? 2 : 0)));
    }
}

special_structures special_structures::deserialize(binary_reader& in) {
    special_structures s;
    s.lights_ = in.get_vector<node_id>();
    s.begin_ = in.get_vector<std::uint32_t>();
    auto count = in.get<std::uint64_t>();
    if (s.begin_.size() != s.lights_.size() + 1 || s.begin_.front() != 0 || s.begin_.back() != count)
        throw format_error("inconsistent special structure offsets");
    s.nodes_.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        local_node n{};
        n.orig = in.get<std::uint32_t>();
        n.parent = in.get<std::uint32_t>();
        n.up = in.get<std::uint32_t>();
        n.partner = in.get<std::uint32_t>();
        auto flags = in.get<std::uint8_t>();
        n.cut = flags & 1;
        n.leaf = flags & 2;
        s.nodes_.push_back(n);
    }
    for (std::size_t sl = 0; sl + 1 < s.begin_.size(); ++sl) {
        if (s.begin_[sl] > s.begin_[sl + 1]) throw format_error("inconsistent special structure offsets");
        std::uint32_t size = s.begin_[sl + 1] - s.begin_[sl];
        for (std::uint32_t i = s.begin_[sl]; i < s.begin_[sl + 1]; ++i) {
            const auto& n = s.nodes_[i];
            if ((n.parent != none && n.parent >= i - s.begin_[sl]) || (n.up != none && n.up >= size))
                throw format_error("special structure link out of range");
        }
    }
    s.derive_children();
    return s;
}

void special_structures::check_links(std::size_t rev_nodes, std::size_t suf_nodes) const {
    for (node_id w : lights_)
        if (w >= suf_nodes) throw format_error("light node out of range");
    for (const auto& n : nodes_)
        if (n.orig >= rev_nodes || n.partner >= suf_nodes) throw format_error("special node out of range");
}

std::size_t special_structures::memory_bytes() const {
    return lights_.capacity() * sizeof(node_id) + begin_.capacity() * 4 + nodes_.capacity() * sizeof(local_node) +
           child_begin_.capacity() * 4 + child_list_.capacity() * 4;
}

}  // namespace amsi
