#include "amsi/active_levels.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace amsi {

std::size_t active_level_count(std::size_t points, double epsilon) {
    if (points < 2) return 1;
    double lg = std::log2(static_cast<double>(points));
    auto l = static_cast<std::size_t>(std::ceil(std::pow(lg, 1.0 + epsilon) - 1e-9));
    return std::max<std::size_t>(l, 1);
}

active_level_index active_level_index::build(const patricia_tree& rev, const grid& g, double epsilon) {
    active_level_index a;
    a.epsilon_ = epsilon;
    a.levels_ = active_level_count(g.size(), epsilon);
    const std::size_t count = rev.node_count();
    a.s_begin_.assign(count + 1, 0);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pts;
    for (node_id v = 0; v < count; ++v) {
        a.s_begin_[v] = a.s_values_.size();
        if (rev.level(v) >= a.levels_) continue;
        auto iv = rev.interval(v);
        if (iv.empty()) continue;
        pts.clear();
        auto ch = rev.children(v);
        std::uint32_t ci = 0;
        for (std::uint32_t x = iv.lo; x <= iv.hi; ++x) {
            while (ci < ch.size() && rev.interval(ch[ci]).hi < x) ++ci;
            // Children are numbered from 1; points held by v itself (a leaf)
            // get 0.
            bool in_child = ci < ch.size() && rev.interval(ch[ci]).lo <= x;
            pts.emplace_back(g.y_of(x), in_child ? ci + 1 : 0);
        }
        std::sort(pts.begin(), pts.end());
        for (auto [y, c] : pts) {
            a.s_values_.push_back(y);
            a.r_values_.push_back(c);
        }
    }
    a.s_begin_[count] = a.s_values_.size();
    a.derive_ranks(rev);
    return a;
}

void active_level_index::derive_ranks(const patricia_tree& rev) {
    const std::size_t count = rev.node_count();
    r_rank_.assign(count, wavelet_matrix{});
    for (node_id v = 0; v < count; ++v)
        if (s_begin_[v + 1] > s_begin_[v] && !rev.children(v).empty())
            r_rank_[v] = wavelet_matrix(r(v));
}

std::size_t active_level_index::rank(node_id v, std::uint32_t child, std::size_t e) const {
    return r_rank_[v].rank(child, e);
}

std::vector<node_id> active_level_index::descend_partner_batch(const patricia_tree& rev, node_id target,
                                                               const patricia_tree& suf, node_id locus, const grid& g,
                                                               query_counters* c) const {
    std::vector<node_id> path;
    for (node_id v = target; v != no_node; v = rev.parent(v)) path.push_back(v);
    std::reverse(path.begin(), path.end());

    std::vector<node_id> out(path.size(), no_node);
    auto iv = suf.interval(locus);
    // p = #{y < lMost}, q = #{y <= rMost} inside S(v).
    std::size_t p = iv.lo - 1, q = iv.empty() ? p : iv.hi;
    bool tracking = rev.node_count() > 0 && !rev.interval(0).empty() && is_active(rev, 0);
    for (std::size_t j = 0; j < path.size(); ++j) {
        node_id v = path[j];
        if (!tracking) {
            out[j] = g.partner_in_suf(rev, v, suf, locus, c);
            continue;
        }
        auto sv = s(v);
        if (q > p) {
            out[j] = locus;
        } else {
            std::optional<std::uint32_t> below, above;
            if (p > 0) below = sv[p - 1];
            if (q < sv.size()) above = sv[q];
            out[j] = partner_from_neighbours(suf, locus, below, above);
        }
        if (j + 1 < path.size()) {
            node_id next = path[j + 1];
            if (!is_active(rev, next) || !has_r(v)) {
                tracking = false;
                continue;
            }
            auto ch = rev.children(v);
            auto child = static_cast<std::uint32_t>(std::lower_bound(ch.begin(), ch.end(), next) - ch.begin()) + 1;
            p = rank(v, child, p);
            q = rank(v, child, q);
            if (c) c->rank_calls += 2;
        }
    }
    return out;
}

void active_level_index::serialize(binary_writer& out) const {
    out.put<std::uint64_t>(levels_);
    out.put_f64(epsilon_);
    out.put_vector(s_begin_);
    out.put_vector(s_values_);
    out.put_vector(r_values_);
}

active_level_index active_level_index::deserialize(binary_reader& in, const patricia_tree& rev) {
    active_level_index a;
    a.levels_ = in.get<std::uint64_t>();
    a.epsilon_ = in.get_f64();
    a.s_begin_ = in.get_vector<std::uint64_t>();
    a.s_values_ = in.get_vector<std::uint32_t>();
    a.r_values_ = in.get_vector<std::uint32_t>();
    if (a.s_begin_.size() != rev.node_count() + 1 || a.s_values_.size() != a.r_values_.size() ||
        a.s_begin_.back() != a.s_values_.size() || a.levels_ == 0)
        throw format_error("inconsistent active-level arrays");
    for (std::size_t v = 0; v < rev.node_count(); ++v) {
        if (a.s_begin_[v] > a.s_begin_[v + 1]) throw format_error("inconsistent active-level offsets");
        std::size_t size = a.s_begin_[v + 1] - a.s_begin_[v];
        if (size != 0 && size != rev.interval(static_cast<node_id>(v)).hi - rev.interval(static_cast<node_id>(v)).lo + 1)
            throw format_error("active-level sequence size mismatch");
        if (rev.level(static_cast<node_id>(v)) < a.levels_ && size == 0 && !rev.interval(static_cast<node_id>(v)).empty())
            throw format_error("missing active-level sequence");
        for (std::size_t j = a.s_begin_[v]; j < a.s_begin_[v + 1]; ++j)
            if (a.s_values_[j] == 0 || a.s_values_[j] > rev.rank_count() || a.r_values_[j] > rev.children(static_cast<node_id>(v)).size())
                throw format_error("active-level child index out of range");
    }
    a.derive_ranks(rev);
    return a;
}

std::size_t active_level_index::memory_bytes() const {
    std::size_t total = s_begin_.capacity() * 8 + s_values_.capacity() * 4 + r_values_.capacity() * 4;
    for (const auto& w : r_rank_) total += w.memory_bytes();
    return total;
}

}  // namespace amsi
