#include "amsi/grid.hpp"

#include <algorithm>
#include <stdexcept>

namespace amsi {

namespace {

void count_range(query_counters* c) {
    if (c) ++c->range_queries;
}

// Coordinates past the grid are clipped; the caller's range may be wider.
std::uint32_t clip(std::uint32_t hi, std::size_t size) {
    return static_cast<std::uint32_t>(std::min<std::size_t>(hi, size));
}

}  // namespace

grid grid::build(const parsing& p, const patricia_tree& rev, const patricia_tree& suf) {
    std::vector<std::uint32_t> y_of_x(p.size());
    for (std::uint32_t k = 0; k < p.size(); ++k) y_of_x[rev.rank_of_boundary(k) - 1] = suf.rank_of_boundary(k);
    return from_points(std::move(y_of_x));
}

grid grid::from_points(std::vector<std::uint32_t> y_of_x) {
    grid g;
    const std::size_t B = y_of_x.size();
    g.x_of_y_.assign(B, 0);
    for (std::size_t x = 0; x < B; ++x) {
        std::uint32_t y = y_of_x[x];
        if (y == 0 || y > B || g.x_of_y_[y - 1] != 0) throw format_error("grid points are not a permutation");
        g.x_of_y_[y - 1] = static_cast<std::uint32_t>(x + 1);
    }
    g.y_of_x_ = std::move(y_of_x);
    g.by_x_ = wavelet_matrix(g.y_of_x_);
    g.by_y_ = wavelet_matrix(g.x_of_y_);
    return g;
}

bool grid::range_empty(std::uint32_t x1, std::uint32_t x2, std::uint32_t y1, std::uint32_t y2,
                       query_counters* c) const {
    count_range(c);
    x2 = clip(x2, size());
    y2 = clip(y2, size());
    if (x1 > x2 || y1 > y2 || x1 == 0 || y1 == 0) return true;
    std::size_t hits = by_x_.count_less(x1 - 1, x2, std::uint64_t{y2} + 1) - by_x_.count_less(x1 - 1, x2, y1);
    return hits == 0;
}

std::optional<std::uint32_t> grid::range_pred(std::uint32_t x1, std::uint32_t x2, std::uint64_t y,
                                              query_counters* c) const {
    count_range(c);
    x2 = clip(x2, size());
    if (x1 > x2 || x1 == 0) return std::nullopt;
    return by_x_.prev_value(x1 - 1, x2, y);
}

std::optional<std::uint32_t> grid::range_succ(std::uint32_t x1, std::uint32_t x2, std::uint64_t y,
                                              query_counters* c) const {
    count_range(c);
    x2 = clip(x2, size());
    if (x1 > x2 || x1 == 0) return std::nullopt;
    return by_x_.next_value(x1 - 1, x2, y);
}

std::optional<std::uint32_t> grid::range_pred_x(std::uint32_t y1, std::uint32_t y2, std::uint64_t x,
                                                query_counters* c) const {
    count_range(c);
    y2 = clip(y2, size());
    if (y1 > y2 || y1 == 0) return std::nullopt;
    return by_y_.prev_value(y1 - 1, y2, x);
}

std::optional<std::uint32_t> grid::range_succ_x(std::uint32_t y1, std::uint32_t y2, std::uint64_t x,
                                                query_counters* c) const {
    count_range(c);
    y2 = clip(y2, size());
    if (y1 > y2 || y1 == 0) return std::nullopt;
    return by_y_.next_value(y1 - 1, y2, x);
}

bool grid::induced(const patricia_tree& rev, node_id u, const patricia_tree& suf, node_id v,
                   query_counters* c) const {
    auto a = rev.interval(u), b = suf.interval(v);
    return !range_empty(a.lo, a.hi, b.lo, b.hi, c);
}

node_id partner_from_neighbours(const patricia_tree& t, node_id v, std::optional<std::uint32_t> below,
                                std::optional<std::uint32_t> above) {
    node_id best = no_node;
    for (auto r : {below, above}) {
        if (!r) continue;
        node_id a = t.lca(v, t.leaf_of_rank(*r));
        if (best == no_node || t.depth(a) > t.depth(best) || (t.depth(a) == t.depth(best) && t.is_ancestor(best, a)))
            best = a;
    }
    return best;
}

node_id grid::partner_in_suf(const patricia_tree& rev, node_id u, const patricia_tree& suf, node_id v,
                             query_counters* c) const {
    if (c) ++c->partner_calls;
    auto a = rev.interval(u), b = suf.interval(v);
    if (a.empty()) return no_node;
    std::size_t lo = a.lo - 1, hi = a.hi;
    std::size_t hits = by_x_.count_less(lo, hi, std::uint64_t{b.hi} + 1) - by_x_.count_less(lo, hi, b.lo);
    if (!b.empty() && hits > 0) return v;
    return partner_from_neighbours(suf, v, by_x_.prev_value(lo, hi, b.lo), by_x_.next_value(lo, hi, b.hi));
}

node_id grid::partner_in_rev(const patricia_tree& suf, node_id v, const patricia_tree& rev, node_id u,
                             query_counters* c) const {
    if (c) ++c->partner_calls;
    auto b = suf.interval(v), a = rev.interval(u);
    if (b.empty()) return no_node;
    std::size_t lo = b.lo - 1, hi = b.hi;
    std::size_t hits = by_y_.count_less(lo, hi, std::uint64_t{a.hi} + 1) - by_y_.count_less(lo, hi, a.lo);
    if (!a.empty() && hits > 0) return u;
    return partner_from_neighbours(rev, u, by_y_.prev_value(lo, hi, a.lo), by_y_.next_value(lo, hi, a.hi));
}

void grid::serialize(binary_writer& out) const { out.put_vector(y_of_x_); }

grid grid::deserialize(binary_reader& in) { return from_points(in.get_vector<std::uint32_t>()); }

std::size_t grid::memory_bytes() const {
    return (y_of_x_.capacity() + x_of_y_.capacity()) * sizeof(std::uint32_t) + by_x_.memory_bytes() +
           by_y_.memory_bytes();
}

}  // namespace amsi
