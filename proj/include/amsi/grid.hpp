#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "amsi/attractor.hpp"
#include "amsi/binary_io.hpp"
#include "amsi/patricia.hpp"
#include "amsi/succinct.hpp"
#include "amsi/types.hpp"

namespace amsi {

// B points in rank space, one per boundary: x is the boundary's rank in the
// reversed-phrase tree, y its rank in the suffix tree. Coordinates are
// 1-based. Two wavelet matrices answer queries in either orientation.
class grid {
public:
    grid() = default;
    static grid build(const parsing& p, const patricia_tree& rev, const patricia_tree& suf);
    // From y_of_x[x-1] = y; throws format_error if not a permutation.
    static grid from_points(std::vector<std::uint32_t> y_of_x);

    std::size_t size() const { return y_of_x_.size(); }
    std::uint32_t y_of(std::uint32_t x) const { return y_of_x_[x - 1]; }
    std::uint32_t x_of(std::uint32_t y) const { return x_of_y_[y - 1]; }
    const std::vector<std::uint32_t>& points() const { return y_of_x_; }

    // No point in the closed rectangle [x1,x2] x [y1,y2]. Empty ranges count as empty.
    bool range_empty(std::uint32_t x1, std::uint32_t x2, std::uint32_t y1, std::uint32_t y2,
                     query_counters* c = nullptr) const;
    // Largest y' < y (resp. smallest y' > y) among points with x in [x1,x2].
    std::optional<std::uint32_t> range_pred(std::uint32_t x1, std::uint32_t x2, std::uint64_t y,
                                            query_counters* c = nullptr) const;
    std::optional<std::uint32_t> range_succ(std::uint32_t x1, std::uint32_t x2, std::uint64_t y,
                                            query_counters* c = nullptr) const;
    // Same with the axes swapped: x' among points with y in [y1,y2].
    std::optional<std::uint32_t> range_pred_x(std::uint32_t y1, std::uint32_t y2, std::uint64_t x,
                                              query_counters* c = nullptr) const;
    std::optional<std::uint32_t> range_succ_x(std::uint32_t y1, std::uint32_t y2, std::uint64_t x,
                                              query_counters* c = nullptr) const;

    // u is a node of the reversed-phrase tree, v of the suffix tree.
    bool induced(const patricia_tree& rev, node_id u, const patricia_tree& suf, node_id v,
                 query_counters* c = nullptr) const;

    // Lowest ancestor of v (in suf) induced with u (in rev).
    node_id partner_in_suf(const patricia_tree& rev, node_id u, const patricia_tree& suf, node_id v,
                           query_counters* c = nullptr) const;
    // Lowest ancestor of u (in rev) induced with v (in suf).
    node_id partner_in_rev(const patricia_tree& suf, node_id v, const patricia_tree& rev, node_id u,
                           query_counters* c = nullptr) const;

    void serialize(binary_writer& out) const;
    static grid deserialize(binary_reader& in);
    std::size_t memory_bytes() const;

private:
    std::vector<std::uint32_t> y_of_x_, x_of_y_;
    wavelet_matrix by_x_;  // position x-1 holds y
    wavelet_matrix by_y_;  // position y-1 holds x
};

// Given the nearest coordinates on either side of a target interval, the
// deeper of the two lcas with `v`. Shared by the grid and the active levels.
node_id partner_from_neighbours(const patricia_tree& t, node_id v, std::optional<std::uint32_t> below,
                                std::optional<std::uint32_t> above);

}  // namespace amsi
