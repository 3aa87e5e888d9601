#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "amsi/binary_io.hpp"
#include "amsi/grid.hpp"
#include "amsi/patricia.hpp"
#include "amsi/succinct.hpp"

namespace amsi {

// Number of active levels for B points: max(ceil(lg(B)^(1+eps)), 1).
std::size_t active_level_count(std::size_t points, double epsilon);

// Descent structures on the top levels of the reversed-phrase tree. For a
// node v on an active level, S(v) lists the y-coordinates of the points
// below v in ascending order and R(v)[j] is the 1-based index of the child
// holding the point S(v)[j]. Following one child costs one rank query on R(v) per
// tracked position.
class active_level_index {
public:
    active_level_index() = default;
    static active_level_index build(const patricia_tree& rev, const grid& g, double epsilon);

    std::size_t levels() const { return levels_; }
    double epsilon() const { return epsilon_; }
    bool is_active(const patricia_tree& rev, node_id v) const { return rev.level(v) < levels_; }

    std::span<const std::uint32_t> s(node_id v) const {
        return {s_values_.data() + s_begin_[v], s_values_.data() + s_begin_[v + 1]};
    }
    std::span<const std::uint32_t> r(node_id v) const {
        return {r_values_.data() + s_begin_[v], r_values_.data() + s_begin_[v + 1]};
    }
    // Occurrences of child index `child` in R(v)[0, e).
    std::size_t rank(node_id v, std::uint32_t child, std::size_t e) const;
    bool has_r(node_id v) const { return r_rank_[v].size() > 0; }

    // For every node on the root path of `target` (root first, target last),
    // partner(node / locus) in the suffix tree. Active nodes are answered by
    // the descent; the rest fall back to grid queries.
    std::vector<node_id> descend_partner_batch(const patricia_tree& rev, node_id target, const patricia_tree& suf,
                                               node_id locus, const grid& g, query_counters* c = nullptr) const;

    void serialize(binary_writer& out) const;
    static active_level_index deserialize(binary_reader& in, const patricia_tree& rev);
    std::size_t memory_bytes() const;

private:
    void derive_ranks(const patricia_tree& rev);

    std::size_t levels_ = 1;
    double epsilon_ = 0.5;
    std::vector<std::uint64_t> s_begin_;  // per node, size node_count + 1; empty span below active levels
    std::vector<std::uint32_t> s_values_;
    std::vector<std::uint32_t> r_values_;
    std::vector<wavelet_matrix> r_rank_;
};

}  // namespace amsi
