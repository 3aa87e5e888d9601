#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace amsi {

using node_id = std::uint32_t;
inline constexpr node_id no_node = std::numeric_limits<node_id>::max();

// Where a Patricia search stopped. `node` is the lower endpoint of the edge
// the match ended on; `length` is the number of matched characters, which is
// at most the string depth of `node` and greater than that of its parent.
struct locus {
    node_id node = 0;
    std::size_t length = 0;

    friend bool operator==(const locus&, const locus&) = default;
};

// 1-based closed interval of leaf ranks. lo > hi means empty.
struct rank_interval {
    std::uint32_t lo = 1;
    std::uint32_t hi = 0;

    bool empty() const { return lo > hi; }
    friend bool operator==(const rank_interval&, const rank_interval&) = default;
};

// A locally potential maximal exact match, as a 1-based start in the
// pattern and a length.
struct lpmem {
    std::size_t start = 0;
    std::size_t length = 0;

    friend auto operator<=>(const lpmem&, const lpmem&) = default;
};

using ms_array = std::vector<std::size_t>;

struct query_counters {
    std::uint64_t partner_calls = 0;
    std::uint64_t range_queries = 0;
    std::uint64_t rank_calls = 0;
    std::uint64_t chars_extracted = 0;

    query_counters& operator+=(const query_counters& o) {
        partner_calls += o.partner_calls;
        range_queries += o.range_queries;
        rank_calls += o.rank_calls;
        chars_extracted += o.chars_extracted;
        return *this;
    }
};

}  // namespace amsi
