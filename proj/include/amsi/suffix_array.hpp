#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace amsi {

// Suffix array, its inverse and the Kasai LCP array of a byte string.
// lcp[r] is the longest common prefix of suffixes sa[r-1] and sa[r];
// lcp[0] = 0.
struct suffix_data {
    std::vector<std::uint32_t> sa;
    std::vector<std::uint32_t> isa;
    std::vector<std::uint32_t> lcp;

    static suffix_data build(std::string_view text);
};

// Prefix doubling with two-pass radix sort, O(n lg n).
std::vector<std::uint32_t> build_suffix_array(std::string_view text);

std::vector<std::uint32_t> build_lcp_array(std::string_view text,
                                           const std::vector<std::uint32_t>& sa,
                                           const std::vector<std::uint32_t>& isa);

// lpf[i] = length of the longest factor starting at i that also starts at
// some j < i (overlaps allowed). Linear time given suffix data.
std::vector<std::uint32_t> longest_previous_factor(const suffix_data& sd);

}  // namespace amsi
