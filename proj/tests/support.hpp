#pragma once

#include <string>
#include <vector>

#include "amsi/attractor.hpp"
#include "amsi/ms_index.hpp"

namespace amsi::test {

// LZ parsing by default; explicit boundaries are 1-based phrase ends.
inline ms_index index_of(const std::string& text) { return ms_index::build(text); }

inline ms_index index_of(const std::string& text, std::vector<std::size_t> boundaries) {
    return ms_index::build(text, parsing(text.size(), std::move(boundaries)));
}

inline std::vector<std::size_t> to_vec(std::span<const std::size_t> s) { return {s.begin(), s.end()}; }

inline std::vector<std::pair<std::size_t, std::size_t>> as_pairs(const std::vector<lpmem>& v) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (auto e : v) out.emplace_back(e.start, e.length);
    return out;
}

}  // namespace amsi::test
