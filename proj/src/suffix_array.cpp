#include "amsi/suffix_array.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

namespace amsi {

std::vector<std::uint32_t> build_suffix_array(std::string_view text) {
    const std::size_t n = text.size();
    if (n >= std::numeric_limits<std::uint32_t>::max())
        throw std::length_error("text too long for 32-bit suffix array");
    std::vector<std::uint32_t> sa(n), rank(n), tmp(n), next_rank(n);
    if (n == 0) return sa;

    // rank 0 is reserved for "past the end".
    for (std::size_t i = 0; i < n; ++i)
        rank[i] = static_cast<unsigned char>(text[i]) + 1u;
    std::size_t classes = 257;

    std::vector<std::uint32_t> count;
    for (std::size_t k = 1;; k <<= 1) {
        auto second = [&](std::size_t i) -> std::uint32_t {
            return i + k < n ? rank[i + k] : 0u;
        };
        // LSD radix: by second key, then stably by first key.
        count.assign(classes + 1, 0);
        for (std::size_t i = 0; i < n; ++i) ++count[second(i)];
        for (std::size_t c = 1; c <= classes; ++c) count[c] += count[c - 1];
        for (std::size_t i = n; i-- > 0;) tmp[--count[second(i)]] = static_cast<std::uint32_t>(i);

        count.assign(classes + 1, 0);
        for (std::size_t i = 0; i < n; ++i) ++count[rank[i]];
        for (std::size_t c = 1; c <= classes; ++c) count[c] += count[c - 1];
        for (std::size_t r = n; r-- > 0;) {
            std::uint32_t i = tmp[r];
            sa[--count[rank[i]]] = i;
        }

        next_rank[sa[0]] = 1;
        for (std::size_t r = 1; r < n; ++r) {
            std::uint32_t a = sa[r - 1], b = sa[r];
            bool same = rank[a] == rank[b] && second(a) == second(b);
            next_rank[b] = next_rank[a] + (same ? 0u : 1u);
        }
        std::swap(rank, next_rank);
        classes = rank[sa[n - 1]];
        if (classes == n) break;
    }
    return sa;
}

std::vector<std::uint32_t> build_lcp_array(std::string_view text,
                                           const std::vector<std::uint32_t>& sa,
                                           const std::vector<std::uint32_t>& isa) {
    const std::size_t n = text.size();
    std::vector<std::uint32_t> lcp(n, 0);
    std::size_t h = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t r = isa[i];
        if (r == 0) {
            h = 0;
            continue;
        }
        std::size_t j = sa[r - 1];
        while (i + h < n && j + h < n && text[i + h] == text[j + h]) ++h;
        lcp[r] = static_cast<std::uint32_t>(h);
        if (h > 0) --h;
    }
    return lcp;
}

suffix_data suffix_data::build(std::string_view text) {
    suffix_data sd;
    sd.sa = build_suffix_array(text);
    sd.isa.resize(sd.sa.size());
    for (std::size_t r = 0; r < sd.sa.size(); ++r) sd.isa[sd.sa[r]] = static_cast<std::uint32_t>(r);
    sd.lcp = build_lcp_array(text, sd.sa, sd.isa);
    return sd;
}

std::vector<std::uint32_t> longest_previous_factor(const suffix_data& sd) {
    const std::size_t n = sd.sa.size();
    std::vector<std::uint32_t> lpf(n, 0);
    if (n == 0) return lpf;

    // Nearest SA neighbour with a smaller text position, on each side. The
    // stack keeps, for every entry, the LCP with the entry just above it.
    struct entry {
        std::uint32_t r;
        std::uint32_t link;
    };
    std::vector<entry> stack;
    stack.reserve(64);

    for (std::size_t r = 0; r < n; ++r) {
        std::uint32_t running = r > 0 ? sd.lcp[r] : 0;
        while (!stack.empty() && sd.sa[stack.back().r] > sd.sa[r]) {
            stack.pop_back();
            if (!stack.empty()) running = std::min(running, stack.back().link);
        }
        if (!stack.empty()) {
            lpf[sd.sa[r]] = running;
            stack.back().link = running;
        }
        stack.push_back({static_cast<std::uint32_t>(r), 0});
    }

    stack.clear();
    for (std::size_t r = n; r-- > 0;) {
        std::uint32_t running = r + 1 < n ? sd.lcp[r + 1] : 0;
        while (!stack.empty() && sd.sa[stack.back().r] > sd.sa[r]) {
            stack.pop_back();
            if (!stack.empty()) running = std::min(running, stack.back().link);
        }
        if (!stack.empty()) {
            lpf[sd.sa[r]] = std::max(lpf[sd.sa[r]], running);
            stack.back().link = running;
        }
        stack.push_back({static_cast<std::uint32_t>(r), 0});
    }
    return lpf;
}

}  // namespace amsi
