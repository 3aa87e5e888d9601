#include "amsi/succinct.hpp"

#include <algorithm>
#include <bit>

namespace amsi {

void bit_vector::build_rank() {
    ranks_.assign(words_.size() + 1, 0);
    std::uint32_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        ranks_[w] = acc;
        acc += static_cast<std::uint32_t>(std::popcount(words_[w]));
    }
    ranks_[words_.size()] = acc;
}

std::size_t bit_vector::rank1(std::size_t i) const {
    std::size_t w = i >> 6, off = i & 63;
    std::size_t r = ranks_[w];
    if (off) r += static_cast<std::size_t>(std::popcount(words_[w] & ((std::uint64_t{1} << off) - 1)));
    return r;
}

wavelet_matrix::wavelet_matrix(std::span<const std::uint32_t> values) : n_(values.size()) {
    std::uint32_t max_value = values.empty() ? 0 : *std::max_element(values.begin(), values.end());
    bits_ = std::max(1u, static_cast<unsigned>(std::bit_width(max_value)));
    levels_.assign(bits_, bit_vector(n_));
    zeros_.assign(bits_, 0);

    std::vector<std::uint32_t> cur(values.begin(), values.end()), next(n_);
    for (unsigned l = 0; l < bits_; ++l) {
        unsigned shift = bits_ - 1 - l;
        bit_vector& bv = levels_[l];
        std::size_t z = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            if ((cur[i] >> shift) & 1u)
                bv.set(i);
            else
                ++z;
        }
        bv.build_rank();
        zeros_[l] = z;
        std::size_t lo = 0, hi = z;
        for (std::size_t i = 0; i < n_; ++i) {
            if ((cur[i] >> shift) & 1u)
                next[hi++] = cur[i];
            else
                next[lo++] = cur[i];
        }
        std::swap(cur, next);
    }
}

std::size_t wavelet_matrix::count_less(std::size_t b, std::size_t e, std::uint64_t bound) const {
    if (b >= e) return 0;
    if (bound >= (std::uint64_t{1} << bits_)) return e - b;
    std::size_t result = 0;
    for (unsigned l = 0; l < bits_; ++l) {
        unsigned shift = bits_ - 1 - l;
        const bit_vector& bv = levels_[l];
        std::size_t b0 = bv.rank0(b), e0 = bv.rank0(e);
        if ((bound >> shift) & 1u) {
            result += e0 - b0;
            b = zeros_[l] + (b - b0);
            e = zeros_[l] + (e - e0);
        } else {
            b = b0;
            e = e0;
        }
    }
    return result;
}

std::size_t wavelet_matrix::rank(std::uint32_t value, std::size_t e) const {
    if (n_ == 0 || value >= (std::uint64_t{1} << bits_)) return 0;
    std::size_t b = 0;
    for (unsigned l = 0; l < bits_; ++l) {
        unsigned shift = bits_ - 1 - l;
        const bit_vector& bv = levels_[l];
        std::size_t b0 = bv.rank0(b), e0 = bv.rank0(e);
        if ((value >> shift) & 1u) {
            b = zeros_[l] + (b - b0);
            e = zeros_[l] + (e - e0);
        } else {
            b = b0;
            e = e0;
        }
    }
    return e - b;
}

std::uint32_t wavelet_matrix::kth_smallest(std::size_t b, std::size_t e, std::size_t k) const {
    std::uint32_t value = 0;
    for (unsigned l = 0; l < bits_; ++l) {
        unsigned shift = bits_ - 1 - l;
        const bit_vector& bv = levels_[l];
        std::size_t b0 = bv.rank0(b), e0 = bv.rank0(e);
        std::size_t z = e0 - b0;
        if (k < z) {
            b = b0;
            e = e0;
        } else {
            k -= z;
            value |= std::uint32_t{1} << shift;
            b = zeros_[l] + (b - b0);
            e = zeros_[l] + (e - e0);
        }
    }
    return value;
}

std::optional<std::uint32_t> wavelet_matrix::prev_value(std::size_t b, std::size_t e, std::uint64_t bound) const {
    std::size_t c = count_less(b, e, bound);
    if (c == 0) return std::nullopt;
    return kth_smallest(b, e, c - 1);
}

std::optional<std::uint32_t> wavelet_matrix::next_value(std::size_t b, std::size_t e, std::uint64_t bound) const {
    if (b >= e) return std::nullopt;
    std::size_t c = count_less(b, e, bound + 1);
    if (c >= e - b) return std::nullopt;
    return kth_smallest(b, e, c);
}

std::size_t wavelet_matrix::memory_bytes() const {
    std::size_t total = zeros_.capacity() * sizeof(std::size_t);
    for (const auto& bv : levels_) total += bv.memory_bytes();
    return total;
}

}  // namespace amsi
