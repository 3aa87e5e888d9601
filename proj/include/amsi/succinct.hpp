#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace amsi {

// Plain bit vector with a rank directory of one cumulative count per word.
class bit_vector {
public:
    bit_vector() = default;
    explicit bit_vector(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool operator[](std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    // Must be called after the last set() and before any rank query.
    void build_rank();

    // Number of ones in [0, i).
    std::size_t rank1(std::size_t i) const;
    std::size_t rank0(std::size_t i) const { return i - rank1(i); }

    std::size_t memory_bytes() const {
        return words_.capacity() * sizeof(std::uint64_t) + ranks_.capacity() * sizeof(std::uint32_t);
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
    std::vector<std::uint32_t> ranks_;
};

// Wavelet matrix over a sequence of integers in [0, 2^bits). Supports
// counting, rank and k-th smallest in any position range in O(bits).
class wavelet_matrix {
public:
    wavelet_matrix() = default;
    explicit wavelet_matrix(std::span<const std::uint32_t> values);

    std::size_t size() const { return n_; }

    // Values < bound among positions [b, e).
    std::size_t count_less(std::size_t b, std::size_t e, std::uint64_t bound) const;

    // Occurrences of `value` among positions [0, e).
    std::size_t rank(std::uint32_t value, std::size_t e) const;

    // k-th smallest (0-based) value among positions [b, e); requires k < e-b.
    std::uint32_t kth_smallest(std::size_t b, std::size_t e, std::size_t k) const;

    // Largest value < bound in [b, e), if any.
    std::optional<std::uint32_t> prev_value(std::size_t b, std::size_t e, std::uint64_t bound) const;
    // Smallest value > bound in [b, e), if any.
    std::optional<std::uint32_t> next_value(std::size_t b, std::size_t e, std::uint64_t bound) const;

    std::size_t memory_bytes() const;

private:
    std::size_t n_ = 0;
    unsigned bits_ = 0;
    std::vector<bit_vector> levels_;
    std::vector<std::size_t> zeros_;
};

}  // namespace amsi
