#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace amsi {

struct suffix_data;

// Raised by the quadratic checkers when the input exceeds their size cap.
class size_limit_error : public std::length_error {
public:
    using std::length_error::length_error;
};

// Phrase k (0-based) is T(b_{k-1}..b_k] with b_{-1} = 0, i.e. the half-open
// run of characters ending at boundary b_k. Boundaries are 1-based, strictly
// increasing, and the last one equals n.
class parsing {
public:
    parsing() = default;
    parsing(std::size_t n, std::vector<std::size_t> boundaries);

    std::size_t text_length() const { return n_; }
    std::size_t size() const { return boundaries_.size(); }
    bool empty() const { return boundaries_.empty(); }
    std::span<const std::size_t> boundaries() const { return boundaries_; }
    std::size_t boundary(std::size_t k) const { return boundaries_[k]; }

    // 1-based first position of phrase k.
    std::size_t phrase_begin(std::size_t k) const { return k == 0 ? 1 : boundaries_[k - 1] + 1; }
    std::size_t phrase_length(std::size_t k) const {
        return boundaries_[k] - (k == 0 ? 0 : boundaries_[k - 1]);
    }
    std::string_view phrase(std::string_view text, std::size_t k) const {
        return text.substr(phrase_begin(k) - 1, phrase_length(k));
    }

    friend bool operator==(const parsing&, const parsing&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::size_t> boundaries_;
};

// Exact non-negative fraction, kept reduced.
struct rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    double value() const { return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den); }
    std::string to_string() const;

    friend bool operator==(const rational&, const rational&) = default;
    friend std::strong_ordering operator<=>(const rational& a, const rational& b);
};

struct repetitiveness_stats {
    std::size_t n = 0;
    std::size_t z = 0;
    std::size_t gamma_prime = 0;
    rational delta;
};

// Greedy self-referential LZ77: each phrase is the longest prefix of the
// remaining text that also starts at an earlier position, or one fresh
// character when there is none.
parsing lz_parse(std::string_view text);
parsing lz_parse(std::string_view text, const suffix_data& sd);

inline constexpr std::size_t default_attractor_check_cap = 4096;

// True iff every substring of `text` has an occurrence covering one of the
// 1-based `positions`. Quadratic; refuses inputs longer than `max_n`.
bool validate_attractor(std::string_view text, std::span<const std::size_t> positions,
                        std::size_t max_n = default_attractor_check_cap);

// d_k for k = 1..n (index 0 holds d_1), via suffix and LCP arrays.
std::vector<std::size_t> distinct_substring_counts(std::string_view text);
std::vector<std::size_t> distinct_substring_counts(const suffix_data& sd);

// max_k d_k / k; zero for the empty text.
rational compute_delta(std::string_view text);
rational compute_delta(const suffix_data& sd);

// Boundaries = positions plus n. Throws std::invalid_argument for positions
// outside [1, n] or not strictly ascending.
parsing boundaries_to_parsing(std::size_t n, std::span<const std::size_t> positions);

}  // namespace amsi
