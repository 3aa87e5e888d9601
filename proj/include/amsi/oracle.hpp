#pragma once

// Brute-force references for testing. Nothing here depends on the index
// library; the code only uses the standard library.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace amsi::oracle {

// MS[i] = longest prefix of P[i..m] occurring in T (0-based result).
std::vector<std::size_t> naive_ms(std::string_view text, std::string_view pattern);

// (start, length) pairs, 1-based start, sorted and unique. A pair is
// reported for split i (1 <= i < m) when P[i-a+1..i+c] occurs in T as a
// suffix of length a >= 1 of the phrase ending at some boundary b followed
// by T[b+1..b+c], and neither a+1 nor c+1 keeps such an occurrence.
// Boundaries are 1-based phrase ends; the last one must be n.
std::vector<std::pair<std::size_t, std::size_t>> naive_lpmems(std::string_view text, std::string_view pattern,
                                                              const std::vector<std::size_t>& boundaries,
                                                              std::size_t max_n = 4096);

// Greedy LZ77 phrase ends by direct comparison against every earlier start.
std::vector<std::size_t> naive_lz_boundaries(std::string_view text);

// Number of distinct substrings of each length k = 1..n (index k-1).
std::vector<std::size_t> naive_distinct_counts(std::string_view text);

// Length of the longest prefix of `q` that is a prefix of one of `strings`.
std::size_t longest_prefix_match(std::string_view q, const std::vector<std::string>& strings);

// Prefix of length n of the infinite Fibonacci word abaababaabaab...
std::string fibonacci_word(std::size_t n);

enum class family { uniform, fibonacci, copy_paste };
const char* family_name(family f);

struct test_instance {
    std::string text;
    std::string pattern;
    family kind;
};

struct generator_config {
    std::uint64_t seed = 1;
    family kind = family::uniform;
    std::size_t n_max = 512;
    std::size_t m_max = 64;
    unsigned sigma = 4;
    bool fixed_length = false;  // text length exactly n_max
    double mutation_rate = 0.05;
};

// Deterministic stream of instances for a given configuration.
class instance_generator {
public:
    explicit instance_generator(const generator_config& cfg);
    test_instance next();

private:
    std::size_t below(std::size_t bound);  // uniform in [0, bound)
    char letter();
    std::string make_text(std::size_t n);
    std::string make_pattern(const std::string& text);

    generator_config cfg_;
    std::mt19937_64 rng_;
};

}  // namespace amsi::oracle
