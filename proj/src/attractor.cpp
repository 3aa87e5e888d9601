#include "amsi/attractor.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "amsi/suffix_array.hpp"

namespace amsi {

parsing::parsing(std::size_t n, std::vector<std::size_t> boundaries)
    : n_(n), boundaries_(std::move(boundaries)) {
    if (n_ == 0) {
        if (!boundaries_.empty()) throw std::invalid_argument("empty text cannot have boundaries");
        return;
    }
    if (boundaries_.empty() || boundaries_.back() != n_)
        throw std::invalid_argument("last boundary must equal the text length");
    std::size_t prev = 0;
    for (std::size_t b : boundaries_) {
        if (b <= prev || b > n_) throw std::invalid_argument("boundaries must be strictly ascending in [1, n]");
        prev = b;
    }
}

std::strong_ordering operator<=>(const rational& a, const rational& b) {
    // Denominators and numerators are bounded by the text length, so the
    // cross products fit in 64 bits for any text we can index.
    return a.num * b.den <=> b.num * a.den;
}

std::string rational::to_string() const {
    std::ostringstream os;
    if (den == 1) {
        os << num;
    } else {
        os.precision(6);
        os << value();
    }
    return os.str();
}

parsing lz_parse(std::string_view text) {
    if (text.empty()) return {};
    return lz_parse(text, suffix_data::build(text));
}

parsing lz_parse(std::string_view text, const suffix_data& sd) {
    const std::size_t n = text.size();
    if (n == 0) return {};
    auto lpf = longest_previous_factor(sd);
    std::vector<std::size_t> ends;
    std::size_t p = 0;
    while (p < n) {
        std::size_t len = std::max<std::size_t>(1, lpf[p]);
        p += len;
        ends.push_back(p);
    }
    return parsing(n, std::move(ends));
}

bool validate_attractor(std::string_view text, std::span<const std::size_t> positions, std::size_t max_n) {
    const std::size_t n = text.size();
    if (n > max_n)
        throw size_limit_error("attractor check refused: text length " + std::to_string(n) +
                               " exceeds cap " + std::to_string(max_n));
    for (std::size_t p : positions)
        if (p < 1 || p > n) throw std::invalid_argument("attractor position out of range");
    if (n == 0) return true;

    // gap[i] = distance from 0-based start i to the next attractor position.
    constexpr std::size_t far = std::numeric_limits<std::size_t>::max();
    std::vector<bool> marked(n, false);
    for (std::size_t p : positions) marked[p - 1] = true;
    std::vector<std::size_t> gap(n, far);
    std::size_t next = far;
    for (std::size_t i = n; i-- > 0;) {
        if (marked[i]) next = i;
        gap[i] = next == far ? far : next - i;
    }

    auto sd = suffix_data::build(text);
    // A length-l substring is a maximal SA run with consecutive LCP >= l; it
    // is covered iff some suffix in the run reaches an attractor within l.
    for (std::size_t l = 1; l <= n; ++l) {
        std::size_t r = 0;
        while (r < n) {
            std::size_t best = gap[sd.sa[r]];
            bool long_enough = n - sd.sa[r] >= l;
            std::size_t e = r + 1;
            while (e < n && sd.lcp[e] >= l) {
                best = std::min(best, gap[sd.sa[e]]);
                ++e;
            }
            if (long_enough && (best == far || best > l - 1)) return false;
            r = e;
        }
    }
    return true;
}

std::vector<std::size_t> distinct_substring_counts(const suffix_data& sd) {
    const std::size_t n = sd.sa.size();
    std::vector<std::size_t> at_least(n + 2, 0);
    for (std::size_t r = 1; r < n; ++r) ++at_least[sd.lcp[r]];
    for (std::size_t h = n; h-- > 0;) at_least[h] += at_least[h + 1];
    std::vector<std::size_t> d(n);
    for (std::size_t k = 1; k <= n; ++k) d[k - 1] = (n - k + 1) - at_least[k];
    return d;
}

std::vector<std::size_t> distinct_substring_counts(std::string_view text) {
    return distinct_substring_counts(suffix_data::build(text));
}

rational compute_delta(const suffix_data& sd) {
    auto d = distinct_substring_counts(sd);
    rational best{0, 1};
    for (std::size_t k = 1; k <= d.size(); ++k) {
        rational cand{d[k - 1], k};
        if (cand > best) best = cand;
    }
    if (best.num == 0) return {0, 1};
    std::uint64_t g = std::gcd(best.num, best.den);
    return {best.num / g, best.den / g};
}

rational compute_delta(std::string_view text) {
    if (text.empty()) return {0, 1};
    return compute_delta(suffix_data::build(text));
}

parsing boundaries_to_parsing(std::size_t n, std::span<const std::size_t> positions) {
    std::vector<std::size_t> b;
    b.reserve(positions.size() + 1);
    std::size_t prev = 0;
    for (std::size_t p : positions) {
        if (p < 1 || p > n) throw std::invalid_argument("attractor position " + std::to_string(p) + " outside [1, n]");
        if (p <= prev) throw std::invalid_argument("attractor positions must be strictly ascending");
        b.push_back(p);
        prev = p;
    }
    if (n > 0 && (b.empty() || b.back() != n)) b.push_back(n);
    return parsing(n, std::move(b));
}

}  // namespace amsi
