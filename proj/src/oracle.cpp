#include "amsi/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace amsi::oracle {

std::vector<std::size_t> naive_ms(std::string_view text, std::string_view pattern) {
    std::vector<std::size_t> ms(pattern.size(), 0);
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        std::size_t len = 0;
        // A prefix that does not occur cannot be extended into one that does.
        while (i + len < pattern.size() && text.find(pattern.substr(i, len + 1)) != std::string_view::npos) ++len;
        ms[i] = len;
    }
    return ms;
}

std::vector<std::pair<std::size_t, std::size_t>> naive_lpmems(std::string_view text, std::string_view pattern,
                                                              const std::vector<std::size_t>& boundaries,
                                                              std::size_t max_n) {
    if (text.size() > max_n) throw std::length_error("naive_lpmems: text longer than the cap");
    const std::size_t m = pattern.size();
    std::vector<std::pair<std::size_t, std::size_t>> out;
    std::vector<long> best_right;  // best_right[a] = max c with an occurrence for left length a, -1 if none
    for (std::size_t i = 1; i < m; ++i) {
        best_right.assign(i + 2, -1);
        std::size_t prev_end = 0;
        for (std::size_t b : boundaries) {
            // Common suffix of P[1..i] and the phrase T[prev_end+1..b].
            std::size_t left = 0;
            while (left < i && left < b - prev_end && pattern[i - 1 - left] == text[b - 1 - left]) ++left;
            // Common prefix of P[i+1..m] and T[b+1..n].
            std::size_t right = 0;
            while (i + right < m && b + right < text.size() && pattern[i + right] == text[b + right]) ++right;
            for (std::size_t a = 1; a <= left; ++a) best_right[a] = std::max(best_right[a], static_cast<long>(right));
            prev_end = b;
        }
        for (std::size_t a = 1; a <= i; ++a) {
            if (best_right[a] < 0) break;
            auto c = static_cast<std::size_t>(best_right[a]);
            // c is already maximal for a; a is maximal unless a+1 still reaches c.
            if (best_right[a + 1] >= static_cast<long>(c)) continue;
            out.emplace_back(i - a + 1, a + c);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::size_t> naive_lz_boundaries(std::string_view text) {
    std::vector<std::size_t> out;
    std::size_t i = 0;
    while (i < text.size()) {
        std::size_t best = 0;
        for (std::size_t j = 0; j < i; ++j) {
            std::size_t l = 0;
            while (i + l < text.size() && text[j + l] == text[i + l]) ++l;
            best = std::max(best, l);
        }
        i += std::max<std::size_t>(best, 1);
        out.push_back(i);
    }
    return out;
}

std::vector<std::size_t> naive_distinct_counts(std::string_view text) {
    std::vector<std::size_t> out;
    for (std::size_t k = 1; k <= text.size(); ++k) {
        std::unordered_set<std::string_view> seen;
        for (std::size_t i = 0; i + k <= text.size(); ++i) seen.insert(text.substr(i, k));
        out.push_back(seen.size());
    }
    return out;
}

std::size_t longest_prefix_match(std::string_view q, const std::vector<std::string>& strings) {
    std::size_t best = 0;
    for (const auto& s : strings) {
        std::size_t l = 0;
        while (l < q.size() && l < s.size() && q[l] == s[l]) ++l;
        best = std::max(best, l);
    }
    return best;
}

std::string fibonacci_word(std::size_t n) {
    std::string prev = "a", cur = "ab";
    if (n <= 1) return prev.substr(0, n);
    while (cur.size() < n) {
        std::string next = cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur.substr(0, n);
}

const char* family_name(family f) {
    switch (f) {
        case family::uniform: return "uniform";
        case family::fibonacci: return "fibonacci";
        case family::copy_paste: return "copy-paste";
    }
    return "?";
}

instance_generator::instance_generator(const generator_config& cfg) : cfg_(cfg), rng_(cfg.seed) {
    if (cfg_.sigma < 1 || cfg_.sigma > 26) throw std::invalid_argument("alphabet size must be in [1, 26]");
}

std::size_t instance_generator::below(std::size_t bound) {
    return bound == 0 ? 0 : static_cast<std::size_t>(rng_() % bound);
}

char instance_generator::letter() { return static_cast<char>('a' + below(cfg_.sigma)); }

std::string instance_generator::make_text(std::size_t n) {
    std::string t;
    switch (cfg_.kind) {
        case family::uniform:
            for (std::size_t i = 0; i < n; ++i) t.push_back(letter());
            break;
        case family::fibonacci:
            t = fibonacci_word(n);
            break;
        case family::copy_paste: {
            std::size_t seed_len = std::max<std::size_t>(1, std::min<std::size_t>(n, 1 + below(std::max<std::size_t>(n / 8, 1))));
            for (std::size_t i = 0; i < seed_len; ++i) t.push_back(letter());
            auto threshold = static_cast<std::uint64_t>(cfg_.mutation_rate * 1e9);
            while (t.size() < n) {
                std::size_t src = below(t.size());
                std::size_t len = 1 + below(std::max<std::size_t>(n / 4, 1));
                for (std::size_t k = 0; k < len && t.size() < n; ++k) {
                    // Copies may overlap their own output, which yields runs.
                    char ch = t[src + k];
                    if (below(1000000000) < threshold) ch = letter();
                    t.push_back(ch);
                }
            }
            break;
        }
    }
    return t;
}

std::string instance_generator::make_pattern(const std::string& text) {
    std::size_t m = 1 + below(cfg_.m_max);
    std::string p;
    std::size_t mode = below(10);
    if (mode < 1 || text.empty()) {
        for (std::size_t i = 0; i < m; ++i) p.push_back(letter());
        return p;
    }
    // Pieces of the text glued together, with a few substitutions.
    while (p.size() < m) {
        std::size_t start = below(text.size());
        std::size_t len = 1 + below(m);
        p += text.substr(start, len);
    }
    p.resize(m);
    std::size_t edits = mode < 5 ? below(3) : 0;
    for (std::size_t e = 0; e < edits; ++e) p[below(m)] = letter();
    return p;
}

test_instance instance_generator::next() {
    std::size_t n = cfg_.fixed_length ? cfg_.n_max : 1 + below(cfg_.n_max);
    test_instance inst;
    inst.kind = cfg_.kind;
    inst.text = make_text(n);
    inst.pattern = make_pattern(inst.text);
    return inst;
}

}  // namespace amsi::oracle
