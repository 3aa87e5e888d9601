#include "amsi/oracle.hpp"
#include "doctest.h"

using namespace amsi::oracle;
using ms = std::vector<std::size_t>;
using pairs = std::vector<std::pair<std::size_t, std::size_t>>;

TEST_SUITE("oracle") {
    TEST_CASE("naive_ms") {
        CHECK(naive_ms("aaabbbcc", "ccabb") == ms{2, 1, 3, 2, 1});
        CHECK(naive_ms("abcd", "abcd") == ms{4, 3, 2, 1});
        CHECK(naive_ms("ab", "zz") == ms{0, 0});
        CHECK(naive_ms("ab", "").empty());
    }

    TEST_CASE("naive_ms properties") {
        instance_generator gen({.seed = 5, .kind = family::copy_paste, .n_max = 100, .m_max = 30, .sigma = 2});
        for (int k = 0; k < 50; ++k) {
            auto inst = gen.next();
            auto v = naive_ms(inst.text, inst.pattern);
            std::size_t m = v.size();
            for (std::size_t i = 0; i < m; ++i) {
                CHECK(v[i] <= m - i);
                if (i + 1 < m) CHECK(v[i + 1] + 1 >= v[i]);
                CHECK(inst.text.find(inst.pattern.substr(i, v[i])) != std::string::npos);
                if (i + v[i] < m) CHECK(inst.text.find(inst.pattern.substr(i, v[i] + 1)) == std::string::npos);
            }
        }
    }

    TEST_CASE("naive_lpmems") {
        CHECK(naive_lpmems("aaabbbcc", "ccabb", {3, 6, 8}) == pairs{{1, 1}, {1, 2}, {3, 3}, {4, 1}});
        CHECK(naive_lpmems("aaaa", "aa", {1, 4}) == pairs{{1, 2}});
        CHECK(naive_lpmems("aaaa", "bb", {1, 4}).empty());
        CHECK_THROWS(naive_lpmems(std::string(5000, 'a'), "aa", {5000}));
    }

    TEST_CASE("naive_lpmems members occur and cannot grow within their split") {
        instance_generator gen({.seed = 6, .kind = family::uniform, .n_max = 80, .m_max = 16, .sigma = 2});
        for (int k = 0; k < 40; ++k) {
            auto inst = gen.next();
            auto b = naive_lz_boundaries(inst.text);
            for (auto [s, len] : naive_lpmems(inst.text, inst.pattern, b))
                CHECK(inst.text.find(inst.pattern.substr(s - 1, len)) != std::string::npos);
        }
    }

    TEST_CASE("generators") {
        CHECK(fibonacci_word(13) == "abaababaabaab");
        instance_generator fib({.seed = 1, .kind = family::fibonacci, .n_max = 13, .fixed_length = true});
        CHECK(fib.next().text == "abaababaabaab");

        instance_generator periodic({.seed = 2, .kind = family::copy_paste, .n_max = 200, .mutation_rate = 0.0});
        for (int k = 0; k < 20; ++k) {
            auto t = periodic.next().text;
            // Without mutations everything past the seed (at most n/8+1
            // characters) is copied, so no new letter appears later.
            std::string seed = t.substr(0, t.size() / 8 + 1);
            for (char ch : t) CHECK(seed.find(ch) != std::string::npos);
        }

        generator_config cfg{.seed = 99, .kind = family::uniform, .sigma = 26};
        instance_generator a(cfg), b(cfg);
        for (int k = 0; k < 20; ++k) {
            auto x = a.next(), y = b.next();
            CHECK(x.text == y.text);
            CHECK(x.pattern == y.pattern);
        }
        CHECK_THROWS(instance_generator({.sigma = 0}));
    }

    TEST_CASE("longest_prefix_match and distinct counts") {
        CHECK(longest_prefix_match("abx", {"abc", "b"}) == 2);
        CHECK(longest_prefix_match("", {"abc"}) == 0);
        CHECK(naive_distinct_counts("aaabbbcc") == ms{3, 5, 6, 5, 4, 3, 2, 1});
        CHECK(naive_lz_boundaries("aaabbbcc") == ms{1, 3, 4, 6, 7, 8});
    }
}
