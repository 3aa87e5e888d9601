#include <algorithm>

#include "amsi/oracle.hpp"
#include "amsi/patricia.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace amsi;

namespace {

std::vector<std::string> leaf_labels(const patricia_tree& t, const text_oracle& text, const parsing& p) {
    std::vector<std::string> out;
    for (std::uint32_t r = 1; r <= t.rank_count(); ++r) {
        node_id v = t.leaf_of_rank(r);
        out.push_back(t.label(v, t.depth(v), text, p));
    }
    return out;
}

std::vector<std::string> reversed_phrases(const std::string& text, const parsing& p) {
    std::vector<std::string> out;
    for (std::size_t k = 0; k < p.size(); ++k) {
        std::string s(p.phrase(text, k));
        std::reverse(s.begin(), s.end());
        out.push_back(s);
    }
    return out;
}

std::vector<std::string> boundary_suffixes(const std::string& text, const parsing& p) {
    std::vector<std::string> out;
    for (std::size_t b : p.boundaries()) out.push_back(text.substr(b));
    return out;
}

}  // namespace

TEST_SUITE("patricia") {
    TEST_CASE("trees of the worked example") {
        std::string t = "aaabbbcc";
        parsing p(8, {3, 6, 8});
        plain_text_oracle text(t);
        auto rev = patricia_tree::build_reversed_phrases(p, t);
        auto suf = patricia_tree::build_boundary_suffixes(p, t);
        CHECK(leaf_labels(rev, text, p) == std::vector<std::string>{"aaa", "bbb", "cc"});
        CHECK(leaf_labels(suf, text, p) == std::vector<std::string>{"", "bbbcc", "cc"});
        rev.check_invariants(p);
        suf.check_invariants(p);

        node_id bbbcc = suf.leaf_of_rank(2), cc = suf.leaf_of_rank(3);
        CHECK(suf.lca(bbbcc, cc) == suf.root());
        CHECK(suf.lca(cc, cc) == cc);
        CHECK(suf.lca(suf.root(), bbbcc) == suf.root());
    }

    TEST_CASE("aaaa with boundaries 1 and 4") {
        std::string t = "aaaa";
        parsing p(4, {1, 4});
        plain_text_oracle text(t);
        auto rev = patricia_tree::build_reversed_phrases(p, t);
        auto suf = patricia_tree::build_boundary_suffixes(p, t);
        CHECK(leaf_labels(rev, text, p) == std::vector<std::string>{"a", "aaa"});
        CHECK(leaf_labels(suf, text, p) == std::vector<std::string>{"", "aaa"});
    }

    TEST_CASE("empty text gives lone roots") {
        parsing p;
        auto rev = patricia_tree::build_reversed_phrases(p, "");
        auto suf = patricia_tree::build_boundary_suffixes(p, "");
        CHECK(rev.node_count() == 1);
        CHECK(suf.node_count() == 1);
        CHECK(rev.rank_count() == 0);
    }

    TEST_CASE("find_all_loci on the worked example") {
        std::string t = "aaabbbcc";
        parsing p(8, {3, 6, 8});
        plain_text_oracle text(t);
        auto rev = patricia_tree::build_reversed_phrases(p, t);
        auto suf = patricia_tree::build_boundary_suffixes(p, t);
        auto loci = find_all_loci("ccabb", rev, suf, text, p);
        REQUIRE(loci.left.size() == 5);
        // Split 2: "cc" reversed is a whole leaf; "abb" matches nothing.
        CHECK(loci.left[1] == locus{rev.leaf_of_rank(3), 2});
        CHECK(loci.right[1].length == 0);
        CHECK(loci.right[1].node == suf.root());
        // Split 3: "acc" matches one 'a' of "aaa"; "bb" runs into "bbbcc".
        CHECK(loci.left[2] == locus{rev.leaf_of_rank(1), 1});
        CHECK(loci.right[2] == locus{suf.leaf_of_rank(2), 2});

        auto single = find_all_loci("a", rev, suf, text, p);
        CHECK(single.left.size() == 1);
        CHECK(single.left[0].length == 1);
    }

    TEST_CASE("search equals the longest stored prefix, on random texts") {
        for (auto kind : {oracle::family::uniform, oracle::family::fibonacci, oracle::family::copy_paste}) {
            oracle::instance_generator gen({.seed = 21, .kind = kind, .n_max = 200, .m_max = 20, .sigma = 3});
            for (int k = 0; k < 40; ++k) {
                auto inst = gen.next();
                auto p = lz_parse(inst.text);
                plain_text_oracle text(inst.text);
                auto rev = patricia_tree::build_reversed_phrases(p, inst.text);
                auto suf = patricia_tree::build_boundary_suffixes(p, inst.text);
                rev.check_invariants(p);
                suf.check_invariants(p);
                auto rs = reversed_phrases(inst.text, p), ss = boundary_suffixes(inst.text, p);
                auto sorted_rs = rs, sorted_ss = ss;
                std::sort(sorted_rs.begin(), sorted_rs.end());
                std::sort(sorted_ss.begin(), sorted_ss.end());
                CHECK(leaf_labels(rev, text, p) == sorted_rs);
                CHECK(leaf_labels(suf, text, p) == sorted_ss);

                const std::string& pat = inst.pattern;
                auto loci = find_all_loci(pat, rev, suf, text, p);
                for (std::size_t i = 1; i <= pat.size(); ++i) {
                    std::string left = pat.substr(0, i);
                    std::reverse(left.begin(), left.end());
                    std::string right = pat.substr(i);
                    auto l1 = loci.left[i - 1], l2 = loci.right[i - 1];
                    CHECK(l1.length == oracle::longest_prefix_match(left, rs));
                    CHECK(l2.length == oracle::longest_prefix_match(right, ss));
                    CHECK(rev.label(l1.node, l1.length, text, p) == left.substr(0, l1.length));
                    CHECK(suf.label(l2.node, l2.length, text, p) == right.substr(0, l2.length));
                    CHECK(l1.length <= rev.depth(l1.node));
                    if (l1.node != rev.root()) CHECK(l1.length > rev.depth(rev.parent(l1.node)));
                }
                CHECK(loci.last_char_suffix.length ==
                      oracle::longest_prefix_match(pat.substr(pat.size() - 1), ss));
            }
        }
    }

    TEST_CASE("serialization round trip") {
        std::string t = "abaababaabaababaababa";
        auto p = lz_parse(t);
        auto rev = patricia_tree::build_reversed_phrases(p, t);
        binary_writer w;
        rev.serialize(w);
        binary_reader r(w.bytes());
        auto back = patricia_tree::deserialize(r);
        CHECK(r.at_end());
        CHECK(back.node_count() == rev.node_count());
        for (node_id v = 0; v < rev.node_count(); ++v) {
            CHECK(back.parent(v) == rev.parent(v));
            CHECK(back.depth(v) == rev.depth(v));
            CHECK(back.interval(v) == rev.interval(v));
        }
        std::string cut = w.bytes().substr(0, w.bytes().size() / 2);
        binary_reader rc(cut);
        CHECK_THROWS_AS(patricia_tree::deserialize(rc), format_error);
    }
}
