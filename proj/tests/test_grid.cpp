#include <algorithm>

#include "amsi/grid.hpp"
#include "amsi/oracle.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace amsi;

namespace {

// Lowest ancestor of v in `t` whose interval shares a point with `xs`.
node_id naive_partner(const patricia_tree& t, node_id v, const std::vector<std::uint32_t>& coords) {
    for (node_id a = v;; a = t.parent(a)) {
        auto iv = t.interval(a);
        for (auto y : coords)
            if (iv.lo <= y && y <= iv.hi) return a;
        if (a == t.root()) return no_node;
    }
}

}  // namespace

TEST_SUITE("grid") {
    TEST_CASE("worked example grid") {
        auto idx = test::index_of("aaabbbcc", {3, 6, 8});
        const grid& g = idx.points();
        CHECK(g.points() == std::vector<std::uint32_t>{2, 3, 1});
        CHECK_FALSE(g.range_empty(1, 2, 2, 3));
        CHECK(g.range_empty(3, 3, 2, 3));
        CHECK(g.range_empty(2, 1, 1, 3));
        CHECK(g.range_pred(1, 2, 3) == 2u);
        CHECK(g.range_pred(1, 3, 1) == std::nullopt);
        CHECK(g.range_succ(3, 3, 0) == 1u);

        const auto &rev = idx.rev(), &suf = idx.suf();
        node_id aaa = rev.leaf_of_rank(1), bbb = rev.leaf_of_rank(2), cc = suf.leaf_of_rank(3);
        CHECK(g.induced(rev, bbb, suf, cc));
        CHECK_FALSE(g.induced(rev, aaa, suf, cc));
        CHECK(g.induced(rev, rev.root(), suf, suf.root()));
        CHECK(g.partner_in_suf(rev, aaa, suf, cc) == suf.root());
        CHECK(g.partner_in_suf(rev, bbb, suf, cc) == cc);
        CHECK(g.partner_in_suf(rev, rev.root(), suf, cc) == cc);
    }

    TEST_CASE("aaaa example and empty grid") {
        auto idx = test::index_of("aaaa", {1, 4});
        CHECK(idx.points().points() == std::vector<std::uint32_t>{2, 1});
        auto empty = test::index_of("");
        CHECK(empty.points().size() == 0);
        CHECK(empty.points().range_empty(1, 1, 1, 1));
        CHECK_FALSE(empty.points().induced(empty.rev(), 0, empty.suf(), 0));
    }

    TEST_CASE("from_points rejects non-permutations") {
        CHECK_THROWS_AS(grid::from_points({1, 1}), format_error);
        CHECK_THROWS_AS(grid::from_points({0}), format_error);
        CHECK_NOTHROW(grid::from_points({2, 1}));
    }

    TEST_CASE("range queries against a linear scan") {
        oracle::instance_generator gen({.seed = 4, .kind = oracle::family::uniform, .n_max = 300, .sigma = 4});
        for (int k = 0; k < 20; ++k) {
            auto idx = test::index_of(gen.next().text);
            const grid& g = idx.points();
            auto B = static_cast<std::uint32_t>(g.size());
            for (std::uint32_t x1 = 1; x1 <= B; x1 += 3)
                for (std::uint32_t x2 = x1; x2 <= B; x2 += 5)
                    for (std::uint32_t y = 0; y <= B + 1; y += 2) {
                        std::optional<std::uint32_t> pred, succ, pred_x, succ_x;
                        bool any = false;
                        for (std::uint32_t x = x1; x <= x2; ++x) {
                            auto yy = g.y_of(x);
                            if (yy < y && (!pred || yy > *pred)) pred = yy;
                            if (yy > y && (!succ || yy < *succ)) succ = yy;
                            if (yy >= std::max(y, 1u) && yy <= y + 3) any = true;
                            // The dual over y-range [x1,x2] reads x_of.
                            auto xx = g.x_of(x);
                            if (xx < y && (!pred_x || xx > *pred_x)) pred_x = xx;
                            if (xx > y && (!succ_x || xx < *succ_x)) succ_x = xx;
                        }
                        CHECK(g.range_pred(x1, x2, y) == pred);
                        CHECK(g.range_succ(x1, x2, y) == succ);
                        CHECK(g.range_pred_x(x1, x2, y) == pred_x);
                        CHECK(g.range_succ_x(x1, x2, y) == succ_x);
                        CHECK(g.range_empty(x1, x2, std::max(y, 1u), y + 3) == !any);
                    }
        }
    }

    TEST_CASE("partners against an ancestor walk") {
        oracle::instance_generator gen({.seed = 8, .kind = oracle::family::copy_paste, .n_max = 250, .sigma = 3});
        for (int k = 0; k < 15; ++k) {
            auto idx = test::index_of(gen.next().text);
            const auto &rev = idx.rev(), &suf = idx.suf();
            const grid& g = idx.points();
            for (node_id u = 0; u < rev.node_count(); ++u) {
                auto iu = rev.interval(u);
                std::vector<std::uint32_t> ys;
                for (auto x = iu.lo; x <= iu.hi; ++x) ys.push_back(g.y_of(x));
                for (node_id v = 0; v < suf.node_count(); v += 3) {
                    node_id want = naive_partner(suf, v, ys);
                    CHECK(g.partner_in_suf(rev, u, suf, v) == want);
                    CHECK(g.induced(rev, u, suf, v) == (want == v));
                }
            }
            for (node_id v = 0; v < suf.node_count(); ++v) {
                auto iv = suf.interval(v);
                std::vector<std::uint32_t> xs;
                for (auto y = iv.lo; y <= iv.hi; ++y) xs.push_back(g.x_of(y));
                for (node_id u = 0; u < rev.node_count(); u += 3)
                    CHECK(g.partner_in_rev(suf, v, rev, u) == naive_partner(rev, u, xs));
            }
        }
    }
}
