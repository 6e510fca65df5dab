#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "fatpoints/different.hpp"
#include "fatpoints/kaehler.hpp"
#include "fatpoints/separators.hpp"
#include "fixtures.hpp"
#include "testutil.hpp"

using namespace fatpoints;

namespace {

FatPointScheme sec6_scheme() {
    return fixtures::grid_point_scheme({{1, 1, 1}, {1, 2, 1}, {1, 3, 1}, {2, 1, 1}, {2, 2, 1}});
}

std::vector<BiDegree> gen_degrees(const GeneratorSet& g) {
    std::vector<BiDegree> ds;
    for (const auto& [f, d] : g.gens) ds.push_back(d);
    return ds;
}

}  // namespace

TEST_CASE("minimal generators of grid ideals") {
    GeneratorSet g = minimal_generators(FatPointScheme::grid_ci(2, 3));
    REQUIRE(g.verified);
    CHECK(gen_degrees(g) == std::vector<BiDegree>{{2, 0}, {0, 3}});

    // doubling a complete intersection squares the generators; the sweep
    // reports them ordered by (i+j, i)
    GeneratorSet g2 = minimal_generators(FatPointScheme::grid_ci(2, 2).equimultiple(2));
    REQUIRE(g2.verified);
    CHECK(gen_degrees(g2) == std::vector<BiDegree>{{0, 4}, {2, 2}, {4, 0}});

    // the 5-point staircase needs exactly three generators
    GeneratorSet g3 = minimal_generators(sec6_scheme());
    REQUIRE(g3.verified);
    CHECK(gen_degrees(g3) == std::vector<BiDegree>{{2, 0}, {0, 3}, {1, 2}});
}

TEST_CASE("generators actually generate: each one vanishes on the scheme") {
    FatPointScheme y = fixtures::scheme_ex23();
    GeneratorSet g = minimal_generators(y);
    REQUIRE(g.verified);
    for (const auto& [f, d] : g.gens) {
        CHECK(f.bidegree() == d);
        for (const auto& e : y.entries())
            CHECK(f.evaluate(e.p.x0, e.p.x1, e.p.y0, e.p.y1) == 0);
    }
}

TEST_CASE("Kaehler different window on the staircase example") {
    ThetaReport rep = kaehler_different_hf(sec6_scheme(), 6, 6);
    CHECK(rep.hf.window == fixtures::sec6_theta);
    CHECK(rep.simplePoints == 5);
    CHECK(rep.hf.meta.eventual == 5);
    CHECK(rep.hf.window[2][4] == 5);

    ThetaStable st = theta_stable_value(sec6_scheme());
    CHECK(st.value == 5);
    CHECK(st.t1 == 2);
    CHECK(st.t2 == 4);
}

TEST_CASE("the different vanishes when no point is simple") {
    FatPointScheme y = FatPointScheme::grid_ci(2, 2).equimultiple(2);
    ThetaReport rep = kaehler_different_hf(y);
    for (const auto& row : rep.hf.window)
        for (long long v : row) CHECK(v == 0);
    CHECK(rep.simplePoints == 0);
    CHECK(theta_stable_value(y).value == 0);
}

TEST_CASE("theta rejects non-ACM input") {
    FatPointScheme twoDiag({{PointP1P1::make(1, 1, 1, 1), 1}, {PointP1P1::make(1, 2, 1, 2), 1}});
    CHECK_THROWS_AS(kaehler_different_hf(twoDiag), std::invalid_argument);
}

TEST_CASE("separator degrees: closed formula vs generator sweep") {
    FatPointScheme g22 = FatPointScheme::grid_ci(2, 2);
    for (int idx = 0; idx < g22.size(); ++idx) {
        CHECK(degree_tuple_acm(g22, idx) == DegreeTuple{{1, 1}});
        GeneratorSet seps = minimal_separators(g22, idx);
        REQUIRE(seps.verified);
        CHECK(separator_degrees(seps) == DegreeTuple{{1, 1}});
        for (const auto& [f, d] : seps.gens) CHECK(is_separator(f, g22, idx));
    }

    FatPointScheme fat = g22.equimultiple(2);
    for (int idx = 0; idx < fat.size(); ++idx) {
        DegreeTuple closed = degree_tuple_acm(fat, idx);
        CHECK(closed == DegreeTuple{{1, 3}, {3, 1}});
        GeneratorSet seps = minimal_separators(fat, idx);
        REQUIRE(seps.verified);
        CHECK(separator_degrees(seps) == closed);
        for (const auto& [f, d] : seps.gens) CHECK(is_separator(f, fat, idx));
    }
}

TEST_CASE("separator definition test") {
    FatPointScheme g22 = FatPointScheme::grid_ci(2, 2);
    // (X1 - 2 X0)(Y1 - 2 Y0) vanishes at P22, P21 (x part), P12 (y part)
    // but not at P11: a separator of P11
    BiPoly sep = BiPoly::parse("X1 - 2*X0") * BiPoly::parse("Y1 - 2*Y0");
    CHECK(is_separator(sep, g22, 0));
    CHECK(!is_separator(sep, g22, 1));
    // an element of the full ideal separates nothing
    BiPoly inIdeal = BiPoly::parse("X1 - X0") * BiPoly::parse("X1 - 2*X0");
    for (int idx = 0; idx < 4; ++idx) CHECK(!is_separator(inIdeal, g22, idx));
    CHECK(!is_separator(BiPoly::zero(), g22, 0));
    CHECK_THROWS_AS(is_separator(BiPoly::parse("X0 + Y0"), g22, 0), std::invalid_argument);
}

TEST_CASE("removal formula matches literal deletion") {
    std::mt19937 rng(31);
    std::vector<FatPointScheme> cases = {FatPointScheme::grid_ci(2, 3), sec6_scheme(),
                                         testutil::random_staircase(rng, 1, 1),
                                         testutil::random_scheme(rng, 4, 1, 1)};
    for (const auto& x : cases) {
        auto [r, c] = default_hf_window(x);
        for (int idx = 0; idx < x.size(); ++idx) {
            HilbertMatrix byFormula = hf_remove_point(x, idx, r, c);
            HilbertMatrix literal = hf(x.remove_entry(idx), r, c);
            CHECK(byFormula.window == literal.window);
        }
    }
    CHECK_THROWS_AS(hf_remove_point(FatPointScheme::grid_ci(2, 2).equimultiple(2), 0),
                    std::invalid_argument);
}

TEST_CASE("Cayley-Bacharach predicates agree on grids and staircases") {
    FatPointScheme g23 = FatPointScheme::grid_ci(2, 3);
    CHECK(is_cbp(g23));
    CHECK(is_cbp_by_degree_tuples(g23));
    CHECK(is_ci(g23));
    CHECK(!is_aci(g23));
    CHECK(cbp_different_criterion(g23));

    FatPointScheme st = sec6_scheme();
    CHECK(!is_cbp(st));
    CHECK(!is_cbp_by_degree_tuples(st));
    CHECK(!is_ci(st));
    CHECK(is_aci(st));
    CHECK(!cbp_different_criterion(st));

    FatPointScheme lshape = fixtures::grid_point_scheme({{1, 1, 1}, {1, 2, 1}, {2, 1, 1}});
    CHECK(is_aci(lshape));
    CHECK(!is_ci(lshape));
    CHECK(!is_cbp(lshape));

    FatPointScheme single({{PointP1P1::make(1, 1, 1, 1), 1}});
    CHECK(is_ci(single));
    CHECK(is_cbp(single));
    CHECK(cbp_different_criterion(single));
}

TEST_CASE("both Cayley-Bacharach paths agree on random reduced staircases") {
    std::mt19937 rng(37);
    for (int it = 0; it < 6; ++it) {
        FatPointScheme x = testutil::random_acm_scheme(rng, 1, 1);
        CHECK(is_cbp(x) == is_cbp_by_degree_tuples(x));
    }
}

TEST_CASE("grid different window closes into the grid Hilbert function") {
    // HF_theta(i,j) = HF_X(i-r+1, j-t+1) for the complete intersection grids
    for (int d1 = 1; d1 <= 2; ++d1)
        for (int d2 = d1; d2 <= 3; ++d2) {
            FatPointScheme g = FatPointScheme::grid_ci(d1, d2);
            ThetaReport rep = kaehler_different_hf(g);
            int rows = rep.hf.rows(), cols = rep.hf.cols();
            HilbertMatrix hx = hf(g, rows, cols);
            for (int i = 0; i < rows; ++i)
                for (int j = 0; j < cols; ++j) {
                    long long expected =
                        (i - d1 + 1 < 0 || j - d2 + 1 < 0) ? 0 : hx.window[i - d1 + 1][j - d2 + 1];
                    CHECK(rep.hf.window[i][j] == expected);
                }

            // first difference is the all-ones d1 x d2 block anchored at (d1-1, d2-1)
            IntMatrix delta = first_difference(rep.hf);
            for (int i = 0; i < rows; ++i)
                for (int j = 0; j < cols; ++j) {
                    bool inBlock = i >= d1 - 1 && i <= 2 * d1 - 2 && j >= d2 - 1 && j <= 2 * d2 - 2;
                    CHECK(delta[i][j] == (inBlock ? 1 : 0));
                }
        }
}
