#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fatpoints/bipoly.hpp"
#include "fatpoints/ideal.hpp"
#include "fatpoints/linalg.hpp"
#include "fatpoints/render.hpp"
#include "fatpoints/schemeio.hpp"
#include "fixtures.hpp"

using namespace fatpoints;

namespace {

BiPoly random_poly(std::mt19937& rng, int maxTerms) {
    std::uniform_int_distribution<int> exp(0, 2), coefNum(-5, 5), terms(1, maxTerms);
    BiPoly f;
    int n = terms(rng);
    for (int k = 0; k < n; ++k) {
        Monomial m{exp(rng), exp(rng), exp(rng), exp(rng)};
        f = f + BiPoly::term(m, make_rat(coefNum(rng)));
    }
    return f;
}

RationalMatrix mat(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Rat>> conv;
    for (const auto& r : rows) {
        std::vector<Rat> row;
        for (long v : r) row.push_back(make_rat(v));
        conv.push_back(std::move(row));
    }
    return RationalMatrix::from_rows(conv);
}

}  // namespace

TEST_CASE("monomial basis enumerates S_{i,j} in canonical order") {
    auto b = monomial_basis({2, 1});
    CHECK(b.size() == 6);
    for (const auto& m : b) CHECK(m.degree() == BiDegree{2, 1});
    for (size_t k = 1; k < b.size(); ++k) CHECK(MonoBefore{}(b[k - 1], b[k]));
    CHECK(monomial_basis({-1, 3}).empty());
    CHECK(monomial_basis({0, 0}).size() == 1);
}

TEST_CASE("polynomial parse/str round trip and arithmetic") {
    BiPoly f = BiPoly::parse("3/2*X0^2*X1*Y1 - Y0^3");
    CHECK(f.str() == "3/2*X0^2*X1*Y1 - Y0^3");
    CHECK(!f.is_bihomogeneous());

    BiPoly g = BiPoly::parse("X0*Y0 + X1*Y1");
    CHECK(g.is_bihomogeneous());
    CHECK(g.bidegree() == BiDegree{1, 1});
    CHECK(BiPoly::parse(g.str()) == g);

    std::mt19937 rng(41);
    for (int it = 0; it < 25; ++it) {
        BiPoly a = random_poly(rng, 4), b = random_poly(rng, 4), c = random_poly(rng, 3);
        CHECK(a + b == b + a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == BiPoly::zero());
        CHECK(BiPoly::parse(a.str()) == a);
        // product rule
        CHECK((a * b).partial(Var::X1) == a.partial(Var::X1) * b + a * b.partial(Var::X1));
    }
}

TEST_CASE("evaluation and homogeneity guards") {
    BiPoly g = BiPoly::parse("X0*Y1 - X1*Y0");  // vanishes iff x and y agree
    CHECK(g.evaluate(1, 2, 1, 2) == 0);
    CHECK(g.evaluate(1, 2, 1, 3) != 0);
    CHECK_THROWS_AS(BiPoly::parse("X0 + Y0").evaluate(1, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("linear change to the origin is invertible and composes to identity") {
    LinearChange c = LinearChange::to_origin(make_rat(1), make_rat(2), make_rat(1), make_rat(-3));
    CHECK(c.is_invertible());
    LinearChange inv = c.inverse();
    std::mt19937 rng(7);
    for (int it = 0; it < 10; ++it) {
        BiPoly f = random_poly(rng, 4);
        CHECK(apply_change(inv, apply_change(c, f)) == f);
    }
}

TEST_CASE("exact rank, kernel, and span dimensions") {
    CHECK(rank_exact(mat({{1, 2}, {2, 4}})) == 1);
    CHECK(rank_exact(mat({{1, 0, 1}, {0, 1, 1}, {1, 1, 2}})) == 2);
    CHECK(rank_exact(RationalMatrix(0, 5)) == 0);

    std::mt19937 rng(11);
    std::uniform_int_distribution<int> dim(1, 6), val(-3, 3);
    for (int it = 0; it < 20; ++it) {
        int r = dim(rng), ccount = dim(rng);
        RationalMatrix m(r, ccount);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < ccount; ++j) m.at(i, j) = make_rat(val(rng), 1 + (it % 2));
        long rk = rank_exact(m);
        auto ker = kernel_basis(m);
        CHECK(rk + static_cast<long>(ker.size()) == ccount);
        for (const auto& v : ker) {
            for (int i = 0; i < r; ++i) {
                Rat dot = 0;
                for (int j = 0; j < ccount; ++j) dot += m.at(i, j) * v[j];
                CHECK(dot == 0);
            }
        }
        CHECK(span_dim(ker) == static_cast<long>(ker.size()));
    }
}

TEST_CASE("subspace keeps reduced echelon form under insertion") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> val(-3, 3);
    const int n = 5;
    Subspace s(n);
    for (int it = 0; it < 12; ++it) {
        std::vector<Rat> v(n);
        for (auto& x : v) x = make_rat(val(rng));
        s.insert(v);
        CHECK(s.contains(v));
        // the canonical residue of a member is zero
        std::vector<Rat> r = v;
        s.reduce(r);
        for (const Rat& x : r) CHECK(x == 0);
    }
    CHECK(s.dim() <= n);
    // pivot columns are strictly increasing and rows are unit at their pivot
    for (size_t k = 0; k < s.pivots().size(); ++k) {
        CHECK(s.rows()[k][s.pivots()[k]] == 1);
        if (k > 0) CHECK(s.pivots()[k - 1] < s.pivots()[k]);
    }
}

TEST_CASE("coefficient vectors round trip through polynomials") {
    BiDegree d{2, 1};
    BiPoly f = BiPoly::parse("X0^2*Y1 - 5*X0*X1*Y0 + 2/3*X1^2*Y1");
    auto v = coeff_vector(f, d);
    CHECK(v.size() == monomial_basis(d).size());
    CHECK(vector_to_poly(v, d) == f);
    CHECK_THROWS_AS(coeff_vector(BiPoly::parse("X0"), d), std::invalid_argument);
}

TEST_CASE("first difference telescopes back to the matrix") {
    IntMatrix h = {{1, 2, 3}, {2, 4, 6}, {3, 6, 9}};
    IntMatrix d = first_difference(h);
    CHECK(d == IntMatrix{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
    // partial sums of the difference recover the original
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            long long sum = 0;
            for (int a = 0; a <= i; ++a)
                for (int b = 0; b <= j; ++b) sum += d[a][b];
            CHECK(sum == h[i][j]);
        }
}

TEST_CASE("render formats match the documented byte shapes") {
    HilbertMatrix h;
    h.window = {{1, 2}, {2, 4}};
    CHECK(render_matrix(h, RenderFormat::csv) == "1,2\n2,4\n");
    CHECK(render_matrix(h, RenderFormat::json) ==
          "{\"rows\":2,\"cols\":2,\"data\":[[1,2],[2,4]],\"eventual\":null}\n");

    h.meta.rowBound = 4;
    h.meta.colBound = 5;
    h.meta.eventual = 11;
    std::string pretty = render_matrix(h, RenderFormat::pretty);
    CHECK(pretty.find("rows constant for i >= 4, columns for j >= 5; eventual value 11") !=
          std::string::npos);
    std::string json = render_matrix(h, RenderFormat::json);
    CHECK(json.find("\"eventual\":11") != std::string::npos);

    HilbertMatrix empty;
    CHECK(render_matrix(empty, RenderFormat::csv) == "");
    CHECK(render_matrix(empty, RenderFormat::json) ==
          "{\"rows\":0,\"cols\":0,\"data\":[],\"eventual\":null}\n");
    CHECK(render_matrix(empty, RenderFormat::pretty) == "(empty window)\n");

    CHECK(parse_format("csv") == RenderFormat::csv);
    CHECK(!parse_format("xml").has_value());
}

TEST_CASE("scheme files parse points and generators") {
    SchemeFile pts = parse_scheme_text(
        R"({"points":[{"x":["1","1"],"y":["1","2"],"m":2},{"x":[0,"1"],"y":["1","-1/2"]}]})");
    REQUIRE(pts.has_points());
    CHECK(!pts.has_generators());
    const auto& es = pts.scheme->entries();
    REQUIRE(es.size() == 2);
    CHECK(es[0].mult == 2);
    CHECK(es[1].mult == 1);
    CHECK(es[0].p == PointP1P1::make(1, 1, 1, 2));
    CHECK(es[1].p == PointP1P1::make(0, 1, 1, make_rat(-1, 2)));

    SchemeFile gens = parse_scheme_text(R"({"generators":["X1^2","Y0-Y1"]})");
    CHECK(gens.has_generators());
    CHECK(!gens.has_points());
    CHECK(gens.generators[0] == BiPoly::parse("X1^2"));
}

TEST_CASE("malformed scheme files are rejected with the right error") {
    auto bad = [](const std::string& text) {
        CHECK_THROWS_AS(parse_scheme_text(text), MalformedScheme);
    };
    bad("not json");
    bad(R"({})");
    bad(R"({"points":[],"generators":["X0"]})");  // both sections
    bad(R"({"points":[{"x":["1"],"y":["1","1"]}]})");  // x needs two coordinates
    bad(R"({"points":[{"x":["1","1"],"y":["1","1"],"m":0}]})");  // multiplicity >= 1
    bad(R"({"points":[{"x":["1","0/0"],"y":["1","1"]}]})");  // bad rational
    bad(R"({"points":[{"x":["0","0"],"y":["1","1"]}]})");  // not a point of P1
    bad(R"({"generators":["X0+Y0"]})");  // not bihomogeneous
    bad(R"({"generators":["0"]})");  // zero generator
    bad(R"({"points":[{"x":["1","1"],"y":["1","1"]},{"x":["1","1"],"y":["1","1"]}]})");  // repeated

    CHECK_THROWS_AS(load_scheme_file("/nonexistent/nothing.json"), FileNotFound);
}

TEST_CASE("shipped data files load to the intended schemes") {
    SchemeFile f = load_scheme_file(fixtures::data_path("example23_Y.json"));
    REQUIRE(f.has_points());
    CHECK(f.scheme->degree() == 11);
    const auto& got = f.scheme->entries();
    const auto want = fixtures::scheme_ex23().entries();
    REQUIRE(got.size() == want.size());
    for (size_t k = 0; k < got.size(); ++k) {
        CHECK(got[k].p == want[k].p);
        CHECK(got[k].mult == want[k].mult);
    }

    SchemeFile aci = load_scheme_file(fixtures::data_path("sec5_aci8_m3.json"));
    REQUIRE(aci.has_points());
    CHECK(aci.scheme->size() == 8);
    CHECK(aci.scheme->degree() == 48);

    SchemeFile gens = load_scheme_file(fixtures::data_path("example37_gens.json"));
    CHECK(gens.has_generators());
}
