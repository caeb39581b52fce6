#include <doctest.h>

#include <random>

#include "skewgor/gbalgebra.hpp"
#include "skewgor/koszul.hpp"
#include "skewgor/trivector.hpp"

using namespace skewgor;

namespace {
SeriesUni poly_series(const std::string& text, int D) {
    return SeriesUni::from_poly(parse_poly_z(text), D);
}
}  // namespace

TEST_CASE("dual of an exterior algebra is the polynomial algebra") {
    for (int n = 2; n <= 4; ++n) {
        AlgebraPresentation E = parse_presentation("skew E(x1..x" + std::to_string(n) +
                                                   "); rels:");
        AlgebraPresentation dual = quadratic_dual(E);
        CHECK(static_cast<int>(dual.relations.size()) == n * (n - 1) / 2);
        SeriesUni got = hilbert_series_of_quotient(dual, 7);
        PolyZ den = poly_pow(parse_poly_z("1-z"), n);
        CHECK(got == expand_rational({Scalar(1)}, den, 7));
    }
}

TEST_CASE("rank-nullity: dim W + dim W-perp = n^2") {
    std::vector<std::string> cases = {
        "skew R(x1..x5); rels: x1*x4+x2*x3, x1*x5+x2*x4, x2*x5+x3*x4",
        "comm P(x,y,z,u); rels: x^2, x*y, y^2, z^2, y*u+z*u, u^2",
        "free F(X1..X3); rels: X1*X2-X2*X1, X1*X1",
    };
    for (const auto& text : cases) {
        AlgebraPresentation pres = parse_presentation(text);
        QuadraticData W = quadratic_part(pres);
        AlgebraPresentation dual = quadratic_dual(pres);
        CHECK(W.dim() + static_cast<int>(dual.relations.size()) == pres.n() * pres.n());
    }
}

TEST_CASE("dual of R20: the seven printed commutator relations") {
    AlgebraPresentation pres = parse_presentation(
        "skew R(x1..x5); rels: x1*x4+x2*x3, x1*x5+x2*x4, x2*x5+x3*x4");
    AlgebraPresentation dual = quadratic_dual(pres);
    CHECK(dual.relations.size() == 7);
    AlgebraPresentation printed = parse_presentation(
        "free D(X1..X5); rels: "
        "X1*X2-X2*X1, X1*X3-X3*X1, X3*X5-X5*X3, X4*X5-X5*X4, "
        "X1*X4-X4*X1-X2*X3+X3*X2, X1*X5-X5*X1-X2*X4+X4*X2, X2*X5-X5*X2-X3*X4+X4*X3");
    CHECK(quadratic_span_equal(dual, printed));
}

TEST_CASE("dual of the rank-6 case IV quadratic ring: six printed relations") {
    AlgebraPresentation pres = parse_presentation(
        "skew R(e1..e6); rels: e1*e2-e4*e5, e1*e3+e5*e6, e2*e6+e3*e4, e1*e4, e1*e5, e1*e6, "
        "e2*e4, e3*e6, e4*e6");
    AlgebraPresentation dual = quadratic_dual(pres);
    CHECK(dual.relations.size() == 6);
    AlgebraPresentation printed = parse_presentation(
        "free D(X1..X6); rels: "
        "X1*X2-X2*X1+X4*X5-X5*X4, X3*X4-X4*X3-X2*X6+X6*X2, X1*X3-X3*X1-X5*X6+X6*X5, "
        "X2*X3-X3*X2, X2*X5-X5*X2, X3*X5-X5*X3");
    CHECK(quadratic_span_equal(dual, printed));

    // and it reproduces the printed Hilbert series
    CHECK(hilbert_series_of_quotient(dual, 9) == poly_series("1-6z+6z^2-2z^3", 9).inverse());
}

TEST_CASE("double dual recovers the quadratic relation span") {
    // R_V has monomial quadratic relations
    AlgebraPresentation rv = parse_presentation(
        "skew R(e1..e6); rels: e1*e4, e1*e5, e1*e6, e2*e4, e2*e5, e2*e6, e3*e4, e3*e5, e3*e6");
    AlgebraPresentation dd = double_dual(rv);
    CHECK(quadratic_span_equal(dd, rv));

    // random quadratic presentations: dual is involutive on spans
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 3 + static_cast<int>(rng() % 2);
        MonomialOrder ord(n);
        AlgebraPresentation pres;
        pres.ambient = Ambient::skew_commutative;
        pres.name = "A";
        for (int i = 1; i <= n; ++i) pres.gens.push_back("x" + std::to_string(i));
        bool any = false;
        for (int r = 0; r < 2; ++r) {
            std::vector<std::pair<Word, Scalar>> terms;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (rng() % 3 == 0)
                        terms.emplace_back(Word{i, j},
                                           Scalar(static_cast<long>(rng() % 5) - 2));
            NCPoly p = ncp_normalize(std::move(terms), ord);
            if (!p.is_zero()) {
                pres.relations.push_back(p);
                any = true;
            }
        }
        if (!any) continue;
        CHECK(quadratic_span_equal(double_dual(pres), pres));
    }
}

TEST_CASE("double dual of a Gorenstein ring presentation drops the cubic part") {
    AlgebraPresentation giv = parse_presentation(
        "skew G(e1..e6); rels: e1*e2-e4*e5, e1*e3+e5*e6, e2*e6+e3*e4, e1*e4, e1*e5, e1*e6, "
        "e2*e4, e3*e6, e4*e6, e2*e3*e5");
    QuadraticData W = quadratic_part(giv);
    CHECK(W.higher_relations_dropped);
    AlgebraPresentation dd = double_dual(giv);
    AlgebraPresentation quad_only = giv;
    quad_only.relations.pop_back();
    CHECK(quadratic_span_equal(dd, quad_only));
}

TEST_CASE("theorem-recipe dual equals the quadratic dual of the quadratic ring") {
    std::vector<std::string> forms = {
        "e1^e2^e3 + e3^e4^e5 + e2^e5^e6",
        "e1^e2^e3 + e4^e5^e6",
        "e5^e6^e7 + e1^e5^e4 + e2^e6^e4 + e3^e7^e4 + e3^e6^e8",
        "e1^e4^e3 + e2^e5^e3",
    };
    for (const auto& text : forms) {
        TriVector F = TriVector::parse(text);
        AlgebraPresentation recipe = koszul_dual_presentation(F);

        auto R = quadratic_part_ring(F);
        auto E = exterior_algebra(F.n());
        AlgebraPresentation pres;
        pres.ambient = Ambient::skew_commutative;
        pres.name = "R";
        pres.gens = E->gen_names();
        MonomialOrder ord(F.n());
        for (const auto& row : R->ideal_basis(2)) {
            std::vector<std::pair<Word, Scalar>> terms;
            for (const auto& [c, v] : row) {
                const IndexTuple& m = E->monomial(2, c);
                terms.emplace_back(Word{m[0], m[1]}, v);
            }
            pres.relations.push_back(ncp_normalize(std::move(terms), ord));
        }
        CHECK(quadratic_span_equal(recipe, quadratic_dual(pres)));
    }
}

TEST_CASE("dual of a commutative quadratic ring") {
    AlgebraPresentation i54 =
        parse_presentation("comm P(x,y,z,u); rels: x^2, x*y, y^2, z^2, y*u+z*u, u^2");
    AlgebraPresentation dual = quadratic_dual(i54);
    CHECK(dual.relations.size() == 4);
    CHECK(hilbert_series_of_quotient(dual, 10) ==
          expand_rational({Scalar(1)}, parse_poly_z("1-4z+4z^2"), 10));
}
