#include <doctest.h>

#include "skewgor/koszul.hpp"
#include "skewgor/trivector.hpp"

using namespace skewgor;

namespace {

const char* kFIV = "e1^e2^e3 + e3^e4^e5 + e2^e5^e6";
const char* kFV = "e1^e2^e3 + e4^e5^e6";
const char* kFXII = "e5^e6^e7 + e1^e5^e4 + e2^e6^e4 + e3^e7^e4 + e3^e6^e8";
const char* kF79 = "e1^e2^e9 + e1^e3^e8 + e2^e3^e7 + e4^e5^e6";
const char* kF83 = "e1^e2^e9 + e1^e3^e5 + e1^e4^e6 + e2^e3^e7 + e2^e4^e8 + e3^e4^e9";

SeriesUni poly_series(const std::string& text, int D) {
    return SeriesUni::from_poly(parse_poly_z(text), D);
}

}  // namespace

TEST_CASE("trivector parsing and evaluation") {
    TriVector f = TriVector::parse(std::string("f = ") + kFIV);
    CHECK(f.n() == 6);
    CHECK(f.coeff(0, 1, 2) == Scalar(1));
    CHECK(f.coeff(1, 0, 2) == Scalar(-1));  // antisymmetry
    CHECK(f.coeff(1, 4, 5) == Scalar(1));   // e2 e5 e6
    CHECK(f.coeff(1, 2, 4) == Scalar(0));   // e2 e3 e5 absent
    CHECK_THROWS(TriVector::parse("e1^e2"));
}

TEST_CASE("the printed pairing table for the rank-6 case IV form") {
    TriVector f = TriVector::parse(kFIV);
    struct Row {
        int i, j, s;
        long v;
    };
    std::vector<Row> table = {{1, 2, 3, 1}, {1, 3, 2, -1}, {2, 3, 1, 1},
                              {2, 5, 6, 1}, {2, 6, 5, -1}, {3, 4, 5, 1},
                              {3, 5, 4, -1}, {4, 5, 3, 1}, {5, 6, 2, 1}};
    for (const auto& r : table) CHECK(f.coeff(r.i - 1, r.j - 1, r.s - 1) == Scalar(r.v));
}

TEST_CASE("skew derivatives match the printed rank-8 case XII list") {
    TriVector f = TriVector::parse(kFXII);
    // d/de1 = e5 e4 = -e4^e5
    CHECK(skew_derivative(f, 0).coeff({3, 4}) == Scalar(-1));
    CHECK(skew_derivative(f, 0).terms().size() == 1);
    // d/de3 = e7 e4 + e6 e8 = -e4^e7 + e6^e8
    ExteriorElement d3 = skew_derivative(f, 2);
    CHECK(d3.coeff({3, 6}) == Scalar(-1));
    CHECK(d3.coeff({5, 7}) == Scalar(1));
    // d/de5 = e6 e7 - e1 e4
    ExteriorElement d5 = skew_derivative(f, 4);
    CHECK(d5.coeff({5, 6}) == Scalar(1));
    CHECK(d5.coeff({0, 3}) == Scalar(-1));
    // d/de6 = -e5 e7 - e2 e4 - e3 e8
    ExteriorElement d6 = skew_derivative(f, 5);
    CHECK(d6.coeff({4, 6}) == Scalar(-1));
    CHECK(d6.coeff({1, 3}) == Scalar(-1));
    CHECK(d6.coeff({2, 7}) == Scalar(-1));
    // d/de8 = e3 e6
    CHECK(skew_derivative(f, 7).coeff({2, 5}) == Scalar(1));

    // the rank-9 case: d f79 / d e1 = e2 e9 + e3 e8
    TriVector f79 = TriVector::parse(kF79);
    ExteriorElement d1 = skew_derivative(f79, 0);
    CHECK(d1.coeff({1, 8}) == Scalar(1));
    CHECK(d1.coeff({2, 7}) == Scalar(1));
    CHECK(d1.terms().size() == 2);

    // absent variable
    TriVector vol = TriVector::parse("e1^e2^e3", 4);
    CHECK(skew_derivative(vol, 3).is_zero());
    CHECK_THROWS_AS(skew_derivative(vol, 9), std::out_of_range);
}

TEST_CASE("contraction against the case IV values") {
    TriVector f = TriVector::parse(kFIV);
    ExteriorElement h = ExteriorElement::monomial(6, {1, 4, 5});  // e2^e5^e6
    ExteriorElement r = contract(h, f);
    CHECK(r.degree() == 0);
    CHECK(r.coeff({}) == Scalar(1));
    CHECK(contract(ExteriorElement::monomial(6, {1, 2, 4}), f).is_zero());  // e2^e3^e5
    CHECK(contract(ExteriorElement::unit(6), f) == f.element());
}

TEST_CASE("macaulay ring of the volume form is the exterior algebra") {
    auto R = macaulay_ring(TriVector::parse("e1^e2^e3"));
    CHECK(R->hilbert(4) == poly_series("1+3z+3z^2+z^3", 4));
    CHECK(is_gorenstein(*R));
}

TEST_CASE("case IV: Gorenstein ring, quadratic part, printed relation span") {
    TriVector f = TriVector::parse(kFIV);
    auto G = macaulay_ring(f);
    CHECK(G->hilbert(5) == poly_series("1+6z+6z^2+z^3", 5));
    CHECK(is_gorenstein(*G));

    auto R = quadratic_part_ring(f);
    CHECK(R->hilbert(5) == poly_series("1+6z+6z^2+2z^3", 5));

    // the quadratic annihilator is exactly the printed nine relations
    auto E = exterior_algebra(6);
    EchelonQ span;
    int rank = 0;
    for (const auto& row : R->ideal_basis(2))
        if (span.insert(row)) ++rank;
    CHECK(rank == 9);
    AlgebraPresentation pres =
        parse_presentation("skew R(e1..e6); rels: e1*e2-e4*e5, e1*e3+e5*e6, e2*e6+e3*e4, e1*e4, "
                           "e1*e5, e1*e6, e2*e4, e3*e6, e4*e6");
    for (const auto& [d, v] : relation_coords(pres, *E)) {
        REQUIRE(d == 2);
        CHECK(span.reduce(v).empty());
    }

    // cubic corrections: span of e2 e3 e5 modulo quadratic multiples
    auto cubs = cubic_corrections(f);
    REQUIRE(cubs.size() == 1);
    EchelonQ quad;
    for (const auto& row : R->ideal_basis(3)) quad.insert(row);
    SVec got = quad.reduce(E->coords(cubs[0]));
    SVec want = quad.reduce(E->coords(ExteriorElement::monomial(6, {1, 2, 4})));
    EchelonQ cmp;
    cmp.insert(got);
    CHECK(cmp.reduce(want).empty());
}

TEST_CASE("case V and case XII") {
    TriVector fV = TriVector::parse(kFV);
    CHECK(macaulay_ring(fV)->hilbert(4) == poly_series("1+6z+6z^2+z^3", 4));
    CHECK(quadratic_part_ring(fV)->hilbert(4) == poly_series("1+6z+6z^2+2z^3", 4));
    auto cubsV = cubic_corrections(fV);
    CHECK(cubsV.size() == 1);
    CHECK(is_gorenstein(*macaulay_ring(fV)));

    TriVector fXII = TriVector::parse(kFXII);
    CHECK(macaulay_ring(fXII)->hilbert(4) == poly_series("1+8z+8z^2+z^3", 4));
    CHECK(cubic_corrections(fXII).empty());
}

TEST_CASE("case 79: quadratic ring degree-3 dimension and corrections") {
    TriVector f = TriVector::parse(kF79);
    auto R = quadratic_part_ring(f);
    CHECK(R->hilbert(4) == poly_series("1+9z+9z^2+3z^3", 4));
    auto G = macaulay_ring(f);
    CHECK(G->hilbert(4) == poly_series("1+9z+9z^2+z^3", 4));
    auto cubs = cubic_corrections(f);
    CHECK(cubs.size() == 2);
    // the printed corrections e1e2e9 - e4e5e6 and e1e2e3 lie in the span
    auto E = exterior_algebra(9);
    EchelonQ quad;
    for (const auto& row : R->ideal_basis(3)) quad.insert(row);
    EchelonQ span;
    for (const auto& c : cubs) span.insert(quad.reduce(E->coords(c)));
    ExteriorElement c1 =
        ExteriorElement::monomial(9, {0, 1, 8}) - ExteriorElement::monomial(9, {3, 4, 5});
    ExteriorElement c2 = ExteriorElement::monomial(9, {0, 1, 2});
    CHECK(span.reduce(quad.reduce(E->coords(c1))).empty());
    CHECK(span.reduce(quad.reduce(E->coords(c2))).empty());
}

TEST_CASE("recover_form round trips") {
    TriVector vol = recover_form(*exterior_algebra(3));
    CHECK(trivector_rank(vol) == 3);
    CHECK(vol.coeff(0, 1, 2) != Scalar(0));

    // case V: a scalar multiple of e1e2e3 + e4e5e6
    TriVector fV = TriVector::parse(kFV);
    TriVector back = recover_form(*macaulay_ring(fV));
    Scalar c = back.coeff(0, 1, 2);
    CHECK(c != Scalar(0));
    CHECK(back.coeff(3, 4, 5) == c);
    CHECK(back.element().terms().size() == 2);

    CHECK_THROWS_AS(recover_form(*quadratic_part_ring(fV)), std::invalid_argument);
}

TEST_CASE("koszul dual presentation: printed commutator lists") {
    TriVector f = TriVector::parse(kFXII);
    AlgebraPresentation dual = koszul_dual_presentation(f);
    CHECK(dual.relations.size() == 8);
    AlgebraPresentation printed = parse_presentation(
        "free D(X1..X8); rels: "
        "X5*X4-X4*X5, X6*X4-X4*X6, X7*X4-X4*X7+X6*X8-X8*X6, "
        "X1*X5-X5*X1+X2*X6-X6*X2+X3*X7-X7*X3, X6*X7-X7*X6-X1*X4+X4*X1, "
        "X5*X7-X7*X5+X2*X4-X4*X2+X3*X8-X8*X3, X5*X6-X6*X5-X3*X4+X4*X3, X3*X6-X6*X3");
    CHECK(quadratic_span_equal(dual, printed));

    AlgebraPresentation d79 = koszul_dual_presentation(TriVector::parse(kF79));
    CHECK(d79.relations.size() == 9);
    AlgebraPresentation p79 = parse_presentation(
        "free D(X1..X9); rels: "
        "X2*X9-X9*X2+X3*X8-X8*X3, -X1*X9+X9*X1+X3*X7-X7*X3, -X1*X8+X8*X1-X2*X7+X7*X2, "
        "X5*X6-X6*X5, X4*X6-X6*X4, X4*X5-X5*X4, X2*X3-X3*X2, X1*X3-X3*X1, X1*X2-X2*X1");
    CHECK(quadratic_span_equal(d79, p79));
}

TEST_CASE("trivector rank") {
    CHECK(trivector_rank(TriVector::parse("e1^e2^e3")) == 3);
    CHECK(trivector_rank(TriVector::parse(kFV, 8)) == 6);  // two unused variables
    CHECK(trivector_rank(TriVector::parse(kF83)) == 9);
    CHECK(trivector_rank(TriVector::parse(kFXII)) == 8);
}

TEST_CASE("random forms: Gorenstein, Hilbert shape, recovery") {
    for (int n = 3; n <= 6; ++n)
        for (int trial = 0; trial < 5; ++trial) {
            TriVector F = random_trivector(n, 1000 * n + trial);
            auto G = macaulay_ring(F);
            CHECK(is_gorenstein(*G));
            CHECK(G->dim(4) == 0);
            int r = trivector_rank(F);
            CHECK(G->hilbert(3) == poly_series("1+" + std::to_string(r) + "z+" +
                                                   std::to_string(r) + "z^2+z^3",
                                               3));
            TriVector back = recover_form(*G);
            if (r < n) {
                // the recovered form lives on the essential variables only;
                // it must have full rank there and reproduce the same ring
                CHECK(back.n() == r);
                CHECK(trivector_rank(back) == r);
                CHECK(macaulay_ring(back)->hilbert(3) == G->hilbert(3));
                continue;
            }
            auto G2 = macaulay_ring(back);
            auto q1 = std::dynamic_pointer_cast<const QuotientAlgebra>(G);
            auto q2 = std::dynamic_pointer_cast<const QuotientAlgebra>(G2);
            for (int d = 1; d <= 3; ++d) {
                CHECK(q1->ideal_dim(d) == q2->ideal_dim(d));
                EchelonQ ech;
                for (const auto& row : q1->ideal_basis(d)) ech.insert(row);
                bool same = true;
                for (const auto& row : q2->ideal_basis(d))
                    if (!ech.reduce(row).empty()) same = false;
                CHECK(same);
            }
        }
}

TEST_CASE("zero form is rejected") {
    TriVector z(4);
    CHECK(z.is_zero());
    CHECK_THROWS_AS(macaulay_ring(z), std::invalid_argument);
    CHECK_THROWS_AS(cubic_corrections(z), std::invalid_argument);
}
