#include <doctest.h>

#include <random>

#include "skewgor/series.hpp"

using namespace skewgor;

TEST_CASE("scalar arithmetic is exact and canonical") {
    Scalar a(1, 3), b(2, 5);
    CHECK((a + b).str() == "11/15");
    CHECK((a * b).str() == "2/15");
    CHECK((a / b).str() == "5/6");
    CHECK((a - a).is_zero());
    CHECK(Scalar(-4, 6).str() == "-2/3");
    CHECK_THROWS_AS(a / Scalar(0), std::domain_error);

    // prime field
    Scalar x = Scalar::in_field(5, 7), y = Scalar::in_field(3, 7);
    CHECK((x + y).str() == "1");
    CHECK((x * y).str() == "1");
    CHECK((x / y).str() == "4");  // 5 * 3^{-1} = 5 * 5 = 25 = 4 (mod 7)
    CHECK((Scalar::one(7) / Scalar::in_field(2, 7)).str() == "4");
}

TEST_CASE("scalar canonical form survives long random computations") {
    std::mt19937_64 rng(20240211);
    std::uniform_int_distribution<long> num(-30, 30), den(1, 30);
    Scalar acc(1);
    for (int k = 0; k < 1000; ++k) {
        Scalar s(num(rng), den(rng));
        switch (k % 3) {
            case 0: acc += s; break;
            case 1: acc -= s; break;
            default:
                acc *= (s.is_zero() ? Scalar(1) : s);
        }
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), acc.num().get_mpz_t(), acc.den().get_mpz_t());
        CHECK(g == 1);
        CHECK(acc.den() > 0);
    }
}

TEST_CASE("series multiplication and inverse") {
    // (1+z)(1-z) = 1 - z^2
    SeriesUni a = SeriesUni::from_poly(parse_poly_z("1+z"), 4);
    SeriesUni b = SeriesUni::from_poly(parse_poly_z("1-z"), 4);
    CHECK((a * b) == SeriesUni::from_poly(parse_poly_z("1-z^2"), 4));

    // (1+z)^2 (1+z)^3 = (1+z)^5
    SeriesUni p2 = SeriesUni::from_poly(poly_pow(parse_poly_z("1+z"), 2), 6);
    SeriesUni p3 = SeriesUni::from_poly(poly_pow(parse_poly_z("1+z"), 3), 6);
    SeriesUni p5 = SeriesUni::from_poly(poly_pow(parse_poly_z("1+z"), 5), 6);
    CHECK(p2 * p3 == p5);

    // geometric series
    SeriesUni inv = SeriesUni::from_poly(parse_poly_z("1-z"), 5).inverse();
    CHECK(inv == SeriesUni::from_poly(parse_poly_z("1+z+z^2+z^3+z^4+z^5"), 5));

    // closed form oracle: 1/(1-4z+4z^2) = sum (n+1) 2^n z^n
    SeriesUni q = SeriesUni::from_poly(parse_poly_z("1-4z+4z^2"), 4).inverse();
    for (int n = 0; n <= 4; ++n) CHECK(q.coeff(n) == Scalar((n + 1) * (1L << n)));

    CHECK_THROWS_AS(SeriesUni::from_poly(parse_poly_z("z"), 3).inverse(), std::domain_error);
}

TEST_CASE("truncation propagates the minimum and never invents coefficients") {
    SeriesUni a = SeriesUni::from_poly(parse_poly_z("1+z"), 7);
    SeriesUni b = SeriesUni::from_poly(parse_poly_z("1-z"), 3);
    CHECK((a * b).trunc() == 3);
    CHECK((a + b).trunc() == 3);
    CHECK_THROWS_AS(a.coeff(8), std::out_of_range);
}

TEST_CASE("a * inverse(a) = 1 on random series") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> coef(-5, 5);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Scalar> c(9);
        c[0] = Scalar(coef(rng) * 2 + 1);  // nonzero
        for (int d = 1; d <= 8; ++d) c[d] = Scalar(coef(rng), 1 + (trial % 3));
        SeriesUni s(c, 8);
        CHECK(s * s.inverse() == SeriesUni::one(8));
    }
}

TEST_CASE("expand_rational agrees with multiplication by the denominator") {
    PolyZ num = parse_poly_z("1+z");
    PolyZ den = parse_poly_z("1-3z+z^3");
    SeriesUni s = expand_rational(num, den, 9);
    CHECK(s * SeriesUni::from_poly(den, 9) == SeriesUni::from_poly(num, 9));
    CHECK_THROWS_AS(expand_rational(num, parse_poly_z("z"), 4), std::domain_error);

    // simple geometric case
    CHECK(expand_rational(parse_poly_z("1"), parse_poly_z("1-z"), 3) ==
          SeriesUni::from_poly(parse_poly_z("1+z+z^2+z^3"), 3));
}

TEST_CASE("expand_product: Euler factor expansion") {
    // prod (1-z^n) to order 5 = 1 - z - z^2 + z^5 (pentagonal numbers)
    ProductSpec spec = ProductSpec::parse("prod (1-z^n)");
    SeriesUni s = expand_product(spec, 5);
    CHECK(s == SeriesUni::from_poly(parse_poly_z("1-z-z^2+z^5"), 5));

    // naive oracle: multiply factors one by one to order 12
    SeriesUni t = expand_product(spec, 12);
    SeriesUni naive = SeriesUni::one(12);
    for (int n = 1; n <= 12; ++n) {
        PolyZ f(n + 1);
        f[0] = Scalar(1);
        f[n] = Scalar(-1);
        naive = naive * SeriesUni::from_poly(f, 12);
    }
    CHECK(t == naive);

    // empty factor list with a prefactor
    ProductSpec pre = ProductSpec::parse("(1-2z)");
    CHECK(expand_product(pre, 7) == SeriesUni::from_poly(parse_poly_z("1-2z"), 7));

    // odd/even strides parse and expand
    ProductSpec c20 = ProductSpec::parse("prod (1-z^{2n-1})^5 (1-z^{2n})^3");
    SeriesUni s20 = expand_product(c20, 6);
    SeriesUni oracle = SeriesUni::one(6);
    for (int n = 1; 2 * n - 1 <= 6; ++n) {
        PolyZ f(2 * n);
        f[0] = Scalar(1);
        f[2 * n - 1] = Scalar(-1);
        for (int k = 0; k < 5; ++k) oracle = oracle * SeriesUni::from_poly(f, 6);
    }
    for (int n = 1; 2 * n <= 6; ++n) {
        PolyZ f(2 * n + 1);
        f[0] = Scalar(1);
        f[2 * n] = Scalar(-1);
        for (int k = 0; k < 3; ++k) oracle = oracle * SeriesUni::from_poly(f, 6);
    }
    CHECK(s20 == oracle);
}

TEST_CASE("bivariate arithmetic: inverse and diagonal") {
    // 1/(1-2xy) = sum 2^n x^n y^n
    SeriesBi d = SeriesBi::parse_poly("1-2*x*y", 3, 3);
    SeriesBi inv = d.inverse();
    for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= 3; ++m)
            CHECK(inv.coeff(n, m) == (n == m ? Scalar(1L << n) : Scalar(0)));
    CHECK(d * inv == SeriesBi::one(3, 3));

    // diagonal evaluation against a substitution oracle
    SeriesUni diag = inv.eval_diag();
    CHECK(diag.trunc() == 3);
    for (int n = 0; n <= 3; ++n) {
        Scalar want(0);
        for (int i = 0; i <= n; ++i) want += inv.coeff(i, n - i);
        CHECK(diag.coeff(n) == want);
    }

    CHECK_THROWS_AS(SeriesBi::parse_poly("x", 2, 2).inverse(), std::domain_error);
}

TEST_CASE("series printing and JSON shapes") {
    SeriesUni s = SeriesUni::from_poly(parse_poly_z("1-8z+8z^2-z^3-z^4"), 20);
    CHECK(s.str() == "1 - 8*z + 8*z^2 - z^3 - z^4 + O(z^21)");
    SeriesUni h = SeriesUni::from_poly(parse_poly_z("1+3/2*z"), 2);
    CHECK(h.json() == "{\"trunc\": 2, \"coeffs\": [[1,1],[3,2],[0,1]]}");
}
