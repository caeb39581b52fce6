#pragma once

#include <string>
#include <vector>

#include "skewgor/scalar.hpp"

namespace skewgor {

// Dense univariate polynomial, index = degree.  Used for numerators,
// denominators and product prefactors.
using PolyZ = std::vector<Scalar>;

PolyZ poly_mul(const PolyZ& a, const PolyZ& b);
PolyZ poly_pow(const PolyZ& a, int e);
// Parses e.g. "1 - 8*z + 8*z^2 - z^3 - z^4" (also accepts "8z^2").
PolyZ parse_poly_z(const std::string& text);
// Products of parenthesized factors with exponents: "(1+z)^4" or
// "(1-z)^2*(1-2z-z^2)"; a bare polynomial is accepted too.
PolyZ parse_poly_product(const std::string& text);
std::string poly_z_str(const PolyZ& p);

// Truncated formal power series in one variable.  Coefficients above the
// truncation order are unknown, not zero; arithmetic propagates the minimum
// of the operand orders.
class SeriesUni {
public:
    SeriesUni() : trunc_(-1) {}
    SeriesUni(std::vector<Scalar> coeffs, int trunc);
    static SeriesUni from_poly(const PolyZ& p, int trunc);
    static SeriesUni one(int trunc, uint32_t p = 0);

    int trunc() const { return trunc_; }
    const Scalar& coeff(int d) const;
    const std::vector<Scalar>& coeffs() const { return c_; }

    SeriesUni truncated(int d) const;

    friend SeriesUni operator+(const SeriesUni& a, const SeriesUni& b);
    friend SeriesUni operator-(const SeriesUni& a, const SeriesUni& b);
    friend SeriesUni operator*(const SeriesUni& a, const SeriesUni& b);

    // Multiplicative inverse; requires a nonzero constant term.
    SeriesUni inverse() const;
    // Substitutes -z for z.
    SeriesUni sign_flipped() const;

    bool operator==(const SeriesUni& o) const { return trunc_ == o.trunc_ && c_ == o.c_; }

    std::string str(const std::string& var = "z") const;
    std::string json() const;

private:
    std::vector<Scalar> c_;  // size trunc_+1
    int trunc_;
};

// num(z)/den(z) expanded to order D; den(0) must be nonzero.
SeriesUni expand_rational(const PolyZ& num, const PolyZ& den, int trunc);

// One factor family (1 - z^(a*n+b))^e over n >= 1.
struct ProductFactor {
    int stride = 0;   // a
    int offset = 0;   // b
    int exponent = 1; // e, may be negative
};

// prefactor(z) * prod_{n>=1} prod_k (1 - z^(a_k n + b_k))^{e_k}
struct ProductSpec {
    std::vector<ProductFactor> factors;
    PolyZ prefactor;  // empty means 1

    // Parses e.g. "(1-2z)^2 * prod(1-z^n)" /
    // "prod (1-z^{2n-1})^5 (1-z^{2n})^3"; exponent patterns in n are linear.
    static ProductSpec parse(const std::string& text);
    std::string str() const;
};

SeriesUni expand_product(const ProductSpec& spec, int trunc);

// Box-truncated series in two variables (x = homological, y = internal):
// coefficients c[i][j] for 0 <= i <= H, 0 <= j <= J.
class SeriesBi {
public:
    SeriesBi() : h_(-1), j_(-1) {}
    SeriesBi(int H, int J, uint32_t p = 0);

    int box_h() const { return h_; }
    int box_j() const { return j_; }
    const Scalar& coeff(int i, int j) const { return c_[i][j]; }
    Scalar& at(int i, int j) { return c_[i][j]; }

    static SeriesBi one(int H, int J, uint32_t p = 0);
    SeriesBi truncated(int H, int J) const;

    friend SeriesBi operator+(const SeriesBi& a, const SeriesBi& b);
    friend SeriesBi operator-(const SeriesBi& a, const SeriesBi& b);
    friend SeriesBi operator*(const SeriesBi& a, const SeriesBi& b);

    SeriesBi inverse() const;

    // x := t, y := t.  The result is valid to order min(H, J).
    SeriesUni eval_diag() const;

    bool is_zero() const;
    bool operator==(const SeriesBi& o) const { return h_ == o.h_ && j_ == o.j_ && c_ == o.c_; }

    std::string str() const;
    std::string json() const;

    // Parses a two-variable polynomial like "1-8*x*y+8*x^2*y^2-x^3*y^4".
    static SeriesBi parse_poly(const std::string& text, int H, int J);

private:
    std::vector<std::vector<Scalar>> c_;
    int h_, j_;
};

}  // namespace skewgor
