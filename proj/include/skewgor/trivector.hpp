#pragma once

#include "skewgor/algebra.hpp"
#include "skewgor/presentation.hpp"

namespace skewgor {

// Exact skew-symmetric 3-form on an n-dimensional space: coefficients on
// strictly increasing basis triples, antisymmetric extension implied.
class TriVector {
public:
    TriVector() : n_(0) {}
    explicit TriVector(int n) : n_(n) {}

    // text format: "e1^e2^e3 + e3^e4^e5 + 2*e2^e5^e6", optional "f =" prefix;
    // n is the largest index mentioned unless given explicitly
    static TriVector parse(const std::string& text, int n = 0);
    static TriVector from_element(const ExteriorElement& e);

    int n() const { return n_; }
    bool is_zero() const { return form_.is_zero(); }
    const ExteriorElement& element() const { return form_; }
    Scalar coeff(int i, int j, int k) const;  // 0-based, any order
    void set(int i, int j, int k, Scalar c);  // 0-based increasing triple

    std::string str() const { return form_.str("e"); }
    std::string json() const;

private:
    int n_;
    ExteriorElement form_;  // degree-3 element in the dual variables
};

// Interior derivative with respect to e^i (0-based):
// d/de^i (e^{j1}^e^{j2}^e^{j3}) = d_{i,j1} e^{j2}^e^{j3}
//                              - d_{i,j2} e^{j1}^e^{j3} + d_{i,j3} e^{j1}^e^{j2}.
ExteriorElement skew_derivative(const TriVector& F, int i);

// h acts as a composition of skew derivations, factors applied left to right
// (for h = e_a ^ e_b the derivative d/de^a applies first).
ExteriorElement contract(const ExteriorElement& h, const TriVector& F);

// The annihilator quotient E(n)/I with I_d = ker(contract(-, F)) for d <= 3
// and everything in degree >= 4; skew-Gorenstein with m^4 = 0.
std::shared_ptr<const QuotientAlgebra> macaulay_ring(const TriVector& F);

// E(n)/(I_2): the quotient by the quadratic part of the annihilator only.
std::shared_ptr<const QuotientAlgebra> quadratic_part_ring(const TriVector& F);

// Basis of I_3 modulo the degree-3 piece of the ideal generated by I_2: the
// extra cubic relations carrying the quadratic ring to the Gorenstein one.
std::vector<ExteriorElement> cubic_corrections(const TriVector& F);

// Recovers the 3-form (up to a nonzero scalar) annihilated by the degree-3
// relations of a Gorenstein algebra with m^4 = 0 generated in degree 1.
TriVector recover_form(const GradedAlgebra& G);

// One relation per generator: each e^s ^ e^t (s < t) in dPsi/de^i replaced by
// the commutator [X_s, X_t]; zero derivatives contribute no relation.
AlgebraPresentation koszul_dual_presentation(const TriVector& F);

// n minus the dimension of {v : contraction of v into F vanishes}.
int trivector_rank(const TriVector& F);

// Uniform random form with coefficients in {-2..2} (at least one nonzero).
TriVector random_trivector(int n, uint64_t seed);

}  // namespace skewgor
