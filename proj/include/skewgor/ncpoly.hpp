#pragma once

#include <string>
#include <vector>

#include "skewgor/scalar.hpp"
#include "skewgor/word.hpp"

namespace skewgor {

// Homogeneous noncommutative polynomial: terms sorted strictly descending
// under the active monomial order, no zero coefficients.
struct NCPoly {
    std::vector<std::pair<Word, Scalar>> terms;

    bool is_zero() const { return terms.empty(); }
    int degree() const { return terms.empty() ? -1 : terms.front().first.degree(); }
    const Word& lead() const { return terms.front().first; }
    const Scalar& lead_coeff() const { return terms.front().second; }

    bool homogeneous() const {
        for (const auto& [w, c] : terms)
            if (w.degree() != degree()) return false;
        return true;
    }

    std::string str(const std::string& stem = "X") const;
};

NCPoly ncp_normalize(std::vector<std::pair<Word, Scalar>> terms, const MonomialOrder& ord);
NCPoly ncp_add(const NCPoly& a, const NCPoly& b, const MonomialOrder& ord);
NCPoly ncp_axpy(const NCPoly& a, const Scalar& c, const NCPoly& b, const MonomialOrder& ord);
NCPoly ncp_scale(const NCPoly& a, const Scalar& c);
NCPoly ncp_monic(const NCPoly& a);
// left * p * right
NCPoly ncp_mul_words(const Word& left, const NCPoly& p, const Word& right);
// commutator X_s X_t - X_t X_s (0-based indices)
NCPoly ncp_commutator(int s, int t, const MonomialOrder& ord);

}  // namespace skewgor
