#pragma once

#include <map>
#include <string>
#include <vector>

#include "skewgor/scalar.hpp"

namespace skewgor {

// Strictly increasing index tuple (0-based generator indices).
using IndexTuple = std::vector<uint8_t>;

// Element of an exterior algebra on n generators: formal sum of sorted index
// tuples with scalar coefficients.  Monomials are normalized with the Koszul
// sign rule; repeated indices vanish.
class ExteriorElement {
public:
    ExteriorElement() : n_(0) {}
    explicit ExteriorElement(int n) : n_(n) {}

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    // homogeneous degree, or -1 for zero
    int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.size()); }
    bool homogeneous() const;

    const std::map<IndexTuple, Scalar>& terms() const { return terms_; }

    // Adds c * e_{i1} ^ ... ^ e_{ik}; the tuple need not be sorted.
    void add_term(IndexTuple idx, Scalar c);
    Scalar coeff(const IndexTuple& sorted_idx) const;

    ExteriorElement operator-() const;
    friend ExteriorElement operator+(const ExteriorElement& a, const ExteriorElement& b);
    friend ExteriorElement operator-(const ExteriorElement& a, const ExteriorElement& b);
    friend ExteriorElement operator*(const ExteriorElement& a, const ExteriorElement& b);
    ExteriorElement scaled(const Scalar& c) const;

    bool operator==(const ExteriorElement& o) const { return n_ == o.n_ && terms_ == o.terms_; }

    std::string str(const std::string& stem = "e") const;

    static ExteriorElement unit(int n) {
        ExteriorElement e(n);
        e.add_term({}, Scalar(1));
        return e;
    }
    static ExteriorElement generator(int n, int i) {
        ExteriorElement e(n);
        e.add_term({static_cast<uint8_t>(i)}, Scalar(1));
        return e;
    }
    static ExteriorElement monomial(int n, IndexTuple idx, Scalar c = Scalar(1)) {
        ExteriorElement e(n);
        e.add_term(std::move(idx), std::move(c));
        return e;
    }

private:
    int n_;
    std::map<IndexTuple, Scalar> terms_;
};

// Sorts idx in place, returns the Koszul sign, or 0 on a repeated index.
int sort_with_sign(IndexTuple& idx);

}  // namespace skewgor
