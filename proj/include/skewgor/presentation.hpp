#pragma once

#include <memory>
#include <string>
#include <vector>

#include "skewgor/algebra.hpp"
#include "skewgor/ncpoly.hpp"

namespace skewgor {

enum class Ambient { free, commutative, skew_commutative };

const char* ambient_str(Ambient a);

// Finitely presented graded algebra: generators in degree 1 and homogeneous
// relations, written as noncommutative polynomials.  In the commutative and
// skew-commutative ambients the implied commutation relations (and squares,
// in the skew case) are understood, not listed.
struct AlgebraPresentation {
    Ambient ambient = Ambient::free;
    std::string name;
    std::vector<std::string> gens;
    std::vector<NCPoly> relations;
    uint32_t characteristic = 0;

    int n() const { return static_cast<int>(gens.size()); }
    MonomialOrder default_order() const { return MonomialOrder(n()); }
    std::string str() const;
};

struct ParseError : std::runtime_error {
    int line, col;
    ParseError(const std::string& what, int line_, int col_)
        : std::runtime_error(what + " (line " + std::to_string(line_) + ", column " +
                             std::to_string(col_) + ")"),
          line(line_),
          col(col_) {}
};

// Grammar:  <flag> <name>(<gens>) ; rels: <poly>{, <poly>}
// flag in {free, comm, skew}; generator ranges like x1..x6 are allowed;
// polynomials use *, +, -, ^ and integer or rational coefficients.
AlgebraPresentation parse_presentation(const std::string& text);

// Degreewise model of a commutative or skew-commutative presentation,
// computed up to internal degree `top`.
std::shared_ptr<const QuotientAlgebra> presentation_algebra(const AlgebraPresentation& pres,
                                                            int top);

// Relation coordinates in the ambient monomial basis (for comm/skew).
std::vector<std::pair<int, SVec>> relation_coords(const AlgebraPresentation& pres,
                                                  const MonomialAmbient& ambient);

}  // namespace skewgor
