#pragma once

#include "skewgor/presentation.hpp"

namespace skewgor {

// The quadratic part of a presentation as a subspace W of V (x) V, with the
// ambient's implied commutation relations materialized.
struct QuadraticData {
    int n = 0;
    std::vector<SVec> basis;  // echelon basis, coordinates s*n+t for X_s (x) X_t
    int dim() const { return static_cast<int>(basis.size()); }
    bool higher_relations_dropped = false;
};

QuadraticData quadratic_part(const AlgebraPresentation& pres);

// T(V*)/(W-perp): one relation per basis vector of the annihilator of W under
// the pairing <X^a (x) X^b, X_c (x) X_d> = delta_ac delta_bd.
AlgebraPresentation quadratic_dual(const AlgebraPresentation& pres);

AlgebraPresentation double_dual(const AlgebraPresentation& pres);

// span equality of the quadratic parts of two presentations on the same
// number of generators
bool quadratic_span_equal(const AlgebraPresentation& a, const AlgebraPresentation& b);

}  // namespace skewgor
