#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "skewgor/scalar.hpp"

namespace skewgor {

// Sparse vector: (column index, value) pairs sorted by index, values nonzero.
using SVec = std::vector<std::pair<int32_t, Scalar>>;

SVec svec_add(const SVec& a, const SVec& b);
SVec svec_axpy(const SVec& a, const Scalar& c, const SVec& b);  // a + c*b
SVec svec_scale(const SVec& a, const Scalar& c);
bool svec_is_zero(const SVec& a);

// Exact row echelon structure over Q (or F_p through Scalar).  Rows are
// inserted one by one; each new row is reduced against the current pivots.
class EchelonQ {
public:
    // Reduces `row` by the basis; if a nonzero remainder survives it becomes
    // a new pivot row and true is returned.
    bool insert(SVec row);
    // Reduction only, basis unchanged.
    SVec reduce(SVec row) const;
    int rank() const { return static_cast<int>(rows_.size()); }
    // Pivot columns in insertion order.
    const std::vector<int32_t>& pivots() const { return pivot_cols_; }
    bool has_pivot(int32_t col) const { return by_pivot_.count(col) != 0; }
    const std::vector<SVec>& rows() const { return rows_; }

private:
    std::vector<SVec> rows_;  // pivot entry normalized to 1
    std::vector<int32_t> pivot_cols_;
    std::map<int32_t, int> by_pivot_;
};

// Dense-ish kernel of a small exact matrix given by columns; returns a basis
// of {x : sum_k x_k col_k = 0}.
std::vector<SVec> kernel_exact(const std::vector<SVec>& cols);

// ---------------------------------------------------------------------------
// GF(p) layer.  Word-size arithmetic used as a pivot/rank search accelerator;
// all reported results are certified on the exact side.

using SVecP = std::vector<std::pair<int32_t, uint32_t>>;

struct ModP {
    uint32_t p;
    uint32_t add(uint32_t a, uint32_t b) const {
        uint64_t s = static_cast<uint64_t>(a) + b;
        return s >= p ? static_cast<uint32_t>(s - p) : static_cast<uint32_t>(s);
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p - b; }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p);
    }
    uint32_t neg(uint32_t a) const { return a ? p - a : 0; }
    uint32_t inv(uint32_t a) const;
    uint32_t pow(uint32_t a, uint64_t e) const;
};

SVecP svec_mod(const SVec& v, const ModP& f);

// Row echelon over F_p with optional back-substitution support.
class EchelonP {
public:
    explicit EchelonP(uint32_t p) : f_{p} {}
    bool insert(SVecP row);
    SVecP reduce(SVecP row) const;
    int rank() const { return static_cast<int>(rows_.size()); }
    bool has_pivot(int32_t col) const { return by_pivot_.count(col) != 0; }
    const ModP& field() const { return f_; }

    // Kernel vector of the row set interpreted as a matrix (rows are matrix
    // rows, columns are unknowns): for a non-pivot column fc, returns x with
    // x[fc] = 1 and M x = 0 for the span of inserted rows.  Only valid when
    // every inserted row reduced to zero or became a pivot (always true).
    SVecP kernel_vector(int32_t free_col) const;

private:
    ModP f_;
    std::vector<SVecP> rows_;  // pivot normalized to 1; kept in pivot order
    std::vector<int32_t> pivot_cols_;
    std::map<int32_t, int> by_pivot_;
};

// Deterministic sequence of 31-bit primes for the modular search layer.
const std::vector<uint32_t>& search_primes();

// Rational reconstruction of x mod m (|num|,den <= sqrt(m/2)); nullopt if none.
std::optional<Scalar> rational_reconstruct(const mpz_class& x, const mpz_class& m);

// CRT combine: residues r_i mod primes p_i -> value mod prod p_i.
mpz_class crt_combine(const std::vector<uint32_t>& residues, const std::vector<uint32_t>& primes,
                      mpz_class* modulus_out = nullptr);

}  // namespace skewgor
