#pragma once

#include <functional>

#include "skewgor/algebra.hpp"
#include "skewgor/ncpoly.hpp"

namespace skewgor {

// dim Tor_{i,j} (or Ext) on a box, with an optional offset for the internal
// index (Ext tables with module coefficients use relative degrees).
struct BigradedTable {
    int H = 0, J = 0;
    int j_lo = 0;  // stored column c represents internal degree c + j_lo
    std::vector<std::vector<long>> t;

    long at(int i, int j) const {
        int c = j - j_lo;
        if (i < 0 || i > H || c < 0 || c >= static_cast<int>(t[i].size())) return 0;
        return t[i][c];
    }
    SeriesBi series() const;  // requires j_lo >= 0
    std::string grid_str() const;
    std::string json() const;
};

// One free step of a minimal resolution: generator degrees plus differential
// images in the coordinates of the previous step ((generator, algebra basis
// element, coefficient) triples).
struct ResVec {
    int degree = 0;
    std::vector<std::tuple<int, int, Scalar>> e;  // (gen, base index, coeff), sorted
};

struct FreeStep {
    std::vector<int> gen_degree;
    std::vector<ResVec> image;  // empty for F_0
};

struct MinimalResolutionResult {
    AlgebraPtr algebra;
    const GradedModule* target_module = nullptr;  // null = residue field
    GradedModule target_copy;                     // owned copy when module target
    int H = 0, J = 0;
    std::vector<FreeStep> steps;  // 0..H
    BigradedTable table;          // t[i][j] = generators of F_i in degree j
};

struct ResolveOptions {
    int H = 5;
    int J = -1;  // default: 3*H for finite algebras, H+5 for truncated ones
    int threads = 1;
    bool force_exact = false;      // disable the modular search layer
    // stop as soon as an off-diagonal generator appears (Koszulness testing);
    // the callback receives (i, j, count) and may abort the run
    std::function<bool(int, int, long)> on_generators;
    // trust the given independent quadratic relations as the full minimal
    // relation space (valid for algebras defined by exactly those relations)
    const std::vector<NCPoly>* presented_quadratic = nullptr;
};

// Minimal graded free resolution of k (or of a module) over A, computed
// degreewise by linear algebra with exact rank bookkeeping.
MinimalResolutionResult minimal_resolution(AlgebraPtr A, const ResolveOptions& opt);
MinimalResolutionResult minimal_resolution(AlgebraPtr A, const GradedModule& M,
                                           const ResolveOptions& opt);

BigradedTable tor_table(AlgebraPtr A, int H, int J, const ResolveOptions* opt = nullptr);
SeriesBi poincare_series(AlgebraPtr A, int H, int J, const ResolveOptions* opt = nullptr);

// dim Ext^i_A(k, N) as a bigraded table; the stored internal index is the
// relative degree m - d (generator degree minus coefficient degree), offset
// by the table's j_lo.  For N = k this equals tor_table.
BigradedTable ext_with_coefficients(const MinimalResolutionResult& R, const GradedModule& N);

// Bass table of a finite algebra: Ext^i(k, A) with internal index m - d + t
// (t = top socle degree), so the socle contributes at (0, 0).
BigradedTable bass_series_table(AlgebraPtr A, int H, int J);
SeriesBi bass_series(AlgebraPtr A, int H, int J);

enum class SurjCondition { c5i, c5ii, c5iii };

struct ConditionReport {
    SurjCondition which;
    bool holds = true;
    // per (i, relative degree) failures
    std::vector<std::tuple<int, int, long, long>> failures;  // (i, j, image rank, needed)
    std::string str() const;
};

// Surjectivity of the induced maps Ext(k, m) -> Ext(k, R) (5.i),
// Ext(k, m/m^2) -> Ext(k, R/m^2) (5.ii), Ext(k, m^2) -> Ext(k, R) (5.iii).
ConditionReport condition_check(AlgebraPtr A, SurjCondition which, int H);

struct KoszulVerdict {
    bool koszul = true;  // to the tested box
    int H = 0, J = 0;
    int witness_i = -1, witness_j = -1;
    long witness_dim = 0;
    std::string str() const;
    std::string json() const;
};

// Diagonality of the Tor table on the box; positives are certified only to
// the bound, never absolutely.
KoszulVerdict koszulness_test(AlgebraPtr A, int H, int J = -1, int threads = 1);

}  // namespace skewgor
