#pragma once

#include "skewgor/resolution.hpp"

namespace skewgor {

struct FormulaReport {
    std::string formula;
    std::string subject;
    int H = 0, J = 0;
    SeriesBi predicted, computed, defect;
    bool holds = false;
    std::string str() const;
    std::string json() const;
};

// Double Poincare-Betti series of A predicted from the Hilbert series of A
// and of its quadratic dual: 1/P = (1 + 1/x)/A!(xy) - A(-xy)/x, valid for
// finite A with cube-zero augmentation ideal or Gorenstein A with m^4 = 0.
// `dual_series` must reach degree min(H+1, J).
SeriesBi lofwall_predict(AlgebraPtr A, const SeriesUni& dual_series, int H, int J);
FormulaReport verify_lofwall(AlgebraPtr A, const SeriesUni& dual_series, int H, int J,
                             const std::string& subject = "");

// P_{A/soc A} = P_A / (1 - x^2 y^3 P_A) for Gorenstein A with socle degree 3.
SeriesBi golod_quotient_predict(const SeriesBi& P_A, int H, int J);
FormulaReport verify_golod(AlgebraPtr A, int H, int J, const std::string& subject = "");

// P_{R x| M} = P_R / (1 - sum t^M_{i,j} x^{i+1} y^j): the trivial-extension
// formula; the Tor table of M supplies the suspension factor.
SeriesBi gulliksen_predict(const SeriesBi& P_R, const BigradedTable& torM, int H, int J);
FormulaReport verify_gulliksen(AlgebraPtr R, const GradedModule& M, AlgebraPtr extension, int H,
                               int J, const std::string& subject = "");

// Bass = (b - a xy + x^2 y^2) P for R(z) = 1 + a z + b z^2 with socle = m^2;
// the defect is computed Bass minus the prediction.
SeriesBi bogvad_predict(AlgebraPtr A, const SeriesBi& P_A, int H, int J);
FormulaReport verify_bogvad(AlgebraPtr A, int H, int J, const std::string& subject = "");
SeriesBi bogvad_defect(AlgebraPtr A, int H, int J);

// A(-z) * dual(z) = 1 to the common truncation (necessary for Koszulness,
// not sufficient).
bool koszul_series_check(const SeriesUni& a, const SeriesUni& dual, int D);

}  // namespace skewgor
