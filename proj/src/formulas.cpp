#include "skewgor/formulas.hpp"

#include <sstream>

namespace skewgor {

std::string FormulaReport::str() const {
    std::ostringstream os;
    os << formula << (subject.empty() ? "" : " [" + subject + "]") << " on box (" << H << "," << J
       << "): " << (holds ? "holds" : "FAILS");
    if (!holds) os << "\n  defect = " << defect.str();
    return os.str();
}

std::string FormulaReport::json() const {
    std::ostringstream os;
    os << "{\"formula\": \"" << formula << "\", \"subject\": \"" << subject << "\", \"box\": ["
       << H << "," << J << "], \"verdict\": \"" << (holds ? "holds" : "fails")
       << "\", \"predicted\": " << predicted.json() << ", \"computed\": " << computed.json()
       << ", \"defect\": " << defect.json() << "}";
    return os.str();
}

SeriesBi lofwall_predict(AlgebraPtr A, const SeriesUni& dual_series, int H, int J) {
    if (!A->finite()) throw std::domain_error("lofwall_predict: algebra must be finite");
    int t = A->top();
    while (t > 0 && A->dim(t) == 0) --t;
    bool cube_zero = t <= 2;
    bool gorenstein_m4 = t == 3 && is_gorenstein(*A);
    if (!cube_zero && !gorenstein_m4)
        throw std::domain_error(
            "lofwall_predict: requires a cube-zero augmentation ideal or a Gorenstein ring with "
            "m^4 = 0");
    int need = std::min(H + 1, J);
    if (dual_series.trunc() < need)
        throw std::domain_error("lofwall_predict: dual Hilbert series truncated too early");
    SeriesUni s = dual_series.inverse();  // 1/A!(z)
    SeriesBi invP(H, J);
    for (int d = 0; d <= std::min(H, J); ++d) invP.at(d, d) = invP.coeff(d, d) + s.coeff(d);
    for (int d = 1; d <= std::min(H + 1, J); ++d) {
        Scalar a_d = d <= t ? Scalar(A->dim(d)) : Scalar(0);
        Scalar c = s.coeff(d) - (d % 2 ? -a_d : a_d);
        if (d == 1 && !(s.coeff(0) - Scalar(1)).is_zero())
            throw std::logic_error("lofwall_predict: constant terms do not cancel");
        if (d - 1 <= H) invP.at(d - 1, d) = invP.coeff(d - 1, d) + c;
    }
    return invP.inverse();
}

FormulaReport verify_lofwall(AlgebraPtr A, const SeriesUni& dual_series, int H, int J,
                             const std::string& subject) {
    FormulaReport rep;
    rep.formula = "lofwall_3_1";
    rep.subject = subject;
    rep.H = H;
    rep.J = J;
    rep.predicted = lofwall_predict(A, dual_series, H, J);
    rep.computed = poincare_series(A, H, J);
    rep.defect = rep.computed - rep.predicted;
    rep.holds = rep.defect.is_zero();
    return rep;
}

SeriesBi golod_quotient_predict(const SeriesBi& P_A, int H, int J) {
    SeriesBi xy3(H, J);
    if (H >= 2 && J >= 3) xy3.at(2, 3) = Scalar(1);
    SeriesBi denom = SeriesBi::one(H, J) - xy3 * P_A;
    return P_A * denom.inverse();
}

FormulaReport verify_golod(AlgebraPtr A, int H, int J, const std::string& subject) {
    if (!is_gorenstein(*A)) throw std::domain_error("verify_golod: algebra is not Gorenstein");
    GradedSubspace soc = socle(*A);
    if (soc.dims.size() < 4 || soc.dims[3] != 1)
        throw std::domain_error("verify_golod: socle must sit in degree 3");
    FormulaReport rep;
    rep.formula = "golod_3_2";
    rep.subject = subject;
    rep.H = H;
    rep.J = J;
    SeriesBi P = poincare_series(A, H, J);
    rep.predicted = golod_quotient_predict(P, H, J);
    rep.computed = poincare_series(quotient_by_socle(A), H, J);
    rep.defect = rep.computed - rep.predicted;
    rep.holds = rep.defect.is_zero();
    return rep;
}

SeriesBi gulliksen_predict(const SeriesBi& P_R, const BigradedTable& torM, int H, int J) {
    SeriesBi denom = SeriesBi::one(H, J);
    for (int i = 0; i <= torM.H; ++i)
        for (int j = torM.j_lo; j <= torM.J; ++j) {
            long v = torM.at(i, j);
            if (!v) continue;
            if (i + 1 <= H && j >= 0 && j <= J)
                denom.at(i + 1, j) = denom.coeff(i + 1, j) - Scalar(v);
        }
    return P_R * denom.inverse();
}

FormulaReport verify_gulliksen(AlgebraPtr R, const GradedModule& M, AlgebraPtr extension, int H,
                               int J, const std::string& subject) {
    FormulaReport rep;
    rep.formula = "gulliksen_4_1";
    rep.subject = subject;
    rep.H = H;
    rep.J = J;
    SeriesBi P_R = poincare_series(R, H, J);
    ResolveOptions opt;
    opt.H = H;
    opt.J = J;
    BigradedTable torM = minimal_resolution(R, M, opt).table;
    rep.predicted = gulliksen_predict(P_R, torM, H, J);
    rep.computed = poincare_series(std::move(extension), H, J);
    rep.defect = rep.computed - rep.predicted;
    rep.holds = rep.defect.is_zero();
    return rep;
}

SeriesBi bogvad_predict(AlgebraPtr A, const SeriesBi& P_A, int H, int J) {
    int a = A->dim(1), b = A->dim(2);
    SeriesBi pre(H, J);
    pre.at(0, 0) = Scalar(b);
    if (H >= 1 && J >= 1) pre.at(1, 1) = Scalar(-a);
    if (H >= 2 && J >= 2) pre.at(2, 2) = Scalar(1);
    return pre * P_A;
}

static void require_socle_m2(const GradedAlgebra& A) {
    GradedSubspace soc = socle(A);
    int t = static_cast<int>(soc.dims.size()) - 1;
    for (int d = 1; d <= t; ++d) {
        int expect = d == 2 ? A.dim(2) : 0;
        if (soc.dims[d] != expect)
            throw std::domain_error(
                "bogvad: requires socle = m^2 (m^3 = 0 with no lower socle); found socle "
                "dimension " +
                std::to_string(soc.dims[d]) + " in degree " + std::to_string(d));
    }
}

FormulaReport verify_bogvad(AlgebraPtr A, int H, int J, const std::string& subject) {
    int t = A->top();
    while (t > 0 && A->dim(t) == 0) --t;
    if (t != 2) throw std::domain_error("bogvad: requires m^3 = 0");
    require_socle_m2(*A);
    FormulaReport rep;
    rep.formula = "bogvad_5";
    rep.subject = subject;
    rep.H = H;
    rep.J = J;
    SeriesBi P = poincare_series(A, H, J);
    rep.predicted = bogvad_predict(A, P, H, J);
    rep.computed = bass_series(A, H, J);
    rep.defect = rep.computed - rep.predicted;
    rep.holds = rep.defect.is_zero();
    return rep;
}

SeriesBi bogvad_defect(AlgebraPtr A, int H, int J) {
    return verify_bogvad(std::move(A), H, J).defect;
}

bool koszul_series_check(const SeriesUni& a, const SeriesUni& dual, int D) {
    SeriesUni prod = (a.sign_flipped() * dual).truncated(std::min({a.trunc(), dual.trunc(), D}));
    return prod == SeriesUni::one(prod.trunc());
}

}  // namespace skewgor
