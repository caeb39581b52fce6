#include "skewgor/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace skewgor {

SVecP GradedAlgebra::mul_basis_p(int d1, int i, int d2, int j, uint32_t p) const {
    return svec_mod(mul_basis(d1, i, d2, j), ModP{p});
}

SVec GradedAlgebra::mul(int d1, const SVec& a, int d2, const SVec& b) const {
    SVec acc;
    for (const auto& [i, ci] : a)
        for (const auto& [j, cj] : b) {
            SVec t = mul_basis(d1, i, d2, j);
            acc = svec_axpy(acc, ci * cj, t);
        }
    return acc;
}

SVec GradedAlgebra::mul_gen_left(int g, int d, const SVec& v) const {
    SVec acc;
    for (const auto& [j, cj] : v) acc = svec_axpy(acc, cj, mul_basis(1, g, d, j));
    return acc;
}

SeriesUni GradedAlgebra::hilbert(int D) const {
    std::vector<Scalar> c(D + 1);
    for (int d = 0; d <= D; ++d) {
        if (d > top() && finite())
            c[d] = Scalar(0);
        else {
            require_degree(d);
            c[d] = Scalar(dim(d));
        }
    }
    return SeriesUni(std::move(c), D);
}

void GradedAlgebra::require_degree(int d) const {
    if (d > top() && !finite())
        throw std::domain_error("algebra: degree " + std::to_string(d) +
                                " beyond the computed bound " + std::to_string(top()));
}

// --- MonomialAmbient --------------------------------------------------------

MonomialAmbient::MonomialAmbient(AmbientKind kind, std::vector<std::string> names, int top_bound)
    : kind_(kind), names_(std::move(names)), top_(top_bound) {
    int n = static_cast<int>(names_.size());
    if (n < 1) throw std::invalid_argument("MonomialAmbient: need at least one generator");
    if (kind_ == AmbientKind::exterior) top_ = std::min(top_, n);
    basis_.resize(top_ + 1);
    basis_[0] = {IndexTuple{}};
    for (int d = 1; d <= top_; ++d) {
        // extend degree d-1 monomials on the right by a generator with index
        // >= (exterior: >) the last one; keeps each degree sorted lex
        for (const auto& m : basis_[d - 1]) {
            int start = m.empty() ? 0 : (kind_ == AmbientKind::exterior ? m.back() + 1 : m.back());
            for (int g = start; g < n; ++g) {
                IndexTuple t = m;
                t.push_back(static_cast<uint8_t>(g));
                basis_[d].push_back(std::move(t));
            }
        }
        std::sort(basis_[d].begin(), basis_[d].end());
    }
}

int MonomialAmbient::dim(int d) const {
    if (d < 0) return 0;
    if (d > top_) {
        if (finite()) return 0;
        require_degree(d);
    }
    return static_cast<int>(basis_[d].size());
}

std::string MonomialAmbient::label(int d, int i) const {
    if (d == 0) return "1";
    const IndexTuple& t = basis_[d][i];
    std::string s;
    for (size_t k = 0; k < t.size(); ++k) {
        if (k) s += "*";
        s += names_[t[k]];
    }
    return s;
}

int MonomialAmbient::index_of(int d, const IndexTuple& m) const {
    auto it = std::lower_bound(basis_[d].begin(), basis_[d].end(), m);
    if (it == basis_[d].end() || *it != m) return -1;
    return static_cast<int>(it - basis_[d].begin());
}

SVec MonomialAmbient::mul_basis(int d1, int i, int d2, int j) const {
    int d = d1 + d2;
    if (d > top_) {
        if (finite()) return {};
        require_degree(d);
    }
    IndexTuple t = basis_[d1][i];
    const IndexTuple& u = basis_[d2][j];
    t.insert(t.end(), u.begin(), u.end());
    if (kind_ == AmbientKind::exterior) {
        int sign = sort_with_sign(t);
        if (sign == 0) return {};
        int idx = index_of(d, t);
        return {{idx, Scalar(sign)}};
    }
    std::sort(t.begin(), t.end());
    int idx = index_of(d, t);
    return {{idx, Scalar(1)}};
}

std::vector<int> MonomialAmbient::letters(int d, int i) const {
    const IndexTuple& t = basis_[d][i];
    return std::vector<int>(t.begin(), t.end());
}

SVec MonomialAmbient::coords(const ExteriorElement& e) const {
    if (e.is_zero()) return {};
    if (!e.homogeneous()) throw std::invalid_argument("coords: inhomogeneous element");
    int d = e.degree();
    SVec v;
    for (const auto& [t, c] : e.terms()) {
        int idx = index_of(d, t);
        if (idx < 0) throw std::invalid_argument("coords: monomial outside basis");
        v.emplace_back(idx, c);
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

ExteriorElement MonomialAmbient::element(int d, const SVec& v) const {
    ExteriorElement e(n());
    for (const auto& [i, c] : v) e.add_term(basis_[d][i], c);
    return e;
}

std::shared_ptr<const MonomialAmbient> exterior_algebra(int n, const std::string& stem) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back(stem + std::to_string(i));
    return std::make_shared<MonomialAmbient>(AmbientKind::exterior, std::move(names), n);
}

std::shared_ptr<const MonomialAmbient> exterior_algebra(std::vector<std::string> names) {
    int n = static_cast<int>(names.size());
    return std::make_shared<MonomialAmbient>(AmbientKind::exterior, std::move(names), n);
}

std::shared_ptr<const MonomialAmbient> polynomial_ambient(std::vector<std::string> names, int top) {
    return std::make_shared<MonomialAmbient>(AmbientKind::polynomial, std::move(names), top);
}

// --- QuotientAlgebra --------------------------------------------------------

QuotientAlgebra::QuotientAlgebra(AlgebraPtr parent, std::vector<std::pair<int, SVec>> relations)
    : parent_(std::move(parent)) {
    top_ = parent_->top();
    for (auto& [d, v] : relations) {
        if (v.empty()) continue;
        if (d == 0) zero_ = true;
        if (d > top_)
            throw std::invalid_argument("quotient: relation degree beyond the computed bound");
    }
    ideal_.resize(top_ + 1);
    reps_.resize(top_ + 1);
    quot_idx_.resize(top_ + 1);

    if (!zero_) {
        for (int d = 0; d <= top_; ++d) {
            // multiples of the lower ideal piece (one-sided; the parents in
            // use are graded-commutative)
            if (d >= 1) {
                int ng = parent_->dim(1);
                for (const auto& row : ideal_[d - 1].rows())
                    for (int g = 0; g < ng; ++g) {
                        SVec w = parent_->mul_gen_left(g, d - 1, row);
                        if (!w.empty()) ideal_[d].insert(std::move(w));
                    }
            }
            for (const auto& [rd, rv] : relations)
                if (rd == d) ideal_[d].insert(rv);
        }
    }

    int first_zero = -1;
    for (int d = 0; d <= top_; ++d) {
        int pd = parent_->dim(d);
        quot_idx_[d].assign(pd, -1);
        if (zero_) continue;
        for (int i = 0; i < pd; ++i)
            if (!ideal_[d].has_pivot(i)) {
                quot_idx_[d][i] = static_cast<int>(reps_[d].size());
                reps_[d].push_back(i);
            }
        if (first_zero < 0 && reps_[d].empty()) first_zero = d;
    }
    finite_ = zero_ || parent_->finite() || first_zero >= 0;
}

int QuotientAlgebra::dim(int d) const {
    if (zero_) return 0;
    if (d > top_) {
        if (finite()) return 0;
        require_degree(d);
    }
    if (d < 0) return 0;
    // generated in degree 1: once a degree vanishes, everything above does
    for (int e = 1; e < d; ++e)
        if (reps_[e].empty()) return 0;
    return static_cast<int>(reps_[d].size());
}

std::string QuotientAlgebra::label(int d, int i) const { return parent_->label(d, reps_[d][i]); }

SVec QuotientAlgebra::reduce(int d, const SVec& parent_vec) const {
    SVec red = ideal_[d].reduce(parent_vec);
    SVec out;
    out.reserve(red.size());
    for (auto& [c, v] : red) out.emplace_back(quot_idx_[d][c], std::move(v));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

SVec QuotientAlgebra::lift(int d, const SVec& quotient_vec) const {
    SVec out;
    out.reserve(quotient_vec.size());
    for (const auto& [i, v] : quotient_vec) out.emplace_back(reps_[d][i], v);
    return out;
}

SVec QuotientAlgebra::mul_basis(int d1, int i, int d2, int j) const {
    int d = d1 + d2;
    if (zero_) return {};
    if (d > top_) {
        if (finite()) return {};
        require_degree(d);
    }
    if (dim(d) == 0) return {};
    SVec p = parent_->mul_basis(d1, reps_[d1][i], d2, reps_[d2][j]);
    return reduce(d, p);
}

std::vector<int> QuotientAlgebra::letters(int d, int i) const {
    std::vector<int> ls = parent_->letters(d, reps_[d][i]);
    // translate parent generator indices into quotient degree-1 indices
    for (int& g : ls) {
        int q = quot_idx_[1].size() > static_cast<size_t>(g) ? quot_idx_[1][g] : -1;
        if (q < 0)
            throw std::logic_error("QuotientAlgebra: generator not a quotient basis element");
        g = q;
    }
    return ls;
}

std::vector<SVec> QuotientAlgebra::ideal_basis(int d) const { return ideal_[d].rows(); }
int QuotientAlgebra::ideal_dim(int d) const { return ideal_[d].rank(); }

std::shared_ptr<const QuotientAlgebra> quotient(AlgebraPtr A,
                                                std::vector<std::pair<int, SVec>> relations) {
    return std::make_shared<QuotientAlgebra>(std::move(A), std::move(relations));
}

// --- TableAlgebra -----------------------------------------------------------

TableAlgebra::TableAlgebra(std::vector<std::vector<std::string>> labels,
                           std::vector<std::string> gen_names,
                           std::vector<std::vector<std::vector<std::vector<SVec>>>> tables,
                           bool finite)
    : labels_(std::move(labels)),
      gen_names_(std::move(gen_names)),
      tables_(std::move(tables)),
      top_(static_cast<int>(labels_.size()) - 1),
      finite_(finite) {}

SVec TableAlgebra::mul_basis(int d1, int i, int d2, int j) const {
    int d = d1 + d2;
    if (d > top_) {
        if (finite_) return {};
        require_degree(d);
    }
    return tables_[d1][d2][i][j];
}

// --- GradedModule -----------------------------------------------------------

SVec GradedModule::act_gen(int g, int d, const SVec& v) const {
    if (d < lo || d > hi()) return {};
    SVec acc;
    for (const auto& [i, c] : v) acc = svec_axpy(acc, c, act[g][d - lo][i]);
    return acc;
}

SVec GradedModule::act_elem(int dw, int w, int d, const SVec& v) const {
    std::vector<int> ls = algebra->letters(dw, w);
    SVec cur = v;
    int cd = d;
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
        cur = act_gen(*it, cd, cur);
        ++cd;
        if (cur.empty()) return {};
    }
    return cur;
}

SeriesUni GradedModule::hilbert(int D) const {
    std::vector<Scalar> c(D + 1);
    for (int d = 0; d <= D; ++d) c[d] = Scalar(dim(d));
    return SeriesUni(std::move(c), D);
}

// --- socle / Gorenstein -----------------------------------------------------

int GradedSubspace::total() const {
    int t = 0;
    for (int d : dims) t += d;
    return t;
}

GradedSubspace socle(const GradedAlgebra& A) {
    if (!A.finite()) throw std::domain_error("socle: algebra must be finite");
    int top = A.top();
    while (top > 0 && A.dim(top) == 0) --top;
    GradedSubspace S;
    S.dims.assign(top + 1, 0);
    S.basis.resize(top + 1);
    int ng = A.dim(1);
    for (int d = 1; d <= top; ++d) {
        if (A.dim(d) == 0) continue;
        if (d == top) {
            // the top degree is annihilated by the augmentation ideal
            for (int i = 0; i < A.dim(d); ++i) S.basis[d].push_back({{i, Scalar(1)}});
            S.dims[d] = A.dim(d);
            continue;
        }
        // columns: basis element -> stacked images under all generators
        int up = A.dim(d + 1);
        std::vector<SVec> cols(A.dim(d));
        for (int i = 0; i < A.dim(d); ++i) {
            SVec stacked;
            for (int g = 0; g < ng; ++g) {
                SVec im = A.mul_basis(1, g, d, i);
                for (const auto& [k, c] : im) stacked.emplace_back(g * up + k, c);
            }
            std::sort(stacked.begin(), stacked.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            cols[i] = std::move(stacked);
        }
        std::vector<SVec> ker = kernel_exact(cols);
        S.dims[d] = static_cast<int>(ker.size());
        S.basis[d] = std::move(ker);
    }
    return S;
}

bool is_gorenstein(const GradedAlgebra& A) { return socle(A).total() == 1; }

std::shared_ptr<const QuotientAlgebra> quotient_by_socle(AlgebraPtr A) {
    GradedSubspace S = socle(*A);
    std::vector<std::pair<int, SVec>> rels;
    for (size_t d = 0; d < S.basis.size(); ++d)
        for (const auto& v : S.basis[d]) rels.emplace_back(static_cast<int>(d), v);
    return quotient(std::move(A), std::move(rels));
}

// --- Matlis dual and friends -------------------------------------------------

GradedModule matlis_dual(AlgebraPtr A) {
    if (!A->finite()) throw std::domain_error("matlis_dual: algebra must be finite");
    int t = A->top();
    while (t > 0 && A->dim(t) == 0) --t;
    GradedModule M;
    M.algebra = A;
    M.lo = 1;
    M.dims.resize(t + 1);
    M.labels.resize(t + 1);
    for (int j = 1; j <= t + 1; ++j) {
        int d = t + 1 - j;  // M_j = dual of A_d
        M.dims[j - 1] = A->dim(d);
        for (int i = 0; i < A->dim(d); ++i)
            M.labels[j - 1].push_back("(" + A->label(d, i) + ")'");
    }
    int ng = A->dim(1);
    M.act.assign(ng, {});
    for (int g = 0; g < ng; ++g) {
        M.act[g].resize(t + 1);
        for (int j = 1; j <= t + 1; ++j) {
            int d = t + 1 - j;  // source dual of A_d, target dual of A_{d-1}
            M.act[g][j - 1].assign(A->dim(d), SVec{});
            if (j == t + 1 || d - 1 < 0) continue;
            // (x_g . f_i)(a_k) = f_i(a_k * x_g)
            for (int k = 0; k < A->dim(d - 1); ++k) {
                SVec prod = A->mul_basis(d - 1, k, 1, g);
                for (const auto& [i, c] : prod)
                    M.act[g][j - 1][i].emplace_back(k, c);
            }
            for (auto& col : M.act[g][j - 1])
                std::sort(col.begin(), col.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
        }
    }
    return M;
}

GradedModule shifted_field(AlgebraPtr A, int s) {
    GradedModule M;
    M.algebra = A;
    M.lo = s;
    M.dims = {1};
    M.labels = {{"k"}};
    int ng = A->dim(1);
    M.act.assign(ng, {{{SVec{}}}});
    return M;
}

GradedModule regular_module(AlgebraPtr A) {
    if (!A->finite()) throw std::domain_error("regular_module: algebra must be finite");
    int t = A->top();
    while (t > 0 && A->dim(t) == 0) --t;
    GradedModule M;
    M.algebra = A;
    M.lo = 0;
    M.dims.resize(t + 1);
    M.labels.resize(t + 1);
    for (int d = 0; d <= t; ++d) {
        M.dims[d] = A->dim(d);
        for (int i = 0; i < A->dim(d); ++i) M.labels[d].push_back(A->label(d, i));
    }
    int ng = A->dim(1);
    M.act.assign(ng, {});
    for (int g = 0; g < ng; ++g) {
        M.act[g].resize(t + 1);
        for (int d = 0; d <= t; ++d) {
            M.act[g][d].resize(A->dim(d));
            for (int i = 0; i < A->dim(d); ++i)
                M.act[g][d][i] = d + 1 <= t ? A->mul_basis(1, g, d, i) : SVec{};
        }
    }
    return M;
}

std::shared_ptr<const TableAlgebra> trivial_extension(AlgebraPtr A, const GradedModule& M) {
    if (M.algebra.get() != A.get())
        throw std::invalid_argument("trivial_extension: module is not over the given algebra");
    if (M.dim(0) > 0)
        throw std::invalid_argument("trivial_extension: module must live in positive degrees");
    if (!A->finite()) throw std::domain_error("trivial_extension: algebra must be finite");
    int ta = A->top();
    while (ta > 0 && A->dim(ta) == 0) --ta;
    int top = std::max(ta, M.hi());

    std::vector<std::vector<std::string>> labels(top + 1);
    std::vector<int> adim(top + 1, 0), mdim(top + 1, 0);
    for (int d = 0; d <= top; ++d) {
        adim[d] = d <= ta ? A->dim(d) : 0;
        mdim[d] = M.dim(d);
        for (int i = 0; i < adim[d]; ++i) labels[d].push_back(A->label(d, i));
        for (int i = 0; i < mdim[d]; ++i)
            labels[d].push_back(d - M.lo < static_cast<int>(M.labels.size()) &&
                                        i < static_cast<int>(M.labels[d - M.lo].size())
                                    ? M.labels[d - M.lo][i]
                                    : "m" + std::to_string(i));
    }

    auto embed_a = [&](int, const SVec& v) { return v; };
    auto embed_m = [&](int d, const SVec& v) {
        SVec r;
        for (const auto& [i, c] : v) r.emplace_back(adim[d] + i, c);
        return r;
    };

    std::vector<std::vector<std::vector<std::vector<SVec>>>> tab(top + 1);
    for (int d1 = 0; d1 <= top; ++d1) {
        tab[d1].resize(top - d1 + 1);
        for (int d2 = 0; d1 + d2 <= top; ++d2) {
            int d = d1 + d2;
            int n1 = adim[d1] + mdim[d1], n2 = adim[d2] + mdim[d2];
            tab[d1][d2].assign(n1, std::vector<SVec>(n2));
            for (int i = 0; i < n1; ++i)
                for (int j = 0; j < n2; ++j) {
                    bool im = i >= adim[d1], jm = j >= adim[d2];
                    if (im && jm) continue;  // M * M = 0
                    if (!im && !jm) {
                        tab[d1][d2][i][j] = embed_a(d, A->mul_basis(d1, i, d2, j));
                    } else if (!im && jm) {
                        // a * m'
                        SVec v = M.act_elem(d1, i, d2, {{j - adim[d2], Scalar(1)}});
                        tab[d1][d2][i][j] = embed_m(d, v);
                    } else {
                        // m * a' = (-1)^{|m| |a'|} a' * m
                        SVec v = M.act_elem(d2, j, d1, {{i - adim[d1], Scalar(1)}});
                        if ((d1 * d2) % 2 == 1)
                            v = svec_scale(v, Scalar(-1));
                        tab[d1][d2][i][j] = embed_m(d, v);
                    }
                }
        }
    }

    std::vector<std::string> gen_names;
    for (const auto& s : labels[1]) gen_names.push_back(s);
    auto G = std::make_shared<TableAlgebra>(std::move(labels), std::move(gen_names), std::move(tab),
                                            true);
    // the construction only makes sense when the result is generated in
    // degree 1; verify by spanning each degree with degree-1 products
    for (int d = 2; d <= top; ++d) {
        if (G->dim(d) == 0) continue;
        EchelonQ span;
        int r = 0;
        for (int g = 0; g < G->dim(1) && r < G->dim(d); ++g)
            for (int j = 0; j < G->dim(d - 1); ++j)
                if (span.insert(G->mul_basis(1, g, d - 1, j))) ++r;
        if (r != G->dim(d))
            throw std::invalid_argument("trivial_extension: result not generated in degree 1");
    }
    return G;
}

}  // namespace skewgor
