#include "skewgor/gbalgebra.hpp"

#include <algorithm>

namespace skewgor {

namespace {
// r += c * v over F_p
void svecp_acc(SVecP& r, uint32_t c, const SVecP& v, const ModP& f) {
    SVecP merged;
    merged.reserve(r.size() + v.size());
    size_t x = 0, y = 0;
    while (x < r.size() && y < v.size()) {
        if (r[x].first < v[y].first)
            merged.push_back(r[x++]);
        else if (r[x].first > v[y].first) {
            uint32_t val = f.mul(c, v[y].second);
            if (val) merged.emplace_back(v[y].first, val);
            ++y;
        } else {
            uint32_t val = f.add(r[x].second, f.mul(c, v[y].second));
            if (val) merged.emplace_back(r[x].first, val);
            ++x;
            ++y;
        }
    }
    for (; x < r.size(); ++x) merged.push_back(r[x]);
    for (; y < v.size(); ++y) {
        uint32_t val = f.mul(c, v[y].second);
        if (val) merged.emplace_back(v[y].first, val);
    }
    r = std::move(merged);
}
}  // namespace

GBAlgebra::GBAlgebra(GroebnerBasis gb, int top, std::vector<std::string> gen_names)
    : gb_(std::move(gb)), top_(top), names_(std::move(gen_names)) {
    int limit = gb_.valid_degree_limit();
    if (limit >= 0 && top_ > limit)
        throw std::domain_error("GBAlgebra: basis degree " + std::to_string(top_) +
                                " beyond the certified degree " + std::to_string(limit));
    if (names_.empty())
        for (int i = 1; i <= gb_.n(); ++i) names_.push_back("X" + std::to_string(i));
    words_.resize(top_ + 1);
    index_.resize(top_ + 1);
    for (int d = 0; d <= top_; ++d) {
        words_[d] = gb_.automaton().enumerate_avoiding(d);
        // canonical basis order: decreasing in the monomial order (so index 0
        // is the largest normal word); deterministic
        std::sort(words_[d].begin(), words_[d].end(),
                  [this](const Word& x, const Word& y) { return gb_.order().compare(x, y) > 0; });
        for (size_t i = 0; i < words_[d].size(); ++i)
            index_[d].emplace(words_[d][i], static_cast<int>(i));
        if (words_[d].empty()) finite_ = true;
    }
    rmul_.resize(top_ + 1);
    for (int d = 0; d < top_; ++d) rmul_[d].resize(words_[d].size() * gb_.n());
}

int GBAlgebra::dim(int d) const {
    if (d < 0) return 0;
    if (d > top_) {
        if (finite_) return 0;
        require_degree(d);
    }
    return static_cast<int>(words_[d].size());
}

std::string GBAlgebra::label(int d, int i) const {
    std::string stem = "X";
    return words_[d][i].str(stem);
}

int GBAlgebra::index_of(int d, const Word& w) const {
    auto it = index_[d].find(w);
    return it == index_[d].end() ? -1 : it->second;
}

std::vector<int> GBAlgebra::letters(int d, int i) const {
    const Word& w = words_[d][i];
    return std::vector<int>(w.a.begin(), w.a.begin() + w.len);
}

SVec GBAlgebra::nf_coords(const Word& w) const {
    SVec v{{0, Scalar(1)}};
    int d = 0;
    for (int k = 0; k < w.len; ++k) {
        v = rmul_gen(d, v, w.a[k]);
        ++d;
        if (v.empty()) return {};
    }
    return v;
}

SVec GBAlgebra::nf_coords(const NCPoly& p) const {
    SVec acc;
    for (const auto& [w, c] : p.terms) acc = svec_axpy(acc, c, nf_coords(w));
    return acc;
}

const SVec& GBAlgebra::rmul_entry(int d, int i, int g) const {
    static const SVec kEmpty;
    if (d + 1 > top_) {
        if (finite_) return kEmpty;
        throw std::domain_error("GBAlgebra: multiplication beyond the computed bound");
    }
    int n = gb_.n();
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto& slot = rmul_[d][i * n + g];
        if (slot) return *slot;
    }
    // w * X_g; since w is normal, a leading word can only occur as a suffix
    Word w = words_[d][i];
    w.push(g);
    SVec result;
    auto [pat, end] = gb_.automaton().find(w);
    if (pat < 0) {
        result = {{index_of(d + 1, w), Scalar(1)}};
    } else {
        const NCPoly& gel = gb_.elems()[pat];
        int L = gel.lead().degree();
        Word prefix = w.sub(0, w.len - L);
        for (size_t t = 1; t < gel.terms.size(); ++t) {
            // prefix * tail_word, folded through lower-degree tables
            SVec v{{index_of(static_cast<int>(prefix.len), prefix), Scalar(1)}};
            int dd = prefix.len;
            const Word& tw = gel.terms[t].first;
            for (int k = 0; k < tw.len && !v.empty(); ++k) {
                v = rmul_gen(dd, v, tw.a[k]);
                ++dd;
            }
            result = svec_axpy(result, -gel.terms[t].second, v);
        }
    }
    std::lock_guard<std::mutex> lk(mu_);
    auto& slot = rmul_[d][i * n + g];
    if (!slot) slot = std::move(result);
    return *slot;
}

SVec GBAlgebra::rmul_gen(int d, const SVec& v, int g) const {
    SVec acc;
    for (const auto& [i, c] : v) acc = svec_axpy(acc, c, rmul_entry(d, i, g));
    return acc;
}

SVec GBAlgebra::mul_basis(int d1, int i, int d2, int j) const {
    // fold the right factor's letters through the cached tables
    SVec v{{i, Scalar(1)}};
    const Word& wj = words_[d2][j];
    int d = d1;
    for (int k = 0; k < wj.len && !v.empty(); ++k) {
        v = rmul_gen(d, v, wj.a[k]);
        ++d;
    }
    return v;
}

SVecP GBAlgebra::mul_basis_p(int d1, int i, int d2, int j, uint32_t p) const {
    ModP f{p};
    int n = gb_.n();
    SVecP v{{i, 1u}};
    const Word& wj = words_[d2][j];
    int d = d1;
    for (int k = 0; k < wj.len && !v.empty(); ++k) {
        const auto& tab = mod_table(d, p);
        SVecP acc;
        for (const auto& [b, c] : v) svecp_acc(acc, c, tab[b * n + wj.a[k]], f);
        v = std::move(acc);
        ++d;
    }
    return v;
}

const std::vector<SVecP>& GBAlgebra::mod_table(int d, uint32_t p) const {
    std::lock_guard<std::mutex> lk(mu_);
    auto& tabs = modtab_[p];
    if (tabs.empty()) tabs.resize(top_);
    if (d >= top_) throw std::domain_error("GBAlgebra: mod table beyond the computed bound");

    ModP f{p};
    int n = gb_.n();
    auto fold = [&](const Word& prefix, const Word& tail) {
        SVecP v{{index_of(static_cast<int>(prefix.len), prefix), 1u}};
        int dd = prefix.len;
        for (int k = 0; k < tail.len && !v.empty(); ++k) {
            const auto& tab = tabs[dd];
            SVecP acc;
            for (const auto& [i, c] : v) svecp_acc(acc, c, tab[i * n + tail.a[k]], f);
            v = std::move(acc);
            ++dd;
        }
        return v;
    };

    for (int lvl = 0; lvl <= d; ++lvl) {
        if (!tabs[lvl].empty() || words_[lvl].empty()) continue;
        auto& out = tabs[lvl];
        out.assign(words_[lvl].size() * n, {});
        // ascending word order: rewrites only reference strictly smaller
        // words at the same level, which sort to larger indices
        for (int i = static_cast<int>(words_[lvl].size()) - 1; i >= 0; --i) {
            for (int g = 0; g < n; ++g) {
                Word w = words_[lvl][i];
                w.push(g);
                auto [pat, end] = gb_.automaton().find(w);
                (void)end;
                if (pat < 0) {
                    out[i * n + g] = {{index_of(lvl + 1, w), 1u}};
                    continue;
                }
                const NCPoly& gel = gb_.elems()[pat];
                int L = gel.lead().degree();
                Word prefix = w.sub(0, w.len - L);
                SVecP res;
                for (size_t t = 1; t < gel.terms.size(); ++t) {
                    uint32_t c = f.neg(gel.terms[t].second.residue(p));
                    if (!c) continue;
                    svecp_acc(res, c, fold(prefix, gel.terms[t].first), f);
                }
                out[i * n + g] = std::move(res);
            }
        }
    }
    return tabs[d];
}

GroebnerBasis presentation_gb(const AlgebraPresentation& pres, int degree_cap,
                              const MonomialOrder* order, int threads) {
    if (pres.ambient != Ambient::free)
        throw std::invalid_argument("presentation_gb: free-ambient presentation required");
    MonomialOrder ord = order ? *order : pres.default_order();
    return buchberger_truncated(pres.n(), pres.relations, degree_cap, ord, threads);
}

std::shared_ptr<const GBAlgebra> gb_algebra(const AlgebraPresentation& pres, int gb_degree,
                                            int basis_top, const MonomialOrder* order,
                                            int threads) {
    GroebnerBasis gb = presentation_gb(pres, gb_degree, order, threads);
    return std::make_shared<GBAlgebra>(std::move(gb), basis_top, pres.gens);
}

SeriesUni hilbert_series_of_quotient(const AlgebraPresentation& pres, int D,
                                     const MonomialOrder* order, int threads) {
    GroebnerBasis gb = presentation_gb(pres, D, order, threads);
    std::vector<mpz_class> counts = gb.quotient_dims(D);
    std::vector<Scalar> c;
    c.reserve(counts.size());
    for (const auto& x : counts) c.emplace_back(Scalar(mpz_class(x)));
    return SeriesUni(std::move(c), D);
}

}  // namespace skewgor
