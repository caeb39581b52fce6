#pragma once

#include <mutex>
#include <unordered_map>

#include "skewgor/algebra.hpp"
#include "skewgor/ncgb.hpp"
#include "skewgor/presentation.hpp"

namespace skewgor {

// Quotient of the free algebra presented by a truncated Groebner basis,
// exposed through its normal-word basis up to a requested degree.  Requests
// beyond the certificate-valid degree are refused.
class GBAlgebra : public GradedAlgebra {
public:
    GBAlgebra(GroebnerBasis gb, int top, std::vector<std::string> gen_names = {});

    int top() const override { return top_; }
    bool finite() const override { return finite_; }
    int dim(int d) const override;
    std::string label(int d, int i) const override;
    const std::vector<std::string>& gen_names() const override { return names_; }
    SVec mul_basis(int d1, int i, int d2, int j) const override;
    SVecP mul_basis_p(int d1, int i, int d2, int j, uint32_t p) const override;
    std::vector<int> letters(int d, int i) const override;

    const GroebnerBasis& gb() const { return gb_; }
    const Word& word(int d, int i) const { return words_[d][i]; }
    int index_of(int d, const Word& w) const;

    // normal form of an arbitrary word/polynomial in basis coordinates
    SVec nf_coords(const Word& w) const;
    SVec nf_coords(const NCPoly& p) const;

    // v (degree d) * X_g, exact; cached
    SVec rmul_gen(int d, const SVec& v, int g) const;

    // Flat right-multiplication tables over F_p for the search layer:
    // table(d, p)[i * n + g] = coordinates of word_i * X_g in degree d+1.
    const std::vector<SVecP>& mod_table(int d, uint32_t p) const;

private:
    const SVec& rmul_entry(int d, int i, int g) const;

    GroebnerBasis gb_;
    int top_;
    bool finite_ = false;
    std::vector<std::string> names_;
    std::vector<std::vector<Word>> words_;
    std::vector<std::unordered_map<Word, int, WordHash>> index_;

    mutable std::mutex mu_;
    // lazy exact tables: rmul_[d][i*n+g], empty optional = not yet computed
    mutable std::vector<std::vector<std::optional<SVec>>> rmul_;
    mutable std::map<uint32_t, std::vector<std::vector<SVecP>>> modtab_;
};

// Builds the truncated GB of a free presentation and wraps it; `basis_top` is
// how far the normal-word basis is materialized (<= gb_degree).
std::shared_ptr<const GBAlgebra> gb_algebra(const AlgebraPresentation& pres, int gb_degree,
                                            int basis_top, const MonomialOrder* order = nullptr,
                                            int threads = 1);

// Hilbert series of a free presentation's quotient via the Groebner engine.
SeriesUni hilbert_series_of_quotient(const AlgebraPresentation& pres, int D,
                                     const MonomialOrder* order = nullptr, int threads = 1);

GroebnerBasis presentation_gb(const AlgebraPresentation& pres, int degree_cap,
                              const MonomialOrder* order = nullptr, int threads = 1);

}  // namespace skewgor
