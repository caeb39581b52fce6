#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skewgor/exterior.hpp"
#include "skewgor/linalg.hpp"
#include "skewgor/series.hpp"

namespace skewgor {

// A graded algebra generated in degree 1, with an explicit ordered basis and
// computable multiplication per internal degree.  Degrees above top() are
// either genuinely zero (finite()) or not computed.
class GradedAlgebra {
public:
    virtual ~GradedAlgebra() = default;

    virtual int top() const = 0;
    virtual bool finite() const = 0;
    virtual int dim(int d) const = 0;
    virtual std::string label(int d, int i) const = 0;
    virtual const std::vector<std::string>& gen_names() const = 0;
    int gens() const { return dim(1); }
    virtual uint32_t characteristic() const { return 0; }

    // basis_i (degree d1) * basis_j (degree d2), in degree d1+d2 coordinates.
    virtual SVec mul_basis(int d1, int i, int d2, int j) const = 0;
    // Same product over F_p; the default reduces the exact product, heavy
    // backends override with native modular tables.
    virtual SVecP mul_basis_p(int d1, int i, int d2, int j, uint32_t p) const;
    // A generator word multiplying to basis element (d, i); used to push
    // basis elements through module actions.
    virtual std::vector<int> letters(int d, int i) const = 0;

    SVec mul(int d1, const SVec& a, int d2, const SVec& b) const;
    SVec mul_gen_left(int g, int d, const SVec& v) const;  // x_g * v

    SeriesUni hilbert(int D) const;
    void require_degree(int d) const;
};

using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

enum class AmbientKind { exterior, polynomial };

// Free skew-commutative (exterior) or commutative (polynomial) monomial
// ambient; the polynomial case is truncated at the requested top degree.
class MonomialAmbient : public GradedAlgebra {
public:
    MonomialAmbient(AmbientKind kind, std::vector<std::string> names, int top_bound);

    AmbientKind kind() const { return kind_; }
    int top() const override { return top_; }
    bool finite() const override { return kind_ == AmbientKind::exterior; }
    int dim(int d) const override;
    std::string label(int d, int i) const override;
    const std::vector<std::string>& gen_names() const override { return names_; }
    SVec mul_basis(int d1, int i, int d2, int j) const override;
    std::vector<int> letters(int d, int i) const override;

    int n() const { return static_cast<int>(names_.size()); }
    // monomial of basis element (d,i): sorted generator indices (with
    // repetitions in the polynomial case)
    const IndexTuple& monomial(int d, int i) const { return basis_[d][i]; }
    int index_of(int d, const IndexTuple& m) const;

    // exterior elements <-> coordinates (exterior kind only)
    SVec coords(const ExteriorElement& e) const;
    ExteriorElement element(int d, const SVec& v) const;

private:
    AmbientKind kind_;
    std::vector<std::string> names_;
    int top_;
    std::vector<std::vector<IndexTuple>> basis_;  // per degree, sorted
};

std::shared_ptr<const MonomialAmbient> exterior_algebra(int n, const std::string& stem = "e");
std::shared_ptr<const MonomialAmbient> exterior_algebra(std::vector<std::string> names);
std::shared_ptr<const MonomialAmbient> polynomial_ambient(std::vector<std::string> names, int top);

// Quotient of a graded algebra by a two-sided homogeneous ideal, computed
// degreewise by spanning the graded pieces of the ideal and row reducing.
class QuotientAlgebra : public GradedAlgebra {
public:
    // relations: (degree, coordinates in the parent basis)
    QuotientAlgebra(AlgebraPtr parent, std::vector<std::pair<int, SVec>> relations);

    int top() const override { return top_; }
    bool finite() const override { return finite_; }
    int dim(int d) const override;
    std::string label(int d, int i) const override;
    const std::vector<std::string>& gen_names() const override { return parent_->gen_names(); }
    SVec mul_basis(int d1, int i, int d2, int j) const override;
    std::vector<int> letters(int d, int i) const override;

    bool zero_algebra() const { return zero_; }
    const AlgebraPtr& parent() const { return parent_; }
    // representative of basis element (d,i) as a parent basis index
    int rep(int d, int i) const { return reps_[d][i]; }
    SVec reduce(int d, const SVec& parent_vec) const;  // parent coords -> quotient coords
    SVec lift(int d, const SVec& quotient_vec) const;  // quotient coords -> parent coords
    // basis of the ideal piece in parent coordinates
    std::vector<SVec> ideal_basis(int d) const;
    int ideal_dim(int d) const;

private:
    AlgebraPtr parent_;
    int top_ = 0;
    bool finite_ = false, zero_ = false;
    std::vector<EchelonQ> ideal_;            // per degree
    std::vector<std::vector<int>> reps_;     // per degree: parent indices of the basis
    std::vector<std::vector<int>> quot_idx_; // parent index -> quotient index or -1
};

// Explicit multiplication tables; used for trivial extensions.
class TableAlgebra : public GradedAlgebra {
public:
    TableAlgebra(std::vector<std::vector<std::string>> labels, std::vector<std::string> gen_names,
                 std::vector<std::vector<std::vector<std::vector<SVec>>>> tables, bool finite);

    int top() const override { return top_; }
    bool finite() const override { return finite_; }
    int dim(int d) const override { return d <= top_ ? static_cast<int>(labels_[d].size()) : 0; }
    std::string label(int d, int i) const override { return labels_[d][i]; }
    const std::vector<std::string>& gen_names() const override { return gen_names_; }
    SVec mul_basis(int d1, int i, int d2, int j) const override;
    std::vector<int> letters(int, int) const override {
        throw std::logic_error("TableAlgebra: no generator factorization stored");
    }

private:
    std::vector<std::vector<std::string>> labels_;
    std::vector<std::string> gen_names_;
    // tables_[d1][d2][i][j] for d1+d2 <= top
    std::vector<std::vector<std::vector<std::vector<SVec>>>> tables_;
    int top_;
    bool finite_;
};

// Graded left module with explicit generator actions.
struct GradedModule {
    AlgebraPtr algebra;
    int lo = 0;
    std::vector<int> dims;                        // index d - lo
    std::vector<std::vector<std::string>> labels; // optional, parallel to dims
    // act[g][d-lo]: per basis element of M_d, image of x_g * (-) in M_{d+1}
    std::vector<std::vector<std::vector<SVec>>> act;

    int hi() const { return lo + static_cast<int>(dims.size()) - 1; }
    int dim(int d) const {
        return (d < lo || d > hi()) ? 0 : dims[d - lo];
    }
    SVec act_gen(int g, int d, const SVec& v) const;
    // action of algebra basis element (dw, w) via its generator letters
    SVec act_elem(int dw, int w, int d, const SVec& v) const;
    SeriesUni hilbert(int D) const;
};

// -- operations -------------------------------------------------------------

struct GradedSubspace {
    std::vector<int> dims;              // per degree 0..top
    std::vector<std::vector<SVec>> basis;
    int total() const;
};

// {a in the augmentation ideal : a * m = 0} computed degreewise.
GradedSubspace socle(const GradedAlgebra& A);
bool is_gorenstein(const GradedAlgebra& A);

std::shared_ptr<const QuotientAlgebra> quotient(AlgebraPtr A,
                                                std::vector<std::pair<int, SVec>> relations);
std::shared_ptr<const QuotientAlgebra> quotient_by_socle(AlgebraPtr A);

// Matlis dual of a finite algebra as a module over itself, regraded so the
// dual of A_d sits in degree top+1-d.
GradedModule matlis_dual(AlgebraPtr A);
// k placed in degree s with the zero action.
GradedModule shifted_field(AlgebraPtr A, int s);
// A as a left module over itself.
GradedModule regular_module(AlgebraPtr A);

// A (+) M with M squaring to zero; the right action of A on M carries the
// Koszul sign (-1)^{|m| |a|}.
std::shared_ptr<const TableAlgebra> trivial_extension(AlgebraPtr A, const GradedModule& M);

}  // namespace skewgor
