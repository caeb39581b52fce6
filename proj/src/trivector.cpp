#include "skewgor/trivector.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>

namespace skewgor {

TriVector TriVector::parse(const std::string& text, int n) {
    // collect terms first to learn the variable count
    struct RawTerm {
        Scalar coef;
        std::vector<long> idx;
    };
    std::vector<RawTerm> raw;
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto fail = [&](const std::string& what) -> void {
        throw std::invalid_argument("trivector parse error at position " + std::to_string(i) +
                                    ": " + what);
    };
    skip();
    // optional "name =" prefix
    {
        size_t save = i;
        if (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) {
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
                ++i;
            skip();
            if (i < text.size() && text[i] == '=')
                ++i;
            else
                i = save;
        }
    }
    int maxidx = 0;
    int sign = 1;
    skip();
    if (i < text.size() && text[i] == '-') {
        sign = -1;
        ++i;
    }
    if (i >= text.size()) {
        // empty text: the zero form (n must be given)
        TriVector F(n);
        return F;
    }
    for (;;) {
        RawTerm t;
        t.coef = Scalar(sign);
        skip();
        // optional rational coefficient
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            size_t s0 = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            long num = std::stol(text.substr(s0, i - s0));
            skip();
            if (i < text.size() && text[i] == '/') {
                ++i;
                skip();
                s0 = i;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
                t.coef *= Scalar(num, std::stol(text.substr(s0, i - s0)));
            } else {
                t.coef *= Scalar(num);
            }
            skip();
            if (i < text.size() && text[i] == '*') ++i;
        }
        for (;;) {
            skip();
            if (i >= text.size() || text[i] != 'e') fail("expected basis factor like e2");
            ++i;
            size_t s0 = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == s0) fail("expected index after e");
            long k = std::stol(text.substr(s0, i - s0));
            if (k < 1) fail("indices are 1-based");
            maxidx = std::max<int>(maxidx, static_cast<int>(k));
            t.idx.push_back(k - 1);
            skip();
            if (i < text.size() && (text[i] == '^' || text[i] == '*')) {
                ++i;
                continue;
            }
            break;
        }
        if (t.idx.size() != 3) fail("each term needs exactly three factors");
        raw.push_back(std::move(t));
        skip();
        if (i < text.size() && text[i] == '+') {
            sign = 1;
            ++i;
        } else if (i < text.size() && text[i] == '-') {
            sign = -1;
            ++i;
        } else
            break;
    }
    skip();
    if (i != text.size()) fail("trailing input");

    if (n == 0) n = maxidx;
    if (maxidx > n) throw std::invalid_argument("trivector: index beyond variable count");
    TriVector F(n);
    ExteriorElement e(n);
    for (const auto& t : raw)
        e.add_term(IndexTuple(t.idx.begin(), t.idx.end()), t.coef);
    F.form_ = std::move(e);
    return F;
}

TriVector TriVector::from_element(const ExteriorElement& e) {
    if (!e.is_zero() && e.degree() != 3)
        throw std::invalid_argument("TriVector: element must be homogeneous of degree 3");
    TriVector F(e.n());
    F.form_ = e;
    return F;
}

Scalar TriVector::coeff(int i, int j, int k) const {
    IndexTuple t{static_cast<uint8_t>(i), static_cast<uint8_t>(j), static_cast<uint8_t>(k)};
    int sign = sort_with_sign(t);
    if (sign == 0) return Scalar(0);
    Scalar c = form_.coeff(t);
    return sign < 0 ? -c : c;
}

void TriVector::set(int i, int j, int k, Scalar c) {
    if (form_.n() != n_) form_ = ExteriorElement(n_);
    form_.add_term({static_cast<uint8_t>(i), static_cast<uint8_t>(j), static_cast<uint8_t>(k)},
                   std::move(c));
}

std::string TriVector::json() const {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& [t, c] : form_.terms()) {
        if (!first) os << ",";
        first = false;
        os << "{\"triple\":[" << t[0] + 1 << "," << t[1] + 1 << "," << t[2] + 1 << "],\"coef\":["
           << c.num().get_str() << "," << c.den().get_str() << "]}";
    }
    os << "]";
    return os.str();
}

namespace {

// interior derivative of a single monomial
void derive_into(const IndexTuple& t, const Scalar& c, int i, ExteriorElement& out) {
    for (size_t p = 0; p < t.size(); ++p)
        if (t[p] == i) {
            IndexTuple rest;
            for (size_t q = 0; q < t.size(); ++q)
                if (q != p) rest.push_back(t[q]);
            out.add_term(std::move(rest), (p % 2 == 0) ? c : -c);
            return;  // strictly increasing tuples contain i at most once
        }
}

ExteriorElement derive(const ExteriorElement& e, int i) {
    ExteriorElement out(e.n());
    for (const auto& [t, c] : e.terms()) derive_into(t, c, i, out);
    return out;
}

}  // namespace

ExteriorElement skew_derivative(const TriVector& F, int i) {
    if (i < 0 || i >= F.n()) throw std::out_of_range("skew_derivative: index out of range");
    return derive(F.element(), i);
}

ExteriorElement contract(const ExteriorElement& h, const TriVector& F) {
    ExteriorElement acc(F.n());
    for (const auto& [t, c] : h.terms()) {
        ExteriorElement cur = F.element();
        for (uint8_t idx : t) {
            cur = derive(cur, idx);
            if (cur.is_zero()) break;
        }
        acc = acc + cur.scaled(c);
    }
    return acc;
}

namespace {

// kernel of h -> contract(h, F) on the degree-d component, as coordinate
// vectors in the exterior ambient
std::vector<SVec> annihilator_piece(const TriVector& F, const MonomialAmbient& E, int d) {
    int dim = E.dim(d);
    std::vector<SVec> cols(dim);
    for (int i = 0; i < dim; ++i) {
        ExteriorElement h = E.element(d, {{i, Scalar(1)}});
        ExteriorElement im = contract(h, F);
        cols[i] = im.is_zero() ? SVec{} : E.coords(im);
    }
    return kernel_exact(cols);
}

}  // namespace

std::shared_ptr<const QuotientAlgebra> macaulay_ring(const TriVector& F) {
    if (F.is_zero()) throw std::invalid_argument("macaulay_ring: zero form");
    auto E = exterior_algebra(F.n());
    std::vector<std::pair<int, SVec>> rels;
    for (int d = 1; d <= 3; ++d)
        for (auto& v : annihilator_piece(F, *E, d)) rels.emplace_back(d, std::move(v));
    // contraction by any degree >= 4 element vanishes identically, so the
    // annihilator contains the whole degree-4 component
    if (F.n() >= 4)
        for (int i = 0; i < E->dim(4); ++i) rels.emplace_back(4, SVec{{i, Scalar(1)}});
    return quotient(E, std::move(rels));
}

std::shared_ptr<const QuotientAlgebra> quadratic_part_ring(const TriVector& F) {
    if (F.is_zero()) throw std::invalid_argument("quadratic_part_ring: zero form");
    auto E = exterior_algebra(F.n());
    std::vector<std::pair<int, SVec>> rels;
    for (auto& v : annihilator_piece(F, *E, 2)) rels.emplace_back(2, std::move(v));
    return quotient(E, std::move(rels));
}

std::vector<ExteriorElement> cubic_corrections(const TriVector& F) {
    if (F.is_zero()) throw std::invalid_argument("cubic_corrections: zero form");
    auto E = exterior_algebra(F.n());
    auto R = quadratic_part_ring(F);
    EchelonQ quad_ideal;
    for (const auto& row : R->ideal_basis(3)) quad_ideal.insert(row);
    std::vector<ExteriorElement> out;
    EchelonQ seen;
    for (auto& v : annihilator_piece(F, *E, 3)) {
        SVec red = quad_ideal.reduce(v);
        if (red.empty()) continue;
        if (seen.insert(red)) out.push_back(E->element(3, red));
    }
    return out;
}

TriVector recover_form(const GradedAlgebra& G) {
    if (!G.finite()) throw std::invalid_argument("recover_form: algebra must be finite");
    if (!is_gorenstein(G)) throw std::invalid_argument("recover_form: algebra is not Gorenstein");
    int t = G.top();
    while (t > 0 && G.dim(t) == 0) --t;
    if (t != 3) throw std::invalid_argument("recover_form: socle must sit in degree 3");
    int n = G.dim(1);
    auto E = exterior_algebra(n);
    // I_3 = kernel of the evaluation E_3 -> G_3 on generator products
    int dim3 = E->dim(3);
    std::vector<SVec> cols(dim3);
    for (int i = 0; i < dim3; ++i) {
        const IndexTuple& m = E->monomial(3, i);
        SVec v = G.mul_basis(1, m[0], 1, m[1]);
        v = G.mul(2, v, 1, SVec{{m[2], Scalar(1)}});
        cols[i] = std::move(v);
    }
    std::vector<SVec> I3 = kernel_exact(cols);
    // F is orthogonal to I_3 under the diagonal monomial pairing
    std::vector<SVec> rows(dim3);
    for (int tcol = 0; tcol < dim3; ++tcol) {
        SVec col;
        for (size_t r = 0; r < I3.size(); ++r) {
            for (const auto& [c, val] : I3[r])
                if (c == tcol) col.emplace_back(static_cast<int32_t>(r), val);
        }
        rows[tcol] = std::move(col);
    }
    std::vector<SVec> sols = kernel_exact(rows);
    if (sols.size() != 1)
        throw std::logic_error("recover_form: form is not unique up to scalar");
    ExteriorElement f(n);
    for (const auto& [c, val] : sols[0]) f.add_term(E->monomial(3, c), val);
    return TriVector::from_element(f);
}

AlgebraPresentation koszul_dual_presentation(const TriVector& F) {
    if (F.is_zero()) throw std::invalid_argument("koszul_dual_presentation: zero form");
    AlgebraPresentation pres;
    pres.ambient = Ambient::free;
    pres.name = "Dual";
    for (int i = 1; i <= F.n(); ++i) pres.gens.push_back("X" + std::to_string(i));
    MonomialOrder ord(F.n());
    for (int i = 0; i < F.n(); ++i) {
        ExteriorElement d = skew_derivative(F, i);
        if (d.is_zero()) continue;
        std::vector<std::pair<Word, Scalar>> terms;
        for (const auto& [t, c] : d.terms()) {
            Word st{t[0], t[1]}, ts{t[1], t[0]};
            terms.emplace_back(st, c);
            terms.emplace_back(ts, -c);
        }
        NCPoly q = ncp_normalize(std::move(terms), ord);
        if (!q.is_zero()) pres.relations.push_back(std::move(q));
    }
    return pres;
}

int trivector_rank(const TriVector& F) {
    auto E = exterior_algebra(std::max(F.n(), 1));
    std::vector<SVec> cols(F.n());
    for (int i = 0; i < F.n(); ++i) {
        ExteriorElement d = skew_derivative(F, i);
        cols[i] = d.is_zero() ? SVec{} : E->coords(d);
    }
    return F.n() - static_cast<int>(kernel_exact(cols).size());
}

TriVector random_trivector(int n, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (;;) {
        ExteriorElement e(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) {
                    int c = coef(rng);
                    if (c)
                        e.add_term({static_cast<uint8_t>(i), static_cast<uint8_t>(j),
                                    static_cast<uint8_t>(k)},
                                   Scalar(c));
                }
        if (!e.is_zero()) return TriVector::from_element(e);
    }
}

}  // namespace skewgor
