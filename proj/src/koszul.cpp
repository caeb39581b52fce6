#include "skewgor/koszul.hpp"

#include "skewgor/linalg.hpp"

namespace skewgor {

QuadraticData quadratic_part(const AlgebraPresentation& pres) {
    QuadraticData W;
    int n = pres.n();
    W.n = n;
    EchelonQ ech;
    auto coord = [n](int s, int t) { return s * n + t; };

    if (pres.ambient == Ambient::commutative) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                ech.insert({{coord(i, j), Scalar(1)}, {coord(j, i), Scalar(-1)}});
    } else if (pres.ambient == Ambient::skew_commutative) {
        for (int i = 0; i < n; ++i) ech.insert({{coord(i, i), Scalar(1)}});
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                ech.insert({{coord(i, j), Scalar(1)}, {coord(j, i), Scalar(1)}});
    }

    for (const NCPoly& r : pres.relations) {
        if (r.degree() != 2) {
            if (!r.is_zero()) W.higher_relations_dropped = true;
            continue;
        }
        SVec v;
        for (const auto& [w, c] : r.terms) v.emplace_back(coord(w.a[0], w.a[1]), c);
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        ech.insert(std::move(v));
    }
    W.basis = ech.rows();
    return W;
}

AlgebraPresentation quadratic_dual(const AlgebraPresentation& pres) {
    QuadraticData W = quadratic_part(pres);
    int n = W.n;
    // W-perp = null space of the matrix whose rows are the W basis vectors
    std::vector<SVec> cols(n * n);
    for (size_t r = 0; r < W.basis.size(); ++r)
        for (const auto& [c, v] : W.basis[r]) cols[c].emplace_back(static_cast<int32_t>(r), v);
    std::vector<SVec> perp = kernel_exact(cols);

    AlgebraPresentation dual;
    dual.ambient = Ambient::free;
    dual.name = pres.name.empty() ? "Dual" : pres.name + "!";
    dual.characteristic = pres.characteristic;
    for (int i = 1; i <= n; ++i) dual.gens.push_back("X" + std::to_string(i));
    MonomialOrder ord(n);
    for (const SVec& v : perp) {
        std::vector<std::pair<Word, Scalar>> terms;
        for (const auto& [c, val] : v) {
            Word w{c / n, c % n};
            terms.emplace_back(w, val);
        }
        dual.relations.push_back(ncp_normalize(std::move(terms), ord));
    }
    return dual;
}

AlgebraPresentation double_dual(const AlgebraPresentation& pres) {
    return quadratic_dual(quadratic_dual(pres));
}

bool quadratic_span_equal(const AlgebraPresentation& a, const AlgebraPresentation& b) {
    if (a.n() != b.n()) return false;
    QuadraticData wa = quadratic_part(a), wb = quadratic_part(b);
    if (wa.dim() != wb.dim()) return false;
    EchelonQ ech;
    for (const auto& v : wa.basis) ech.insert(v);
    for (const auto& v : wb.basis)
        if (!ech.reduce(v).empty()) return false;
    return true;
}

}  // namespace skewgor
