#pragma once

// Test-only oracles, independent of the computational paths they check.

#include <vector>

#include "skewgor/linalg.hpp"
#include "skewgor/ncpoly.hpp"

namespace skewgor::oracles {

// Dimensions of T(V)/(ideal) in degrees 0..D by spanning the graded pieces
// of the two-sided ideal with word-indexed vectors and row reducing.
// Exponential in D; intended for small D only.
inline std::vector<long> quotient_dims_bruteforce(int n, const std::vector<NCPoly>& rels, int D) {
    auto word_index = [n](const Word& w) {
        long idx = 0;
        for (int i = 0; i < w.len; ++i) idx = idx * n + w.a[i];
        return idx;
    };
    std::vector<long> dims(D + 1);
    dims[0] = 1;
    std::vector<std::vector<SVec>> piece(D + 1);
    for (int d = 1; d <= D; ++d) {
        EchelonQ ech;
        for (const NCPoly& r : rels)
            if (r.degree() == d) {
                SVec v;
                for (const auto& [w, c] : r.terms)
                    v.emplace_back(static_cast<int32_t>(word_index(w)), c);
                std::sort(v.begin(), v.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                ech.insert(std::move(v));
            }
        long shift = 1;
        for (int k = 0; k < d - 1; ++k) shift *= n;
        for (const SVec& prev : piece[d - 1]) {
            for (int g = 0; g < n; ++g) {
                SVec lv, rv;
                for (const auto& [c, val] : prev) {
                    lv.emplace_back(static_cast<int32_t>(g * shift + c), val);
                    rv.emplace_back(static_cast<int32_t>(c * n + g), val);
                }
                std::sort(rv.begin(), rv.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                ech.insert(std::move(lv));
                ech.insert(std::move(rv));
            }
        }
        piece[d] = ech.rows();
        long total = shift * n;
        dims[d] = total - ech.rank();
    }
    return dims;
}

}  // namespace skewgor::oracles
