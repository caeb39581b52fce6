#include "skewgor/ncpoly.hpp"

#include <algorithm>
#include <sstream>

namespace skewgor {

std::string NCPoly::str(const std::string& stem) const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms) {
        Scalar v = c;
        if (first) {
            if (v.sign() < 0) {
                os << "-";
                v = -v;
            }
            first = false;
        } else {
            os << (v.sign() < 0 ? " - " : " + ");
            if (v.sign() < 0) v = -v;
        }
        if (w.empty())
            os << v.str();
        else {
            if (!v.is_one()) os << v.str() << "*";
            os << w.str(stem);
        }
    }
    return os.str();
}

NCPoly ncp_normalize(std::vector<std::pair<Word, Scalar>> terms, const MonomialOrder& ord) {
    std::sort(terms.begin(), terms.end(),
              [&ord](const auto& x, const auto& y) { return ord.compare(x.first, y.first) > 0; });
    NCPoly r;
    for (auto& [w, c] : terms) {
        if (!r.terms.empty() && r.terms.back().first == w)
            r.terms.back().second += c;
        else
            r.terms.emplace_back(w, c);
        if (!r.terms.empty() && r.terms.back().second.is_zero()) r.terms.pop_back();
    }
    return r;
}

NCPoly ncp_add(const NCPoly& a, const NCPoly& b, const MonomialOrder& ord) {
    return ncp_axpy(a, Scalar(1), b, ord);
}

NCPoly ncp_axpy(const NCPoly& a, const Scalar& c, const NCPoly& b, const MonomialOrder& ord) {
    NCPoly r;
    r.terms.reserve(a.terms.size() + b.terms.size());
    size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
        int cmp = ord.compare(a.terms[i].first, b.terms[j].first);
        if (cmp > 0)
            r.terms.push_back(a.terms[i++]);
        else if (cmp < 0) {
            Scalar v = c * b.terms[j].second;
            if (!v.is_zero()) r.terms.emplace_back(b.terms[j].first, std::move(v));
            ++j;
        } else {
            Scalar v = a.terms[i].second + c * b.terms[j].second;
            if (!v.is_zero()) r.terms.emplace_back(a.terms[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    for (; i < a.terms.size(); ++i) r.terms.push_back(a.terms[i]);
    for (; j < b.terms.size(); ++j) {
        Scalar v = c * b.terms[j].second;
        if (!v.is_zero()) r.terms.emplace_back(b.terms[j].first, std::move(v));
    }
    return r;
}

NCPoly ncp_scale(const NCPoly& a, const Scalar& c) {
    if (c.is_zero()) return {};
    NCPoly r = a;
    for (auto& [w, v] : r.terms) v *= c;
    return r;
}

NCPoly ncp_monic(const NCPoly& a) {
    if (a.is_zero() || a.lead_coeff().is_one()) return a;
    return ncp_scale(a, a.lead_coeff().inverse());
}

NCPoly ncp_mul_words(const Word& left, const NCPoly& p, const Word& right) {
    NCPoly r;
    r.terms.reserve(p.terms.size());
    for (const auto& [w, c] : p.terms) r.terms.emplace_back(left.concat(w).concat(right), c);
    // multiplication by fixed words preserves the relative deglex order of
    // equal-degree terms, so the result is already sorted
    return r;
}

NCPoly ncp_commutator(int s, int t, const MonomialOrder& ord) {
    Word st, ts;
    st.push(s);
    st.push(t);
    ts.push(t);
    ts.push(s);
    return ncp_normalize({{st, Scalar(1)}, {ts, Scalar(-1)}}, ord);
}

}  // namespace skewgor
