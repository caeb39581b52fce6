#include "skewgor/exterior.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace skewgor {

int sort_with_sign(IndexTuple& idx) {
    int sign = 1;
    // insertion sort, counting swaps
    for (size_t i = 1; i < idx.size(); ++i) {
        uint8_t v = idx[i];
        size_t j = i;
        while (j > 0 && idx[j - 1] > v) {
            idx[j] = idx[j - 1];
            --j;
            sign = -sign;
        }
        idx[j] = v;
    }
    for (size_t i = 1; i < idx.size(); ++i)
        if (idx[i] == idx[i - 1]) return 0;
    return sign;
}

bool ExteriorElement::homogeneous() const {
    if (terms_.empty()) return true;
    size_t d = terms_.begin()->first.size();
    for (const auto& [t, c] : terms_)
        if (t.size() != d) return false;
    return true;
}

void ExteriorElement::add_term(IndexTuple idx, Scalar c) {
    for (uint8_t i : idx)
        if (i >= n_) throw std::out_of_range("ExteriorElement: generator index out of range");
    int sign = sort_with_sign(idx);
    if (sign == 0 || c.is_zero()) return;
    if (sign < 0) c = -c;
    auto [it, fresh] = terms_.emplace(std::move(idx), c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Scalar ExteriorElement::coeff(const IndexTuple& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? Scalar(0) : it->second;
}

ExteriorElement ExteriorElement::operator-() const {
    ExteriorElement r(n_);
    for (const auto& [t, c] : terms_) r.terms_.emplace(t, -c);
    return r;
}

ExteriorElement operator+(const ExteriorElement& a, const ExteriorElement& b) {
    ExteriorElement r = a;
    for (const auto& [t, c] : b.terms_) r.add_term(t, c);
    return r;
}

ExteriorElement operator-(const ExteriorElement& a, const ExteriorElement& b) {
    ExteriorElement r = a;
    for (const auto& [t, c] : b.terms_) r.add_term(t, -c);
    return r;
}

ExteriorElement operator*(const ExteriorElement& a, const ExteriorElement& b) {
    ExteriorElement r(a.n_);
    for (const auto& [ta, ca] : a.terms_)
        for (const auto& [tb, cb] : b.terms_) {
            IndexTuple t = ta;
            t.insert(t.end(), tb.begin(), tb.end());
            r.add_term(std::move(t), ca * cb);
        }
    return r;
}

ExteriorElement ExteriorElement::scaled(const Scalar& c) const {
    ExteriorElement r(n_);
    if (c.is_zero()) return r;
    for (const auto& [t, v] : terms_) r.terms_.emplace(t, v * c);
    return r;
}

std::string ExteriorElement::str(const std::string& stem) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c0] : terms_) {
        Scalar c = c0;
        if (first) {
            if (c.sign() < 0) {
                os << "-";
                c = -c;
            }
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        if (t.empty())
            os << c.str();
        else {
            if (!c.is_one()) os << c.str() << "*";
            for (size_t i = 0; i < t.size(); ++i) {
                if (i) os << "*";
                os << stem << static_cast<int>(t[i]) + 1;
            }
        }
    }
    return os.str();
}

}  // namespace skewgor
