#include "skewgor/series.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace skewgor {

namespace {

void strip_zeros(PolyZ& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Minimal recursive-descent reader shared by the polynomial parsers.
struct Cursor {
    const std::string& s;
    size_t i = 0;
    explicit Cursor(const std::string& str) : s(str) {}
    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial parse error at position " +
                                    std::to_string(i) + ": " + what);
    }
    long integer() {
        skip();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected integer");
        return std::stol(s.substr(start, i - start));
    }
    Scalar coefficient() {
        long num = integer();
        if (eat('/')) return Scalar(num, integer());
        return Scalar(num);
    }
};

}  // namespace

PolyZ poly_mul(const PolyZ& a, const PolyZ& b) {
    if (a.empty() || b.empty()) return {};
    PolyZ r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    strip_zeros(r);
    return r;
}

PolyZ poly_pow(const PolyZ& a, int e) {
    if (e < 0) throw std::invalid_argument("poly_pow: negative exponent");
    PolyZ r{Scalar(1)};
    for (int k = 0; k < e; ++k) r = poly_mul(r, a);
    return r;
}

// term := [coef] ['*'] [var ['^' n]] ...
static PolyZ parse_poly_term(Cursor& cur, char var) {
    Scalar coef(1);
    int deg = 0;
    bool saw = false;
    for (;;) {
        char c = cur.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            coef *= cur.coefficient();
            saw = true;
        } else if (c == var) {
            ++cur.i;
            saw = true;
            if (cur.eat('^'))
                deg += static_cast<int>(cur.integer());
            else
                deg += 1;
        } else if (c == '*') {
            ++cur.i;
        } else if (c == '(') {
            break;
        } else {
            break;
        }
    }
    if (!saw) cur.fail("expected term");
    PolyZ t(deg + 1);
    t[deg] = coef;
    return t;
}

PolyZ parse_poly_z(const std::string& text) {
    Cursor cur(text);
    PolyZ acc;
    int sign = 1;
    if (cur.eat('-')) sign = -1;
    for (;;) {
        PolyZ t = parse_poly_term(cur, 'z');
        if (sign < 0)
            for (auto& c : t) c = -c;
        if (t.size() > acc.size()) acc.resize(t.size());
        for (size_t k = 0; k < t.size(); ++k) acc[k] += t[k];
        cur.skip();
        if (cur.eat('+'))
            sign = 1;
        else if (cur.eat('-'))
            sign = -1;
        else
            break;
    }
    cur.skip();
    if (cur.i != cur.s.size()) cur.fail("trailing input");
    strip_zeros(acc);
    return acc;
}

PolyZ parse_poly_product(const std::string& text) {
    Cursor cur(text);
    if (cur.peek() != '(') return parse_poly_z(text);
    PolyZ acc{Scalar(1)};
    while (cur.peek() == '(') {
        ++cur.i;
        int depth = 1;
        size_t start = cur.i;
        while (cur.i < text.size() && depth > 0) {
            if (text[cur.i] == '(') ++depth;
            if (text[cur.i] == ')') --depth;
            ++cur.i;
        }
        if (depth != 0) cur.fail("unbalanced parenthesis");
        PolyZ base = parse_poly_z(text.substr(start, cur.i - 1 - start));
        int e = 1;
        if (cur.eat('^')) e = static_cast<int>(cur.integer());
        acc = poly_mul(acc, poly_pow(base, e));
        cur.eat('*');
    }
    cur.skip();
    if (cur.i != text.size()) cur.fail("trailing input in polynomial product");
    return acc;
}

std::string poly_z_str(const PolyZ& p) {
    std::ostringstream os;
    bool first = true;
    for (size_t d = 0; d < p.size(); ++d) {
        if (p[d].is_zero()) continue;
        Scalar c = p[d];
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
        if (d == 0)
            os << c.str();
        else {
            if (!c.is_one()) os << c.str() << "*";
            os << "z";
            if (d > 1) os << "^" << d;
        }
    }
    if (first) os << "0";
    return os.str();
}

SeriesUni::SeriesUni(std::vector<Scalar> coeffs, int trunc) : c_(std::move(coeffs)), trunc_(trunc) {
    if (trunc_ < 0) throw std::invalid_argument("SeriesUni: negative truncation");
    c_.resize(trunc_ + 1);
}

SeriesUni SeriesUni::from_poly(const PolyZ& p, int trunc) {
    std::vector<Scalar> c(p.begin(), p.end());
    c.resize(trunc + 1);
    return SeriesUni(std::move(c), trunc);
}

SeriesUni SeriesUni::one(int trunc, uint32_t p) {
    std::vector<Scalar> c(trunc + 1, Scalar::zero(p));
    c[0] = Scalar::one(p);
    return SeriesUni(std::move(c), trunc);
}

const Scalar& SeriesUni::coeff(int d) const {
    if (d < 0 || d > trunc_) throw std::out_of_range("SeriesUni: coefficient beyond truncation");
    return c_[d];
}

SeriesUni SeriesUni::truncated(int d) const {
    if (d > trunc_) throw std::out_of_range("SeriesUni: cannot extend truncation");
    std::vector<Scalar> c(c_.begin(), c_.begin() + d + 1);
    return SeriesUni(std::move(c), d);
}

SeriesUni operator+(const SeriesUni& a, const SeriesUni& b) {
    int D = std::min(a.trunc_, b.trunc_);
    std::vector<Scalar> c(D + 1);
    for (int d = 0; d <= D; ++d) c[d] = a.c_[d] + b.c_[d];
    return SeriesUni(std::move(c), D);
}

SeriesUni operator-(const SeriesUni& a, const SeriesUni& b) {
    int D = std::min(a.trunc_, b.trunc_);
    std::vector<Scalar> c(D + 1);
    for (int d = 0; d <= D; ++d) c[d] = a.c_[d] - b.c_[d];
    return SeriesUni(std::move(c), D);
}

SeriesUni operator*(const SeriesUni& a, const SeriesUni& b) {
    int D = std::min(a.trunc_, b.trunc_);
    std::vector<Scalar> c(D + 1);
    for (int i = 0; i <= D; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; i + j <= D; ++j) {
            if (b.c_[j].is_zero()) continue;
            c[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return SeriesUni(std::move(c), D);
}

SeriesUni SeriesUni::inverse() const {
    if (c_[0].is_zero())
        throw std::domain_error("SeriesUni: inverse requires nonzero constant term");
    std::vector<Scalar> r(trunc_ + 1);
    Scalar c0inv = c_[0].inverse();
    r[0] = c0inv;
    for (int d = 1; d <= trunc_; ++d) {
        Scalar s;
        for (int k = 1; k <= d; ++k) s += c_[k] * r[d - k];
        r[d] = -(s * c0inv);
    }
    return SeriesUni(std::move(r), trunc_);
}

SeriesUni SeriesUni::sign_flipped() const {
    std::vector<Scalar> r(c_);
    for (int d = 1; d <= trunc_; d += 2) r[d] = -r[d];
    return SeriesUni(std::move(r), trunc_);
}

std::string SeriesUni::str(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (int d = 0; d <= trunc_; ++d) {
        if (c_[d].is_zero()) continue;
        Scalar c = c_[d];
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
        if (d == 0)
            os << c.str();
        else {
            if (!c.is_one()) os << c.str() << "*";
            os << var;
            if (d > 1) os << "^" << d;
        }
    }
    if (first) os << "0";
    os << " + O(" << var << "^" << trunc_ + 1 << ")";
    return os.str();
}

std::string SeriesUni::json() const {
    std::ostringstream os;
    os << "{\"trunc\": " << trunc_ << ", \"coeffs\": [";
    for (int d = 0; d <= trunc_; ++d) {
        if (d) os << ",";
        os << "[" << c_[d].num().get_str() << "," << c_[d].den().get_str() << "]";
    }
    os << "]}";
    return os.str();
}

SeriesUni expand_rational(const PolyZ& num, const PolyZ& den, int trunc) {
    if (den.empty() || den[0].is_zero())
        throw std::domain_error("expand_rational: denominator has zero constant term");
    return SeriesUni::from_poly(num, trunc) * SeriesUni::from_poly(den, trunc).inverse();
}

SeriesUni expand_product(const ProductSpec& spec, int trunc) {
    SeriesUni acc = spec.prefactor.empty() ? SeriesUni::one(trunc)
                                           : SeriesUni::from_poly(spec.prefactor, trunc);
    for (const auto& f : spec.factors) {
        for (long n = 1;; ++n) {
            long m = static_cast<long>(f.stride) * n + f.offset;
            if (m < 1) throw std::domain_error("expand_product: factor exponent a*n+b < 1");
            if (m > trunc) break;
            PolyZ fac(m + 1);
            fac[0] = Scalar(1);
            fac[m] = Scalar(-1);
            SeriesUni base = SeriesUni::from_poly(fac, trunc);
            int e = f.exponent;
            if (e < 0) {
                base = base.inverse();
                e = -e;
            }
            for (int k = 0; k < e; ++k) acc = acc * base;
            if (f.stride == 0) break;
        }
    }
    return acc;
}

// --- ProductSpec parsing -------------------------------------------------
//
// Accepted shapes:  "(1-2z)^2 * prod (1-z^n)"
//                   "prod (1-z^{2n-1})^5 (1-z^{2n})^3"
// A factor's exponent pattern in n must be linear: z^{a n + b}, z^n, z^{n+k}.

ProductSpec ProductSpec::parse(const std::string& text) {
    ProductSpec spec;
    size_t prod_pos = text.find("prod");
    std::string pre = prod_pos == std::string::npos ? text : text.substr(0, prod_pos);
    std::string tail = prod_pos == std::string::npos ? "" : text.substr(prod_pos + 4);

    // prefactor: polynomial factors like (1-2z)^2, possibly joined by '*'
    {
        PolyZ acc{Scalar(1)};
        Cursor cur(pre);
        bool any = false;
        while (cur.peek() == '(') {
            ++cur.i;
            size_t close = pre.find(')', cur.i);
            if (close == std::string::npos) cur.fail("unbalanced parenthesis");
            PolyZ base = parse_poly_z(pre.substr(cur.i, close - cur.i));
            cur.i = close + 1;
            int e = 1;
            if (cur.eat('^')) e = static_cast<int>(cur.integer());
            acc = poly_mul(acc, poly_pow(base, e));
            any = true;
            cur.eat('*');
        }
        cur.skip();
        if (cur.i != pre.size()) cur.fail("unexpected prefactor text");
        if (any) spec.prefactor = acc;
    }

    // product factors: (1 - z^{pattern})^e
    Cursor cur(tail);
    while (cur.peek() == '(') {
        ++cur.i;
        if (!(cur.integer() == 1)) cur.fail("factor must start with 1");
        if (!cur.eat('-')) cur.fail("expected '-'");
        if (!cur.eat('z')) cur.fail("expected z");
        ProductFactor f;
        if (cur.eat('^')) {
            bool braced = cur.eat('{');
            // linear pattern in n
            int a = 1, b = 0;
            if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
                a = static_cast<int>(cur.integer());
                if (!cur.eat('n')) {
                    // constant exponent: z^k == stride 0, offset k
                    b = a;
                    a = 0;
                }
            } else if (cur.peek() == 'n') {
                ++cur.i;
            } else {
                cur.fail("expected exponent pattern");
            }
            if (a != 0 || cur.peek() == '+' || cur.peek() == '-') {
                if (cur.eat('+'))
                    b = static_cast<int>(cur.integer());
                else if (cur.eat('-'))
                    b = -static_cast<int>(cur.integer());
            }
            if (braced && !cur.eat('}')) cur.fail("expected '}'");
            f.stride = a;
            f.offset = b;
        } else {
            f.stride = 1;
            f.offset = 0;
        }
        if (!cur.eat(')')) cur.fail("expected ')'");
        f.exponent = 1;
        if (cur.eat('^')) f.exponent = static_cast<int>(cur.integer());
        spec.factors.push_back(f);
        cur.eat('*');
    }
    cur.skip();
    if (cur.i != tail.size()) cur.fail("unexpected product text");
    return spec;
}

std::string ProductSpec::str() const {
    std::ostringstream os;
    if (!prefactor.empty()) os << "(" << poly_z_str(prefactor) << ") * ";
    os << "prod";
    for (const auto& f : factors) {
        os << " (1-z^{";
        if (f.stride == 1)
            os << "n";
        else if (f.stride != 0)
            os << f.stride << "n";
        if (f.offset > 0)
            os << (f.stride ? "+" : "") << f.offset;
        else if (f.offset < 0)
            os << f.offset;
        os << "})";
        if (f.exponent != 1) os << "^" << f.exponent;
    }
    return os.str();
}

SeriesBi::SeriesBi(int H, int J, uint32_t p)
    : c_(H + 1, std::vector<Scalar>(J + 1, Scalar::zero(p))), h_(H), j_(J) {
    if (H < 0 || J < 0) throw std::invalid_argument("SeriesBi: negative box");
}

SeriesBi SeriesBi::one(int H, int J, uint32_t p) {
    SeriesBi s(H, J, p);
    s.c_[0][0] = Scalar::one(p);
    return s;
}

SeriesBi SeriesBi::truncated(int H, int J) const {
    if (H > h_ || J > j_) throw std::out_of_range("SeriesBi: cannot extend box");
    SeriesBi s(H, J);
    for (int i = 0; i <= H; ++i)
        for (int j = 0; j <= J; ++j) s.c_[i][j] = c_[i][j];
    return s;
}

SeriesBi operator+(const SeriesBi& a, const SeriesBi& b) {
    int H = std::min(a.h_, b.h_), J = std::min(a.j_, b.j_);
    SeriesBi s(H, J);
    for (int i = 0; i <= H; ++i)
        for (int j = 0; j <= J; ++j) s.c_[i][j] = a.c_[i][j] + b.c_[i][j];
    return s;
}

SeriesBi operator-(const SeriesBi& a, const SeriesBi& b) {
    int H = std::min(a.h_, b.h_), J = std::min(a.j_, b.j_);
    SeriesBi s(H, J);
    for (int i = 0; i <= H; ++i)
        for (int j = 0; j <= J; ++j) s.c_[i][j] = a.c_[i][j] - b.c_[i][j];
    return s;
}

SeriesBi operator*(const SeriesBi& a, const SeriesBi& b) {
    int H = std::min(a.h_, b.h_), J = std::min(a.j_, b.j_);
    SeriesBi s(H, J);
    for (int i1 = 0; i1 <= H; ++i1)
        for (int j1 = 0; j1 <= J; ++j1) {
            if (a.c_[i1][j1].is_zero()) continue;
            for (int i2 = 0; i1 + i2 <= H; ++i2)
                for (int j2 = 0; j1 + j2 <= J; ++j2) {
                    if (b.c_[i2][j2].is_zero()) continue;
                    s.c_[i1 + i2][j1 + j2] += a.c_[i1][j1] * b.c_[i2][j2];
                }
        }
    return s;
}

SeriesBi SeriesBi::inverse() const {
    if (c_[0][0].is_zero())
        throw std::domain_error("SeriesBi: inverse requires nonzero constant term");
    SeriesBi r(h_, j_);
    Scalar c0inv = c_[0][0].inverse();
    for (int i = 0; i <= h_; ++i)
        for (int j = 0; j <= j_; ++j) {
            Scalar s = (i == 0 && j == 0) ? Scalar(1) : Scalar(0);
            for (int a = 0; a <= i; ++a)
                for (int b = 0; b <= j; ++b) {
                    if (a == i && b == j) continue;
                    if (r.c_[a][b].is_zero()) continue;
                    s -= c_[i - a][j - b] * r.c_[a][b];
                }
            r.c_[i][j] = s * c0inv;
        }
    return r;
}

SeriesUni SeriesBi::eval_diag() const {
    int D = std::min(h_, j_);
    std::vector<Scalar> c(D + 1);
    for (int n = 0; n <= D; ++n)
        for (int i = 0; i <= n; ++i) c[n] += c_[i][n - i];
    return SeriesUni(std::move(c), D);
}

bool SeriesBi::is_zero() const {
    for (const auto& row : c_)
        for (const auto& v : row)
            if (!v.is_zero()) return false;
    return true;
}

std::string SeriesBi::str() const {
    std::ostringstream os;
    bool first = true;
    for (int n = 0; n <= h_ + j_; ++n)
        for (int i = 0; i <= std::min(n, h_); ++i) {
            int j = n - i;
            if (j > j_) continue;
            if (c_[i][j].is_zero()) continue;
            Scalar c = c_[i][j];
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
            std::string mono;
            if (i > 0) mono += "x" + (i > 1 ? "^" + std::to_string(i) : "");
            if (j > 0) {
                if (!mono.empty()) mono += "*";
                mono += "y" + (j > 1 ? "^" + std::to_string(j) : "");
            }
            if (mono.empty())
                os << c.str();
            else {
                if (!c.is_one()) os << c.str() << "*";
                os << mono;
            }
        }
    if (first) os << "0";
    os << " + O(x^" << h_ + 1 << ", y^" << j_ + 1 << ")";
    return os.str();
}

std::string SeriesBi::json() const {
    std::ostringstream os;
    os << "{\"box\": [" << h_ << "," << j_ << "], \"coeffs\": [";
    bool firstentry = true;
    for (int i = 0; i <= h_; ++i)
        for (int j = 0; j <= j_; ++j) {
            if (c_[i][j].is_zero()) continue;
            if (!firstentry) os << ",";
            firstentry = false;
            os << "[" << i << "," << j << "," << c_[i][j].num().get_str() << ","
               << c_[i][j].den().get_str() << "]";
        }
    os << "]}";
    return os.str();
}

SeriesBi SeriesBi::parse_poly(const std::string& text, int H, int J) {
    SeriesBi s(H, J);
    Cursor cur(text);
    int sign = 1;
    if (cur.eat('-')) sign = -1;
    for (;;) {
        Scalar coef(1);
        int di = 0, dj = 0;
        bool saw = false;
        for (;;) {
            char c = cur.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coef *= cur.coefficient();
                saw = true;
            } else if (c == 'x' || c == 'y') {
                ++cur.i;
                int e = 1;
                if (cur.eat('^')) e = static_cast<int>(cur.integer());
                (c == 'x' ? di : dj) += e;
                saw = true;
            } else if (c == '*') {
                ++cur.i;
            } else
                break;
        }
        if (!saw) cur.fail("expected term");
        if (di > H || dj > J) throw std::out_of_range("SeriesBi::parse_poly: term beyond box");
        s.c_[di][dj] += sign < 0 ? -coef : coef;
        cur.skip();
        if (cur.eat('+'))
            sign = 1;
        else if (cur.eat('-'))
            sign = -1;
        else
            break;
    }
    cur.skip();
    if (cur.i != cur.s.size()) cur.fail("trailing input");
    return s;
}

}  // namespace skewgor
