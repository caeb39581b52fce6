#include "skewgor/linalg.hpp"

#include <algorithm>

namespace skewgor {

SVec svec_add(const SVec& a, const SVec& b) { return svec_axpy(a, Scalar(1), b); }

SVec svec_axpy(const SVec& a, const Scalar& c, const SVec& b) {
    SVec r;
    r.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first)
            r.push_back(a[i++]);
        else if (a[i].first > b[j].first) {
            Scalar v = c * b[j].second;
            if (!v.is_zero()) r.emplace_back(b[j].first, std::move(v));
            ++j;
        } else {
            Scalar v = a[i].second + c * b[j].second;
            if (!v.is_zero()) r.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) r.push_back(a[i]);
    for (; j < b.size(); ++j) {
        Scalar v = c * b[j].second;
        if (!v.is_zero()) r.emplace_back(b[j].first, std::move(v));
    }
    return r;
}

SVec svec_scale(const SVec& a, const Scalar& c) {
    if (c.is_zero()) return {};
    SVec r(a);
    for (auto& [k, v] : r) v *= c;
    return r;
}

bool svec_is_zero(const SVec& a) { return a.empty(); }

bool EchelonQ::insert(SVec row) {
    row = reduce(std::move(row));
    if (row.empty()) return false;
    Scalar lead = row.front().second;
    if (!lead.is_one()) row = svec_scale(row, lead.inverse());
    by_pivot_[row.front().first] = static_cast<int>(rows_.size());
    pivot_cols_.push_back(row.front().first);
    rows_.push_back(std::move(row));
    return true;
}

SVec EchelonQ::reduce(SVec row) const {
    // Pivot rows have their pivot as the leftmost entry, so a left-to-right
    // sweep that restarts on the remaining tail fully reduces the row.
    SVec done;
    size_t i = 0;
    while (i < row.size()) {
        auto it = by_pivot_.find(row[i].first);
        if (it == by_pivot_.end()) {
            done.push_back(row[i]);
            ++i;
        } else {
            Scalar c = -row[i].second;
            SVec tail(row.begin() + i, row.end());
            row = svec_axpy(tail, c, rows_[it->second]);
            i = 0;
        }
    }
    return done;
}

std::vector<SVec> kernel_exact(const std::vector<SVec>& cols) {
    // Insert columns as rows of the transpose augmented with unit tags.
    // When a column reduces to zero, the tag part is a kernel vector.
    const int32_t TAG = 1 << 29;
    EchelonQ ech;
    std::vector<SVec> kernel;
    for (size_t k = 0; k < cols.size(); ++k) {
        SVec row = cols[k];
        row.emplace_back(TAG + static_cast<int32_t>(k), Scalar(1));
        SVec red = ech.reduce(std::move(row));
        bool zero_main = true;
        for (auto& [c, v] : red)
            if (c < TAG) {
                zero_main = false;
                break;
            }
        if (zero_main) {
            SVec kv;
            for (auto& [c, v] : red) kv.emplace_back(c - TAG, v);
            kernel.push_back(std::move(kv));
        } else {
            ech.insert(std::move(red));
        }
    }
    return kernel;
}

uint32_t ModP::inv(uint32_t a) const { return pow(a, p - 2); }

uint32_t ModP::pow(uint32_t a, uint64_t e) const {
    uint64_t r = 1, b = a;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<uint32_t>(r);
}

SVecP svec_mod(const SVec& v, const ModP& f) {
    SVecP r;
    r.reserve(v.size());
    for (const auto& [c, s] : v) {
        uint32_t x = s.residue(f.p);
        if (x) r.emplace_back(c, x);
    }
    return r;
}

static SVecP svecp_axpy(const SVecP& a, uint32_t c, const SVecP& b, const ModP& f) {
    SVecP r;
    r.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first)
            r.push_back(a[i++]);
        else if (a[i].first > b[j].first) {
            uint32_t v = f.mul(c, b[j].second);
            if (v) r.emplace_back(b[j].first, v);
            ++j;
        } else {
            uint32_t v = f.add(a[i].second, f.mul(c, b[j].second));
            if (v) r.emplace_back(a[i].first, v);
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) r.push_back(a[i]);
    for (; j < b.size(); ++j) {
        uint32_t v = f.mul(c, b[j].second);
        if (v) r.emplace_back(b[j].first, v);
    }
    return r;
}

bool EchelonP::insert(SVecP row) {
    row = reduce(std::move(row));
    if (row.empty()) return false;
    uint32_t inv = f_.inv(row.front().second);
    if (inv != 1)
        for (auto& [c, v] : row) v = f_.mul(v, inv);
    by_pivot_[row.front().first] = static_cast<int>(rows_.size());
    pivot_cols_.push_back(row.front().first);
    rows_.push_back(std::move(row));
    return true;
}

SVecP EchelonP::reduce(SVecP row) const {
    SVecP done;
    size_t i = 0;
    while (i < row.size()) {
        auto it = by_pivot_.find(row[i].first);
        if (it == by_pivot_.end()) {
            done.push_back(row[i]);
            ++i;
        } else {
            uint32_t c = f_.neg(row[i].second);
            SVecP tail(row.begin() + i, row.end());
            row = svecp_axpy(tail, c, rows_[it->second], f_);
            i = 0;
        }
    }
    return done;
}

SVecP EchelonP::kernel_vector(int32_t free_col) const {
    // Solve M x = 0 with x[free_col] = 1 by back-substitution in decreasing
    // pivot-column order (rows are only reduced leftward, so a pivot row can
    // reference pivot columns to its right).
    std::map<int32_t, uint32_t> x;
    x[free_col] = 1;
    std::vector<int32_t> cols_sorted(pivot_cols_);
    std::sort(cols_sorted.begin(), cols_sorted.end(), std::greater<int32_t>());
    for (int32_t pc : cols_sorted) {
        const SVecP& row = rows_[by_pivot_.at(pc)];
        uint64_t acc = 0;
        for (size_t k = 1; k < row.size(); ++k) {
            auto it = x.find(row[k].first);
            if (it != x.end()) acc = (acc + static_cast<uint64_t>(row[k].second) * it->second) % f_.p;
        }
        if (acc) x[pc] = f_.neg(static_cast<uint32_t>(acc));
    }
    SVecP r(x.begin(), x.end());
    return r;
}

const std::vector<uint32_t>& search_primes() {
    static const std::vector<uint32_t> primes = {
        2147483647u, 2147483629u, 2147483587u, 2147483579u, 2147483563u,
        2147483549u, 2147483543u, 2147483497u, 2147483489u, 2147483477u,
        2147483423u, 2147483399u, 2147483353u, 2147483323u, 2147483269u,
        2147483249u, 2147483237u, 2147483179u, 2147483171u, 2147483137u};
    return primes;
}

std::optional<Scalar> rational_reconstruct(const mpz_class& x, const mpz_class& m) {
    mpz_class bound;
    mpz_sqrt(bound.get_mpz_t(), mpz_class(m / 2).get_mpz_t());
    mpz_class r0 = m, r1 = x % m;
    if (r1 < 0) r1 += m;
    mpz_class t0 = 0, t1 = 1;
    while (r1 > bound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1;
        mpz_class t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0) return std::nullopt;
    mpz_class den = t1 < 0 ? mpz_class(-t1) : t1;
    mpz_class num = t1 < 0 ? mpz_class(-r1) : r1;
    if (den > bound) return std::nullopt;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1) return std::nullopt;
    return Scalar(mpq_class(num, den));
}

mpz_class crt_combine(const std::vector<uint32_t>& residues, const std::vector<uint32_t>& primes,
                      mpz_class* modulus_out) {
    mpz_class x = 0, m = 1;
    for (size_t k = 0; k < primes.size(); ++k) {
        mpz_class p(primes[k]);
        // x' = x + m * ((r - x) * m^-1 mod p)
        mpz_class delta = (mpz_class(residues[k]) - x) % p;
        if (delta < 0) delta += p;
        mpz_class minv;
        mpz_class mm = m % p;
        if (mpz_invert(minv.get_mpz_t(), mm.get_mpz_t(), p.get_mpz_t()) == 0)
            throw std::logic_error("crt_combine: non-coprime moduli");
        x += m * ((delta * minv) % p);
        m *= p;
    }
    if (modulus_out) *modulus_out = m;
    return x;
}

}  // namespace skewgor
