#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace skewgor {

// Exact field scalar: a rational number in characteristic 0, or an element
// of the prime field F_p when a nonzero characteristic is attached.
// Canonical form is maintained after every operation: reduced fraction with
// positive denominator, and in F_p an integer value in [0, p) over 1.
class Scalar {
public:
    Scalar() : v_(0), p_(0) {}
    Scalar(long n) : v_(n), p_(0) {}
    Scalar(long num, long den) : v_(mpq_class(num, den)), p_(0) { canon(); }
    explicit Scalar(const mpq_class& q) : v_(q), p_(0) { canon(); }
    explicit Scalar(const mpz_class& z) : v_(z), p_(0) {}

    static Scalar in_field(long n, uint32_t p) {
        Scalar s(n);
        s.p_ = p;
        s.canon();
        return s;
    }
    static Scalar zero(uint32_t p = 0) { return in_field(0, p); }
    static Scalar one(uint32_t p = 0) { return in_field(1, p); }

    uint32_t characteristic() const { return p_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    const mpq_class& value() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    Scalar operator-() const {
        Scalar r(*this);
        r.v_ = -r.v_;
        r.canon();
        return r;
    }

    Scalar& operator+=(const Scalar& o) {
        join(o);
        v_ += o.v_;
        canon();
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        join(o);
        v_ -= o.v_;
        canon();
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        join(o);
        v_ *= o.v_;
        canon();
        return *this;
    }
    Scalar& operator/=(const Scalar& o) {
        join(o);
        if (o.v_ == 0) throw std::domain_error("Scalar: division by zero");
        if (p_ == 0) {
            v_ /= o.v_;
        } else {
            v_ *= mpq_class(mod_inverse(o.v_.get_num()));
        }
        canon();
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inverse() const { return one(p_) / *this; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return a.v_ != b.v_; }

    // Residue in [0, p); denominators must be invertible mod p.
    uint32_t residue(uint32_t p) const;

    std::string str() const;

private:
    void join(const Scalar& o) {
        if (p_ == o.p_) return;
        if (p_ != 0 && o.p_ != 0)
            throw std::logic_error("Scalar: mixed characteristics");
        if (p_ == 0) p_ = o.p_;
        canon();
    }
    void canon() {
        v_.canonicalize();
        if (p_ != 0) {
            mpz_class n = v_.get_num(), d = v_.get_den();
            if (d != 1) n *= mod_inverse(d);
            mpz_class r = n % p_;
            if (r < 0) r += p_;
            v_ = mpq_class(r);
        }
    }
    mpz_class mod_inverse(const mpz_class& a) const {
        mpz_class r, m(p_);
        if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
            throw std::domain_error("Scalar: non-invertible element mod p");
        return r;
    }

    mpq_class v_;
    uint32_t p_;
};

}  // namespace skewgor
