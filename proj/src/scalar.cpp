#include "skewgor/scalar.hpp"

namespace skewgor {

uint32_t Scalar::residue(uint32_t p) const {
    if (p_ != 0 && p_ != p) throw std::logic_error("Scalar: residue in wrong field");
    mpz_class n = v_.get_num() % p, d = v_.get_den() % p;
    if (n < 0) n += p;
    if (d < 0) d += p;
    if (d == 0) throw std::domain_error("Scalar: denominator divisible by p");
    if (d != 1) {
        mpz_class inv, m(p);
        if (mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t()) == 0)
            throw std::domain_error("Scalar: denominator not invertible mod p");
        n = (n * inv) % p;
    }
    return static_cast<uint32_t>(n.get_ui());
}

std::string Scalar::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace skewgor
