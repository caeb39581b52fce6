#pragma once

#include <gmpxx.h>

#include <memory>
#include <vector>

#include "skewgor/ncpoly.hpp"

namespace skewgor {

// Subword matcher over a set of pairwise subword-free patterns
// (Aho-Corasick with terminal propagation through failure links).
class SubwordAutomaton {
public:
    SubwordAutomaton() = default;
    SubwordAutomaton(int alphabet, const std::vector<Word>& patterns);

    // First occurrence (smallest end position) of any pattern inside w:
    // returns {pattern index, start position} or {-1, -1}.
    std::pair<int, int> find(const Word& w) const;
    bool is_normal(const Word& w) const { return find(w).first < 0; }

    // Number of words of each degree 0..D avoiding all patterns.
    std::vector<mpz_class> count_avoiding(int D) const;
    // All avoiding words of exact degree d, in lexicographic generator order.
    std::vector<Word> enumerate_avoiding(int d) const;

    int states() const { return static_cast<int>(next_.size()); }

private:
    int n_ = 0;
    std::vector<std::vector<int32_t>> next_;  // state x letter -> state
    std::vector<int32_t> terminal_;           // pattern index ending here, else -1
};

// Degree-truncated two-sided Groebner basis of a homogeneous ideal in the
// free associative algebra on n generators.
class GroebnerBasis {
public:
    enum class Certificate { complete, complete_within_cap };

    int n() const { return n_; }
    const MonomialOrder& order() const { return order_; }
    int degree_cap() const { return cap_; }
    Certificate certificate() const { return cert_; }
    const char* certificate_str() const {
        return cert_ == Certificate::complete ? "complete" : "complete_within_D";
    }
    int max_elem_degree() const { return max_deg_; }
    const std::vector<NCPoly>& elems() const { return elems_; }
    const SubwordAutomaton& automaton() const { return *aut_; }

    // Dimensions of the quotient algebra in degrees 0..d.  Counts beyond the
    // degree cap are only served under a complete certificate.
    std::vector<mpz_class> quotient_dims(int d) const;
    std::vector<Word> normal_words(int d) const;
    int valid_degree_limit() const;  // largest degree with certified counts (-1 = unbounded)

private:
    friend GroebnerBasis buchberger_truncated(int, std::vector<NCPoly>, int, MonomialOrder, int);
    int n_ = 0;
    MonomialOrder order_;
    int cap_ = 0;
    int max_deg_ = 0;
    Certificate cert_ = Certificate::complete_within_cap;
    std::vector<NCPoly> elems_;
    std::shared_ptr<SubwordAutomaton> aut_;
};

// Monic fully reduced normal form of p modulo G.
NCPoly normal_form(const NCPoly& p, const std::vector<NCPoly>& basis, const SubwordAutomaton& aut,
                   const MonomialOrder& ord);
NCPoly normal_form(const NCPoly& p, const GroebnerBasis& G);

GroebnerBasis buchberger_truncated(int n, std::vector<NCPoly> rels, int degree_cap,
                                   MonomialOrder order, int threads = 1);

}  // namespace skewgor
