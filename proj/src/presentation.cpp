#include "skewgor/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace skewgor {

const char* ambient_str(Ambient a) {
    switch (a) {
        case Ambient::free: return "free";
        case Ambient::commutative: return "comm";
        case Ambient::skew_commutative: return "skew";
    }
    return "?";
}

std::string AlgebraPresentation::str() const {
    std::ostringstream os;
    os << ambient_str(ambient) << " " << (name.empty() ? "A" : name) << "(";
    for (size_t i = 0; i < gens.size(); ++i) {
        if (i) os << ",";
        os << gens[i];
    }
    os << "); rels:";
    for (size_t r = 0; r < relations.size(); ++r) {
        os << (r ? ", " : " ");
        // print words through generator names
        const NCPoly& p = relations[r];
        bool first = true;
        std::ostringstream ps;
        for (const auto& [w, c0] : p.terms) {
            Scalar c = c0;
            if (first) {
                if (c.sign() < 0) {
                    ps << "-";
                    c = -c;
                }
                first = false;
            } else {
                ps << (c.sign() < 0 ? " - " : " + ");
                if (c.sign() < 0) c = -c;
            }
            if (w.empty())
                ps << c.str();
            else {
                if (!c.is_one()) ps << c.str() << "*";
                for (int i = 0; i < w.len; ++i) {
                    if (i) ps << "*";
                    ps << gens[w.a[i]];
                }
            }
        }
        os << (first ? "0" : ps.str());
    }
    return os.str();
}

namespace {

struct Lexer {
    const std::string& s;
    size_t i = 0;
    int line = 1, col = 1;
    explicit Lexer(const std::string& text) : s(text) {}

    void advance() {
        if (i < s.size()) {
            if (s[i] == '\n') {
                ++line;
                col = 1;
            } else
                ++col;
            ++i;
        }
    }
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) advance();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            advance();
            return true;
        }
        return false;
    }
    void expect(char c, const std::string& ctx) {
        if (!eat(c)) fail("expected '" + std::string(1, c) + "' " + ctx);
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what, line, col);
    }
    bool ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
    }
    std::string ident() {
        skip_ws();
        size_t start = i;
        if (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
            while (i < s.size() && ident_char(s[i])) advance();
        }
        if (i == start) fail("expected identifier");
        return s.substr(start, i - start);
    }
    long integer() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) advance();
        if (i == start) fail("expected integer");
        return std::stol(s.substr(start, i - start));
    }
    bool lookahead_word(const std::string& w) {
        skip_ws();
        return s.compare(i, w.size(), w) == 0;
    }
};

// splits a trailing integer off an identifier: "x12" -> ("x", 12)
bool split_stem(const std::string& id, std::string& stem, long& num) {
    size_t k = id.size();
    while (k > 0 && std::isdigit(static_cast<unsigned char>(id[k - 1]))) --k;
    if (k == id.size() || k == 0) return false;
    stem = id.substr(0, k);
    num = std::stol(id.substr(k));
    return true;
}

}  // namespace

AlgebraPresentation parse_presentation(const std::string& text) {
    Lexer lx(text);
    AlgebraPresentation pres;

    std::string flag = lx.ident();
    if (flag == "free")
        pres.ambient = Ambient::free;
    else if (flag == "comm")
        pres.ambient = Ambient::commutative;
    else if (flag == "skew")
        pres.ambient = Ambient::skew_commutative;
    else
        lx.fail("unknown ambient flag '" + flag + "' (expected free, comm or skew)");

    pres.name = lx.ident();
    lx.expect('(', "after algebra name");
    for (;;) {
        std::string g = lx.ident();
        if (lx.eat('.')) {
            lx.expect('.', "in generator range");
            std::string g2 = lx.ident();
            std::string stem1, stem2;
            long a, b;
            if (!split_stem(g, stem1, a) || !split_stem(g2, stem2, b) || stem1 != stem2 || b < a)
                lx.fail("bad generator range " + g + ".." + g2);
            for (long k = a; k <= b; ++k) pres.gens.push_back(stem1 + std::to_string(k));
        } else {
            pres.gens.push_back(g);
        }
        if (!lx.eat(',')) break;
    }
    lx.expect(')', "after generator list");

    std::map<std::string, int> gidx;
    for (size_t k = 0; k < pres.gens.size(); ++k) {
        if (gidx.count(pres.gens[k])) lx.fail("duplicate generator " + pres.gens[k]);
        gidx[pres.gens[k]] = static_cast<int>(k);
    }
    if (pres.gens.size() > 200) lx.fail("too many generators");

    MonomialOrder ord(pres.n());

    if (lx.peek() == ';') {
        lx.eat(';');
        std::string kw = lx.ident();
        if (kw != "rels") lx.fail("expected 'rels'");
        lx.expect(':', "after rels");
        // relation list, possibly empty
        while (lx.peek() != '\0') {
            std::vector<std::pair<Word, Scalar>> terms;
            int sign = 1;
            if (lx.eat('-')) sign = -1;
            for (;;) {
                Scalar coef(sign);
                Word w;
                bool saw = false;
                for (;;) {
                    char c = lx.peek();
                    if (std::isdigit(static_cast<unsigned char>(c))) {
                        long num = lx.integer();
                        if (lx.eat('/'))
                            coef *= Scalar(num, lx.integer());
                        else
                            coef *= Scalar(num);
                        saw = true;
                    } else if (std::isalpha(static_cast<unsigned char>(c))) {
                        std::string id = lx.ident();
                        auto it = gidx.find(id);
                        if (it == gidx.end()) lx.fail("unknown generator '" + id + "'");
                        int e = 1;
                        if (lx.eat('^')) e = static_cast<int>(lx.integer());
                        for (int k = 0; k < e; ++k) w.push(it->second);
                        saw = true;
                    } else if (c == '*') {
                        lx.eat('*');
                    } else
                        break;
                }
                if (!saw) lx.fail("expected term");
                terms.emplace_back(w, coef);
                if (lx.eat('+'))
                    sign = 1;
                else if (lx.eat('-'))
                    sign = -1;
                else
                    break;
            }
            NCPoly p = ncp_normalize(std::move(terms), ord);
            if (!p.is_zero()) {
                if (!p.homogeneous())
                    lx.fail("inhomogeneous relation: " + p.str());
                pres.relations.push_back(std::move(p));
            }
            if (!lx.eat(',')) break;
        }
    }
    lx.skip_ws();
    if (lx.i != lx.s.size()) lx.fail("trailing input");
    return pres;
}

std::vector<std::pair<int, SVec>> relation_coords(const AlgebraPresentation& pres,
                                                  const MonomialAmbient& ambient) {
    std::vector<std::pair<int, SVec>> out;
    for (const NCPoly& p : pres.relations) {
        ExteriorElement unused(0);
        int d = p.degree();
        if (d > ambient.top()) {
            if (ambient.finite()) continue;  // relation vanishes identically
            throw std::domain_error("relation degree beyond the computed bound");
        }
        // map each word to the ambient monomial with the ambient's sign rule
        std::map<int, Scalar> acc;
        for (const auto& [w, c] : p.terms) {
            IndexTuple t(w.a.begin(), w.a.begin() + w.len);
            Scalar coef = c;
            if (ambient.kind() == AmbientKind::exterior) {
                int sign = sort_with_sign(t);
                if (sign == 0) continue;
                if (sign < 0) coef = -coef;
            } else {
                std::sort(t.begin(), t.end());
            }
            int idx = ambient.index_of(d, t);
            acc[idx] += coef;
        }
        SVec v;
        for (auto& [i, c] : acc)
            if (!c.is_zero()) v.emplace_back(i, c);
        out.emplace_back(d, std::move(v));
    }
    return out;
}

std::shared_ptr<const QuotientAlgebra> presentation_algebra(const AlgebraPresentation& pres,
                                                            int top) {
    std::shared_ptr<const MonomialAmbient> amb;
    if (pres.ambient == Ambient::skew_commutative)
        amb = exterior_algebra(pres.gens);
    else if (pres.ambient == Ambient::commutative)
        amb = polynomial_ambient(pres.gens, top);
    else
        throw std::invalid_argument(
            "presentation_algebra: free presentations are handled by the Groebner engine");
    return quotient(amb, relation_coords(pres, *amb));
}

}  // namespace skewgor
