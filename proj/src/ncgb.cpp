#include "skewgor/ncgb.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <future>
#include <map>
#include <stdexcept>

namespace skewgor {

SubwordAutomaton::SubwordAutomaton(int alphabet, const std::vector<Word>& patterns) : n_(alphabet) {
    struct Node {
        std::vector<int32_t> child;
        int32_t fail = 0;
        int32_t terminal = -1;
    };
    std::vector<Node> trie(1, Node{std::vector<int32_t>(n_, -1), 0, -1});
    for (size_t k = 0; k < patterns.size(); ++k) {
        int s = 0;
        const Word& w = patterns[k];
        for (int i = 0; i < w.len; ++i) {
            int g = w.a[i];
            if (trie[s].child[g] < 0) {
                trie[s].child[g] = static_cast<int32_t>(trie.size());
                trie.push_back(Node{std::vector<int32_t>(n_, -1), 0, -1});
            }
            s = trie[s].child[g];
        }
        trie[s].terminal = static_cast<int32_t>(k);
    }
    // BFS failure links; goto() completion in place.
    std::deque<int> bfs;
    for (int g = 0; g < n_; ++g) {
        int c = trie[0].child[g];
        if (c < 0)
            trie[0].child[g] = 0;
        else {
            trie[c].fail = 0;
            bfs.push_back(c);
        }
    }
    while (!bfs.empty()) {
        int s = bfs.front();
        bfs.pop_front();
        if (trie[trie[s].fail].terminal >= 0 && trie[s].terminal < 0)
            trie[s].terminal = trie[trie[s].fail].terminal;
        for (int g = 0; g < n_; ++g) {
            int c = trie[s].child[g];
            if (c < 0)
                trie[s].child[g] = trie[trie[s].fail].child[g];
            else {
                trie[c].fail = trie[trie[s].fail].child[g];
                bfs.push_back(c);
            }
        }
    }
    next_.resize(trie.size());
    terminal_.resize(trie.size());
    for (size_t s = 0; s < trie.size(); ++s) {
        next_[s] = std::move(trie[s].child);
        terminal_[s] = trie[s].terminal;
    }
}

std::pair<int, int> SubwordAutomaton::find(const Word& w) const {
    if (next_.empty()) return {-1, -1};
    int s = 0;
    for (int i = 0; i < w.len; ++i) {
        s = next_[s][w.a[i]];
        int t = terminal_[s];
        if (t >= 0) return {t, i};  // end position; caller knows pattern length
    }
    return {-1, -1};
}

std::vector<mpz_class> SubwordAutomaton::count_avoiding(int D) const {
    std::vector<mpz_class> out(D + 1);
    if (next_.empty()) {
        // no patterns: free algebra
        mpz_class c = 1;
        for (int d = 0; d <= D; ++d) {
            out[d] = c;
            c *= n_;
        }
        return out;
    }
    std::vector<mpz_class> v(next_.size());
    v[0] = 1;
    out[0] = 1;
    for (int d = 1; d <= D; ++d) {
        std::vector<mpz_class> w(next_.size());
        for (size_t s = 0; s < next_.size(); ++s) {
            if (v[s] == 0 || terminal_[s] >= 0) continue;
            for (int g = 0; g < n_; ++g) {
                int t = next_[s][g];
                if (terminal_[t] < 0) w[t] += v[s];
            }
        }
        v = std::move(w);
        mpz_class total = 0;
        for (const auto& x : v) total += x;
        out[d] = total;
    }
    return out;
}

std::vector<Word> SubwordAutomaton::enumerate_avoiding(int d) const {
    std::vector<Word> out;
    Word cur;
    auto step = [&](auto&& self, int state, int depth) -> void {
        if (depth == d) {
            out.push_back(cur);
            return;
        }
        for (int g = 0; g < n_; ++g) {
            int t = next_.empty() ? 0 : next_[state][g];
            if (!next_.empty() && terminal_[t] >= 0) continue;
            cur.push(g);
            self(self, t, depth + 1);
            cur.len--;
        }
    };
    step(step, 0, 0);
    return out;
}

NCPoly normal_form(const NCPoly& p, const std::vector<NCPoly>& basis, const SubwordAutomaton& aut,
                   const MonomialOrder& ord) {
    struct Gt {
        const MonomialOrder* o;
        bool operator()(const Word& x, const Word& y) const { return o->compare(x, y) > 0; }
    };
    std::map<Word, Scalar, Gt> pending(Gt{&ord});
    for (const auto& [w, c] : p.terms) pending[w] = c;
    NCPoly done;
    while (!pending.empty()) {
        auto it = pending.begin();
        Word w = it->first;
        Scalar c = it->second;
        pending.erase(it);
        if (c.is_zero()) continue;
        auto [k, end] = aut.find(w);
        if (k < 0) {
            done.terms.emplace_back(w, c);
            continue;
        }
        const NCPoly& g = basis[k];
        int L = g.lead().degree();
        Word left = w.sub(0, end - L + 1);
        Word right = w.sub(end + 1, w.len - end - 1);
        // w = left * lead(g) * right ; rewrite with the (monic) tail of g
        for (size_t t = 1; t < g.terms.size(); ++t) {
            Word nw = left.concat(g.terms[t].first).concat(right);
            Scalar add = -(c * g.terms[t].second);
            auto [jt, fresh] = pending.emplace(nw, add);
            if (!fresh) {
                jt->second += add;
                if (jt->second.is_zero()) pending.erase(jt);
            }
        }
    }
    // terms were appended in strictly decreasing order
    return done;
}

NCPoly normal_form(const NCPoly& p, const GroebnerBasis& G) {
    return normal_form(p, G.elems(), G.automaton(), G.order());
}

std::vector<mpz_class> GroebnerBasis::quotient_dims(int d) const {
    if (d > valid_degree_limit() && valid_degree_limit() >= 0)
        throw std::domain_error(
            "GroebnerBasis: quotient dimensions beyond the certified degree (cap " +
            std::to_string(cap_) + ", certificate " + certificate_str() + ")");
    return aut_->count_avoiding(d);
}

std::vector<Word> GroebnerBasis::normal_words(int d) const {
    if (d > valid_degree_limit() && valid_degree_limit() >= 0)
        throw std::domain_error("GroebnerBasis: normal words beyond the certified degree");
    return aut_->enumerate_avoiding(d);
}

int GroebnerBasis::valid_degree_limit() const {
    return cert_ == Certificate::complete ? -1 : cap_;
}

namespace {

struct Ambiguity {
    int degree;
    int i, j;      // basis indices; S-poly g_i suffix-overlaps lead(g_j) prefix
    int overlap;   // overlap length
    bool operator<(const Ambiguity& o) const {
        if (degree != o.degree) return degree < o.degree;
        if (i != o.i) return i < o.i;
        if (j != o.j) return j < o.j;
        return overlap < o.overlap;
    }
};

bool is_subword(const Word& needle, const Word& hay) {
    if (needle.len > hay.len) return false;
    for (int s = 0; s + needle.len <= hay.len; ++s) {
        bool ok = true;
        for (int i = 0; i < needle.len; ++i)
            if (hay.a[s + i] != needle.a[i]) {
                ok = false;
                break;
            }
        if (!ok) continue;
        return true;
    }
    return false;
}

}  // namespace

GroebnerBasis buchberger_truncated(int n, std::vector<NCPoly> rels, int degree_cap,
                                   MonomialOrder order, int threads) {
    GroebnerBasis G;
    G.n_ = n;
    G.order_ = order;
    G.cap_ = degree_cap;

    for (const auto& r : rels) {
        if (r.is_zero()) continue;
        if (!r.homogeneous())
            throw std::invalid_argument("buchberger_truncated: inhomogeneous relation");
        if (r.degree() == 0)
            throw std::invalid_argument("buchberger_truncated: unit relation (zero algebra)");
    }

    std::vector<NCPoly> basis;          // active, monic, subword-free leads
    std::vector<bool> alive;            // parallel to basis
    std::vector<Word> leads;            // alive leads only (parallel to live_idx)
    auto rebuild = [&]() {
        std::vector<Word> pat;
        std::vector<NCPoly> act;
        for (size_t k = 0; k < basis.size(); ++k)
            if (alive[k]) {
                pat.push_back(basis[k].lead());
                act.push_back(basis[k]);
            }
        return std::make_pair(SubwordAutomaton(n, pat), act);
    };

    auto [aut, active] = rebuild();

    std::multimap<int, Ambiguity> pair_queue;  // keyed by ambiguity degree
    // input relations enter as degree-keyed candidates
    std::multimap<int, NCPoly> candidates;
    for (auto& r : rels)
        if (!r.is_zero()) candidates.emplace(r.degree(), std::move(r));

    auto add_pairs_for = [&](int idx) {
        const Word& u = basis[idx].lead();
        for (size_t k = 0; k < basis.size(); ++k) {
            if (!alive[k]) continue;
            const Word& w = basis[k].lead();
            // suffix of u == prefix of w (rewriting u-side first)
            for (int o = 1; o < std::min<int>(u.len, w.len); ++o) {
                bool match = true;
                for (int t = 0; t < o; ++t)
                    if (u.a[u.len - o + t] != w.a[t]) {
                        match = false;
                        break;
                    }
                if (match) {
                    int deg = u.len + w.len - o;
                    if (deg <= degree_cap)
                        pair_queue.emplace(deg, Ambiguity{deg, idx, static_cast<int>(k), o});
                }
            }
            if (static_cast<int>(k) == idx) continue;
            // suffix of w == prefix of u
            for (int o = 1; o < std::min<int>(u.len, w.len); ++o) {
                bool match = true;
                for (int t = 0; t < o; ++t)
                    if (w.a[w.len - o + t] != u.a[t]) {
                        match = false;
                        break;
                    }
                if (match) {
                    int deg = u.len + w.len - o;
                    if (deg <= degree_cap)
                        pair_queue.emplace(deg, Ambiguity{deg, static_cast<int>(k), idx, o});
                }
            }
        }
    };

    auto insert_element = [&](NCPoly h) {
        h = ncp_monic(h);
        int idx = static_cast<int>(basis.size());
        basis.push_back(h);
        alive.push_back(true);
        G.max_deg_ = std::max(G.max_deg_, h.degree());
        // retire basis elements whose lead contains the new lead; their
        // reductions re-enter as candidates
        for (size_t k = 0; k + 1 < basis.size(); ++k) {
            if (!alive[k]) continue;
            if (is_subword(h.lead(), basis[k].lead())) {
                alive[k] = false;
                candidates.emplace(basis[k].degree(), basis[k]);
            }
        }
        std::tie(aut, active) = rebuild();
        // tail-reduce survivors whose tails now contain the new lead
        for (size_t k = 0; k + 1 < basis.size(); ++k) {
            if (!alive[k]) continue;
            bool touched = false;
            for (size_t t = 1; t < basis[k].terms.size(); ++t)
                if (is_subword(h.lead(), basis[k].terms[t].first)) {
                    touched = true;
                    break;
                }
            if (touched) {
                // reduce the tail only; within a homogeneous polynomial no
                // other term can properly contain the lead (equal degree),
                // so the tail never matches the element's own pattern
                NCPoly tail;
                tail.terms.assign(basis[k].terms.begin() + 1, basis[k].terms.end());
                NCPoly red = normal_form(tail, active, aut, order);
                NCPoly out;
                out.terms.push_back(basis[k].terms.front());
                for (auto& t : red.terms) out.terms.push_back(std::move(t));
                basis[k] = std::move(out);
                std::tie(aut, active) = rebuild();
            }
        }
        add_pairs_for(idx);
    };

    auto spoly = [&](const Ambiguity& am) {
        const NCPoly& gi = basis[am.i];
        const NCPoly& gj = basis[am.j];
        const Word& u = gi.lead();
        const Word& w = gj.lead();
        Word right = w.sub(am.overlap, w.len - am.overlap);
        Word left = u.sub(0, u.len - am.overlap);
        // lead(gi)*right == left*lead(gj) == ambiguity word
        NCPoly a = ncp_mul_words(Word{}, gi, right);
        NCPoly b = ncp_mul_words(left, gj, Word{});
        return ncp_axpy(a, Scalar(-1), b, order);
    };

    int processed_degree = 0;
    while (!candidates.empty() || !pair_queue.empty()) {
        int dc = candidates.empty() ? degree_cap + 1 : candidates.begin()->first;
        int dp = pair_queue.empty() ? degree_cap + 1 : pair_queue.begin()->first;
        int d = std::min(dc, dp);
        if (d > degree_cap) break;
        processed_degree = std::max(processed_degree, d);

        // candidates of this degree first (includes input relations and
        // retired elements), then S-polynomials, in deterministic order
        if (dc == d) {
            auto range = candidates.equal_range(d);
            std::vector<NCPoly> batch;
            for (auto it = range.first; it != range.second; ++it) batch.push_back(it->second);
            candidates.erase(range.first, range.second);
            for (auto& c : batch) {
                NCPoly r = normal_form(c, active, aut, order);
                if (!r.is_zero()) insert_element(std::move(r));
            }
            continue;
        }

        // batch of S-polynomials of degree d: reduce against the snapshot in
        // parallel, then insert sequentially in canonical order with
        // re-reduction against the grown basis
        auto range = pair_queue.equal_range(d);
        std::vector<Ambiguity> ams;
        for (auto it = range.first; it != range.second; ++it) ams.push_back(it->second);
        pair_queue.erase(range.first, range.second);
        std::sort(ams.begin(), ams.end());

        std::vector<NCPoly> reduced(ams.size());
        if (threads > 1 && ams.size() > 1) {
            std::vector<std::future<void>> fut;
            std::atomic<size_t> next{0};
            auto worker = [&]() {
                for (;;) {
                    size_t k = next.fetch_add(1);
                    if (k >= ams.size()) return;
                    if (!alive[ams[k].i] || !alive[ams[k].j]) continue;
                    reduced[k] = normal_form(spoly(ams[k]), active, aut, order);
                }
            };
            int nt = std::min<int>(threads, static_cast<int>(ams.size()));
            for (int t = 0; t < nt; ++t) fut.push_back(std::async(std::launch::async, worker));
            for (auto& f : fut) f.get();
        } else {
            for (size_t k = 0; k < ams.size(); ++k) {
                if (!alive[ams[k].i] || !alive[ams[k].j]) continue;
                reduced[k] = normal_form(spoly(ams[k]), active, aut, order);
            }
        }
        for (auto& r : reduced) {
            if (r.is_zero()) continue;
            NCPoly rr = normal_form(r, active, aut, order);
            if (!rr.is_zero()) insert_element(std::move(rr));
        }
    }

    std::vector<Word> pat;
    for (size_t k = 0; k < basis.size(); ++k)
        if (alive[k]) G.elems_.push_back(basis[k]);
    // canonical output order: by (degree, lead word descending? ) -- use
    // increasing degree, then decreasing lead under the monomial order
    std::sort(G.elems_.begin(), G.elems_.end(), [&order](const NCPoly& x, const NCPoly& y) {
        if (x.degree() != y.degree()) return x.degree() < y.degree();
        return order.compare(x.lead(), y.lead()) > 0;
    });
    for (const auto& e : G.elems_) pat.push_back(e.lead());
    G.aut_ = std::make_shared<SubwordAutomaton>(n, pat);
    G.cert_ = (2 * G.max_deg_ - 1 <= degree_cap) ? GroebnerBasis::Certificate::complete
                                                 : GroebnerBasis::Certificate::complete_within_cap;
    if (G.elems_.empty()) G.cert_ = GroebnerBasis::Certificate::complete;
    return G;
}

}  // namespace skewgor
