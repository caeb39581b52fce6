#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace skewgor {

// Word in the free associative algebra: a sequence of generator indices
// (0-based).  Degree equals length.
struct Word {
    static constexpr int kMaxLen = 36;

    uint8_t len = 0;
    std::array<uint8_t, kMaxLen> a{};

    Word() = default;
    Word(std::initializer_list<int> letters) {
        for (int g : letters) push(g);
    }

    int degree() const { return len; }
    bool empty() const { return len == 0; }
    uint8_t operator[](int i) const { return a[i]; }

    void push(int g) {
        if (len >= kMaxLen) throw std::length_error("Word: degree cap exceeded");
        a[len++] = static_cast<uint8_t>(g);
    }

    Word concat(const Word& o) const {
        Word r = *this;
        for (int i = 0; i < o.len; ++i) r.push(o.a[i]);
        return r;
    }
    Word sub(int from, int count) const {
        Word r;
        for (int i = 0; i < count; ++i) r.push(a[from + i]);
        return r;
    }

    friend bool operator==(const Word& x, const Word& y) {
        if (x.len != y.len) return false;
        for (int i = 0; i < x.len; ++i)
            if (x.a[i] != y.a[i]) return false;
        return true;
    }

    std::string str(const std::string& stem = "X") const {
        if (len == 0) return "1";
        std::string s;
        for (int i = 0; i < len; ++i) {
            if (i) s += "*";
            s += stem + std::to_string(a[i] + 1);
        }
        return s;
    }
};

struct WordHash {
    size_t operator()(const Word& w) const {
        size_t h = 1469598103934665603ull;
        for (int i = 0; i < w.len; ++i) {
            h ^= w.a[i];
            h *= 1099511628211ull;
        }
        return h ^ w.len;
    }
};

// Degree-lexicographic order with configurable generator priority.  The
// default priority is X1 > X2 > ... ; rank[g] gives the position of g in the
// priority chain (smaller rank = higher priority = larger letter).
class MonomialOrder {
public:
    MonomialOrder() = default;
    explicit MonomialOrder(int n) : rank_(n) {
        for (int i = 0; i < n; ++i) rank_[i] = static_cast<uint8_t>(i);
    }
    MonomialOrder(int n, const std::vector<int>& priority_chain) : rank_(n, 255) {
        if (static_cast<int>(priority_chain.size()) != n)
            throw std::invalid_argument("MonomialOrder: priority chain must list every generator");
        for (int pos = 0; pos < n; ++pos) {
            int g = priority_chain[pos];
            if (g < 0 || g >= n || rank_[g] != 255)
                throw std::invalid_argument("MonomialOrder: bad priority chain");
            rank_[g] = static_cast<uint8_t>(pos);
        }
    }

    int n() const { return static_cast<int>(rank_.size()); }

    // < 0 if x < y, 0 if equal, > 0 if x > y.
    int compare(const Word& x, const Word& y) const {
        if (x.len != y.len) return x.len < y.len ? -1 : 1;
        for (int i = 0; i < x.len; ++i) {
            uint8_t rx = rank_[x.a[i]], ry = rank_[y.a[i]];
            if (rx != ry) return rx < ry ? 1 : -1;
        }
        return 0;
    }
    bool less(const Word& x, const Word& y) const { return compare(x, y) < 0; }

private:
    std::vector<uint8_t> rank_;
};

}  // namespace skewgor
