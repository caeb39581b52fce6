#include <doctest.h>

#include <random>

#include "skewgor/linalg.hpp"

using namespace skewgor;

namespace {
SVec sv(std::initializer_list<std::pair<int, long>> entries) {
    SVec v;
    for (auto [c, x] : entries) v.emplace_back(c, Scalar(x));
    return v;
}
}  // namespace

TEST_CASE("exact echelon: rank and reduction") {
    EchelonQ e;
    CHECK(e.insert(sv({{0, 1}, {1, 2}})));
    CHECK(e.insert(sv({{1, 1}, {2, 1}})));
    CHECK_FALSE(e.insert(sv({{0, 2}, {1, 5}, {2, 1}})));  // dependent
    CHECK(e.rank() == 2);
    CHECK(e.reduce(sv({{0, 1}, {1, 2}})).empty());
    CHECK_FALSE(e.reduce(sv({{2, 1}})).empty());
}

TEST_CASE("kernel_exact finds the full kernel") {
    // columns of a 2x4 matrix [[1,0,1,2],[0,1,1,3]]
    std::vector<SVec> cols = {sv({{0, 1}}), sv({{1, 1}}), sv({{0, 1}, {1, 1}}),
                              sv({{0, 2}, {1, 3}})};
    auto ker = kernel_exact(cols);
    CHECK(ker.size() == 2);
    for (const auto& k : ker) {
        // verify: sum_j k_j col_j = 0
        SVec acc;
        for (auto& [j, c] : k) acc = svec_axpy(acc, c, cols[j]);
        CHECK(acc.empty());
    }
}

TEST_CASE("modular echelon agrees with exact ranks on random sparse matrices") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> dim(3, 14), val(-4, 4);
    for (int trial = 0; trial < 30; ++trial) {
        int rows = dim(rng), cols = dim(rng);
        std::vector<SVec> rQ;
        for (int r = 0; r < rows; ++r) {
            SVec row;
            for (int c = 0; c < cols; ++c) {
                int v = val(rng);
                if (v && rng() % 3 == 0) row.emplace_back(c, Scalar(v));
            }
            rQ.push_back(row);
        }
        EchelonQ eq;
        for (auto& r : rQ) eq.insert(r);
        uint32_t p = search_primes()[trial % 4];
        EchelonP ep(p);
        for (auto& r : rQ) ep.insert(svec_mod(r, ModP{p}));
        CHECK(eq.rank() == ep.rank());  // 31-bit primes, tiny entries
    }
}

TEST_CASE("modular kernel vectors solve the system") {
    uint32_t p = search_primes()[0];
    EchelonP e(p);
    // rows of [[1,2,0,1],[0,1,1,0]]
    std::vector<SVecP> rows = {{{0, 1}, {1, 2}, {3, 1}}, {{1, 1}, {2, 1}}};
    for (auto r : rows) e.insert(r);
    int nkernel = 0;
    for (int32_t fc = 0; fc < 4; ++fc) {
        if (e.has_pivot(fc)) continue;
        ++nkernel;
        SVecP x = e.kernel_vector(fc);
        for (const auto& row : rows) {
            uint64_t acc = 0;
            for (auto& [c, v] : row)
                for (auto& [xc, xv] : x)
                    if (c == xc) acc = (acc + static_cast<uint64_t>(v) * xv) % p;
            CHECK(acc == 0);
        }
    }
    CHECK(nkernel == 2);
}

TEST_CASE("rational reconstruction round trip") {
    std::vector<uint32_t> primes = {search_primes()[0], search_primes()[1]};
    std::vector<Scalar> values = {Scalar(3, 7), Scalar(-22, 5), Scalar(191), Scalar(0)};
    for (const Scalar& s : values) {
        std::vector<uint32_t> res;
        for (uint32_t p : primes) res.push_back(s.residue(p));
        mpz_class modulus;
        mpz_class combo = crt_combine(res, primes, &modulus);
        auto rec = rational_reconstruct(combo, modulus);
        REQUIRE(rec.has_value());
        CHECK(*rec == s);
    }
}
