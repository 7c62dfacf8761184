#include "doctest.h"
#include "pong/ainfty.hpp"
#include "pong/gf2.hpp"

#include <random>

using namespace pong;

namespace {

GF2Matrix random_matrix(std::mt19937& rng, size_t r, size_t c)
{
    GF2Matrix M(r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j)
            if (rng() & 1u) M.set(i, j);
    return M;
}

GF2Matrix random_invertible(std::mt19937& rng, size_t n)
{
    for (;;) {
        GF2Matrix M = random_matrix(rng, n, n);
        if (M.inverse()) return M;
    }
}

ChainComplex from_matrices(int lo, const std::vector<size_t>& n, const std::vector<GF2Matrix>& D)
{
    ChainComplex cx;
    cx.lo = lo;
    for (auto x : n) cx.n.push_back(uint32_t(x));
    cx.d.resize(n.size());
    for (size_t t = 0; t < n.size(); ++t) {
        cx.d[t].resize(n[t]);
        if (t == 0) continue;
        for (size_t j = 0; j < n[t]; ++j)
            for (size_t i = 0; i < n[t - 1]; ++i)
                if (D[t].get(i, j)) cx.d[t][j].push_back(uint32_t(i));
    }
    return cx;
}

// C_t = H_t + B_t + B'_t with d: B'_t -> B_{t-1} the identity, then a random change of basis in each degree.
ChainComplex scrambled(std::mt19937& rng, const std::vector<size_t>& h, std::vector<size_t> b)
{
    size_t N = h.size();
    b.back() = 0;
    std::vector<size_t> n(N);
    for (size_t t = 0; t < N; ++t) n[t] = h[t] + b[t] + (t ? b[t - 1] : 0);
    std::vector<GF2Matrix> P;
    for (size_t t = 0; t < N; ++t) P.push_back(random_invertible(rng, n[t]));
    std::vector<GF2Matrix> D(N);
    for (size_t t = 1; t < N; ++t) {
        GF2Matrix S(n[t - 1], n[t]);
        for (size_t i = 0; i < b[t - 1]; ++i) S.set(h[t - 1] + i, h[t] + b[t] + i);
        D[t] = P[t - 1] * S * *P[t].inverse();
    }
    return from_matrices(-1, n, D);
}

}  // namespace

TEST_CASE("rank, kernel and solve")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        size_t r = 1 + rng() % 12, c = 1 + rng() % 12;
        GF2Matrix M = random_matrix(rng, r, c);
        auto ker = M.kernel();
        CHECK(M.rank() + ker.size() == c);
        for (auto& v : ker) CHECK_FALSE(M.apply(v).any());
        BitVec x(c);
        for (size_t i = 0; i < c; ++i) x.set(i, rng() & 1u);
        BitVec b = M.apply(x);
        auto s = M.solve(b);
        REQUIRE(s);
        CHECK(M.apply(*s) == b);
        GF2Solver solver(M);
        CHECK(solver.rank() == M.rank());
        CHECK(solver.in_image(b));
    }
    GF2Matrix I = GF2Matrix::identity(5);
    CHECK(*I.inverse() == I);
    GF2Matrix Z(3, 3);
    CHECK_FALSE(Z.inverse());
}

TEST_CASE("homology of scrambled complexes")
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        size_t N = 2 + rng() % 4;
        std::vector<size_t> h(N), b(N);
        for (size_t t = 0; t < N; ++t) {
            h[t] = rng() % 3;
            b[t] = rng() % 4;
        }
        ChainComplex cx = scrambled(rng, h, b);
        REQUIRE(cx.d_squared_zero());
        auto H = homology(cx);
        size_t total = 0;
        for (size_t t = 0; t < N; ++t) {
            int deg = cx.lo + int(t);
            size_t got = H.dims.count(deg) ? H.dims.at(deg) : 0;
            CHECK(got == h[t]);
            total += h[t];
        }
        CHECK(H.total == total);

        Contraction c = build_contraction(cx);
        auto chk = check_contraction(cx, c);
        CHECK(chk.pi);
        CHECK(chk.homotopy);
        CHECK(chk.hi);
        CHECK(chk.ph);
        CHECK(chk.hh);
    }
}

TEST_CASE("acyclic complex contracts to zero")
{
    std::mt19937 rng(5);
    ChainComplex cx = scrambled(rng, {0, 0, 0}, {2, 3, 0});
    auto c = build_contraction(cx);
    for (auto d : c.hdim) CHECK(d == 0);
    CHECK(check_contraction(cx, c).ok());
}

TEST_CASE("a broken differential is rejected")
{
    // d^2 != 0: 1 -> 1 -> 1 with both maps the identity
    GF2Matrix one = GF2Matrix::identity(1);
    ChainComplex cx = from_matrices(0, {1, 1, 1}, {GF2Matrix(), one, one});
    CHECK_FALSE(cx.d_squared_zero());
    CHECK_THROWS(build_contraction(cx));
}
