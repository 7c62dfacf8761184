#pragma once

#include "pong/bordered.hpp"
#include "pong/gf2.hpp"
#include "pong/pong_algebra.hpp"

#include <map>
#include <set>

namespace pong {

// t^s alpha (x) b with alpha in C(m,k), b a generator of Q(m,k), same idempotents,
// weight(alpha) + s = weight(b). alpha is determined by (s, b).
struct SBasisElement {
    int s = 0;
    ClgPure alpha;
    PongData b;
    friend bool operator==(const SBasisElement& a, const SBasisElement& o) { return a.s == o.s && a.b == o.b; }
    friend auto operator<=>(const SBasisElement& a, const SBasisElement& o)
    {
        if (auto c = a.s <=> o.s; c != 0) return c;
        return a.b <=> o.b;
    }
};

// Sorted GF(2) sum.
using SChain = std::vector<SBasisElement>;

SChain s_add(const SChain& a, const SChain& b);

class SmallModel {
public:
    SmallModel(int m, int k);

    int m() const { return m_; }
    int k() const { return k_; }
    PongAlgebra& pong() { return A_; }
    const BorderedAlgebra& clg() const { return C_; }

    // t-exponent forced by n + d = 1 + 2s(m-k-1).
    std::optional<int> t_power(int n, int d) const;
    std::pair<int, int> bigrading(const SBasisElement& e);
    // Q generators with 2 Totweight - cross = n (products of n atomics).
    const std::vector<PongData>& level(int n);

    std::optional<SBasisElement> make(int s, const PongData& b);
    std::vector<SBasisElement> basis(int n, int d);

    // (1 (x) d_Q) + S. + .S
    SChain d_small(const SBasisElement& e);
    SChain d_small(const SChain& c);

    // Terms f(q) (x) q of S, q atomic.
    const std::vector<std::pair<ClgPure, PongData>>& s_terms() const { return S_; }

    // (t Idemp{x}, Omega Idemp{x}); empty chain when Omega Idemp{x} = 0.
    SChain t_omega(uint32_t x);
    SChain t_omega();

    std::string format(const SBasisElement& e) const;
    std::string format(const SChain& c) const;

private:
    int m_, k_;
    PongAlgebra A_;
    BorderedAlgebra C_;
    std::vector<std::pair<ClgPure, PongData>> S_;
    std::vector<std::vector<PongData>> levels_;
};

struct ShhResult {
    int n = 0, d = 0;
    std::optional<int> s;
    size_t dim_prev = 0, dim = 0, dim_next = 0;
    size_t rank_in = 0, rank_out = 0;
    size_t homology = 0;
    std::vector<SChain> reps;
    bool d2_zero = true;
};

ShhResult shh(SmallModel& M, int n, int d, bool with_reps = true);

// Is c = D(something) in its bidegree?
bool s_is_boundary(SmallModel& M, const SChain& c);

struct HochschildReport {
    int m = 0, k = 0;
    int top = 0; // 2m - 2k
    std::vector<ShhResult> row1, row2; // d = -1 and d = -2, n = 1..top+2
    bool vanishing_ok = true;
    bool top_dim_ok = true;
    bool generator_ok = true;       // (t,Omega) cycle, not a boundary
    bool d2_ok = true;
    bool kernel_closure_ok = true;  // sum over a subset of states closed iff all states
    bool first_diff_ok = true;      // D(t Ix, Omega Ix) is the one-step L/R sum
    // k = 1 only
    bool k1_checked = false;
    bool k1_basis_ok = true;
    bool k1_diff_ok = true;
    std::vector<std::string> notes;
    bool ok() const
    {
        return vanishing_ok && top_dim_ok && generator_ok && d2_ok && kernel_closure_ok && first_diff_ok && k1_basis_ok &&
               k1_diff_ok;
    }
};

HochschildReport verify_hochschild(int m, int k);

}  // namespace pong
