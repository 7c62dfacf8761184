#pragma once

#include "pong/homology.hpp"

#include <map>

namespace pong {

struct DgaReport {
    int m = 0, k = 0;
    size_t generators = 0, d2_checked = 0, leibniz_checked = 0, assoc_checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// d^2 and Leibniz exhaustively (pairs with total weight under the cap), associativity on random triples.
DgaReport verify_dga(int m, int k, int cap2, size_t triples = 10000, uint64_t seed = 0x5eed);

struct AtomsReport {
    int m = 0, k = 0;
    size_t generators = 0, atomics = 0, factored = 0;
    int max_length = 0;
    bool bound_ok = true;      // 2 Totweight - cross >= 1 off the idempotents
    bool atomic_set_ok = true; // equality exactly on the X/R/L generators
    bool factor_ok = true;     // factors re-multiply to g with no monomial
    std::vector<std::string> failures;
    bool ok() const { return bound_ok && atomic_set_ok && factor_ok; }
};

AtomsReport verify_atoms(int m, int k, int cap2);

struct DisplayedDiffReport {
    std::string first, first_expected;
    std::string second, second_expected;
    std::string first_weight;
    int first_cross = 0;
    bool first_ok = false, caption_ok = false, second_ok = false;
    bool second_invalid_at_m4 = false;
    bool ok() const { return first_ok && caption_ok && second_ok; }
};

DisplayedDiffReport verify_displayed_differentials();

struct HqCase {
    uint32_t x = 0, y = 0;
    Weight w;
    size_t dim = 0;
};

struct HqReport {
    int m = 0, k = 0, cap2 = 0;
    size_t triples = 0, nonzero = 0;
    size_t max_dim = 0;
    std::vector<HqCase> literal_failures;  // interleaving and w_i <= 1 fail to predict dim
    std::vector<HqCase> refined_failures;  // with constancy on each V_s range
    bool dims_ok() const { return max_dim <= 1; }
    bool literal_ok() const { return dims_ok() && literal_failures.empty(); }
    bool refined_ok() const { return dims_ok() && refined_failures.empty(); }
};

bool condition_interleaved(int k, uint32_t x, uint32_t y);
bool condition_weight_le_one(int m, const Weight& w);
bool constant_on_ranges(int m, int k, uint32_t x, uint32_t y, const Weight& w);

HqReport verify_theorem_hq(int m, int k, int cap2);

struct HpReport {
    int m = 0, k = 0, cap2 = 0;
    size_t triples = 0;
    size_t dim_mismatch = 0;      // dim H(P) vs C(m,m-k-1)[t] with complementary idempotents
    size_t model_mismatch = 0;    // dim H(P') vs F[v]/(V_s) on interleaved pairs, 0 elsewhere
    size_t model_internal = 0;    // model complex homology vs its quotient description
    bool cone_sides_agree = true; // left and right Omega give the same cone homology
    std::vector<std::string> notes;
    bool ok() const { return !dim_mismatch && !model_mismatch && !model_internal && cone_sides_agree; }
};

uint32_t complement_state(int m, uint32_t x);

HpReport verify_theorem_hp(int m, int k, int cap2);

struct QmReport {
    int m = 0, cap2 = 0;
    size_t weights = 0, hilbert_mismatch = 0, monomial_failures = 0;
    bool squares_zero = true;
    bool commute = true;           // fails at m = 2, where X1 X2 + X2 X1 = Omega on the nose
    bool commutator_omega = false; // m = 2 only
    bool adjacent_boundary = true; // d X_{i-1,i+1} = X_i X_{i+1} + X_{i+1} X_i
    std::map<int, size_t> series; // total dim by 2*Totweight
    bool ok() const { return !hilbert_mismatch && !monomial_failures && squares_zero && (m == 2 ? commutator_omega : commute) && adjacent_boundary; }
};

// #{(eps, c) : eps in {0,1}^m, c >= 0, eps + c = w}
size_t hilbert_count(int m, const Weight& w);

QmReport verify_qm_special(int m, int cap2);

struct KoszulExample {
    std::string u1, u2;
    bool u1_ok = false, u2_ok = false;
    bool ok() const { return u1_ok && u2_ok; }
};

// Phi([U1]*) = X_{0,1} and Phi([U2]*) = X_{1,2} for C(2,1).
KoszulExample koszul_example_21();

}  // namespace pong
