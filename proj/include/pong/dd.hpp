#pragma once

#include "pong/bordered.hpp"
#include "pong/pong_algebra.hpp"

#include <map>

namespace pong {

// a (x) gamma_y (x) b appearing in delta^1(gamma_x), with a : x -> y in C and b : y -> x in Q.
struct DDTerm {
    ClgPure a;
    uint32_t y = 0;
    PongData b;
    friend bool operator==(const DDTerm&, const DDTerm&) = default;
    friend auto operator<=>(const DDTerm&, const DDTerm&) = default;
};

// C-element with the same weight as an atomic b, running between the idempotents of b reversed.
std::optional<ClgPure> f_map(PongAlgebra& A, const BorderedAlgebra& C, const PongData& b);
// The displayed product formula for f on a descriptor, evaluated in C (restricted to left idempotent x).
ClgElement f_formula(const BorderedAlgebra& C, const AtomicDescriptor& d, uint32_t x);

// delta^1 summed over every atomic generator.
std::vector<DDTerm> delta1(PongAlgebra& A, const BorderedAlgebra& C, uint32_t x);
// delta^1 assembled from the displayed R/L/X lines (plain atomic descriptors).
std::vector<DDTerm> delta1_display(PongAlgebra& A, const BorderedAlgebra& C, uint32_t x);

struct DDReport {
    int m = 0, k = 0;
    size_t delta_terms = 0;
    size_t square_terms = 0;   // nonzero a.a' (x) b'.b contributions before cancellation
    size_t boundary_terms = 0; // a (x) d b contributions
    std::vector<std::string> residual;
    bool display_matches = false;
    bool bidegree_ok = false;
    bool f_formula_ok = false;
    bool ok() const { return residual.empty() && display_matches && bidegree_ok && f_formula_ok; }
};

// Terms of the structure relation that fail to cancel, for an arbitrary delta^1 keyed by source state.
std::vector<std::string> dd_residual(PongAlgebra& A, const BorderedAlgebra& C, const std::map<uint32_t, std::vector<DDTerm>>& delta,
                                     size_t* square_terms = nullptr, size_t* boundary_terms = nullptr);

DDReport verify_dd_relation(int m, int k);

}  // namespace pong
