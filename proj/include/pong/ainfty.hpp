#pragma once

#include "pong/homology.hpp"

#include <map>
#include <memory>

namespace pong {

// Strong deformation retract of a finite complex onto a homology basis.
// Per degree: C_d = B_d + H_d + B'_d with d: B'_d -> B_{d-1} an isomorphism.
struct Contraction {
    int lo = 0;
    std::vector<size_t> cdim, hdim;
    std::vector<std::vector<BitVec>> cycles; // chosen homology representatives
    std::vector<GF2Matrix> i, p, h;          // h at index d maps C_d -> C_{d+1}

    int hi() const { return lo + int(cdim.size()) - 1; }
    bool in_range(int deg) const { return deg >= lo && deg <= hi(); }
    size_t homology_dim(int deg) const { return in_range(deg) ? hdim[size_t(deg - lo)] : 0; }
    BitVec include(int deg, const BitVec& cls) const;
    BitVec project(int deg, const BitVec& v) const;
    BitVec homotopy(int deg, const BitVec& v) const; // lands in degree deg + 1
};

Contraction build_contraction(const ChainComplex& cx);

struct ContractionCheck {
    bool pi = true;       // p i = 1
    bool homotopy = true; // 1 - i p = d h + h d
    bool hi = true, ph = true, hh = true;
    bool ok() const { return pi && homotopy && hi && ph && hh; }
};

ContractionCheck check_contraction(const ChainComplex& cx, const Contraction& c);

// Homology class of a homogeneous element in its (x, y, w) piece at degree deg.
struct ClassValue {
    uint32_t x = 0, y = 0;
    Weight w;
    int deg = 0;
    BitVec cls;
    PongElement rep; // i(cls)
    bool zero() const { return !cls.any(); }
};

struct StarChain {
    size_t n = 0;
    std::map<std::pair<size_t, size_t>, PongElement> table; // 0-based closed spans
    std::optional<std::pair<size_t, size_t>> obstruction;
    PongElement top;     // sum_l A[0..l] A[l+1..n-1]
    ClassValue top_class;
};

// Transfer of the product on P (or Q = P/(v)) to homology, piece by piece.
class TransferEngine {
public:
    TransferEngine(PongAlgebra& A, bool quotient, const Weight& cap);

    PongAlgebra& algebra() { return A_; }
    bool quotient() const { return quotient_; }
    const Weight& cap() const { return idx_.cap(); }

    PongElement multiply(const PongElement& a, const PongElement& b);
    PongElement differential(const PongElement& a);

    // Piece and degree shared by every term; throws if a is zero or not homogeneous.
    std::tuple<uint32_t, uint32_t, Weight, int> slot(const PongElement& a);
    const Piece& piece(uint32_t x, uint32_t y, const Weight& w);
    const Contraction& contraction(uint32_t x, uint32_t y, const Weight& w);

    ClassValue class_of(const PongElement& cycle, uint32_t x, uint32_t y, const Weight& w, int deg);
    ClassValue class_of(const PongElement& cycle);
    PongElement homotopy(const PongElement& a);
    std::optional<PongElement> bound(const PongElement& a); // some c with dc = a

    // Tree formula; inputs must be cycles forming an idempotent chain.
    ClassValue mu(const std::vector<PongElement>& inputs);
    // Solves d A[i..j] = sum A[i..l] A[l+1..j] span by span.
    StarChain star_chain(const std::vector<PongElement>& inputs);

    size_t pieces_cached() const { return cache_.size(); }

private:
    struct Entry {
        Piece piece;
        Contraction c;
    };
    Entry& entry(uint32_t x, uint32_t y, const Weight& w);
    std::tuple<uint32_t, uint32_t, Weight, int> target(const std::vector<PongElement>& in, size_t i, size_t j);

    PongAlgebra& A_;
    bool quotient_;
    PieceIndex idx_;
    std::map<std::tuple<uint32_t, uint32_t, Weight>, std::unique_ptr<Entry>> cache_;
    std::vector<std::tuple<uint32_t, uint32_t, Weight, int>> in_slots_;
};

// One input token: v1, v1v2, L3 (= L_{3,2}), R3 (= R_{2,3}), L_{3,1}, R_{1,3}, X2 (= X_{1,2}), X_{0,2}, U2, Omega.
PongElement parse_input_token(PongAlgebra& A, const std::string& tok, bool quotient);

struct InputSequence {
    uint32_t start = 0;
    std::vector<std::string> tokens;
    std::vector<PongElement> elems; // restricted along the idempotent chain
};

// Comma-separated tokens. Without a start idempotent the first state that makes every input nonzero is used.
InputSequence parse_inputs(PongAlgebra& A, const std::string& s, bool quotient, std::optional<uint32_t> start = {});

// "Ω", "Ω^2", "0", or the representative.
std::string describe_class(TransferEngine& T, const ClassValue& v);
// Largest c <= 3 with v = [Omega^c Idemp{x}], if any.
std::optional<int> omega_power(TransferEngine& T, const ClassValue& v);

struct MuReport {
    int m = 0, k = 0;      // C(m,k) parameters; the pong algebra is P(m, m-k-1)
    std::vector<std::string> inputs;
    uint32_t start = 0;
    std::string result;
    bool equals_omega = false;
    bool star_agrees = false;
    bool gradings_ok = false;
    bool lower_vanish = true; // every proper sub-span mu is zero
    std::optional<std::pair<size_t, size_t>> obstruction;
    bool ok() const { return equals_omega && star_agrees && gradings_ok && lower_vanish && !obstruction; }
};

// mu_{2m-2k}(v1..vk, L_{k+1}, ..., L_{m-1}, v_m, R_{m-1}, ..., R_{k+1}) in H(P(m, m-k-1)).
MuReport verify_mu_sequence(int m, int k);

// The k = 1 star-chain identities, each compared with the solver table.
struct StarIdentity {
    std::string label;
    size_t i = 0, j = 0;
    bool chain_ok = false; // d(displayed chain) equals the span's right side
    bool same_class = false; // displayed chain minus solver chain is a boundary
};
std::vector<StarIdentity> star_identities(int m);

struct PermSumReport {
    int m = 0;
    size_t permutations = 0;
    std::string result;
    bool equals_omega = false;
    bool lower_vanish = true; // mu_l on ascending distinct X's, 3 <= l < m
    size_t lower_checked = 0;
    bool ok() const { return equals_omega && lower_vanish; }
};

PermSumReport verify_perm_sum(int m, int workers = 1);

struct DegenerateReport {
    int m = 0;
    size_t p0_pieces = 0, pm_pieces = 0;
    bool p0_ok = true;  // H(P(m,0)) = F[v]: one class per integral weight, zero differential
    bool pm_ok = true;  // H(P(m,m-1)) = F[Omega]: one class at w = c, degree 2c(m-1)
    std::vector<std::string> notes;
    bool ok() const { return p0_ok && pm_ok; }
};

DegenerateReport verify_degenerate(int m, int cap2 = 4);

}  // namespace pong
