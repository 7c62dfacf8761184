#pragma once

#include "pong/bordered.hpp"
#include "pong/gf2.hpp"
#include "pong/pong_algebra.hpp"

#include <map>
#include <optional>
#include <tuple>

namespace pong {

// Finite chain complex over GF(2); the differential lowers degree by one.
struct ChainComplex {
    int lo = 0;
    std::vector<uint32_t> n;                               // n[i] = dim in degree lo + i
    std::vector<std::vector<std::vector<uint32_t>>> d;      // d[i][j]: rows (degree lo+i-1) of the boundary of basis j

    int hi() const { return lo + int(n.size()) - 1; }
    size_t dim(int deg) const;
    size_t total_dim() const;
    // Matrix of the boundary out of degree deg: dim(deg-1) x dim(deg).
    GF2Matrix dense(int deg) const;
    bool d_squared_zero() const;
};

struct HomologySummary {
    std::map<int, size_t> dims; // only nonzero degrees
    size_t total = 0;
    long euler = 0;
};

HomologySummary homology(const ChainComplex& c, bool check_d2 = true);

enum class PieceTag { P, Q, PCone, QCone };

std::string tag_name(PieceTag t);

// Basis cell of a piece: part 0 is the plain algebra, part 1 the shifted source of a cone.
struct Cell {
    uint8_t part = 0;
    Term t;
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct Piece {
    PieceTag tag = PieceTag::Q;
    int m = 2, k = 0;
    uint32_t x = 0, y = 0;
    Weight w;
    ChainComplex cx;
    std::vector<std::vector<Cell>> cells;       // per degree index, sorted
    std::map<Cell, std::pair<int, uint32_t>> where; // cell -> (degree, index)

    std::optional<std::pair<int, uint32_t>> locate(const Cell& c) const;
    // Coordinates of an element (all of its terms must lie in this piece).
    BitVec vector_of(const PongElement& a, int deg, uint8_t part = 0) const;
    PongElement element_of(const BitVec& v, int deg) const;
    size_t dim(int deg) const { return cx.dim(deg); }
};

// Compatible triple parity: 2w_i + #(x_t < i) + #(y_t < i) even for all i.
bool compatible_triple(int m, uint32_t x, uint32_t y, const Weight& w);

// Pure generators of P(m,k) bucketed by (left idempotent, right idempotent, weight).
class PieceIndex {
public:
    PieceIndex(PongAlgebra& A, const Weight& cap);

    PongAlgebra& algebra() { return A_; }
    const Weight& cap() const { return cap_; }
    size_t size() const { return count_; }
    const std::vector<PongData>& bucket(uint32_t x, uint32_t y, const Weight& w) const;
    // v^a * g with weight(g) + 2a = w.
    std::vector<Term> p_basis(uint32_t x, uint32_t y, const Weight& w) const;
    // Weights present for a given idempotent pair.
    std::vector<Weight> weights(uint32_t x, uint32_t y) const;

    Piece piece(PieceTag tag, uint32_t x, uint32_t y, const Weight& w, bool right_omega = false);

private:
    PongAlgebra& A_;
    Weight cap_;
    size_t count_ = 0;
    std::map<std::tuple<uint32_t, uint32_t, Weight>, std::vector<PongData>> buckets_;
    std::vector<Term> omega_;
};

// Canonical cycle z(x,y;w) in Q: the pure Q-cycle of weight w - c (c = floor min w_i) in which no strand
// arriving rightwards ends at the start of another right-moving strand. None when c <= w_i <= c+1 fails.
// Constant integer w gives the idempotent.
std::optional<PongElement> canonical_cycle(PongAlgebra& A, uint32_t x, uint32_t y, const Weight& w);

bool interleaved(int k, uint32_t x, uint32_t y);

// Model complex over F[v] on {0,1}^{k+1}: d xi = sum_{xi_s = 1} V_s (xi - e_s).
struct ModelComplex {
    int m = 2, k = 0;
    uint32_t x = 0, y = 0;
    std::vector<Mono> V;   // V_1..V_{k+1}
    Weight base;           // weight of the xi = 0 cycle
    // Homology of the weight-w part.
    HomologySummary homology_at(const Weight& w) const;
    // dim of F[v]/(V_1..V_{k+1}) in weight w.
    size_t quotient_dim(const Weight& w) const;
};

ModelComplex model_complex(int m, int k, uint32_t x, uint32_t y);

// Strand census behind excessive generators at position p.
bool is_excessive(const PongData& g, int p);

// dim of Idemp{x'} C(m,k')[t] Idemp{y'} in weight w (count of s >= 0 with a nonzero pure element).
size_t clg_t_dim(const BorderedAlgebra& C, uint32_t x, uint32_t y, const Weight& w);

}  // namespace pong
