#pragma once

#include "pong/dd.hpp"
#include "pong/homology.hpp"

#include <map>

namespace pong {

// Dual basis element (a_1 (x) ... (x) a_n)^* of the cobar algebra of C(m,k).
using CobarWord = std::vector<ClgPure>;

std::string format_word(const BorderedAlgebra& C, const CobarWord& w);

enum class PhiOrder { Reversed, Forward };

class Cobar {
public:
    Cobar(PongAlgebra& A, const BorderedAlgebra& C, const Weight& cap);

    const BorderedAlgebra& clg() const { return C_; }
    // Factorizations a = b.c into non-idempotent letters.
    const std::vector<std::pair<ClgPure, ClgPure>>& splits(const ClgPure& a);
    std::vector<CobarWord> differential(const CobarWord& w);
    // Chained words from x to y with total weight exactly W.
    std::vector<CobarWord> words(uint32_t x, uint32_t y, const Weight& W) const;
    PongElement phi(const CobarWord& w, PhiOrder order = PhiOrder::Reversed);

private:
    PongAlgebra& A_;
    const BorderedAlgebra& C_;
    Weight cap_;
    std::map<uint32_t, std::vector<ClgPure>> letters_; // by left state
    std::map<ClgPure, std::vector<std::pair<ClgPure, ClgPure>>> splits_;
    std::map<ClgPure, std::vector<PongData>> preimage_;  // atomics b with f(b) = a
};

struct KoszulPiece {
    uint32_t x = 0, y = 0;
    Weight w;
    size_t cobar_dim = 0, q_dim = 0;
    std::map<int, size_t> h_cobar, h_q; // keyed by -length = Ngr
    size_t induced_rank = 0;
    bool chain_map = true;
    bool iso = true;
};

struct KoszulReport {
    int m = 0, k = 0;
    Weight cap;
    PhiOrder order = PhiOrder::Reversed;
    bool reversed_chain_map = true, forward_chain_map = true;
    bool d2_zero = true;
    std::vector<KoszulPiece> pieces;
    bool ok() const;
};

KoszulReport verify_quasi_iso(int m, int k, const Weight& cap);

}  // namespace pong
