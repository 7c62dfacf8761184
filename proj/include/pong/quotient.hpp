#pragma once

#include "pong/homology.hpp"

namespace pong {

// Q(m,k) = P(m,k)/(v_1,...,v_m). Elements are PongElements whose terms all have trivial monomial.
PongElement project_to_q(const PongElement& a);
PongElement q_differential(PongAlgebra& A, const PongElement& a);
PongElement q_multiply(PongAlgebra& A, const PongElement& a, const PongElement& b);

// Mapping cone of Omega-multiplication from the (x,y,w-1) piece into the (x,y,w) piece.
// The source sits 2k+1 degrees up so the cone differential has degree -1.
inline Piece cone_piece(PieceIndex& idx, bool poly, uint32_t x, uint32_t y, const Weight& w, bool right_omega = false)
{
    return idx.piece(poly ? PieceTag::PCone : PieceTag::QCone, x, y, w, right_omega);
}

}  // namespace pong
