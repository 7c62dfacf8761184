#include "pong/quotient.hpp"

namespace pong {

PongElement project_to_q(const PongElement& a)
{
    PongElement out = a;
    out.terms.clear();
    for (auto& t : a.terms)
        if (t.v.one()) out.terms.push_back(t);
    return out;
}

PongElement q_differential(PongAlgebra& A, const PongElement& a)
{
    return project_to_q(A.differential(project_to_q(a)));
}

PongElement q_multiply(PongAlgebra& A, const PongElement& a, const PongElement& b)
{
    return project_to_q(A.multiply(project_to_q(a), project_to_q(b)));
}

}  // namespace pong
