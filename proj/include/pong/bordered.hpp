#pragma once

#include "pong/common.hpp"

#include <optional>

namespace pong {

enum class Flavor { B0, C };

// Pure element of B0(m,k) or C(m,k): idempotents and weight (the U-monomial is implicit).
struct ClgPure {
    uint32_t x = 0;
    uint32_t y = 0;
    Weight w;
    friend bool operator==(const ClgPure&, const ClgPure&) = default;
    friend auto operator<=>(const ClgPure&, const ClgPure&) = default;
};

struct ClgElement {
    std::vector<ClgPure> terms;
    bool zero() const { return terms.empty(); }
    void normalize();
    ClgElement& operator+=(const ClgElement& o);
    friend bool operator==(const ClgElement& a, const ClgElement& b) { return a.terms == b.terms; }
};

// t^s * pure, with gr(t) = 2m-2k-2 and weight(t) = (1,...,1).
struct ClgTPure {
    int s = 0;
    ClgPure a;
    friend bool operator==(const ClgTPure&, const ClgTPure&) = default;
    friend auto operator<=>(const ClgTPure&, const ClgTPure&) = default;
};

std::vector<int> state_weight_vector(uint32_t x, int m);
Weight min_weight(uint32_t x, uint32_t y, int m);
bool too_far(uint32_t x, uint32_t y);

class BorderedAlgebra {
public:
    BorderedAlgebra(int m, int k, Flavor fl = Flavor::C);

    int m() const { return m_; }
    int k() const { return k_; }
    Flavor flavor() const { return fl_; }
    const std::vector<uint32_t>& states() const { return states_; }
    bool is_state(uint32_t x) const;

    // Weight bookkeeping is valid: w - min_weight is a non-negative integer vector.
    bool well_formed(const ClgPure& p) const;
    // Pure element nonzero in the algebra (for C: well formed and not in J).
    bool nonzero(const ClgPure& p) const;

    std::optional<ClgPure> b0_multiply(const ClgPure& a, const ClgPure& b) const;
    bool ideal_member(const ClgPure& p) const;
    std::optional<ClgPure> multiply(const ClgPure& a, const ClgPure& b) const;
    ClgElement multiply(const ClgElement& a, const ClgElement& b) const;

    ClgElement idempotent(uint32_t x) const;
    ClgElement L(int i) const;
    ClgElement R(int i) const;
    ClgElement U(int i) const;

    // All nonzero pure elements x -> y of weight exactly w.
    std::optional<ClgPure> pure(uint32_t x, uint32_t y, const Weight& w) const;
    // Nonzero pure elements with weight <= cap (componentwise).
    std::vector<ClgPure> enumerate(const Weight& cap, bool include_idempotents = true) const;

    std::pair<int, Weight> t_gradings(const ClgTPure& e) const;

    std::string format(const ClgPure& p) const;
    std::string format(const ClgElement& e) const;
    // "L3*R3*U1^2 | x={1,3} y={1,3}" (sandwich is optional)
    ClgElement parse(const std::string& s) const;

private:
    int m_, k_;
    Flavor fl_;
    std::vector<uint32_t> states_;
};

}  // namespace pong
