#pragma once

#include "pong/common.hpp"

#include <optional>

namespace pong {

// x -> x + (2m-2)t, or x -> 1 - x + (2m-2)t when reflect is set.
struct GroupElement {
    bool reflect = false;
    long t = 0;

    long apply(int m, long x) const { return (reflect ? 1 - x : x) + long(2 * m - 2) * t; }
    // Action on doubled coordinates (half-integers become odd integers).
    long apply2(int m, long x2) const { return (reflect ? 2 - x2 : x2) + long(4 * m - 4) * t; }
    GroupElement operator*(const GroupElement& o) const; // (this ∘ o)
    GroupElement inverse() const { return reflect ? *this : GroupElement{false, -t}; }
    friend bool operator==(const GroupElement&, const GroupElement&) = default;

    static GroupElement identity() { return {}; }
    static GroupElement wall_low() { return {true, 0}; }            // r_{1/2}
    static GroupElement wall_high() { return {true, 1}; }           // r_{m-1/2}
};

struct Fold {
    int cls;
    GroupElement gamma; // gamma.apply(cls) == n
};

Fold fold(int m, long n);

// Component (1..m) of the half-integer (2*x2+1)/2 folded into [1/2, m-1/2].
int fold_half(int m, long j);

// Pong data: sources S in {1..m-1} (bitmask, bit s) with targets f[s].
struct PongData {
    uint8_t m = 2;
    uint8_t mask = 0;
    std::array<int16_t, kMaxM> f{};

    int k() const { return __builtin_popcount(mask); }
    bool has(int s) const { return (mask >> s) & 1u; }
    uint32_t image() const;
    bool idempotent() const;
    friend bool operator==(const PongData&, const PongData&) = default;
    friend auto operator<=>(const PongData&, const PongData&) = default;

    static PongData idem(int m, uint32_t mask);
};

PongData make_pong(int m, const std::vector<std::pair<int, long>>& pairs);
bool valid(const PongData& d);

long lift_apply(const PongData& d, long n);

// Doubled contribution of one strand s -> t.
Weight strand_weight(int m, long s, long t);
Weight local_multiplicities(const PongData& d);

struct Crossing {
    long i; // in {1..m-1}
    long j; // gamma * t
    int t;  // class of j
    GroupElement gamma;
    friend bool operator==(const Crossing& a, const Crossing& b) { return a.i == b.i && a.j == b.j; }
};

std::vector<Crossing> crossings(const PongData& d);
int cross_count(const PongData& d);
PongData resolve(const PongData& d, const Crossing& c);

// (S, g~ o f): f on top, then g.
std::optional<PongData> compose(const PongData& f, const PongData& g);

std::string format_pong(const PongData& d);
std::string format_pong_full(const PongData& d);
PongData parse_pong(const std::string& s);

// Every pong datum with source set in `masks` and weight <= cap.
std::vector<PongData> enumerate_pong(int m, const std::vector<uint32_t>& masks, const Weight& cap);
std::vector<PongData> enumerate_pong(int m, int k, const Weight& cap);

std::string tikz_pong(const PongData& d);

}  // namespace pong

template <>
struct std::hash<pong::PongData> {
    size_t operator()(const pong::PongData& d) const noexcept
    {
        uint64_t h = d.mask | (uint64_t(d.m) << 8);
        for (auto x : d.f) h = pong::mix64(h, uint16_t(x));
        return h;
    }
};
