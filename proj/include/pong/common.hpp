#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pong {

constexpr int kMaxM = 8;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline uint64_t mix64(uint64_t h, uint64_t v)
{
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h * 0xff51afd7ed558ccdULL;
}

// Weight vector in (1/2)Z^m, stored doubled. Slot i-1 holds weight_i.
struct Weight {
    std::array<int16_t, kMaxM> d{};

    int16_t& operator[](int i) { return d[i]; }
    int16_t operator[](int i) const { return d[i]; }

    Weight& operator+=(const Weight& o)
    {
        for (int i = 0; i < kMaxM; ++i) d[i] += o.d[i];
        return *this;
    }
    Weight& operator-=(const Weight& o)
    {
        for (int i = 0; i < kMaxM; ++i) d[i] -= o.d[i];
        return *this;
    }
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight&, const Weight&) = default;

    bool leq(const Weight& o) const
    {
        for (int i = 0; i < kMaxM; ++i)
            if (d[i] > o.d[i]) return false;
        return true;
    }
    bool nonneg() const
    {
        for (auto x : d)
            if (x < 0) return false;
        return true;
    }
    bool integral() const
    {
        for (auto x : d)
            if (x & 1) return false;
        return true;
    }
    bool zero() const
    {
        for (auto x : d)
            if (x) return false;
        return true;
    }
    int total2() const
    {
        int s = 0;
        for (auto x : d) s += x;
        return s;
    }
    int min2(int m) const
    {
        int r = d[0];
        for (int i = 1; i < m; ++i) r = std::min<int>(r, d[i]);
        return r;
    }
    int max2(int m) const
    {
        int r = d[0];
        for (int i = 1; i < m; ++i) r = std::max<int>(r, d[i]);
        return r;
    }

    static Weight constant(int m, int doubled)
    {
        Weight w;
        for (int i = 0; i < m; ++i) w.d[i] = doubled;
        return w;
    }
    static Weight unit(int i) // e_i, 1-based
    {
        Weight w;
        w.d[i - 1] = 2;
        return w;
    }
};

// Exponent vector of a monomial in v_1..v_m (or U_1..U_m).
struct Mono {
    std::array<uint8_t, kMaxM> e{};

    friend bool operator==(const Mono&, const Mono&) = default;
    friend auto operator<=>(const Mono&, const Mono&) = default;
    Mono& operator+=(const Mono& o)
    {
        for (int i = 0; i < kMaxM; ++i) e[i] += o.e[i];
        return *this;
    }
    friend Mono operator+(Mono a, const Mono& b) { return a += b; }
    bool one() const
    {
        for (auto x : e)
            if (x) return false;
        return true;
    }
    Weight weight() const
    {
        Weight w;
        for (int i = 0; i < kMaxM; ++i) w.d[i] = int16_t(2 * e[i]);
        return w;
    }
    // Defined only for integral, non-negative w.
    static Mono from_weight(const Weight& w)
    {
        Mono r;
        for (int i = 0; i < kMaxM; ++i) r.e[i] = uint8_t(w.d[i] / 2);
        return r;
    }
};

std::string format_weight(const Weight& w, int m);
Weight parse_weight(const std::string& s, int m);
std::string format_mono(const Mono& v, int m, char letter = 'v');

// k-subsets of {lo..hi} as bitmasks, in increasing numeric order.
std::vector<uint32_t> subsets_of_size(int lo, int hi, int k);
std::vector<int> mask_elems(uint32_t mask);
std::string format_state(uint32_t mask);
uint32_t parse_state(const std::string& s);

// All weight vectors w with 0 <= w_i <= cap (doubled steps of one).
std::vector<Weight> weights_up_to(int m, int cap2);

}  // namespace pong

template <>
struct std::hash<pong::Weight> {
    size_t operator()(const pong::Weight& w) const noexcept
    {
        uint64_t h = 0;
        for (auto x : w.d) h = pong::mix64(h, uint16_t(x));
        return h;
    }
};
