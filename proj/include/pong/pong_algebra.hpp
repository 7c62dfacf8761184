#pragma once

#include "pong/strands.hpp"

#include <optional>
#include <unordered_map>

namespace pong {

struct Term {
    Mono v;
    PongData g;
    friend bool operator==(const Term&, const Term&) = default;
    friend auto operator<=>(const Term&, const Term&) = default;
};

// Finite GF(2) sum of v^a * g. Terms are kept sorted with no repeats.
struct PongElement {
    int m = 2;
    int k = 0;
    std::vector<Term> terms;

    bool zero() const { return terms.empty(); }
    void normalize();
    PongElement& operator+=(const PongElement& o);
    friend PongElement operator+(PongElement a, const PongElement& b) { return a += b; }
    friend bool operator==(const PongElement& a, const PongElement& b) { return a.terms == b.terms; }

    static PongElement of(const PongData& g, Mono v = {});
};

std::string format_element(const PongElement& a);

struct Gradings {
    int cross;
    Weight weight;
    int ngr; // cross - 2 * sum(weight)
};

enum class AtomKind { X, R, L };

struct AtomicDescriptor {
    AtomKind kind = AtomKind::X;
    int a = 0; // X: i; R: i (strand i -> j); L: j (strand j -> i)
    int b = 1; // X: j; R: j; L: i
    bool calligraphic = false;
    std::optional<uint32_t> idem; // left idempotent restriction
};

std::string format_descriptor(const AtomicDescriptor& d);
AtomicDescriptor parse_descriptor(const std::string& s);

struct GenInfo {
    Weight w;
    int cross = 0;
    std::vector<Crossing> cr;
    bool have_d = false;
    std::vector<Term> d;  // mu_1 of the generator
};

class PongAlgebra {
public:
    PongAlgebra(int m, int k);

    int m() const { return m_; }
    int k() const { return k_; }
    const std::vector<uint32_t>& states() const { return states_; }

    const GenInfo& info(const PongData& g);
    Weight weight(const PongData& g) { return info(g).w; }
    int cross(const PongData& g) { return info(g).cross; }

    const std::vector<Term>& diff_gen(const PongData& g);
    std::optional<Term> mul_gen(const PongData& a, const PongData& b);

    PongElement differential(const PongElement& a);
    PongElement multiply(const PongElement& a, const PongElement& b);
    Gradings gradings(const PongElement& a);

    PongElement zero() const;
    PongElement idempotent(uint32_t x) const;
    PongElement unit() const; // sum of all idempotents
    PongElement mono_times(const Mono& v, const PongElement& a) const;
    PongElement restrict_left(uint32_t x, const PongElement& a) const;
    PongElement restrict_right(uint32_t y, const PongElement& a) const;

    PongElement atomic(const AtomicDescriptor& d) const;
    // U_j: v_j times the idempotents x with j-1 in x or j in x; the identity d X_{j-1,j} = U_j holds where X_{j-1,j} is nonzero.
    PongElement U(int j) const;
    PongElement omega();

    // Pure atomic generators (2 Totweight - cross = 1), sorted.
    const std::vector<PongData>& atomics();
    bool is_atomic(const PongData& g);
    std::string atomic_label(const PongData& g);

    // Left-to-right atomic factors whose product is exactly g.
    std::vector<PongData> factor_atomic(const PongData& g);

    void clear_cache() { cache_.clear(); }
    size_t cache_size() const { return cache_.size(); }

private:
    bool admissible(const AtomicDescriptor& d, const PongData& g) const;

    int m_, k_;
    std::vector<uint32_t> states_;
    std::unordered_map<PongData, GenInfo> cache_;
    std::vector<PongData> atomics_;
    bool have_atomics_ = false;
};

// Atomic length 2 Totweight - cross of a pure generator.
inline int atomic_length(PongAlgebra& A, const PongData& g) { return A.weight(g).total2() - A.cross(g); }

}  // namespace pong
