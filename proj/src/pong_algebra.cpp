#include "pong/pong_algebra.hpp"

#include <map>
#include <regex>

namespace pong {

void PongElement::normalize()
{
    std::sort(terms.begin(), terms.end());
    size_t w = 0;
    for (size_t r = 0; r < terms.size();) {
        size_t e = r;
        while (e < terms.size() && terms[e] == terms[r]) ++e;
        if ((e - r) & 1) terms[w++] = terms[r];
        r = e;
    }
    terms.resize(w);
}

PongElement& PongElement::operator+=(const PongElement& o)
{
    terms.insert(terms.end(), o.terms.begin(), o.terms.end());
    normalize();
    return *this;
}

PongElement PongElement::of(const PongData& g, Mono v)
{
    PongElement e;
    e.m = g.m;
    e.k = g.k();
    e.terms.push_back({v, g});
    return e;
}

std::string format_element(const PongElement& a)
{
    if (a.zero()) return "0";
    std::string out;
    for (auto& t : a.terms) {
        if (!out.empty()) out += " + ";
        if (!t.v.one()) out += format_mono(t.v, a.m) + "*";
        out += format_pong(t.g);
    }
    return out;
}

std::string format_descriptor(const AtomicDescriptor& d)
{
    std::string s;
    if (d.calligraphic) s += "c";
    s += d.kind == AtomKind::X ? "X" : d.kind == AtomKind::R ? "R" : "L";
    s += "_{" + std::to_string(d.a) + "," + std::to_string(d.b) + "}";
    if (d.idem) s = "I" + format_state(*d.idem) + "*" + s;
    return s;
}

AtomicDescriptor parse_descriptor(const std::string& text)
{
    static const std::regex re(R"(^\s*(c?)([XRL])_?\{?(\d+),(\d+)\}?\s*$)");
    std::smatch mt;
    if (!std::regex_match(text, mt, re)) throw Error("cannot parse atomic descriptor: " + text);
    AtomicDescriptor d;
    d.calligraphic = !mt[1].str().empty();
    char k = mt[2].str()[0];
    d.kind = k == 'X' ? AtomKind::X : k == 'R' ? AtomKind::R : AtomKind::L;
    d.a = std::stoi(mt[3]);
    d.b = std::stoi(mt[4]);
    return d;
}

PongAlgebra::PongAlgebra(int m, int k) : m_(m), k_(k)
{
    if (m < 2 || m > kMaxM) throw Error("m out of range");
    if (k < 0 || k > m - 1) throw Error("k out of range");
    states_ = subsets_of_size(1, m - 1, k);
}

const GenInfo& PongAlgebra::info(const PongData& g)
{
    auto it = cache_.find(g);
    if (it != cache_.end()) return it->second;
    GenInfo gi;
    gi.w = local_multiplicities(g);
    gi.cr = crossings(g);
    gi.cross = int(gi.cr.size());
    return cache_.emplace(g, std::move(gi)).first->second;
}

const std::vector<Term>& PongAlgebra::diff_gen(const PongData& g)
{
    {
        const GenInfo& gi = info(g);
        if (gi.have_d) return gi.d;
    }
    std::vector<Crossing> cr = info(g).cr;
    Weight w = info(g).w;
    int c = info(g).cross;
    std::vector<Term> out;
    for (auto& x : cr) {
        PongData r = resolve(g, x);
        const GenInfo& ri = info(r);
        if (ri.cross != c - 1) continue;
        Weight dw = w - ri.w;
        if (!dw.nonneg() || !dw.integral()) throw Error("resolution weight drop is not a non-negative integer vector");
        out.push_back({Mono::from_weight(dw), r});
    }
    PongElement tmp;
    tmp.terms = std::move(out);
    tmp.normalize();
    GenInfo& gi = cache_.find(g)->second;
    gi.d = std::move(tmp.terms);
    gi.have_d = true;
    return gi.d;
}

std::optional<Term> PongAlgebra::mul_gen(const PongData& a, const PongData& b)
{
    auto c = compose(a, b);
    if (!c) return std::nullopt;
    int ca = cross(a), cb = cross(b);
    Weight wa = weight(a), wb = weight(b);
    const GenInfo& ci = info(*c);
    if (ci.cross != ca + cb) return std::nullopt;
    Weight dw = wa + wb - ci.w;
    if (!dw.nonneg() || !dw.integral()) throw Error("composition weight defect is not a non-negative integer vector");
    return Term{Mono::from_weight(dw), *c};
}

PongElement PongAlgebra::zero() const
{
    PongElement e;
    e.m = m_;
    e.k = k_;
    return e;
}

PongElement PongAlgebra::differential(const PongElement& a)
{
    PongElement out = zero();
    for (auto& t : a.terms)
        for (auto& s : diff_gen(t.g)) out.terms.push_back({t.v + s.v, s.g});
    out.normalize();
    return out;
}

PongElement PongAlgebra::multiply(const PongElement& a, const PongElement& b)
{
    if (a.m != b.m || a.k != b.k || a.m != m_ || a.k != k_) throw Error("ambient mismatch");
    PongElement out = zero();
    std::map<uint32_t, std::vector<const Term*>> by_left;
    for (auto& t : b.terms) by_left[t.g.mask].push_back(&t);
    for (auto& s : a.terms) {
        auto it = by_left.find(s.g.image());
        if (it == by_left.end()) continue;
        for (const Term* t : it->second) {
            auto p = mul_gen(s.g, t->g);
            if (p) out.terms.push_back({p->v + s.v + t->v, p->g});
        }
    }
    out.normalize();
    return out;
}

Gradings PongAlgebra::gradings(const PongElement& a)
{
    if (a.zero()) throw Error("not homogeneous");
    std::optional<Gradings> g;
    for (auto& t : a.terms) {
        Gradings h;
        h.cross = cross(t.g);
        h.weight = weight(t.g) + t.v.weight();
        h.ngr = h.cross - h.weight.total2();
        if (g && (g->cross != h.cross || !(g->weight == h.weight))) throw Error("not homogeneous");
        g = h;
    }
    return *g;
}

PongElement PongAlgebra::idempotent(uint32_t x) const
{
    PongElement e = zero();
    if (__builtin_popcount(x) != k_) throw Error("idempotent state has the wrong size");
    e.terms.push_back({{}, PongData::idem(m_, x)});
    return e;
}

PongElement PongAlgebra::unit() const
{
    PongElement e = zero();
    for (uint32_t x : states_) e.terms.push_back({{}, PongData::idem(m_, x)});
    e.normalize();
    return e;
}

PongElement PongAlgebra::mono_times(const Mono& v, const PongElement& a) const
{
    PongElement e = a;
    for (auto& t : e.terms) t.v += v;
    e.normalize();
    return e;
}

PongElement PongAlgebra::restrict_left(uint32_t x, const PongElement& a) const
{
    PongElement e = zero();
    for (auto& t : a.terms)
        if (t.g.mask == x) e.terms.push_back(t);
    return e;
}

PongElement PongAlgebra::restrict_right(uint32_t y, const PongElement& a) const
{
    PongElement e = zero();
    for (auto& t : a.terms)
        if (t.g.image() == y) e.terms.push_back(t);
    return e;
}

bool PongAlgebra::admissible(const AtomicDescriptor& d, const PongData& g) const
{
    const int m = m_;
    int moved = 0;
    for (int s = 1; s < m; ++s)
        if (g.has(s) && g.f[s] != s) ++moved;
    auto occupied_between = [&](int lo, int hi) {
        for (int l = lo + 1; l < hi; ++l)
            if (!g.has(l)) return false;
        return true;
    };
    switch (d.kind) {
    case AtomKind::X: {
        int i = d.a, j = d.b;
        if (i == 0) {
            if (moved != 1 || !g.has(j) || g.f[j] != 1 - j) return false;
            return d.calligraphic || occupied_between(0, j);
        }
        if (j == m) {
            if (moved != 1 || !g.has(i) || g.f[i] != 2 * m - 1 - i) return false;
            return d.calligraphic || occupied_between(i, m);
        }
        if (moved != 2 || !g.has(i) || !g.has(j) || g.f[i] != j || g.f[j] != i) return false;
        return d.calligraphic || occupied_between(i, j);
    }
    case AtomKind::R: {
        int i = d.a, j = d.b;
        if (moved != 1 || !g.has(i) || g.f[i] != j) return false;
        return d.calligraphic || occupied_between(i, j);
    }
    case AtomKind::L: {
        int j = d.a, i = d.b;
        if (moved != 1 || !g.has(j) || g.f[j] != i) return false;
        return d.calligraphic || occupied_between(i, j);
    }
    }
    return false;
}

PongElement PongAlgebra::atomic(const AtomicDescriptor& d) const
{
    const int m = m_;
    switch (d.kind) {
    case AtomKind::X:
        if (!(0 <= d.a && d.a < d.b && d.b <= m) || (d.a == 0 && d.b == m)) throw Error("X endpoints out of range");
        break;
    case AtomKind::R:
        if (!(1 <= d.a && d.a < d.b && d.b <= m - 1)) throw Error("R endpoints out of range");
        break;
    case AtomKind::L:
        if (!(1 <= d.b && d.b < d.a && d.a <= m - 1)) throw Error("L endpoints out of range");
        break;
    }
    PongElement e = zero();
    for (uint32_t x : states_) {
        if (d.idem && *d.idem != x) continue;
        PongData g = PongData::idem(m, x);
        int i = d.a, j = d.b;
        switch (d.kind) {
        case AtomKind::X:
            if (i == 0) {
                if (!g.has(j)) continue;
                g.f[j] = int16_t(1 - j);
            } else if (j == m) {
                if (!g.has(i)) continue;
                g.f[i] = int16_t(2 * m - 1 - i);
            } else {
                if (!g.has(i) || !g.has(j)) continue;
                g.f[i] = int16_t(j);
                g.f[j] = int16_t(i);
            }
            break;
        case AtomKind::R:
            if (!g.has(i) || g.has(j)) continue;
            g.f[i] = int16_t(j);
            break;
        case AtomKind::L: // strand from a down to b
            if (!g.has(i) || g.has(j)) continue;
            g.f[i] = int16_t(j);
            break;
        }
        if (!valid(g) || !admissible(d, g)) continue;
        e.terms.push_back({{}, g});
    }
    e.normalize();
    return e;
}

PongElement PongAlgebra::U(int j) const
{
    if (j < 1 || j > m_) throw Error("U index out of range");
    PongElement e = zero();
    Mono v;
    v.e[j - 1] = 1;
    for (uint32_t x : states_)
        if (((x >> (j - 1)) & 1u) || ((x >> j) & 1u)) e.terms.push_back({v, PongData::idem(m_, x)});
    e.normalize();
    return e;
}

PongElement PongAlgebra::omega()
{
    PongElement out = zero();
    if (k_ == 0) {
        // no strands: the weight-(1,...,1) central element is v_1...v_m
        Mono v;
        for (int i = 0; i < m_; ++i) v.e[i] = 1;
        out.terms.push_back({v, PongData::idem(m_, 0)});
        return out;
    }
    for (int i = 1; i < m_; ++i) {
        PongElement a = atomic({AtomKind::X, 0, i, true, {}});
        PongElement b = atomic({AtomKind::X, i, m_, true, {}});
        out += multiply(a, b);
        out += multiply(b, a);
    }
    return out;
}

const std::vector<PongData>& PongAlgebra::atomics()
{
    if (have_atomics_) return atomics_;
    // An atomic generator has total weight at most m - 1 and no component above 1.
    auto gens = enumerate_pong(m_, states_, Weight::constant(m_, 2));
    for (auto& g : gens)
        if (!g.idempotent() && atomic_length(*this, g) == 1) atomics_.push_back(g);
    have_atomics_ = true;
    return atomics_;
}

bool PongAlgebra::is_atomic(const PongData& g) { return !g.idempotent() && atomic_length(*this, g) == 1; }

std::string PongAlgebra::atomic_label(const PongData& g)
{
    const int m = m_;
    std::vector<int> mv;
    for (int s = 1; s < m; ++s)
        if (g.has(s) && g.f[s] != s) mv.push_back(s);
    std::string base;
    AtomicDescriptor d;
    if (mv.size() == 1) {
        int s = mv[0];
        long t = g.f[s];
        if (t == 1 - s)
            d = {AtomKind::X, 0, s, false, {}};
        else if (t == 2 * m - 1 - s)
            d = {AtomKind::X, s, m, false, {}};
        else if (t > s && t < m)
            d = {AtomKind::R, s, int(t), false, {}};
        else if (t < s && t > 0)
            d = {AtomKind::L, s, int(t), false, {}};
        else
            return "?" + format_pong(g);
    } else if (mv.size() == 2 && g.f[mv[0]] == mv[1] && g.f[mv[1]] == mv[0]) {
        d = {AtomKind::X, mv[0], mv[1], false, {}};
    } else {
        return "?" + format_pong(g);
    }
    if (!admissible(d, g)) d.calligraphic = true;
    d.idem = g.mask;
    return format_descriptor(d);
}

std::vector<PongData> PongAlgebra::factor_atomic(const PongData& g)
{
    std::vector<PongData> out;
    PongData cur = g;
    const int m = m_;
    while (!cur.idempotent()) {
        int len = atomic_length(*this, cur);
        if (len == 1) {
            out.push_back(cur);
            return out;
        }
        bool found = false;
        for (const PongData& a : atomics()) {
            if (a.mask != cur.mask) continue;
            // b with a * b = cur: b(t) = gamma^{-1} cur(s) where a(s) = gamma t.
            PongData b;
            b.m = uint8_t(m);
            b.mask = uint8_t(a.image());
            for (int s = 1; s < m; ++s) {
                if (!a.has(s)) continue;
                Fold fo = fold(m, a.f[s]);
                b.f[fo.cls] = int16_t(fo.gamma.inverse().apply(m, cur.f[s]));
            }
            if (!valid(b)) continue;
            auto p = mul_gen(a, b);
            if (!p || !p->v.one() || !(p->g == cur)) continue;
            out.push_back(a);
            cur = b;
            found = true;
            break;
        }
        if (!found) throw Error("no atomic left factor found for " + format_pong(cur));
    }
    return out;
}

}  // namespace pong
