#include "pong/homology.hpp"
#include "pong/quotient.hpp"

#include <unordered_map>

namespace pong {

size_t ChainComplex::dim(int deg) const
{
    if (deg < lo || deg > hi()) return 0;
    return n[deg - lo];
}

size_t ChainComplex::total_dim() const
{
    size_t s = 0;
    for (auto x : n) s += x;
    return s;
}

GF2Matrix ChainComplex::dense(int deg) const
{
    GF2Matrix M(dim(deg - 1), dim(deg));
    if (deg < lo || deg > hi()) return M;
    const auto& cols = d[deg - lo];
    for (size_t j = 0; j < cols.size(); ++j)
        for (uint32_t r : cols[j]) M.flip(r, j);
    return M;
}

bool ChainComplex::d_squared_zero() const
{
    std::vector<uint8_t> acc;
    for (size_t i = 2; i < n.size(); ++i) {
        acc.assign(n[i - 2], 0);
        for (const auto& col : d[i]) {
            std::vector<uint32_t> touched;
            for (uint32_t r : col)
                for (uint32_t q : d[i - 1][r]) {
                    acc[q] ^= 1;
                    touched.push_back(q);
                }
            for (uint32_t q : touched)
                if (acc[q]) return false;
        }
    }
    return true;
}

HomologySummary homology(const ChainComplex& c, bool check_d2)
{
    if (check_d2 && !c.d_squared_zero()) throw Error("boundary does not square to zero");
    HomologySummary h;
    std::vector<size_t> rank(c.n.size() + 1, 0); // rank[i]: rank of the boundary out of degree lo+i
    for (size_t i = 0; i < c.n.size(); ++i) {
        if (i == 0 || c.n[i] == 0 || c.n[i - 1] == 0) continue;
        rank[i] = sparse_rank(c.d[i]);
    }
    for (size_t i = 0; i < c.n.size(); ++i) {
        size_t dimh = c.n[i] - rank[i] - rank[i + 1];
        if (dimh) h.dims[c.lo + int(i)] = dimh;
        h.total += dimh;
        h.euler += ((c.lo + int(i)) % 2 == 0 ? 1 : -1) * long(c.n[i]);
    }
    return h;
}

std::string tag_name(PieceTag t)
{
    switch (t) {
    case PieceTag::P: return "P";
    case PieceTag::Q: return "Q";
    case PieceTag::PCone: return "P'";
    case PieceTag::QCone: return "Q'";
    }
    return "?";
}

std::optional<std::pair<int, uint32_t>> Piece::locate(const Cell& c) const
{
    auto it = where.find(c);
    if (it == where.end()) return std::nullopt;
    return it->second;
}

BitVec Piece::vector_of(const PongElement& a, int deg, uint8_t part) const
{
    BitVec v(dim(deg));
    for (auto& t : a.terms) {
        auto loc = locate({part, t});
        if (!loc || loc->first != deg) throw Error("element does not lie in the piece at this degree");
        v.flip(loc->second);
    }
    return v;
}

PongElement Piece::element_of(const BitVec& v, int deg) const
{
    PongElement e;
    e.m = m;
    e.k = k;
    if (deg < cx.lo || deg > cx.hi()) return e;
    for (size_t i : v.support()) {
        const Cell& c = cells[deg - cx.lo][i];
        if (c.part != 0) throw Error("cone source cell has no algebra element");
        e.terms.push_back(c.t);
    }
    e.normalize();
    return e;
}

static int count_below(uint32_t x, int i)
{
    int c = 0;
    for (int e : mask_elems(x))
        if (e < i) ++c;
    return c;
}

bool compatible_triple(int m, uint32_t x, uint32_t y, const Weight& w)
{
    for (int i = 1; i <= m; ++i)
        if ((w[i - 1] + count_below(x, i) + count_below(y, i)) & 1) return false;
    for (int i = m; i < kMaxM; ++i)
        if (w[i]) return false;
    return true;
}

PieceIndex::PieceIndex(PongAlgebra& A, const Weight& cap) : A_(A), cap_(cap)
{
    for (auto& g : enumerate_pong(A.m(), A.states(), cap)) {
        buckets_[{g.mask, g.image(), A.weight(g)}].push_back(g);
        ++count_;
    }
    omega_ = A.omega().terms;
}

const std::vector<PongData>& PieceIndex::bucket(uint32_t x, uint32_t y, const Weight& w) const
{
    static const std::vector<PongData> empty;
    if (!w.leq(cap_)) throw Error("weight exceeds the enumerated cap");
    auto it = buckets_.find({x, y, w});
    return it == buckets_.end() ? empty : it->second;
}

std::vector<Term> PieceIndex::p_basis(uint32_t x, uint32_t y, const Weight& w) const
{
    std::vector<Term> out;
    if (!w.nonneg()) return out;
    if (!w.leq(cap_)) throw Error("weight exceeds the enumerated cap");
    int m = A_.m();
    Weight cur = w;
    std::function<void(int, Mono)> rec = [&](int i, Mono v) {
        if (i == m) {
            for (auto& g : bucket(x, y, cur)) out.push_back({v, g});
            return;
        }
        Weight save = cur;
        for (int e = 0; cur[i] >= 0; ++e) {
            v.e[i] = uint8_t(e);
            rec(i + 1, v);
            cur[i] -= 2;
        }
        cur = save;
    };
    rec(0, Mono{});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Weight> PieceIndex::weights(uint32_t x, uint32_t y) const
{
    std::vector<Weight> out;
    for (auto& [key, v] : buckets_)
        if (std::get<0>(key) == x && std::get<1>(key) == y) out.push_back(std::get<2>(key));
    return out;
}

Piece PieceIndex::piece(PieceTag tag, uint32_t x, uint32_t y, const Weight& w, bool right_omega)
{
    Piece pc;
    pc.tag = tag;
    pc.m = A_.m();
    pc.k = A_.k();
    pc.x = x;
    pc.y = y;
    pc.w = w;
    const bool poly = tag == PieceTag::P || tag == PieceTag::PCone;
    const bool cone = tag == PieceTag::PCone || tag == PieceTag::QCone;
    const int shift = 2 * A_.k() + 1;

    auto basis_at = [&](const Weight& wt) {
        std::vector<Term> b;
        if (!wt.nonneg()) return b;
        if (poly) return p_basis(x, y, wt);
        for (auto& g : bucket(x, y, wt)) b.push_back({Mono{}, g});
        return b;
    };

    std::vector<std::pair<int, Cell>> all;
    for (auto& t : basis_at(w)) all.push_back({A_.cross(t.g), Cell{0, t}});
    if (cone)
        for (auto& t : basis_at(w - Weight::constant(pc.m, 2))) all.push_back({A_.cross(t.g) + shift, Cell{1, t}});
    if (all.empty()) return pc;

    int lo = all[0].first, hi = all[0].first;
    for (auto& [d, c] : all) lo = std::min(lo, d), hi = std::max(hi, d);
    lo = std::max(0, lo - 1);
    pc.cx.lo = lo;
    pc.cx.n.assign(hi - lo + 1, 0);
    pc.cx.d.assign(hi - lo + 1, {});
    pc.cells.assign(hi - lo + 1, {});
    std::sort(all.begin(), all.end());
    for (auto& [d, c] : all) {
        pc.where[c] = {d, uint32_t(pc.cells[d - lo].size())};
        pc.cells[d - lo].push_back(c);
        ++pc.cx.n[d - lo];
    }

    std::vector<const Term*> omega_side;
    for (auto& o : omega_)
        if ((right_omega ? o.g.image() : o.g.mask) == (right_omega ? y : x)) omega_side.push_back(&o);

    std::vector<Cell> image;
    for (size_t di = 0; di < pc.cells.size(); ++di) {
        int deg = lo + int(di);
        auto& cols = pc.cx.d[di];
        cols.resize(pc.cells[di].size());
        for (size_t j = 0; j < pc.cells[di].size(); ++j) {
            const Cell& c = pc.cells[di][j];
            image.clear();
            for (auto& s : A_.diff_gen(c.t.g)) {
                if (!poly && !s.v.one()) continue;
                image.push_back({c.part, {c.t.v + s.v, s.g}});
            }
            if (c.part == 1) {
                for (const Term* o : omega_side) {
                    auto p = right_omega ? A_.mul_gen(c.t.g, o->g) : A_.mul_gen(o->g, c.t.g);
                    if (!p) continue;
                    Mono v = p->v + o->v + c.t.v;
                    if (!poly && !v.one()) continue;
                    image.push_back({0, {v, p->g}});
                }
            }
            auto& col = cols[j];
            for (auto& ic : image) {
                auto it = pc.where.find(ic);
                if (it == pc.where.end() || it->second.first != deg - 1)
                    throw Error("boundary leaves the enumerated piece");
                col.push_back(it->second.second);
            }
            std::sort(col.begin(), col.end());
            size_t wpos = 0;
            for (size_t r = 0; r < col.size();) {
                size_t e = r;
                while (e < col.size() && col[e] == col[r]) ++e;
                if ((e - r) & 1) col[wpos++] = col[r];
                r = e;
            }
            col.resize(wpos);
        }
    }
    return pc;
}

bool interleaved(int k, uint32_t x, uint32_t y)
{
    auto ex = mask_elems(x), ey = mask_elems(y);
    if (int(ex.size()) != k || int(ey.size()) != k) return false;
    for (int s = 0; s + 1 < k; ++s)
        if (std::max(ex[s], ey[s]) >= std::min(ex[s + 1], ey[s + 1])) return false;
    return true;
}

std::optional<PongElement> canonical_cycle(PongAlgebra& A, uint32_t x, uint32_t y, const Weight& w)
{
    int m = A.m();
    if (!w.nonneg() || !compatible_triple(m, x, y, w)) return std::nullopt;
    int c = w.min2(m) / 2;
    if (w.max2(m) > 2 * c + 2) return std::nullopt;
    Weight target = w - Weight::constant(m, 2 * c);
    // direction in which strand s arrives at its terminal position
    auto arrives_right = [m](const PongData& g, int s) {
        long f = g.f[s];
        int p = fold(m, f).cls, q = fold(m, f > s ? f - 1 : f + 1).cls;
        return p == q ? p == 1 : p > q;
    };
    for (auto& g : enumerate_pong(m, std::vector<uint32_t>{x}, target)) {
        if (g.image() != y || !(A.weight(g) == target)) continue;
        bool ok = true;
        for (int s = 1; s < m && ok; ++s) {
            if (!g.has(s) || g.f[s] == s || !arrives_right(g, s)) continue;
            int end = fold(m, g.f[s]).cls;
            if (end != s && g.has(end) && g.f[end] > end) ok = false;
        }
        if (!ok) continue;
        PongElement z;
        z.m = m;
        z.k = A.k();
        z.terms.push_back({{}, g});
        if (project_to_q(A.differential(z)).zero()) return z;
    }
    return std::nullopt;
}

ModelComplex model_complex(int m, int k, uint32_t x, uint32_t y)
{
    if (!interleaved(k, x, y)) throw Error("idempotents are not interleaved");
    ModelComplex mc;
    mc.m = m;
    mc.k = k;
    mc.x = x;
    mc.y = y;
    auto ex = mask_elems(x), ey = mask_elems(y);
    ex.insert(ex.begin(), 0);
    ey.insert(ey.begin(), 0);
    ex.push_back(m);
    ey.push_back(m);
    for (int s = 1; s <= k + 1; ++s) {
        Mono v;
        for (int i = std::max(ex[s - 1], ey[s - 1]) + 1; i <= std::min(ex[s], ey[s]); ++i) v.e[i - 1] = 1;
        mc.V.push_back(v);
    }
    // the xi = 0 cycle carries weight 1/2 exactly where the parity forces it
    for (int i = 1; i <= m; ++i)
        mc.base[i - 1] = int16_t((count_below(x, i) + count_below(y, i)) & 1);
    return mc;
}

HomologySummary ModelComplex::homology_at(const Weight& w) const
{
    // basis: (xi, a) with base + sum xi_s wt(V_s) + 2a = w
    const int n = k + 1;
    std::vector<std::vector<std::pair<uint32_t, Mono>>> cells(n + 1);
    std::map<std::pair<uint32_t, Mono>, uint32_t> index;
    for (uint32_t xi = 0; xi < (1u << n); ++xi) {
        Weight r = w - base;
        for (int s = 0; s < n; ++s)
            if ((xi >> s) & 1u) r -= V[s].weight();
        if (!r.nonneg() || !r.integral()) continue;
        bool extra = false;
        for (int i = m; i < kMaxM; ++i) extra |= r[i] != 0;
        if (extra) continue;
        Mono a = Mono::from_weight(r);
        int deg = __builtin_popcount(xi);
        index[{xi, a}] = uint32_t(cells[deg].size());
        cells[deg].push_back({xi, a});
    }
    ChainComplex cx;
    cx.lo = 0;
    for (auto& c : cells) cx.n.push_back(uint32_t(c.size()));
    cx.d.resize(n + 1);
    for (int deg = 1; deg <= n; ++deg) {
        for (auto& [xi, a] : cells[deg]) {
            std::vector<uint32_t> col;
            for (int s = 0; s < n; ++s) {
                if (!((xi >> s) & 1u)) continue;
                col.push_back(index.at({xi & ~(1u << s), a + V[s]}));
            }
            std::sort(col.begin(), col.end());
            cx.d[deg].push_back(col);
        }
    }
    return homology(cx);
}

size_t ModelComplex::quotient_dim(const Weight& w) const
{
    Weight r = w - base;
    if (!r.nonneg() || !r.integral()) return 0;
    for (int i = m; i < kMaxM; ++i)
        if (r[i]) return 0;
    Mono a = Mono::from_weight(r);
    for (auto& v : V) {
        bool divides = true;
        for (int i = 0; i < m; ++i)
            if (v.e[i] > a.e[i]) divides = false;
        if (divides) return 0;
    }
    return 1;
}

bool is_excessive(const PongData& g, int p)
{
    const int m = g.m;
    const long P = 2 * m - 2;
    int count = 0;
    for (int s = 1; s < m; ++s) {
        if (!g.has(s)) continue;
        long n = g.f[s];
        bool in = false;
        if (s == p && n == s) in = true;        // stationary
        if (s == p && n > s) in = true;         // starts at p moving right
        Fold fo = fold(m, n);
        if (n != s && fo.cls == p) {
            // arrives at p moving right in the folded picture
            bool right_lift = n > s;
            if (right_lift != fo.gamma.reflect) in = true;
        }
        // interior lifts of p crossed in the folded left-to-right direction
        long lo = std::min<long>(s, n), hi = std::max<long>(s, n);
        for (long t = (lo - p) / P - 2; t <= (hi - p) / P + 2 && !in; ++t) {
            long q1 = p + P * t, q2 = 1 - p + P * t;
            if (q1 > lo && q1 < hi && n > s) in = true;
            if (q2 > lo && q2 < hi && n < s) in = true;
        }
        if (in) ++count;
    }
    return count >= 2;
}

size_t clg_t_dim(const BorderedAlgebra& C, uint32_t x, uint32_t y, const Weight& w)
{
    size_t n = 0;
    for (int s = 0;; ++s) {
        Weight r = w - Weight::constant(C.m(), 2 * s);
        if (!r.nonneg()) break;
        if (C.pure(x, y, r)) ++n;
    }
    return n;
}

}  // namespace pong
