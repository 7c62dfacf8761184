#include "pong/verify.hpp"
#include "pong/ainfty.hpp"
#include "pong/koszul.hpp"
#include "pong/quotient.hpp"

#include <random>
#include <set>

namespace pong {

DgaReport verify_dga(int m, int k, int cap2, size_t triples, uint64_t seed)
{
    DgaReport rep;
    rep.m = m;
    rep.k = k;
    PongAlgebra A(m, k);
    Weight cap = Weight::constant(m, cap2);
    auto gens = enumerate_pong(m, k, cap);
    rep.generators = gens.size();
    std::map<uint32_t, std::vector<size_t>> by_mask;
    for (size_t i = 0; i < gens.size(); ++i) by_mask[gens[i].mask].push_back(i);

    auto fail = [&](const std::string& s) {
        if (rep.failures.size() < 20) rep.failures.push_back(s);
    };
    std::vector<PongElement> el, del;
    for (auto& g : gens) {
        el.push_back(PongElement::of(g));
        del.push_back(A.differential(el.back()));
        ++rep.d2_checked;
        if (!A.differential(del.back()).zero()) fail("d^2 " + format_pong(g));
    }
    for (size_t i = 0; i < gens.size(); ++i) {
        Weight wa = A.weight(gens[i]);
        auto it = by_mask.find(gens[i].image());
        if (it == by_mask.end()) continue;
        for (size_t j : it->second) {
            if (!(wa + A.weight(gens[j])).leq(cap)) continue;
            ++rep.leibniz_checked;
            PongElement ab = A.multiply(el[i], el[j]);
            PongElement lhs = A.differential(ab);
            PongElement rhs = A.multiply(del[i], el[j]) + A.multiply(el[i], del[j]);
            if (!(lhs == rhs)) fail("Leibniz " + format_pong(gens[i]) + " . " + format_pong(gens[j]));
        }
    }
    std::mt19937_64 rng(seed);
    auto pick = [&](const std::vector<size_t>& v) { return v[size_t(rng() % v.size())]; };
    size_t attempts = 0;
    while (rep.assoc_checked < triples && attempts < triples * 50 && !gens.empty()) {
        ++attempts;
        size_t a = size_t(rng() % gens.size());
        auto ib = by_mask.find(gens[a].image());
        if (ib == by_mask.end()) continue;
        size_t b = pick(ib->second);
        auto ic = by_mask.find(gens[b].image());
        if (ic == by_mask.end()) continue;
        size_t c = pick(ic->second);
        ++rep.assoc_checked;
        PongElement l = A.multiply(A.multiply(el[a], el[b]), el[c]);
        PongElement r = A.multiply(el[a], A.multiply(el[b], el[c]));
        if (!(l == r)) fail("assoc " + format_pong(gens[a]) + " " + format_pong(gens[b]) + " " + format_pong(gens[c]));
    }
    return rep;
}

AtomsReport verify_atoms(int m, int k, int cap2)
{
    AtomsReport rep;
    rep.m = m;
    rep.k = k;
    PongAlgebra A(m, k);
    Weight cap = Weight::constant(m, cap2);

    std::set<PongData> described;
    auto add = [&](AtomKind kind, int a, int b) {
        AtomicDescriptor d;
        d.kind = kind;
        d.a = a;
        d.b = b;
        for (auto& t : A.atomic(d).terms)
            if (t.v.one()) described.insert(t.g);
    };
    for (int i = 0; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            if (i > 0 || j < m) add(AtomKind::X, i, j);
    for (int i = 1; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            add(AtomKind::R, i, j);
            add(AtomKind::L, j, i);
        }

    for (auto& g : enumerate_pong(m, k, cap)) {
        if (g.idempotent()) continue;
        ++rep.generators;
        int len = atomic_length(A, g);
        rep.max_length = std::max(rep.max_length, len);
        if (len < 1) {
            rep.bound_ok = false;
            rep.failures.push_back("length < 1: " + format_pong(g));
        }
        bool is_desc = described.count(g) > 0;
        if ((len == 1) != is_desc) {
            rep.atomic_set_ok = false;
            rep.failures.push_back("atomic set: " + format_pong(g));
        }
        if (len == 1) ++rep.atomics;
        auto f = A.factor_atomic(g);
        PongData cur = f.empty() ? g : f.back();
        bool good = int(f.size()) == len;
        for (size_t i = f.size(); i-- > 1 && good;) {
            auto p = A.mul_gen(f[i - 1], cur);
            if (!p || !p->v.one()) good = false;
            else cur = p->g;
        }
        for (auto& a : f)
            if (atomic_length(A, a) != 1) good = false;
        if (!(good && cur == g)) {
            rep.factor_ok = false;
            rep.failures.push_back("factor: " + format_pong(g));
        } else {
            ++rep.factored;
        }
    }
    return rep;
}

DisplayedDiffReport verify_displayed_differentials()
{
    DisplayedDiffReport rep;
    {
        PongAlgebra A(4, 2);
        PongData g = make_pong(4, {{1, -2}, {2, 1}});
        Mono v1, v2;
        v1.e[0] = 1;
        v2.e[1] = 1;
        PongElement want = PongElement::of(make_pong(4, {{1, 3}, {2, 1}}), v1) + PongElement::of(make_pong(4, {{1, 0}, {2, 3}}), v2);
        PongElement got = A.differential(PongElement::of(g));
        rep.first = format_element(got);
        rep.first_expected = format_element(want);
        rep.first_ok = got == want;
        Weight w = A.weight(g);
        rep.first_weight = format_weight(w, 4);
        rep.first_cross = A.cross(g);
        Weight cap;
        cap[0] = 2, cap[1] = 2, cap[2] = 1, cap[3] = 0;
        rep.caption_ok = w == cap && rep.first_cross == 2;
    }
    {
        PongData bad;
        try {
            bad = make_pong(4, {{1, 3}, {2, -3}});
            rep.second_invalid_at_m4 = !valid(bad);
        } catch (const Error&) {
            rep.second_invalid_at_m4 = true;
        }
        PongAlgebra A(5, 2);
        Mono v2;
        v2.e[1] = 1;
        PongElement want = PongElement::of(make_pong(5, {{1, 4}, {2, -2}})) + PongElement::of(make_pong(5, {{1, -3}, {2, 3}}), v2);
        PongElement got = A.differential(PongElement::of(make_pong(5, {{1, 3}, {2, -3}})));
        rep.second = format_element(got);
        rep.second_expected = format_element(want);
        rep.second_ok = got == want;
    }
    return rep;
}

bool condition_interleaved(int k, uint32_t x, uint32_t y) { return interleaved(k, x, y); }

bool condition_weight_le_one(int m, const Weight& w) { return w.nonneg() && w.max2(m) <= 2; }

bool constant_on_ranges(int m, int k, uint32_t x, uint32_t y, const Weight& w)
{
    auto ex = mask_elems(x), ey = mask_elems(y);
    if (int(ex.size()) != k || int(ey.size()) != k) return false;
    ex.insert(ex.begin(), 0);
    ey.insert(ey.begin(), 0);
    ex.push_back(m);
    ey.push_back(m);
    for (int s = 1; s <= k + 1; ++s) {
        int lo = std::max(ex[s - 1], ey[s - 1]) + 1, hi = std::min(ex[s], ey[s]);
        for (int i = lo + 1; i <= hi; ++i)
            if (w[i - 1] != w[lo - 1]) return false;
    }
    return true;
}

HqReport verify_theorem_hq(int m, int k, int cap2)
{
    HqReport rep;
    rep.m = m;
    rep.k = k;
    rep.cap2 = cap2;
    PongAlgebra A(m, k);
    PieceIndex idx(A, Weight::constant(m, cap2));
    for (uint32_t x : A.states())
        for (uint32_t y : A.states())
            for (auto& w : weights_up_to(m, cap2)) {
                if (!compatible_triple(m, x, y, w)) continue;
                ++rep.triples;
                Piece pc = cone_piece(idx, false, x, y, w);
                size_t d = homology(pc.cx).total;
                rep.max_dim = std::max(rep.max_dim, d);
                if (d) ++rep.nonzero;
                bool lit = condition_interleaved(k, x, y) && condition_weight_le_one(m, w);
                bool ref = lit && constant_on_ranges(m, k, x, y, w);
                if ((d == 1) != lit || d > 1) rep.literal_failures.push_back({x, y, w, d});
                if ((d == 1) != ref || d > 1) rep.refined_failures.push_back({x, y, w, d});
            }
    return rep;
}

uint32_t complement_state(int m, uint32_t x)
{
    uint32_t full = 0;
    for (int i = 1; i < m; ++i) full |= 1u << i;
    return full & ~x;
}

HpReport verify_theorem_hp(int m, int k, int cap2)
{
    HpReport rep;
    rep.m = m;
    rep.k = k;
    rep.cap2 = cap2;
    PongAlgebra A(m, k);
    BorderedAlgebra C(m, m - k - 1);
    PieceIndex idx(A, Weight::constant(m, cap2));
    for (uint32_t x : A.states())
        for (uint32_t y : A.states()) {
            bool inter = interleaved(k, x, y);
            std::optional<ModelComplex> mc;
            if (inter) mc = model_complex(m, k, x, y);
            for (auto& w : weights_up_to(m, cap2)) {
                if (!compatible_triple(m, x, y, w)) continue;
                ++rep.triples;
                size_t hp = homology(idx.piece(PieceTag::P, x, y, w).cx).total;
                size_t want = clg_t_dim(C, complement_state(m, x), complement_state(m, y), w);
                if (hp != want) {
                    ++rep.dim_mismatch;
                    if (rep.notes.size() < 10)
                        rep.notes.push_back("H(P) " + format_state(x) + " " + format_state(y) + " " + format_weight(w, m));
                }
                size_t left = homology(cone_piece(idx, true, x, y, w, false).cx).total;
                size_t right = homology(cone_piece(idx, true, x, y, w, true).cx).total;
                if (left != right) rep.cone_sides_agree = false;
                size_t model = mc ? mc->quotient_dim(w) : 0;
                if (left != model) {
                    ++rep.model_mismatch;
                    if (rep.notes.size() < 10)
                        rep.notes.push_back("H(P') " + format_state(x) + " " + format_state(y) + " " + format_weight(w, m));
                }
                if (mc && mc->homology_at(w).total != model) ++rep.model_internal;
            }
        }
    return rep;
}

size_t hilbert_count(int m, const Weight& w)
{
    if (!w.nonneg() || !w.integral()) return 0;
    size_t n = 0;
    for (int c = 0; 2 * c <= w.min2(m); ++c) {
        bool ok = true;
        for (int i = 0; i < m; ++i)
            if (w[i] - 2 * c > 2) ok = false;
        if (ok) ++n;
    }
    return n;
}

QmReport verify_qm_special(int m, int cap2)
{
    QmReport rep;
    rep.m = m;
    rep.cap2 = cap2;
    PongAlgebra A(m, m - 1);
    TransferEngine T(A, true, Weight::constant(m, cap2));
    uint32_t x = A.states().at(0);
    std::vector<PongElement> X(static_cast<size_t>(m + 1));
    for (int i = 1; i <= m; ++i) X[size_t(i)] = parse_input_token(A, "X" + std::to_string(i), true);
    PongElement om = project_to_q(A.omega());

    for (auto& w : weights_up_to(m, cap2)) {
        if (!compatible_triple(m, x, x, w)) continue;
        ++rep.weights;
        size_t h = homology(T.piece(x, x, w).cx).total;
        rep.series[w.total2()] += h;
        size_t want = hilbert_count(m, w);
        if (h != want) ++rep.hilbert_mismatch;
        if (!want) continue;
        // X_eps Omega^c is a nonzero class for every (eps, c) with eps + c = w
        for (int c = 0; 2 * c <= w.min2(m); ++c) {
            bool ok = true;
            for (int i = 0; i < m; ++i)
                if (w[i] - 2 * c > 2) ok = false;
            if (!ok) continue;
            PongElement e = A.idempotent(x);
            for (int i = 1; i <= m; ++i)
                if (w[i - 1] - 2 * c == 2) e = T.multiply(e, X[size_t(i)]);
            for (int j = 0; j < c; ++j) e = T.multiply(e, om);
            if (e.zero() || T.class_of(e).zero()) ++rep.monomial_failures;
        }
    }
    for (int i = 1; i <= m; ++i) {
        PongElement sq = T.multiply(X[size_t(i)], X[size_t(i)]);
        if (!sq.zero() && !T.class_of(sq).zero()) rep.squares_zero = false;
        for (int j = i + 1; j <= m; ++j) {
            PongElement c = T.multiply(X[size_t(i)], X[size_t(j)]) + T.multiply(X[size_t(j)], X[size_t(i)]);
            if (!c.zero() && !T.class_of(c).zero()) rep.commute = false;
            if (m == 2) {
                PongElement e = c + om;
                rep.commutator_omega = e.zero() || T.class_of(e).zero();
            }
            if (j == i + 1 && !(i == 1 && j == m)) {
                PongElement b = parse_input_token(A, "X_{" + std::to_string(i - 1) + "," + std::to_string(i + 1) + "}", true);
                if (!(T.differential(b) == c)) rep.adjacent_boundary = false;
            }
        }
    }
    return rep;
}

KoszulExample koszul_example_21()
{
    KoszulExample ex;
    PongAlgebra A(2, 1);
    BorderedAlgebra C(2, 1);
    Cobar cb(A, C, Weight::constant(2, 2));
    uint32_t x = C.states().at(0);
    for (int i = 1; i <= 2; ++i) {
        ClgPure u{x, x, Weight::unit(i)};
        PongElement got = cb.phi({u});
        PongElement want = parse_input_token(A, "X_{" + std::to_string(i - 1) + "," + std::to_string(i) + "}", true);
        (i == 1 ? ex.u1 : ex.u2) = format_element(got);
        (i == 1 ? ex.u1_ok : ex.u2_ok) = !got.zero() && got == want;
    }
    return ex;
}

}  // namespace pong
