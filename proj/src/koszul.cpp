#include "pong/koszul.hpp"
#include "pong/quotient.hpp"

namespace pong {

std::string format_word(const BorderedAlgebra& C, const CobarWord& w)
{
    std::string s;
    for (auto& a : w) {
        if (!s.empty()) s += " (x) ";
        s += "[" + C.format(a) + "]*";
    }
    return s.empty() ? "1" : s;
}

Cobar::Cobar(PongAlgebra& A, const BorderedAlgebra& C, const Weight& cap) : A_(A), C_(C), cap_(cap)
{
    for (auto& a : C.enumerate(cap, false)) letters_[a.x].push_back(a);
    for (auto& b : A.atomics())
        if (auto a = f_map(A, C, b)) preimage_[*a].push_back(b);
}

const std::vector<std::pair<ClgPure, ClgPure>>& Cobar::splits(const ClgPure& a)
{
    auto it = splits_.find(a);
    if (it != splits_.end()) return it->second;
    std::vector<std::pair<ClgPure, ClgPure>> out;
    auto lit = letters_.find(a.x);
    if (lit != letters_.end())
        for (auto& b : lit->second) {
            if (!b.w.leq(a.w)) continue;
            ClgPure c{b.y, a.y, a.w - b.w};
            if (c.w.zero() && c.x == c.y) continue;
            if (!C_.nonzero(c)) continue;
            out.push_back({b, c});
        }
    return splits_.emplace(a, std::move(out)).first->second;
}

std::vector<CobarWord> Cobar::differential(const CobarWord& w)
{
    std::map<CobarWord, int> acc;
    for (size_t i = 0; i < w.size(); ++i)
        for (auto& [b, c] : splits(w[i])) {
            CobarWord v;
            v.reserve(w.size() + 1);
            v.insert(v.end(), w.begin(), w.begin() + long(i));
            v.push_back(b);
            v.push_back(c);
            v.insert(v.end(), w.begin() + long(i) + 1, w.end());
            acc[v] ^= 1;
        }
    std::vector<CobarWord> out;
    for (auto& [v, c] : acc)
        if (c) out.push_back(v);
    return out;
}

std::vector<CobarWord> Cobar::words(uint32_t x, uint32_t y, const Weight& W) const
{
    std::vector<CobarWord> out;
    CobarWord cur;
    std::function<void(uint32_t, const Weight&)> rec = [&](uint32_t s, const Weight& rem) {
        if (rem.zero()) {
            if (s == y && !cur.empty()) out.push_back(cur);
            return;
        }
        auto it = letters_.find(s);
        if (it == letters_.end()) return;
        for (auto& a : it->second) {
            if (!a.w.leq(rem)) continue;
            cur.push_back(a);
            rec(a.y, rem - a.w);
            cur.pop_back();
        }
    };
    if (W.zero()) return out;
    rec(x, W);
    std::sort(out.begin(), out.end());
    return out;
}

PongElement Cobar::phi(const CobarWord& w, PhiOrder order)
{
    PongElement acc = A_.zero();
    if (w.empty()) return acc;
    // running products, starting from the preimages of the first letter
    std::map<PongData, int> cur;
    auto pre = [&](const ClgPure& a) -> const std::vector<PongData>& {
        static const std::vector<PongData> none;
        auto it = preimage_.find(a);
        return it == preimage_.end() ? none : it->second;
    };
    for (auto& b : pre(w[0])) cur[b] ^= 1;
    for (size_t i = 1; i < w.size() && !cur.empty(); ++i) {
        std::map<PongData, int> nxt;
        for (auto& [g, c] : cur) {
            if (!c) continue;
            for (auto& b : pre(w[i])) {
                auto p = order == PhiOrder::Reversed ? A_.mul_gen(b, g) : A_.mul_gen(g, b);
                if (p && p->v.one()) nxt[p->g] ^= 1;
            }
        }
        cur.swap(nxt);
    }
    for (auto& [g, c] : cur)
        if (c) acc.terms.push_back({{}, g});
    acc.normalize();
    return acc;
}

bool KoszulReport::ok() const
{
    if (!d2_zero) return false;
    if (!(order == PhiOrder::Reversed ? reversed_chain_map : forward_chain_map)) return false;
    for (auto& p : pieces)
        if (!p.chain_map || !p.iso) return false;
    return true;
}

KoszulReport verify_quasi_iso(int m, int k, const Weight& cap)
{
    KoszulReport rep;
    rep.m = m;
    rep.k = k;
    rep.cap = cap;
    PongAlgebra A(m, k);
    BorderedAlgebra C(m, k, Flavor::C);
    Cobar cb(A, C, cap);
    PieceIndex idx(A, cap);

    std::vector<std::tuple<uint32_t, uint32_t, Weight>> keys;
    for (uint32_t x : C.states())
        for (uint32_t y : C.states())
            for (auto& W : weights_up_to(m, cap.max2(m))) {
                if (!W.leq(cap) || W.zero()) continue;
                if (!compatible_triple(m, x, y, W)) continue;
                keys.push_back({x, y, W});
            }

    for (int pass = 0; pass < 2; ++pass) {
        PhiOrder order = pass == 0 ? PhiOrder::Reversed : PhiOrder::Forward;
        bool chain = true;
        for (auto& [x, y, W] : keys) {
            for (auto& wd : cb.words(x, y, W)) {
                // Phi(d w) == d Phi(w)
                PongElement lhs = A.zero();
                for (auto& v : cb.differential(wd)) lhs += cb.phi(v, order);
                PongElement rhs = q_differential(A, cb.phi(wd, order));
                if (!(lhs == rhs)) chain = false;
            }
        }
        (pass == 0 ? rep.reversed_chain_map : rep.forward_chain_map) = chain;
    }
    rep.order = rep.reversed_chain_map ? PhiOrder::Reversed : PhiOrder::Forward;

    for (auto& [x, y, W] : keys) {
        KoszulPiece kp;
        kp.x = x;
        kp.y = y;
        kp.w = W;
        auto ws = cb.words(x, y, W);
        Piece q = idx.piece(PieceTag::Q, y, x, W);
        kp.cobar_dim = ws.size();
        kp.q_dim = q.cx.total_dim();

        // cobar complex graded by 2Tw - length so it lines up with cross degree in Q
        const int T = W.total2();
        ChainComplex cc;
        int maxlen = 0;
        for (auto& wd : ws) maxlen = std::max(maxlen, int(wd.size()));
        cc.lo = T - maxlen - 1;
        cc.n.assign(maxlen + 2, 0);
        cc.d.assign(maxlen + 2, {});
        std::map<CobarWord, std::pair<int, uint32_t>> where;
        std::vector<std::vector<const CobarWord*>> byd(maxlen + 2);
        for (auto& wd : ws) {
            int deg = T - int(wd.size());
            where[wd] = {deg, cc.n[deg - cc.lo]++};
            byd[deg - cc.lo].push_back(&wd);
        }
        for (size_t di = 0; di < byd.size(); ++di)
            for (auto* wd : byd[di]) {
                std::vector<uint32_t> col;
                for (auto& v : cb.differential(*wd)) {
                    auto it = where.find(v);
                    if (it == where.end()) throw Error("cobar differential leaves the piece");
                    col.push_back(it->second.second);
                }
                std::sort(col.begin(), col.end());
                cc.d[di].push_back(col);
            }
        if (!cc.d_squared_zero()) rep.d2_zero = false;
        auto hc = homology(cc, false);
        auto hq = homology(q.cx);
        for (auto& [d, n] : hc.dims) kp.h_cobar[d - T] = n;
        for (auto& [d, n] : hq.dims) kp.h_q[d - T] = n;

        // induced map on homology, degree by degree
        size_t total_rank = 0;
        for (int deg = cc.lo; deg <= cc.hi(); ++deg) {
            size_t nc = cc.dim(deg), nq = q.dim(deg);
            if (!nc) continue;
            GF2Matrix Phi(nq, nc);
            for (size_t j = 0; j < nc; ++j) {
                PongElement img = cb.phi(*byd[deg - cc.lo][j], rep.order);
                if (img.zero()) continue;
                BitVec v = q.vector_of(img, deg);
                for (size_t r : v.support()) Phi.set(r, j);
            }
            // cobar boundary goes up in length: out of degree deg into deg-1
            auto Z = cc.dense(deg).kernel();
            GF2Matrix Bq = q.cx.dense(deg + 1); // nq x dim(deg+1)
            std::vector<BitVec> cols;
            for (auto& z : Z) cols.push_back(Phi.apply(z));
            size_t rb = Bq.rank();
            for (size_t j = 0; j < Bq.cols(); ++j) cols.push_back(Bq.column(j));
            size_t r = nq ? GF2Matrix::from_columns(nq, cols).rank() : 0;
            total_rank += r - rb;
        }
        kp.induced_rank = total_rank;
        kp.iso = kp.h_cobar == kp.h_q && total_rank == hc.total && total_rank == hq.total;
        rep.pieces.push_back(kp);
    }
    return rep;
}

}  // namespace pong
