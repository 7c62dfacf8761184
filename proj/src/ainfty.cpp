#include "pong/ainfty.hpp"
#include "pong/quotient.hpp"

#include <thread>

namespace pong {

namespace {

GF2Matrix rows_of(const GF2Matrix& M, size_t from, size_t count)
{
    GF2Matrix R(count, M.cols());
    for (size_t r = 0; r < count; ++r) R.row(r) = M.row(from + r);
    return R;
}

}  // namespace

BitVec Contraction::include(int deg, const BitVec& cls) const
{
    if (!in_range(deg)) return BitVec(0);
    return i[size_t(deg - lo)].apply(cls);
}

BitVec Contraction::project(int deg, const BitVec& v) const
{
    if (!in_range(deg)) return BitVec(0);
    return p[size_t(deg - lo)].apply(v);
}

BitVec Contraction::homotopy(int deg, const BitVec& v) const
{
    if (!in_range(deg)) return BitVec(0);
    return h[size_t(deg - lo)].apply(v);
}

Contraction build_contraction(const ChainComplex& cx)
{
    if (!cx.d_squared_zero()) throw Error("contraction: d^2 != 0");
    Contraction c;
    c.lo = cx.lo;
    const size_t N = cx.n.size();
    c.cdim.assign(cx.n.begin(), cx.n.end());
    c.hdim.assign(N, 0);
    c.cycles.assign(N, {});

    // D[t] : C_t -> C_{t-1}; its pivot columns give B'_t and B_{t-1} = D[t] B'_t.
    std::vector<GF2Matrix> D(N);
    std::vector<std::vector<size_t>> piv(N);
    for (size_t t = 0; t < N; ++t) {
        D[t] = cx.dense(c.lo + int(t));
        GF2Matrix R = D[t];
        piv[t] = R.rref();
    }
    auto B = [&](size_t t) {
        std::vector<BitVec> out;
        if (t + 1 < N)
            for (size_t j : piv[t + 1]) out.push_back(D[t + 1].column(j));
        return out;
    };

    std::vector<GF2Matrix> Tinv(N);
    std::vector<size_t> nb(N);
    for (size_t t = 0; t < N; ++t) {
        auto Bt = B(t);
        nb[t] = Bt.size();
        auto Z = D[t].kernel();
        std::vector<BitVec> cols = Bt;
        for (auto& z : Z) cols.push_back(z);
        GF2Matrix K = GF2Matrix::from_columns(c.cdim[t], cols);
        for (size_t q : K.rref())
            if (q >= Bt.size()) c.cycles[t].push_back(Z[q - Bt.size()]);
        c.hdim[t] = c.cycles[t].size();
        std::vector<BitVec> T = Bt;
        for (auto& z : c.cycles[t]) T.push_back(z);
        for (size_t j : piv[t]) {
            BitVec e(c.cdim[t]);
            e.set(j);
            T.push_back(e);
        }
        auto inv = GF2Matrix::from_columns(c.cdim[t], T).inverse();
        if (!inv) throw Error("contraction: adapted basis is singular");
        Tinv[t] = *inv;
        c.i.push_back(GF2Matrix::from_columns(c.cdim[t], c.cycles[t]));
        c.p.push_back(rows_of(Tinv[t], nb[t], c.hdim[t]));
    }
    for (size_t t = 0; t < N; ++t) {
        size_t up = t + 1 < N ? c.cdim[t + 1] : 0;
        std::vector<BitVec> lifts;
        if (t + 1 < N)
            for (size_t j : piv[t + 1]) {
                BitVec e(up);
                e.set(j);
                lifts.push_back(e);
            }
        GF2Matrix Bp = GF2Matrix::from_columns(up, lifts);
        c.h.push_back(Bp * rows_of(Tinv[t], 0, nb[t]));
    }
    return c;
}

ContractionCheck check_contraction(const ChainComplex& cx, const Contraction& c)
{
    ContractionCheck r;
    const size_t N = c.cdim.size();
    for (size_t t = 0; t < N; ++t) {
        int deg = c.lo + int(t);
        size_t n = c.cdim[t];
        if (!(c.p[t] * c.i[t] == GF2Matrix::identity(c.hdim[t]))) r.pi = false;
        GF2Matrix lhs = GF2Matrix::identity(n) + c.i[t] * c.p[t];
        GF2Matrix rhs(n, n);
        if (t + 1 < N) rhs = rhs + cx.dense(deg + 1) * c.h[t];
        if (t > 0) rhs = rhs + c.h[t - 1] * cx.dense(deg);
        if (!(lhs == rhs)) r.homotopy = false;
        if (!(c.h[t] * c.i[t]).is_zero()) r.hi = false;
        if (t + 1 < N) {
            if (!(c.p[t + 1] * c.h[t]).is_zero()) r.ph = false;
            if (!(c.h[t + 1] * c.h[t]).is_zero()) r.hh = false;
        }
    }
    return r;
}

TransferEngine::TransferEngine(PongAlgebra& A, bool quotient, const Weight& cap) : A_(A), quotient_(quotient), idx_(A, cap) {}

PongElement TransferEngine::multiply(const PongElement& a, const PongElement& b)
{
    return quotient_ ? q_multiply(A_, a, b) : A_.multiply(a, b);
}

PongElement TransferEngine::differential(const PongElement& a)
{
    return quotient_ ? q_differential(A_, a) : A_.differential(a);
}

std::tuple<uint32_t, uint32_t, Weight, int> TransferEngine::slot(const PongElement& a)
{
    if (a.zero()) throw Error("zero element has no piece");
    std::optional<std::tuple<uint32_t, uint32_t, Weight, int>> s;
    for (auto& t : a.terms) {
        std::tuple<uint32_t, uint32_t, Weight, int> u{t.g.mask, t.g.image(), A_.weight(t.g) + t.v.weight(), A_.cross(t.g)};
        if (s && *s != u) throw Error("element is not homogeneous: " + format_element(a));
        s = u;
    }
    return *s;
}

TransferEngine::Entry& TransferEngine::entry(uint32_t x, uint32_t y, const Weight& w)
{
    auto key = std::make_tuple(x, y, w);
    auto it = cache_.find(key);
    if (it != cache_.end()) return *it->second;
    auto e = std::make_unique<Entry>();
    e->piece = idx_.piece(quotient_ ? PieceTag::Q : PieceTag::P, x, y, w);
    e->c = build_contraction(e->piece.cx);
    return *cache_.emplace(key, std::move(e)).first->second;
}

const Piece& TransferEngine::piece(uint32_t x, uint32_t y, const Weight& w) { return entry(x, y, w).piece; }
const Contraction& TransferEngine::contraction(uint32_t x, uint32_t y, const Weight& w) { return entry(x, y, w).c; }

ClassValue TransferEngine::class_of(const PongElement& cycle, uint32_t x, uint32_t y, const Weight& w, int deg)
{
    if (!differential(cycle).zero()) throw Error("not a cycle: " + format_element(cycle));
    Entry& e = entry(x, y, w);
    ClassValue v;
    v.x = x;
    v.y = y;
    v.w = w;
    v.deg = deg;
    BitVec vec = cycle.zero() ? BitVec(e.piece.dim(deg)) : e.piece.vector_of(cycle, deg);
    v.cls = e.c.project(deg, vec);
    v.rep = e.piece.element_of(e.c.include(deg, v.cls), deg);
    return v;
}

ClassValue TransferEngine::class_of(const PongElement& cycle)
{
    auto [x, y, w, deg] = slot(cycle);
    return class_of(cycle, x, y, w, deg);
}

PongElement TransferEngine::homotopy(const PongElement& a)
{
    if (a.zero()) return a;
    auto [x, y, w, deg] = slot(a);
    Entry& e = entry(x, y, w);
    return e.piece.element_of(e.c.homotopy(deg, e.piece.vector_of(a, deg)), deg + 1);
}

std::optional<PongElement> TransferEngine::bound(const PongElement& a)
{
    if (a.zero()) return a;
    auto [x, y, w, deg] = slot(a);
    Entry& e = entry(x, y, w);
    if (!e.piece.cx.dim(deg + 1)) return std::nullopt;
    auto sol = GF2Solver(e.piece.cx.dense(deg + 1)).solve(e.piece.vector_of(a, deg));
    if (!sol) return std::nullopt;
    return e.piece.element_of(*sol, deg + 1);
}

std::tuple<uint32_t, uint32_t, Weight, int> TransferEngine::target(const std::vector<PongElement>&, size_t i, size_t j)
{
    auto [x, y0, w, deg] = in_slots_[i];
    uint32_t y = y0;
    for (size_t l = i + 1; l <= j; ++l) {
        auto& s = in_slots_[l];
        if (std::get<0>(s) != y) throw Error("inputs do not form an idempotent chain");
        y = std::get<1>(s);
        w += std::get<2>(s);
        deg += std::get<3>(s);
    }
    deg += int(j - i) - 1;
    return {x, y, w, deg};
}

ClassValue TransferEngine::mu(const std::vector<PongElement>& inputs)
{
    const size_t n = inputs.size();
    if (n == 0) throw Error("mu needs at least one input");
    in_slots_.clear();
    for (auto& a : inputs) in_slots_.push_back(slot(a));
    std::vector<std::vector<PongElement>> T(n, std::vector<PongElement>(n)), Th(n, std::vector<PongElement>(n));
    for (size_t i = 0; i < n; ++i) {
        T[i][i] = class_of(inputs[i]).rep;
        Th[i][i] = T[i][i];
    }
    if (n == 1) {
        auto [x, y, w, deg] = in_slots_[0];
        return class_of(T[0][0], x, y, w, deg);
    }
    for (size_t len = 2; len <= n; ++len)
        for (size_t i = 0; i + len <= n; ++i) {
            size_t j = i + len - 1;
            PongElement acc = A_.zero();
            for (size_t l = i; l < j; ++l) acc += multiply(Th[i][l], Th[l + 1][j]);
            T[i][j] = acc;
            if (len < n) Th[i][j] = homotopy(acc);
        }
    auto [x, y, w, deg] = target(inputs, 0, n - 1);
    Entry& e = entry(x, y, w);
    ClassValue v;
    v.x = x;
    v.y = y;
    v.w = w;
    v.deg = deg;
    BitVec vec = T[0][n - 1].zero() ? BitVec(e.piece.dim(deg)) : e.piece.vector_of(T[0][n - 1], deg);
    v.cls = e.c.project(deg, vec);
    v.rep = e.piece.element_of(e.c.include(deg, v.cls), deg);
    return v;
}

StarChain TransferEngine::star_chain(const std::vector<PongElement>& inputs)
{
    StarChain sc;
    const size_t n = inputs.size();
    sc.n = n;
    in_slots_.clear();
    for (auto& a : inputs) {
        if (!differential(a).zero()) throw Error("star chain input is not a cycle");
        in_slots_.push_back(slot(a));
    }
    for (size_t i = 0; i < n; ++i) sc.table[{i, i}] = inputs[i];
    auto rhs = [&](size_t i, size_t j) {
        PongElement acc = A_.zero();
        for (size_t l = i; l < j; ++l) acc += multiply(sc.table[{i, l}], sc.table[{l + 1, j}]);
        return acc;
    };
    for (size_t len = 2; len < n; ++len)
        for (size_t i = 0; i + len <= n; ++i) {
            size_t j = i + len - 1;
            auto r = rhs(i, j);
            auto b = bound(r);
            if (!b) {
                sc.obstruction = std::make_pair(i, j);
                return sc;
            }
            sc.table[{i, j}] = *b;
        }
    sc.top = n >= 2 ? rhs(0, n - 1) : inputs[0];
    auto [x, y, w, deg] = n >= 2 ? target(inputs, 0, n - 1) : in_slots_[0];
    sc.top_class = class_of(sc.top, x, y, w, deg);
    return sc;
}

namespace {

std::string trim(const std::string& s)
{
    size_t a = s.find_first_not_of(" \t"), b = s.find_last_not_of(" \t");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

// "_{a,b}" or "a" after the letter
std::vector<int> token_indices(const std::string& rest)
{
    std::string r = rest;
    if (!r.empty() && r[0] == '_') r = r.substr(1);
    if (!r.empty() && r.front() == '{') {
        if (r.back() != '}') throw Error("bad index list: " + rest);
        r = r.substr(1, r.size() - 2);
    }
    std::vector<int> out;
    size_t p = 0;
    while (p < r.size()) {
        size_t q = r.find(',', p);
        if (q == std::string::npos) q = r.size();
        out.push_back(std::stoi(r.substr(p, q - p)));
        p = q + 1;
    }
    if (out.empty()) throw Error("missing index: " + rest);
    return out;
}

PongElement atom(PongAlgebra& A, AtomKind kind, int a, int b)
{
    AtomicDescriptor d;
    d.kind = kind;
    d.a = a;
    d.b = b;
    return A.atomic(d);
}

}  // namespace

PongElement parse_input_token(PongAlgebra& A, const std::string& raw, bool quotient)
{
    std::string tok = trim(raw);
    if (tok.empty()) throw Error("empty input token");
    PongElement e;
    if (tok == "Omega" || tok == "Ω") {
        e = A.omega();
    } else if (tok[0] == 'v') {
        Mono v;
        size_t p = 0;
        while (p < tok.size()) {
            if (tok[p] == '*' || tok[p] == ' ') {
                ++p;
                continue;
            }
            if (tok[p] != 'v') throw Error("bad monomial: " + tok);
            size_t q = p + 1;
            if (q < tok.size() && tok[q] == '_') ++q;
            size_t r = q;
            while (r < tok.size() && isdigit(static_cast<unsigned char>(tok[r]))) ++r;
            if (r == q) throw Error("bad monomial: " + tok);
            int i = std::stoi(tok.substr(q, r - q));
            if (i < 1 || i > A.m()) throw Error("v index out of range: " + tok);
            ++v.e[i - 1];
            p = r;
        }
        e = A.mono_times(v, A.unit());
    } else {
        char c = tok[0];
        auto ix = token_indices(tok.substr(1));
        if (c == 'U' && ix.size() == 1) {
            e = A.U(ix[0]);
        } else if (c == 'L') {
            e = ix.size() == 1 ? atom(A, AtomKind::L, ix[0], ix[0] - 1) : atom(A, AtomKind::L, ix.at(0), ix.at(1));
        } else if (c == 'R') {
            e = ix.size() == 1 ? atom(A, AtomKind::R, ix[0] - 1, ix[0]) : atom(A, AtomKind::R, ix.at(0), ix.at(1));
        } else if (c == 'X') {
            e = ix.size() == 1 ? atom(A, AtomKind::X, ix[0] - 1, ix[0]) : atom(A, AtomKind::X, ix.at(0), ix.at(1));
        } else {
            throw Error("unknown input token: " + tok);
        }
    }
    return quotient ? project_to_q(e) : e;
}

InputSequence parse_inputs(PongAlgebra& A, const std::string& s, bool quotient, std::optional<uint32_t> start)
{
    InputSequence seq;
    int depth = 0;
    std::string cur;
    for (char ch : s) {
        if (ch == '{') ++depth;
        if (ch == '}') --depth;
        if (ch == ',' && depth == 0) {
            seq.tokens.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!trim(cur).empty()) seq.tokens.push_back(trim(cur));
    if (seq.tokens.empty()) throw Error("no inputs");
    std::vector<PongElement> raw;
    for (auto& t : seq.tokens) raw.push_back(parse_input_token(A, t, quotient));

    auto walk = [&](uint32_t x) -> std::optional<std::vector<PongElement>> {
        std::vector<PongElement> out;
        uint32_t s0 = x;
        for (auto& e : raw) {
            PongElement r = A.restrict_left(s0, e);
            if (r.zero()) return std::nullopt;
            uint32_t y = r.terms[0].g.image();
            for (auto& t : r.terms)
                if (t.g.image() != y) return std::nullopt;
            out.push_back(r);
            s0 = y;
        }
        return out;
    };
    if (start) {
        auto w = walk(*start);
        if (!w) throw Error("inputs vanish from idempotent " + format_state(*start));
        seq.start = *start;
        seq.elems = *w;
        return seq;
    }
    for (uint32_t x : A.states())
        if (auto w = walk(x)) {
            seq.start = x;
            seq.elems = *w;
            return seq;
        }
    throw Error("no idempotent makes every input nonzero");
}

std::optional<int> omega_power(TransferEngine& T, const ClassValue& v)
{
    if (v.zero() || v.x != v.y) return std::nullopt;
    PongAlgebra& A = T.algebra();
    int c = v.w[0];
    for (int i = 0; i < A.m(); ++i)
        if (v.w[i] != c) return std::nullopt;
    if (c % 2) return std::nullopt;
    c /= 2;
    if (c < 1 || c > 3) return std::nullopt;
    PongElement om = A.restrict_left(v.x, A.omega());
    if (T.quotient()) om = project_to_q(om);
    PongElement pw = om;
    for (int i = 1; i < c; ++i) pw = T.multiply(pw, om);
    if (pw.zero()) return std::nullopt;
    auto [x, y, w, deg] = T.slot(pw);
    if (deg != v.deg || w != v.w) return std::nullopt;
    if (T.class_of(pw, x, y, w, deg).cls == v.cls) return c;
    return std::nullopt;
}

std::string describe_class(TransferEngine& T, const ClassValue& v)
{
    if (v.zero()) return "0";
    if (auto c = omega_power(T, v)) return *c == 1 ? "Ω" : "Ω^" + std::to_string(*c);
    return format_element(v.rep);
}

MuReport verify_mu_sequence(int m, int k)
{
    MuReport rep;
    rep.m = m;
    rep.k = k;
    PongAlgebra A(m, m - k - 1);
    TransferEngine T(A, false, Weight::constant(m, 2));
    std::string vs;
    for (int i = 1; i <= k; ++i) vs += "v" + std::to_string(i);
    rep.inputs.push_back(vs);
    for (int i = k + 1; i <= m - 1; ++i) rep.inputs.push_back("L" + std::to_string(i));
    rep.inputs.push_back("v" + std::to_string(m));
    for (int i = m - 1; i >= k + 1; --i) rep.inputs.push_back("R" + std::to_string(i));
    std::string joined;
    for (auto& s : rep.inputs) joined += (joined.empty() ? "" : ", ") + s;
    uint32_t x = 0;
    for (int i = k + 1; i <= m - 1; ++i) x |= 1u << i;
    auto seq = parse_inputs(A, joined, false, x);
    rep.start = seq.start;

    auto v = T.mu(seq.elems);
    rep.result = describe_class(T, v);
    rep.equals_omega = omega_power(T, v) == 1;

    Weight wsum;
    int dsum = 0;
    for (auto& e : seq.elems) {
        auto [a, b, w, d] = T.slot(e);
        wsum += w;
        dsum += d;
    }
    rep.gradings_ok = v.w == wsum && v.deg == dsum + int(seq.elems.size()) - 2 && v.x == x && v.y == x;

    const size_t n = seq.elems.size();
    for (size_t len = 2; len < n; ++len)
        for (size_t i = 0; i + len <= n; ++i) {
            std::vector<PongElement> sub(seq.elems.begin() + long(i), seq.elems.begin() + long(i + len));
            if (!T.mu(sub).zero()) rep.lower_vanish = false;
        }

    auto sc = T.star_chain(seq.elems);
    rep.obstruction = sc.obstruction;
    rep.star_agrees = !sc.obstruction && sc.top_class.cls == v.cls;
    return rep;
}

std::vector<StarIdentity> star_identities(int m)
{
    std::vector<StarIdentity> out;
    PongAlgebra A(m, m - 2);
    TransferEngine T(A, false, Weight::constant(m, 2));
    std::string joined = "v1";
    for (int i = 2; i <= m - 1; ++i) joined += ", L" + std::to_string(i);
    joined += ", v" + std::to_string(m);
    for (int i = m - 1; i >= 2; --i) joined += ", R" + std::to_string(i);
    uint32_t x = 0;
    for (int i = 2; i <= m - 1; ++i) x |= 1u << i;
    auto seq = parse_inputs(A, joined, false, x);
    auto sc = T.star_chain(seq.elems);
    if (sc.obstruction) return out;
    const size_t n = seq.elems.size();
    std::vector<uint32_t> state(n);
    for (size_t i = 0; i < n; ++i) state[i] = seq.elems[i].terms[0].g.mask;

    auto X = [&](int a, int b) { return atom(A, AtomKind::X, a, b); };
    auto L = [&](int a, int b) { return atom(A, AtomKind::L, a, b); };
    auto R = [&](int a, int b) { return atom(A, AtomKind::R, a, b); };
    auto prod = [&](std::vector<PongElement> f) {
        PongElement acc = f[0];
        for (size_t i = 1; i < f.size(); ++i) acc = A.multiply(acc, f[i]);
        return acc;
    };
    auto add = [&](std::string label, size_t i, size_t j, PongElement chain) {
        StarIdentity s;
        s.label = std::move(label);
        s.i = i;
        s.j = j;
        chain = A.restrict_left(state[i], chain);
        PongElement r = A.zero();
        for (size_t l = i; l < j; ++l) r += A.multiply(sc.table[{i, l}], sc.table[{l + 1, j}]);
        s.chain_ok = !chain.zero() && A.differential(chain) == r;
        PongElement diff = chain + sc.table[{i, j}];
        s.same_class = A.differential(diff).zero() && T.bound(diff).has_value();
        out.push_back(std::move(s));
    };
    auto str = [](int a) { return std::to_string(a); };

    for (int i = 2; i <= m - 1; ++i)
        add("v1*L2*...*L" + str(i) + " = L_{" + str(i) + ",1} X_{0,1}", 0, size_t(i - 1), prod({L(i, 1), X(0, 1)}));
    for (int i = 2; i <= m - 2; ++i)
        add("L" + str(i + 1) + "*...*R2 = R_{1," + str(i) + "} X_{" + str(i) + "," + str(m) + "}", size_t(i), n - 1,
            prod({R(1, i), X(i, m)}));
    add("v" + str(m) + "*R" + str(m - 1) + "*...*R2 = R_{1," + str(m - 1) + "} X_{" + str(m - 1) + "," + str(m) + "}",
        size_t(m - 1), n - 1, prod({R(1, m - 1), X(m - 1, m)}));
    add("v1*...*v" + str(m) + " = X_{" + str(m - 1) + "," + str(m) + "} L_{" + str(m - 1) + ",1} X_{0,1}", 0,
        size_t(m - 1), prod({X(m - 1, m), L(m - 1, 1), X(0, 1)}));
    for (int i = m - 1; i >= 3; --i)
        add("v1*...*R" + str(i) + " = X_{" + str(i - 1) + "," + str(m) + "} L_{" + str(i - 1) + ",1} X_{0,1}", 0,
            size_t(2 * m - 1 - i), prod({X(i - 1, m), L(i - 1, 1), X(0, 1)}));
    for (int i = m; i >= 4; --i)
        add("R" + str(i - 1) + "*...*R2 = R_{1," + str(i - 1) + "}", size_t(2 * m - i), n - 1, R(1, i - 1));
    return out;
}

PermSumReport verify_perm_sum(int m, int workers)
{
    PermSumReport rep;
    rep.m = m;
    std::vector<int> perm(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) perm[size_t(i)] = i + 1;
    std::vector<std::vector<int>> perms;
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    rep.permutations = perms.size();

    workers = std::max(1, std::min<int>(workers, int(perms.size())));
    std::vector<BitVec> partial(static_cast<size_t>(workers));
    std::vector<std::string> errors(static_cast<size_t>(workers));
    auto run = [&](int wid) {
        try {
            PongAlgebra A(m, m - 1);
            TransferEngine T(A, true, Weight::constant(m, 2));
            std::vector<PongElement> X(size_t(m + 1));
            for (int i = 1; i <= m; ++i) X[size_t(i)] = parse_input_token(A, "X" + std::to_string(i), true);
            for (size_t p = size_t(wid); p < perms.size(); p += size_t(workers)) {
                std::vector<PongElement> in;
                for (int i : perms[p]) in.push_back(X[size_t(i)]);
                auto v = T.mu(in);
                if (partial[size_t(wid)].n == 0) partial[size_t(wid)] = v.cls;
                else partial[size_t(wid)] ^= v.cls;
            }
        } catch (const std::exception& e) {
            errors[size_t(wid)] = e.what();
        }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(run, w);
    run(0);
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (!e.empty()) throw Error(e);

    PongAlgebra A(m, m - 1);
    TransferEngine T(A, true, Weight::constant(m, 2));
    std::vector<PongElement> X(size_t(m + 1));
    for (int i = 1; i <= m; ++i) X[size_t(i)] = parse_input_token(A, "X" + std::to_string(i), true);
    std::vector<PongElement> ordered(X.begin() + 1, X.end());
    ClassValue total = T.mu(ordered);
    total.cls = partial[0];
    for (int w = 1; w < workers; ++w)
        if (partial[size_t(w)].n) total.cls ^= partial[size_t(w)];
    auto& e = T.contraction(total.x, total.y, total.w);
    auto& pc = T.piece(total.x, total.y, total.w);
    total.rep = pc.element_of(e.include(total.deg, total.cls), total.deg);
    rep.result = describe_class(T, total);
    rep.equals_omega = omega_power(T, total) == 1;

    for (int l = 3; l < m; ++l) {
        std::vector<bool> pick(size_t(m), false);
        std::fill(pick.begin(), pick.begin() + l, true);
        do {
            std::vector<PongElement> in;
            for (int i = 0; i < m; ++i)
                if (pick[size_t(i)]) in.push_back(X[size_t(i + 1)]);
            ++rep.lower_checked;
            if (!T.mu(in).zero()) rep.lower_vanish = false;
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return rep;
}

DegenerateReport verify_degenerate(int m, int cap2)
{
    DegenerateReport rep;
    rep.m = m;
    Weight cap = Weight::constant(m, cap2);
    {
        PongAlgebra A(m, 0);
        PieceIndex idx(A, cap);
        for (auto& w : weights_up_to(m, cap2)) {
            Piece pc = idx.piece(PieceTag::P, 0, 0, w);
            ++rep.p0_pieces;
            auto h = homology(pc.cx);
            size_t want = w.integral() ? 1 : 0;
            bool zero_d = true;
            for (auto& cols : pc.cx.d)
                for (auto& c : cols)
                    if (!c.empty()) zero_d = false;
            if (h.total != want || !zero_d || (want && !h.dims.count(0))) {
                rep.p0_ok = false;
                rep.notes.push_back("P(" + std::to_string(m) + ",0) w=" + format_weight(w, m));
            }
        }
    }
    {
        PongAlgebra A(m, m - 1);
        TransferEngine T(A, false, cap);
        uint32_t x = A.states().at(0);
        PongElement om = A.omega();
        for (auto& w : weights_up_to(m, cap2)) {
            const Piece& pc = T.piece(x, x, w);
            ++rep.pm_pieces;
            auto h = homology(pc.cx);
            int c = w[0];
            bool constant = c % 2 == 0;
            for (int i = 0; i < m; ++i)
                if (w[i] != c) constant = false;
            c /= 2;
            bool good;
            if (!constant) {
                good = h.total == 0;
            } else {
                int deg = 2 * (m - 1) * c;
                good = h.total == 1 && h.dims.count(deg);
                if (good) {
                    PongElement pw = A.idempotent(x);
                    for (int i = 0; i < c; ++i) pw = A.multiply(pw, om);
                    good = !T.class_of(pw, x, x, w, deg).zero();
                }
            }
            if (!good) {
                rep.pm_ok = false;
                rep.notes.push_back("P(" + std::to_string(m) + "," + std::to_string(m - 1) + ") w=" + format_weight(w, m));
            }
        }
    }
    return rep;
}

}  // namespace pong
