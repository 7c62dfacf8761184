#include "pong/reports.hpp"
#include "pong/ainfty.hpp"
#include "pong/dd.hpp"
#include "pong/hochschild.hpp"
#include "pong/koszul.hpp"
#include "pong/quotient.hpp"
#include "pong/verify.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>
#include <thread>

namespace pong {

using nlohmann::json;
using MK = std::pair<int, int>;

namespace {

std::string cap_text(int cap2) { return cap2 % 2 ? std::to_string(cap2) + "/2" : std::to_string(cap2 / 2); }

json check(const std::string& name, bool pass, const std::string& detail = "")
{
    json c = {{"name", name}, {"pass", pass}};
    if (!detail.empty()) c["detail"] = detail;
    return c;
}

struct Table {
    std::vector<std::string> columns;
    json rows = json::array();
    json to_json() const { return {{"columns", columns}, {"rows", rows}}; }
};

// Jobs run on up to `workers` threads; results come back in job order.
std::vector<json> run_jobs(size_t n, int workers, const std::function<json(size_t)>& fn)
{
    std::vector<json> out(n);
    size_t nw = std::max<size_t>(1, std::min<size_t>(size_t(std::max(workers, 1)), n));
    if (nw == 1) {
        for (size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::vector<std::exception_ptr> errs(n);
    std::vector<std::thread> pool;
    for (size_t t = 0; t < nw; ++t)
        pool.emplace_back([&, t] {
            for (size_t i = t; i < n; i += nw) {
                try {
                    out[i] = fn(i);
                } catch (...) {
                    errs[i] = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
    return out;
}

int need(const std::optional<int>& v, const char* name)
{
    if (!v) throw UsageError(std::string("--") + name + " is required");
    return *v;
}

void check_mk(int m, int k)
{
    if (m < 2 || m > kMaxM) throw UsageError("m must lie in [2," + std::to_string(kMaxM) + "]");
    if (k < 0 || k > m - 1) throw UsageError("k must lie in [0,m-1]");
}

// Explicit (m,k) when given, else the default scan.
std::vector<MK> cases(const Request& r, std::vector<MK> dflt, int max_m = kMaxM)
{
    if (r.m && r.k) {
        check_mk(*r.m, *r.k);
        if (*r.m > max_m) throw UsageError("m above " + std::to_string(max_m) + " is out of range for " + r.command);
        return {{*r.m, *r.k}};
    }
    if (r.m || r.k) {
        std::vector<MK> out;
        for (auto& c : dflt)
            if ((!r.m || c.first == *r.m) && (!r.k || c.second == *r.k)) out.push_back(c);
        if (out.empty()) {
            if (r.m) {
                if (*r.m < 2 || *r.m > max_m) throw UsageError("m out of range for " + r.command);
                for (int k = 0; k < *r.m; ++k) out.push_back({*r.m, k});
            } else {
                throw UsageError("no default cases with that k");
            }
        }
        return out;
    }
    return dflt;
}

std::vector<MK> all_mk(int lo, int hi)
{
    std::vector<MK> out;
    for (int m = lo; m <= hi; ++m)
        for (int k = 0; k < m; ++k) out.push_back({m, k});
    return out;
}

std::string mk_text(int m, int k) { return "(" + std::to_string(m) + "," + std::to_string(k) + ")"; }

struct Builder {
    json checks = json::array();
    json results = json::object();
    json tables = json::object();
    void add(const std::string& name, bool pass, const std::string& detail = "")
    {
        checks.push_back(check(name, pass, detail));
    }
};

// ---------- commands ----------

void cmd_dga(const Request& r, Builder& b)
{
    int cap2 = r.cap2.value_or(4);
    auto cs = cases(r, all_mk(2, 5));
    auto res = run_jobs(cs.size(), r.workers, [&](size_t i) {
        auto [m, k] = cs[i];
        auto rep = verify_dga(m, k, cap2, r.triples, r.seed);
        return json{{"m", m},
                    {"k", k},
                    {"generators", rep.generators},
                    {"d2_checked", rep.d2_checked},
                    {"leibniz_checked", rep.leibniz_checked},
                    {"assoc_checked", rep.assoc_checked},
                    {"failures", rep.failures},
                    {"pass", rep.ok()}};
    });
    Table t{{"m", "k", "generators", "d2", "leibniz", "assoc", "pass"}};
    for (auto& j : res) {
        t.rows.push_back({j["m"], j["k"], j["generators"], j["d2_checked"], j["leibniz_checked"], j["assoc_checked"], j["pass"]});
        b.add("dga " + mk_text(j["m"], j["k"]), j["pass"],
              std::to_string(j["generators"].get<size_t>()) + " generators, " + std::to_string(j["assoc_checked"].get<size_t>()) +
                  " triples");
    }
    b.results["cases"] = res;
    b.tables["dga"] = t.to_json();
}

void cmd_atoms(const Request& r, Builder& b)
{
    int cap2 = r.cap2.value_or(4);
    auto cs = cases(r, all_mk(2, 5));
    auto res = run_jobs(cs.size(), r.workers, [&](size_t i) {
        auto [m, k] = cs[i];
        auto rep = verify_atoms(m, k, cap2);
        json j{{"m", m},
               {"k", k},
               {"generators", rep.generators},
               {"atomics", rep.atomics},
               {"factored", rep.factored},
               {"max_length", rep.max_length},
               {"bound_ok", rep.bound_ok},
               {"atomic_set_ok", rep.atomic_set_ok},
               {"factor_ok", rep.factor_ok},
               {"failures", rep.failures},
               {"pass", rep.ok()}};
        if (r.tikz) {
            PongAlgebra A(m, k);
            json pics = json::array();
            for (auto& g : A.atomics()) pics.push_back({{"generator", format_pong(g)}, {"tikz", tikz_pong(g)}});
            j["tikz"] = pics;
        }
        return j;
    });
    Table t{{"m", "k", "generators", "atomics", "max_length", "pass"}};
    for (auto& j : res) {
        t.rows.push_back({j["m"], j["k"], j["generators"], j["atomics"], j["max_length"], j["pass"]});
        std::string mk = mk_text(j["m"], j["k"]);
        b.add("length bound " + mk, j["bound_ok"]);
        b.add("equality on atomics " + mk, j["atomic_set_ok"]);
        b.add("factor_atomic " + mk, j["factor_ok"]);
    }
    b.results["cases"] = res;
    b.tables["atoms"] = t.to_json();
}

void cmd_displayed_diff(const Request& r, Builder& b)
{
    auto rep = verify_displayed_differentials();
    b.add("d((1,-2),(2,1)) at m=4", rep.first_ok, rep.first);
    b.add("weight and crossings of ((1,-2),(2,1))", rep.caption_ok,
          rep.first_weight + ", cross " + std::to_string(rep.first_cross));
    b.add("d((1,3),(2,-3)) at m=5", rep.second_ok, rep.second);
    b.results = {{"first", rep.first},
                 {"first_expected", rep.first_expected},
                 {"first_weight", rep.first_weight},
                 {"first_cross", rep.first_cross},
                 {"second", rep.second},
                 {"second_expected", rep.second_expected},
                 {"second_invalid_at_m4", rep.second_invalid_at_m4}};
    if (r.tikz) b.results["tikz"] = tikz_pong(make_pong(4, {{1, -2}, {2, 1}}));
}

PieceTag parse_tag(const std::string& s)
{
    if (s == "pong" || s == "P") return PieceTag::P;
    if (s == "quotient" || s == "Q") return PieceTag::Q;
    if (s == "pong-cone" || s == "P'") return PieceTag::PCone;
    if (s == "quotient-cone" || s == "Q'") return PieceTag::QCone;
    throw UsageError("--algebra must be pong, quotient, pong-cone or quotient-cone");
}

uint32_t checked_state(const std::string& s, int m, int k, const char* name)
{
    uint32_t x;
    try {
        x = parse_state(s);
    } catch (const std::exception& e) {
        throw UsageError(std::string("--") + name + ": " + e.what());
    }
    for (int i : mask_elems(x))
        if (i < 1 || i > m - 1) throw UsageError(std::string("--") + name + " elements must lie in [1,m-1]");
    if (__builtin_popcount(x) != k) throw UsageError(std::string("--") + name + " must have k elements");
    return x;
}

void cmd_homology(const Request& r, Builder& b)
{
    int m = need(r.m, "m"), k = need(r.k, "k");
    check_mk(m, k);
    if (r.w.empty()) throw UsageError("--w is required");
    uint32_t x = checked_state(r.x, m, k, "x"), y = checked_state(r.y, m, k, "y");
    Weight w;
    try {
        w = parse_weight(r.w, m);
    } catch (const std::exception& e) {
        throw UsageError(std::string("--w: ") + e.what());
    }
    if (!w.nonneg()) throw UsageError("--w must be non-negative");
    PieceTag tag = parse_tag(r.algebra);
    PongAlgebra A(m, k);
    PieceIndex idx(A, w);
    Piece pc = idx.piece(tag, x, y, w);
    auto h = homology(pc.cx);
    Table t{{"m", "k", "tag", "x", "y", "w", "degree", "chain_dim", "homology_dim"}};
    for (int d = pc.cx.lo; d <= pc.cx.hi(); ++d) {
        size_t hd = h.dims.count(d) ? h.dims.at(d) : 0;
        if (!pc.dim(d) && !hd) continue;
        t.rows.push_back({m, k, tag_name(tag), format_state(x), format_state(y), format_weight(w, m), d, pc.dim(d), hd});
    }
    bool compat = compatible_triple(m, x, y, w);
    json reps = json::array();
    if (tag == PieceTag::P || tag == PieceTag::Q) {
        auto c = build_contraction(pc.cx);
        for (int d = c.lo; d <= c.hi(); ++d)
            for (auto& z : c.cycles[size_t(d - c.lo)]) reps.push_back({{"degree", d}, {"cycle", format_element(pc.element_of(z, d))}});
    }
    b.results = {{"tag", tag_name(tag)},
                 {"x", format_state(x)},
                 {"y", format_state(y)},
                 {"w", format_weight(w, m)},
                 {"compatible", compat},
                 {"total", h.total},
                 {"euler", h.euler},
                 {"representatives", reps}};
    if (r.tikz) {
        json pics = json::array();
        for (auto& row : pc.cells)
            for (auto& c : row)
                if (c.part == 0) pics.push_back({{"generator", format_pong(c.t.g)}, {"tikz", tikz_pong(c.t.g)}});
        b.results["tikz"] = pics;
    }
    b.tables["homology"] = t.to_json();
    b.add("d^2 = 0", true);
}

void cmd_theorem_hq(const Request& r, Builder& b)
{
    int cap2 = r.cap2.value_or(4);
    auto cs = cases(r, all_mk(2, 5));
    bool detailed = cs.size() == 1;
    auto res = run_jobs(cs.size(), r.workers, [&](size_t i) {
        auto [m, k] = cs[i];
        auto rep = verify_theorem_hq(m, k, cap2);
        auto rows = [&](const std::vector<HqCase>& v) {
            json a = json::array();
            for (auto& c : v)
                a.push_back({format_state(c.x), format_state(c.y), format_weight(c.w, m), c.dim,
                             condition_interleaved(k, c.x, c.y) && condition_weight_le_one(m, c.w)});
            return a;
        };
        json j{{"m", m},
               {"k", k},
               {"triples", rep.triples},
               {"nonzero", rep.nonzero},
               {"max_dim", rep.max_dim},
               {"literal_failures", rep.literal_failures.size()},
               {"refined_failures", rep.refined_failures.size()},
               {"dims_ok", rep.dims_ok()},
               {"literal_ok", rep.literal_ok()},
               {"refined_ok", rep.refined_ok()}};
        if (detailed) {
            j["literal_counterexamples"] = rows(rep.literal_failures);
            j["refined_counterexamples"] = rows(rep.refined_failures);
        }
        return j;
    });
    Table t{{"m", "k", "triples", "nonzero", "max_dim", "literal_failures", "refined_failures"}};
    bool dims = true, lit = true, ref = true;
    for (auto& j : res) {
        t.rows.push_back({j["m"], j["k"], j["triples"], j["nonzero"], j["max_dim"], j["literal_failures"], j["refined_failures"]});
        dims = dims && j["dims_ok"].get<bool>();
        lit = lit && j["literal_ok"].get<bool>();
        ref = ref && j["refined_ok"].get<bool>();
    }
    b.add("dim H(Q') in {0,1}", dims);
    b.add("dim H(Q') = 1 iff interleaved and w_i <= 1", lit, "literal statement");
    b.add("dim H(Q') = 1 iff interleaved, w_i <= 1 and w constant on each V_s range", ref, "refined statement");
    b.results["cap"] = cap_text(cap2);
    b.results["cases"] = res;
    b.tables["theorem_hq"] = t.to_json();
}

void cmd_theorem_hp(const Request& r, Builder& b)
{
    int cap2 = r.cap2.value_or(4);
    auto cs = cases(r, all_mk(2, 4), 5);
    auto res = run_jobs(cs.size(), r.workers, [&](size_t i) {
        auto [m, k] = cs[i];
        auto rep = verify_theorem_hp(m, k, cap2);
        return json{{"m", m},
                    {"k", k},
                    {"triples", rep.triples},
                    {"dim_mismatch", rep.dim_mismatch},
                    {"model_mismatch", rep.model_mismatch},
                    {"model_internal", rep.model_internal},
                    {"cone_sides_agree", rep.cone_sides_agree},
                    {"notes", rep.notes},
                    {"pass", rep.ok()}};
    });
    Table t{{"m", "k", "triples", "dim_mismatch", "model_mismatch", "model_internal"}};
    for (auto& j : res) {
        t.rows.push_back({j["m"], j["k"], j["triples"], j["dim_mismatch"], j["model_mismatch"], j["model_internal"]});
        std::string mk = mk_text(j["m"], j["k"]);
        b.add("dim H(P) = dim C[t] with complementary idempotents " + mk, j["dim_mismatch"].get<size_t>() == 0);
        b.add("H(P') matches F[v]/(V_1..V_{k+1}) " + mk, j["model_mismatch"].get<size_t>() == 0 && j["model_internal"].get<size_t>() == 0);
        b.add("left and right Omega cones agree " + mk, j["cone_sides_agree"]);
    }
    b.results["cap"] = cap_text(cap2);
    b.results["cases"] = res;
    b.tables["theorem_hp"] = t.to_json();
}

void cmd_qm_special(const Request& r, Builder& b)
{
    int cap2 = r.cap2.value_or(4);
    std::vector<int> ms;
    if (r.m) {
        if (*r.m < 2 || *r.m > 5) throw UsageError("m must lie in [2,5] for qm-special");
        ms = {*r.m};
    } else {
        ms = {2, 3, 4};
    }
    auto res = run_jobs(ms.size(), r.workers, [&](size_t i) {
        int m = ms[i];
        auto rep = verify_qm_special(m, cap2);
        json series = json::object();
        for (auto& [t, d] : rep.series) series[cap_text(t)] = d;
        return json{{"m", m},
                    {"weights", rep.weights},
                    {"hilbert_mismatch", rep.hilbert_mismatch},
                    {"monomial_failures", rep.monomial_failures},
                    {"squares_zero", rep.squares_zero},
                    {"commute", rep.commute},
                    {"commutator_omega", rep.commutator_omega},
                    {"adjacent_boundary", rep.adjacent_boundary},
                    {"series_by_total_weight", series},
                    {"pass", rep.ok()}};
    });
    Table t{{"m", "weights", "hilbert_mismatch", "monomial_failures"}};
    for (auto& j : res) {
        int m = j["m"];
        std::string ms_ = "m=" + std::to_string(m);
        t.rows.push_back({m, j["weights"], j["hilbert_mismatch"], j["monomial_failures"]});
        b.add("Hilbert series " + ms_, j["hilbert_mismatch"].get<size_t>() == 0);
        b.add("X_eps Omega^c nonzero " + ms_, j["monomial_failures"].get<size_t>() == 0);
        b.add("[X_i]^2 = 0 " + ms_, j["squares_zero"]);
        if (m == 2)
            b.add("[X_1][X_2] + [X_2][X_1] = [Omega] m=2", j["commutator_omega"]);
        else
            b.add("[X_i][X_j] = [X_j][X_i] " + ms_, j["commute"]);
        b.add("d X_{i-1,i+1} = X_i X_{i+1} + X_{i+1} X_i " + ms_, j["adjacent_boundary"]);
    }
    b.results["cap"] = cap_text(cap2);
    b.results["cases"] = res;
    b.tables["qm_special"] = t.to_json();
}

void cmd_dd(const Request& r, Builder& b)
{
    auto cs = cases(r, {{2, 1}, {3, 1}, {3, 2}, {4, 2}, {5, 2}});
    auto res = run_jobs(cs.size(), r.workers, [&](size_t i) {
        auto [m, k] = cs[i];
        auto rep = verify_dd_relation(m, k);
        return json{{"m", m},
                    {"k", k},
                    {"delta_terms", rep.delta_terms},
                    {"square_terms", rep.square_terms},
                    {"boundary_terms", rep.boundary_terms},
                    {"residual", rep.residual},
                    {"display_matches", rep.display_matches},
                    {"bidegree_ok", rep.bidegree_ok},
                    {"f_formula_ok", rep.f_formula_ok}};
    });
    for (auto& j : res) {
        std::string mk = mk_text(j["m"], j["k"]);
        b.add("DD relation residual zero " + mk, j["residual"].empty(),
              std::to_string(j["delta_terms"].get<size_t>()) + " delta^1 terms");
        b.add("delta^1 matches displayed terms " + mk, j["display_matches"]);
        b.add("bidegree support " + mk, j["bidegree_ok"]);
        b.add("f formula " + mk, j["f_formula_ok"]);
    }
    b.results["cases"] = res;
}

void cmd_koszul(const Request& r, Builder& b)
{
    std::vector<std::tuple<int, int, int>> cs;
    if (r.m || r.k) {
        int m = need(r.m, "m"), k = need(r.k, "k");
        check_mk(m, k);
        if (k < 1 || k > m - 1) throw UsageError("koszul needs 1 <= k <= m-1");
        cs.push_back({m, k, r.cap2.value_or(4)});
    } else {
        cs = {{2, 1, 4}, {3, 1, 4}, {3, 2, 4}, {4, 2, 2}};
        if (r.cap2)
            for (auto& c : cs) std::get<2>(c) = *r.cap2;
    }
    auto res = run_jobs(cs.size(), r.workers, [&](size_t i) {
        auto [m, k, cap2] = cs[i];
        auto rep = verify_quasi_iso(m, k, Weight::constant(m, cap2));
        size_t bad = 0;
        json table = json::array();
        for (auto& p : rep.pieces) {
            if (!p.chain_map || !p.iso) ++bad;
            size_t hc = 0, hq = 0;
            for (auto& [d, n] : p.h_cobar) hc += n;
            for (auto& [d, n] : p.h_q) hq += n;
            table.push_back({m, k, format_state(p.x), format_state(p.y), format_weight(p.w, m), p.cobar_dim, p.q_dim, hc, hq,
                             p.induced_rank, p.chain_map && p.iso});
        }
        return json{{"m", m},
                    {"k", k},
                    {"cap", cap_text(cap2)},
                    {"pieces", rep.pieces.size()},
                    {"bad_pieces", bad},
                    {"d2_zero", rep.d2_zero},
                    {"chain_map", rep.reversed_chain_map},
                    {"forward_order_chain_map", rep.forward_chain_map},
                    {"table", table},
                    {"pass", rep.ok()}};
    });
    Table t{{"m", "k", "x", "y", "w", "cobar_dim", "q_dim", "h_cobar", "h_q", "induced_rank", "iso"}};
    for (auto& j : res) {
        std::string mk = mk_text(j["m"], j["k"]);
        for (auto& row : j["table"]) t.rows.push_back(row);
        j.erase("table");
        b.add("cobar d^2 = 0 " + mk, j["d2_zero"]);
        b.add("Phi chain map " + mk, j["chain_map"]);
        b.add("Phi homology iso on every piece, w_i <= " + j["cap"].get<std::string>() + " " + mk,
              j["bad_pieces"].get<size_t>() == 0, std::to_string(j["pieces"].get<size_t>()) + " pieces");
    }
    bool example = !r.m && !r.k;
    if (r.m && r.k && *r.m == 2 && *r.k == 1) example = true;
    if (example) {
        auto ex = koszul_example_21();
        b.add("Phi([U1]*) = X_{0,1} in C(2,1)", ex.u1_ok, ex.u1);
        b.add("Phi([U2]*) = X_{1,2} in C(2,1)", ex.u2_ok, ex.u2);
        b.results["example_21"] = {{"U1", ex.u1}, {"U2", ex.u2}};
    }
    b.results["cases"] = res;
    b.tables["koszul"] = t.to_json();
}

void cmd_hochschild(const Request& r, Builder& b)
{
    std::vector<MK> cs;
    if (r.m || r.k) {
        int m = need(r.m, "m"), k = need(r.k, "k");
        if (!(0 < k && k < m - 1) || m > kMaxM) throw UsageError("hochschild needs 0 < k < m-1");
        cs = {{m, k}};
    } else {
        cs = {{3, 1}, {4, 2}, {5, 2}, {4, 1}};
    }
    auto res = run_jobs(cs.size(), r.workers, [&](size_t i) {
        auto [m, k] = cs[i];
        auto rep = verify_hochschild(m, k);
        json rows = json::array();
        for (auto* row : {&rep.row1, &rep.row2})
            for (auto& s : *row)
                rows.push_back({m, k, s.n, s.d, s.dim_prev, s.dim, s.dim_next, s.rank_in, s.rank_out, s.homology});
        return json{{"m", m},
                    {"k", k},
                    {"top", rep.top},
                    {"vanishing_ok", rep.vanishing_ok},
                    {"top_dim_ok", rep.top_dim_ok},
                    {"generator_ok", rep.generator_ok},
                    {"d2_ok", rep.d2_ok},
                    {"kernel_closure_ok", rep.kernel_closure_ok},
                    {"first_diff_ok", rep.first_diff_ok},
                    {"k1_checked", rep.k1_checked},
                    {"k1_basis_ok", rep.k1_basis_ok},
                    {"k1_diff_ok", rep.k1_diff_ok},
                    {"notes", rep.notes},
                    {"table", rows},
                    {"pass", rep.ok()}};
    });
    Table t{{"m", "k", "n", "d", "dim_prev", "dim", "dim_next", "rank_in", "rank_out", "sHH"}};
    for (auto& j : res) {
        std::string mk = mk_text(j["m"], j["k"]);
        for (auto& row : j["table"]) t.rows.push_back(row);
        j.erase("table");
        b.add("D^2 = 0 " + mk, j["d2_ok"]);
        b.add("sHH^{n,-1} = 0 off n = 2, 2m-2k " + mk, j["vanishing_ok"]);
        b.add("sHH^{2m-2k,-1} one-dimensional " + mk, j["top_dim_ok"]);
        b.add("(t,Omega) generates " + mk, j["generator_ok"]);
        b.add("closed only for the full idempotent sum " + mk, j["kernel_closure_ok"]);
        b.add("D(t,Omega) as L/R sum " + mk, j["first_diff_ok"]);
        if (j["k1_checked"].get<bool>()) {
            b.add("Omega+/- basis " + mk, j["k1_basis_ok"]);
            b.add("Omega+/- differentials " + mk, j["k1_diff_ok"]);
        }
    }
    b.results["cases"] = res;
    b.tables["hochschild"] = t.to_json();
}

Weight input_weight(PongAlgebra& A, const std::vector<PongElement>& elems)
{
    Weight s;
    for (auto& e : elems)
        if (!e.terms.empty()) s += A.weight(e.terms[0].g) + e.terms[0].v.weight();
    return s;
}

json mu_inputs(const Request& r, int m, int k)
{
    PongAlgebra A(m, k);
    std::optional<uint32_t> start;
    if (!r.start.empty()) start = checked_state(r.start, m, k, "start");
    InputSequence seq;
    try {
        seq = parse_inputs(A, r.inputs, r.quotient, start);
    } catch (const Error& e) {
        throw UsageError(std::string("--inputs: ") + e.what());
    }
    TransferEngine T(A, r.quotient, input_weight(A, seq.elems));
    auto v = T.mu(seq.elems);
    auto sc = T.star_chain(seq.elems);
    json j{{"m", m},
           {"k", k},
           {"algebra", r.quotient ? "Q" : "P"},
           {"inputs", seq.tokens},
           {"arity", seq.elems.size()},
           {"start", format_state(seq.start)},
           {"result", describe_class(T, v)},
           {"output_weight", format_weight(v.w, m)},
           {"output_degree", v.deg}};
    auto op = omega_power(T, v);
    j["omega_power"] = op ? json(*op) : json(nullptr);
    j["star_chain_agrees"] = !sc.obstruction && sc.top_class.cls == v.cls;
    if (r.tikz) {
        json pics = json::array();
        for (auto& e : seq.elems)
            for (auto& t : e.terms) pics.push_back({{"generator", format_pong(t.g)}, {"tikz", tikz_pong(t.g)}});
        j["tikz"] = pics;
    }
    return j;
}

void cmd_mu(const Request& r, Builder& b)
{
    if (!r.inputs.empty()) {
        int m = need(r.m, "m"), k = need(r.k, "k");
        check_mk(m, k);
        json j = mu_inputs(r, m, k);
        b.add("star chain agrees with the tree formula", j["star_chain_agrees"]);
        b.results = j;
        return;
    }
    // pong (m,k) of the general sequence; its clg parameter is m-k-1
    std::vector<MK> cs;
    if (r.m || r.k) {
        int m = need(r.m, "m"), k = need(r.k, "k");
        check_mk(m, k);
        if (!(0 < m - k - 1 && m - k - 1 < m - 1)) throw UsageError("the general sequence needs 0 < k < m-1");
        cs = {{m, k}};
    } else {
        cs = {{3, 1}, {4, 2}, {4, 1}};
    }
    auto res = run_jobs(cs.size(), r.workers, [&](size_t i) {
        auto [m, k] = cs[i];
        auto rep = verify_mu_sequence(m, m - k - 1);
        return json{{"m", m},
                    {"k", k},
                    {"clg_k", m - k - 1},
                    {"inputs", rep.inputs},
                    {"start", format_state(rep.start)},
                    {"result", rep.result},
                    {"equals_omega", rep.equals_omega},
                    {"star_agrees", rep.star_agrees},
                    {"gradings_ok", rep.gradings_ok},
                    {"lower_vanish", rep.lower_vanish},
                    {"pass", rep.ok()}};
    });
    for (auto& j : res) {
        std::string mk = "P" + mk_text(j["m"], j["k"]);
        b.add("mu = Omega " + mk, j["equals_omega"], j["result"]);
        b.add("star chain agrees " + mk, j["star_agrees"]);
        b.add("output grading " + mk, j["gradings_ok"]);
        b.add("shorter spans vanish " + mk, j["lower_vanish"]);
    }
    b.results["cases"] = res;
    if (!r.m && !r.k) {
        json ids = json::array();
        for (int m : {3, 4}) {
            bool all_ok = true;
            for (auto& s : star_identities(m)) {
                ids.push_back({{"m", m}, {"label", s.label}, {"chain_ok", s.chain_ok}, {"same_class", s.same_class}});
                all_ok = all_ok && s.chain_ok && s.same_class;
            }
            b.add("star chain identities m=" + std::to_string(m), all_ok);
        }
        b.results["star_identities"] = ids;
    }
}

void cmd_perm_sum(const Request& r, Builder& b)
{
    std::vector<int> ms;
    if (r.m) {
        if (*r.m < 2 || *r.m > 5) throw UsageError("m must lie in [2,5] for perm-sum");
        ms = {*r.m};
    } else {
        ms = {3, 4};
    }
    json res = json::array();
    for (int m : ms) {
        auto rep = verify_perm_sum(m, r.workers);
        res.push_back({{"m", m},
                       {"permutations", rep.permutations},
                       {"result", rep.result},
                       {"equals_omega", rep.equals_omega},
                       {"lower_checked", rep.lower_checked},
                       {"lower_vanish", rep.lower_vanish},
                       {"pass", rep.ok()}});
        b.add("sum over permutations = Omega m=" + std::to_string(m), rep.equals_omega, rep.result);
        b.add("shorter ascending sequences vanish m=" + std::to_string(m), rep.lower_vanish);
    }
    b.results["cases"] = res;
}

void cmd_degenerate(const Request& r, Builder& b)
{
    int cap2 = r.cap2.value_or(4);
    std::vector<int> ms;
    if (r.m) {
        if (*r.m < 2 || *r.m > 5) throw UsageError("m must lie in [2,5] for degenerate");
        ms = {*r.m};
    } else {
        ms = {2, 3, 4};
    }
    auto res = run_jobs(ms.size(), r.workers, [&](size_t i) {
        int m = ms[i];
        auto rep = verify_degenerate(m, cap2);
        return json{{"m", m},
                    {"p0_pieces", rep.p0_pieces},
                    {"pm_pieces", rep.pm_pieces},
                    {"p0_ok", rep.p0_ok},
                    {"pm_ok", rep.pm_ok},
                    {"notes", rep.notes}};
    });
    for (auto& j : res) {
        int m = j["m"];
        b.add("H(P(" + std::to_string(m) + ",0)) = F[v]", j["p0_ok"]);
        b.add("H(P(" + std::to_string(m) + "," + std::to_string(m - 1) + ")) = F[Omega]", j["pm_ok"]);
    }
    b.results["cap"] = cap_text(cap2);
    b.results["cases"] = res;
}

void run_into(const Request& r, Builder& b);

void cmd_all(const Request& r, Builder& b)
{
    static const std::vector<std::string> subs = {"dga-axioms", "displayed-diff", "atoms",   "theorem-hq",
                                                  "qm-special", "theorem-hp", "dd-check", "koszul",
                                                  "hochschild", "mu",         "perm-sum", "degenerate"};
    Request base;
    base.workers = r.workers;
    base.triples = r.triples;
    base.seed = r.seed;
    for (auto& c : subs) {
        Request s = base;
        s.command = c;
        if (c == "mu") {
            Builder fx;
            Request f = s;
            f.m = 4;
            f.k = 2;
            f.inputs = "v1, L2, L3, v4, R3, R2";
            json j = mu_inputs(f, 4, 2);
            b.add("mu: mu_6(v1,L2,L3,v4,R3,R2) = Omega in H(P(4,2))", j["omega_power"] == 1, j["result"]);
        }
        Builder sb;
        run_into(s, sb);
        for (auto ch : sb.checks) {
            ch["name"] = c + ": " + ch["name"].get<std::string>();
            b.checks.push_back(ch);
        }
        bool pass = true;
        for (auto& ch : sb.checks) pass = pass && ch["pass"].get<bool>();
        b.results[c] = {{"checks", sb.checks.size()}, {"pass", pass}};
    }
}

void run_into(const Request& r, Builder& b)
{
    const auto& c = r.command;
    if (c == "dga-axioms") return cmd_dga(r, b);
    if (c == "atoms") return cmd_atoms(r, b);
    if (c == "displayed-diff") return cmd_displayed_diff(r, b);
    if (c == "homology") return cmd_homology(r, b);
    if (c == "theorem-hq") return cmd_theorem_hq(r, b);
    if (c == "theorem-hp") return cmd_theorem_hp(r, b);
    if (c == "qm-special") return cmd_qm_special(r, b);
    if (c == "dd-check") return cmd_dd(r, b);
    if (c == "koszul") return cmd_koszul(r, b);
    if (c == "hochschild") return cmd_hochschild(r, b);
    if (c == "mu") return cmd_mu(r, b);
    if (c == "perm-sum") return cmd_perm_sum(r, b);
    if (c == "degenerate") return cmd_degenerate(r, b);
    if (c == "all") return cmd_all(r, b);
    throw UsageError("unknown command: " + c);
}

uint64_t fnv1a(const std::string& s)
{
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string cell_text(const json& v)
{
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    return v.dump();
}

std::string csv_cell(const json& v)
{
    std::string s = cell_text(v);
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

const std::vector<std::string>& command_names()
{
    static const std::vector<std::string> names = {"dga-axioms", "atoms",      "displayed-diff", "homology", "theorem-hq",
                                                   "theorem-hp", "qm-special", "dd-check",   "koszul",   "hochschild",
                                                   "mu",         "perm-sum",   "degenerate", "all"};
    return names;
}

json request_json(const Request& r)
{
    json j = {{"command", r.command}};
    const auto& c = r.command;
    if (r.m) j["m"] = *r.m;
    if (r.k) j["k"] = *r.k;
    bool capped = c == "dga-axioms" || c == "atoms" || c == "theorem-hq" || c == "theorem-hp" || c == "qm-special" ||
                  c == "koszul" || c == "degenerate";
    if (capped && r.cap2) j["weight_cap"] = cap_text(*r.cap2);
    if (c == "dga-axioms" || c == "all") {
        j["triples"] = r.triples;
        j["seed"] = r.seed;
    }
    if (c == "homology") {
        j["algebra"] = r.algebra;
        j["x"] = r.x;
        j["y"] = r.y;
        j["w"] = r.w;
    }
    if (c == "mu" && !r.inputs.empty()) {
        j["inputs"] = r.inputs;
        if (!r.start.empty()) j["start"] = r.start;
        j["quotient"] = r.quotient;
    }
    if (r.tikz && (c == "atoms" || c == "homology" || c == "mu" || c == "displayed-diff")) j["tikz"] = true;
    return j;
}

std::string cache_key(const Request& r)
{
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0')
       << fnv1a("schema=" + std::to_string(kSchemaVersion) + ";version=" + kToolVersion + ";" + request_json(r).dump());
    return os.str();
}

json run(const Request& r)
{
    if (std::find(command_names().begin(), command_names().end(), r.command) == command_names().end())
        throw UsageError("unknown command: " + r.command);
    if (r.cap2 && *r.cap2 <= 0) throw UsageError("--weight-cap must be positive");
    if (r.workers < 1) throw UsageError("--workers must be positive");
    Builder b;
    try {
        run_into(r, b);
    } catch (const UsageError&) {
        throw;
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    bool pass = true;
    for (auto& c : b.checks) pass = pass && c["pass"].get<bool>();
    json rep;
    rep["schema_version"] = kSchemaVersion;
    rep["tool"] = "pongalg";
    rep["tool_version"] = kToolVersion;
    rep["command"] = r.command;
    rep["request"] = request_json(r);
    rep["input_hash"] = cache_key(r);
    rep["checks"] = b.checks;
    rep["results"] = b.results;
    rep["tables"] = b.tables;
    rep["pass"] = pass;
    return rep;
}

json run_cached(const Request& r, const std::optional<std::filesystem::path>& dir, CacheMode mode, CacheOutcome* outcome)
{
    CacheOutcome oc;
    if (!dir || mode == CacheMode::Bypass) {
        if (outcome) *outcome = oc;
        return run(r);
    }
    std::filesystem::create_directories(*dir);
    auto path = *dir / (cache_key(r) + ".json");
    std::optional<json> cached;
    if (std::filesystem::exists(path)) {
        std::ifstream in(path);
        try {
            cached = json::parse(in);
        } catch (const json::parse_error&) {
            cached.reset();
        }
    }
    json rep;
    if (cached && mode == CacheMode::Use) {
        oc.hit = true;
        rep = *cached;
    } else {
        rep = run(r);
        if (cached) {
            oc.hit = true;
            oc.verified = cached->dump() == rep.dump();
        }
        std::ofstream out(path);
        out << rep.dump() << "\n";
    }
    if (outcome) *outcome = oc;
    return rep;
}

bool report_pass(const json& report) { return report.value("pass", false); }

std::string render_json(const json& report) { return report.dump(2) + "\n"; }

std::string render_csv(const json& report)
{
    std::ostringstream os;
    const json& tables = report["tables"];
    if (tables.empty()) {
        os << "check,pass\n";
        for (auto& c : report["checks"]) os << csv_cell(c["name"]) << "," << cell_text(c["pass"]) << "\n";
        return os.str();
    }
    bool first = true;
    for (auto& [name, t] : tables.items()) {
        if (!first) os << "\n";
        first = false;
        if (tables.size() > 1) os << "# " << name << "\n";
        std::string sep;
        for (auto& c : t["columns"]) {
            os << sep << csv_cell(c);
            sep = ",";
        }
        os << "\n";
        for (auto& row : t["rows"]) {
            sep.clear();
            for (auto& v : row) {
                os << sep << csv_cell(v);
                sep = ",";
            }
            os << "\n";
        }
    }
    return os.str();
}

std::string render_pretty(const json& report)
{
    std::ostringstream os;
    os << "pongalg " << report["command"].get<std::string>() << "  (schema " << report["schema_version"].get<int>()
       << ", key " << report["input_hash"].get<std::string>() << ")\n";
    for (auto& [k, v] : report["request"].items())
        if (k != "command") os << "  " << k << " = " << cell_text(v) << "\n";
    const json& res = report["results"];
    for (const char* key : {"result", "inputs", "start", "output_weight", "output_degree", "first", "second", "first_weight",
                            "x", "y", "w", "total", "euler"})
        if (res.contains(key)) os << "  " << key << ": " << (res[key].is_array() ? res[key].dump() : cell_text(res[key])) << "\n";
    if (res.contains("representatives"))
        for (auto& rep : res["representatives"])
            os << "  class in degree " << rep["degree"].get<int>() << ": " << rep["cycle"].get<std::string>() << "\n";
    for (auto& [name, t] : report["tables"].items()) {
        std::vector<size_t> width;
        std::vector<std::vector<std::string>> cells;
        cells.emplace_back();
        for (auto& c : t["columns"]) cells.back().push_back(c.get<std::string>());
        for (auto& row : t["rows"]) {
            cells.emplace_back();
            for (auto& v : row) cells.back().push_back(cell_text(v));
        }
        for (auto& row : cells)
            for (size_t i = 0; i < row.size(); ++i) {
                if (width.size() <= i) width.push_back(0);
                width[i] = std::max(width[i], row[i].size());
            }
        os << "\n" << name << "\n";
        for (auto& row : cells) {
            os << " ";
            for (size_t i = 0; i < row.size(); ++i) os << " " << std::setw(int(width[i])) << row[i];
            os << "\n";
        }
    }
    if (res.contains("tikz")) {
        os << "\n";
        const json& tz = res["tikz"];
        if (tz.is_string()) os << tz.get<std::string>() << "\n";
        else
            for (auto& p : tz) os << "% " << p["generator"].get<std::string>() << "\n" << p["tikz"].get<std::string>() << "\n";
    }
    os << "\n";
    size_t passed = 0;
    for (auto& c : report["checks"]) {
        bool p = c["pass"];
        passed += p;
        os << (p ? "[pass] " : "[FAIL] ") << c["name"].get<std::string>();
        if (c.contains("detail")) os << "  " << c["detail"].get<std::string>();
        os << "\n";
    }
    os << passed << "/" << report["checks"].size() << " checks passed: " << (report_pass(report) ? "PASS" : "FAIL") << "\n";
    return os.str();
}

}  // namespace pong
