#include "pong/reports.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <unistd.h>

using nlohmann::json;
using pong::Request;

namespace {

struct Line {
    std::string id;
    std::string what;
    std::function<std::pair<bool, std::string>()> run;
};

Request req(const std::string& command)
{
    Request r;
    r.command = command;
    return r;
}

std::pair<bool, std::string> summary(const json& rep)
{
    size_t n = rep["checks"].size(), ok = 0;
    std::string first_bad;
    for (auto& c : rep["checks"]) {
        if (c["pass"].get<bool>()) ++ok;
        else if (first_bad.empty()) first_bad = c["name"].get<std::string>();
    }
    std::string d = std::to_string(ok) + "/" + std::to_string(n) + " checks";
    if (!first_bad.empty()) d += "; first failure: " + first_bad;
    return {pong::report_pass(rep), d};
}

// Checks of a report whose name starts with one of the prefixes.
std::pair<bool, std::string> select(const json& rep, const std::vector<std::string>& prefixes)
{
    bool ok = true;
    size_t n = 0;
    for (auto& c : rep["checks"]) {
        const auto& name = c["name"].get<std::string>();
        for (auto& p : prefixes)
            if (name.rfind(p, 0) == 0) {
                ++n;
                ok = ok && c["pass"].get<bool>();
            }
    }
    return {ok && n > 0, std::to_string(n) + " checks"};
}

std::string counterexamples(const json& rep, const char* key)
{
    size_t bad = 0, triples = 0;
    for (auto& c : rep["results"]["cases"]) {
        bad += c[key].get<size_t>();
        triples += c["triples"].get<size_t>();
    }
    return std::to_string(bad) + " counterexamples in " + std::to_string(triples) + " triples";
}

std::pair<bool, std::string> determinism()
{
    Request a = req("all");
    std::string one = pong::run(a).dump();
    std::string two = pong::run(a).dump();
    a.workers = 4;
    std::string four = pong::run(a).dump();
    Request p = req("perm-sum");
    p.workers = 3;
    std::string ps3 = pong::run(p).dump();
    p.workers = 1;
    std::string ps1 = pong::run(p).dump();

    auto dir = std::filesystem::temp_directory_path() / ("pongalg-acceptance-" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    Request h = req("theorem-hq");
    h.m = 4;
    pong::CacheOutcome o1, o2, o3;
    std::string c1 = pong::run_cached(h, dir, pong::CacheMode::Use, &o1).dump();
    std::string c2 = pong::run_cached(h, dir, pong::CacheMode::Use, &o2).dump();
    std::string c3 = pong::run_cached(h, dir, pong::CacheMode::Verify, &o3).dump();
    std::string c4 = pong::run_cached(h, dir, pong::CacheMode::Bypass).dump();
    std::filesystem::remove_all(dir);

    bool runs = one == two && one == four && ps1 == ps3;
    bool cache = !o1.hit && o2.hit && o3.verified && c1 == c2 && c2 == c3 && c3 == c4;
    return {runs && cache, std::string("repeat/workers ") + (runs ? "identical" : "DIFFER") + ", cache " +
                               (cache ? "hit and bypass identical" : "MISMATCH")};
}

}  // namespace

int main(int argc, char** argv)
{
    std::string only = argc > 1 ? argv[1] : "";
    if (only == "--help" || only == "-h") {
        std::cout << "usage: acceptance [1..13 | 4r]\n";
        return 0;
    }

    std::optional<json> hq;
    auto hq_report = [&]() -> const json& {
        if (!hq) hq = pong::run(req("theorem-hq"));
        return *hq;
    };

    std::vector<Line> lines = {
        {"1", "DGA axioms, m <= 5, all k, weights <= 2",
         [] {
             auto t0 = std::chrono::steady_clock::now();
             auto s = summary(pong::run(req("dga-axioms")));
             double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
             return std::make_pair(s.first && sec < 120, s.second + (sec < 120 ? ", under 2 min" : ", over 2 min"));
         }},
        {"2", "displayed differentials and running-example caption", [] { return summary(pong::run(req("displayed-diff"))); }},
        {"3", "2 Totweight - cross >= 1, equality on atomics, factor_atomic", [] { return summary(pong::run(req("atoms"))); }},
        {"4", "H(Q') trichotomy as literally stated (interleaved, w_i <= 1), m <= 5",
         [&] {
             auto s = select(hq_report(), {"dim H(Q') in {0,1}", "dim H(Q') = 1 iff interleaved and w_i <= 1"});
             return std::make_pair(s.first, s.second + ", " + counterexamples(hq_report(), "literal_failures"));
         }},
        {"4r", "H(Q') trichotomy with constancy on each V_s range, m <= 5",
         [&] {
             auto s = select(hq_report(), {"dim H(Q') in {0,1}", "dim H(Q') = 1 iff interleaved, w_i <= 1 and w constant"});
             return std::make_pair(s.first, s.second + ", " + counterexamples(hq_report(), "refined_failures"));
         }},
        {"5", "H(Q(m,m-1)) Hilbert series and relations, m <= 4", [] { return summary(pong::run(req("qm-special"))); }},
        {"6", "H(P(m,k)) vs C(m,m-k-1)[t], model complex, m <= 4", [] { return summary(pong::run(req("theorem-hp"))); }},
        {"7", "DD relation and bidegree support", [] { return summary(pong::run(req("dd-check"))); }},
        {"8", "Phi quasi-isomorphism and the C(2,1) example", [] { return summary(pong::run(req("koszul"))); }},
        {"9", "small Hochschild cohomology in row -1", [] { return summary(pong::run(req("hochschild"))); }},
        {"10", "mu_6(v1,L2,L3,v4,R3,R2) = Omega, general sequences, star chains",
         [] {
             Request f = req("mu");
             f.m = 4;
             f.k = 2;
             f.inputs = "v1, L2, L3, v4, R3, R2";
             json fx = pong::run(f);
             bool ok = fx["results"]["result"] == "Ω" && pong::report_pass(fx);
             auto s = summary(pong::run(req("mu")));
             return std::make_pair(ok && s.first, "example " + fx["results"]["result"].get<std::string>() + ", " + s.second);
         }},
        {"11", "sum over permutations of mu_m(X_1..X_m) = Omega, m = 3, 4", [] { return summary(pong::run(req("perm-sum"))); }},
        {"12", "H(P(m,0)) = F[v], H(P(m,m-1)) = F[Omega], m <= 4", [] { return summary(pong::run(req("degenerate"))); }},
        {"13", "byte-identical reports across runs, workers and cache", determinism},
    };

    bool all_ok = true, found = false;
    for (auto& l : lines) {
        if (!only.empty() && l.id != only) continue;
        found = true;
        bool ok;
        std::string detail;
        try {
            std::tie(ok, detail) = l.run();
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("error: ") + e.what();
        }
        all_ok = all_ok && ok;
        std::printf("criterion %-3s %s  %s  (%s)\n", l.id.c_str(), ok ? "PASS" : "FAIL", l.what.c_str(), detail.c_str());
    }
    if (!found) {
        std::cerr << "unknown criterion " << only << "\n";
        return 2;
    }
    return all_ok ? 0 : 1;
}
