#include "pong/reports.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>

using pong::Request;

namespace {

int parse_cap2(const std::string& s)
{
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        if (s.substr(slash + 1) != "2") throw pong::UsageError("--weight-cap must be a multiple of 1/2");
        return std::stoi(s.substr(0, slash));
    }
    double v = std::stod(s);
    int d = int(v * 2 + 0.5);
    if (d != v * 2) throw pong::UsageError("--weight-cap must be a multiple of 1/2");
    return d;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"pongalg: exact GF(2) checks for pong algebras"};
    app.require_subcommand(1);
    app.set_version_flag("--version", pong::kToolVersion);

    Request req;
    int m = -1, k = -1;
    std::string cap, format = "pretty", output;
    bool no_cache = false, cache_verify = false;

    const std::map<std::string, std::string> about = {
        {"dga-axioms", "d^2 = 0, Leibniz and associativity of P(m,k)"},
        {"atoms", "2 Totweight - cross >= 1, atomic generators and factorization"},
        {"displayed-diff", "the two displayed differentials and the running example"},
        {"homology", "homology of one (x, y, w) piece"},
        {"theorem-hq", "dimension of H(Q') on every piece"},
        {"theorem-hp", "H(P) against C(m,m-k-1)[t] and the model complex"},
        {"qm-special", "H(Q(m,m-1)): Hilbert series and relations"},
        {"dd-check", "DD structure relation"},
        {"koszul", "Phi from the cobar algebra is a quasi-isomorphism"},
        {"hochschild", "small model Hochschild cohomology, rows -1 and -2"},
        {"mu", "higher products on homology"},
        {"perm-sum", "sum over permutations of mu_m(X_1, ..., X_m)"},
        {"degenerate", "H(P(m,0)) and H(P(m,m-1))"},
        {"all", "every check at its default scan"},
    };
    for (const auto& name : pong::command_names()) {
        auto* sub = app.add_subcommand(name, about.count(name) ? about.at(name) : "");
        sub->add_option("--m", m, "number of positions");
        sub->add_option("--k", k, "number of strands (pong algebra parameter)");
        sub->add_option("--weight-cap", cap, "componentwise weight cap, e.g. 2 or 3/2");
        sub->add_option("--workers", req.workers, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--format", format, "json, csv or pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
        sub->add_option("--output", output, "write the report here instead of stdout");
        sub->add_flag("--tikz", req.tikz, "include TikZ pictures of the generators involved");
        sub->add_flag("--no-cache", no_cache, "ignore PONGALG_CACHE_DIR");
        sub->add_flag("--cache-verify", cache_verify, "recompute and compare against the cached report");
        if (name == "homology") {
            sub->add_option("--algebra", req.algebra, "pong, quotient, pong-cone or quotient-cone");
            sub->add_option("--x", req.x, "left idempotent, e.g. 1,3")->required();
            sub->add_option("--y", req.y, "right idempotent")->required();
            sub->add_option("--w", req.w, "weight vector, e.g. 1,1,1/2,0")->required();
        }
        if (name == "mu") {
            sub->add_option("--inputs", req.inputs, "comma-separated inputs, e.g. \"v1, L2, L3, v4, R3, R2\"");
            sub->add_option("--start", req.start, "left idempotent of the first input");
            sub->add_flag("--quotient", req.quotient, "work in Q = P/(v)");
        }
        if (name == "dga-axioms" || name == "all") {
            sub->add_option("--triples", req.triples, "random associativity triples");
            sub->add_option("--seed", req.seed, "RNG seed for the triples");
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    req.command = app.get_subcommands().front()->get_name();
    try {
        if (m >= 0) req.m = m;
        if (k >= 0) req.k = k;
        if (!cap.empty()) req.cap2 = parse_cap2(cap);

        std::optional<std::filesystem::path> dir;
        if (const char* env = std::getenv("PONGALG_CACHE_DIR"); env && *env) dir = env;
        auto mode = no_cache ? pong::CacheMode::Bypass : cache_verify ? pong::CacheMode::Verify : pong::CacheMode::Use;
        pong::CacheOutcome oc;
        auto rep = pong::run_cached(req, dir, mode, &oc);

        std::string text = format == "json" ? pong::render_json(rep) : format == "csv" ? pong::render_csv(rep) : pong::render_pretty(rep);
        if (output.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(output);
            out << text;
        }
        if (!oc.verified) {
            std::cerr << "pongalg: cached report differs from a fresh run (key " << pong::cache_key(req) << ")\n";
            return 3;
        }
        if (!pong::report_pass(rep)) {
            for (auto& c : rep["checks"])
                if (!c["pass"].get<bool>()) std::cerr << "pongalg: failed check: " << c["name"].get<std::string>() << "\n";
            return 1;
        }
        return 0;
    } catch (const pong::UsageError& e) {
        std::cerr << "pongalg: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "pongalg: internal error: " << e.what() << "\n";
        return 4;
    }
}
