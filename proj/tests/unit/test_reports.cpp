#include "doctest.h"
#include "pong/reports.hpp"

#include <cstdio>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>

using namespace pong;
using nlohmann::json;

namespace {

std::string fnv1a(const std::string& s)
{
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Request fixture()
{
    Request r;
    r.command = "mu";
    r.m = 4;
    r.k = 2;
    r.inputs = "v1, L2, L3, v4, R3, R2";
    return r;
}

struct TempDir {
    std::filesystem::path p;
    TempDir()
    {
        std::random_device rd;
        p = std::filesystem::temp_directory_path() / ("pongalg-test-" + std::to_string(rd()));
        std::filesystem::create_directories(p);
    }
    ~TempDir() { std::filesystem::remove_all(p); }
};

}  // namespace

TEST_CASE("request echo and cache key")
{
    Request r = fixture();
    CHECK(request_json(r).dump() == R"({"command":"mu","inputs":"v1, L2, L3, v4, R3, R2","k":2,"m":4,"quotient":false})");
    CHECK(cache_key(r) == fnv1a("schema=1;version=1.0.0;" + request_json(r).dump()));
    Request w = r;
    w.workers = 7;
    CHECK(cache_key(w) == cache_key(r));
    Request o = r;
    o.k = 1;
    CHECK(cache_key(o) != cache_key(r));
}

TEST_CASE("mu fixture report")
{
    json j = run(fixture());
    CHECK(j["schema_version"] == 1);
    CHECK(j["tool"] == "pongalg");
    CHECK(j["tool_version"] == "1.0.0");
    CHECK(j["input_hash"] == cache_key(fixture()));
    CHECK(j["results"]["result"] == "Ω");
    CHECK(j["results"]["start"] == "{2,3}");
    CHECK(j["results"]["output_weight"] == "(1,1,1,1)");
    CHECK(report_pass(j));
    CHECK(render_json(j) == render_json(run(fixture())));
}

TEST_CASE("homology fixture")
{
    Request r;
    r.command = "homology";
    r.m = 4;
    r.k = 2;
    r.x = r.y = "1,3";
    r.w = "1,1,1,1";
    json j = run(r);
    CHECK(j["results"]["total"] == 1);
    CHECK(j["results"]["euler"] == 1);
    CHECK(j["results"]["representatives"][0]["degree"] == 4);
}

TEST_CASE("renderers")
{
    json j = run(fixture());
    std::string csv = render_csv(j);
    CHECK(csv.rfind("check,pass\n", 0) == 0);
    CHECK(csv.find("star chain agrees with the tree formula,true") != std::string::npos);
    CHECK(json::parse(render_json(j)) == j);
    CHECK(render_pretty(j).find("Ω") != std::string::npos);
}

TEST_CASE("cache modes give the same bytes")
{
    TempDir d;
    Request r;
    r.command = "theorem-hq";
    r.m = 3;
    CacheOutcome a, b, c;
    std::string fresh = run_cached(r, d.p, CacheMode::Use, &a).dump();
    CHECK_FALSE(a.hit);
    CHECK(std::filesystem::exists(d.p / (cache_key(r) + ".json")));
    std::string hit = run_cached(r, d.p, CacheMode::Use, &b).dump();
    CHECK(b.hit);
    std::string ver = run_cached(r, d.p, CacheMode::Verify, &c).dump();
    CHECK(c.verified);
    std::string byp = run_cached(r, d.p, CacheMode::Bypass).dump();
    CHECK(fresh == hit);
    CHECK(hit == ver);
    CHECK(ver == byp);
}

TEST_CASE("a tampered cache entry is caught by verify")
{
    TempDir d;
    Request r = fixture();
    run_cached(r, d.p, CacheMode::Use);
    auto file = d.p / (cache_key(r) + ".json");
    json j = json::parse(std::ifstream(file));
    j["results"]["result"] = "0";
    std::ofstream(file) << j.dump();
    CacheOutcome o;
    run_cached(r, d.p, CacheMode::Verify, &o);
    CHECK_FALSE(o.verified);
}

TEST_CASE("usage errors")
{
    Request r;
    r.command = "dga-axioms";
    r.m = 1;
    CHECK_THROWS_AS(run(r), UsageError);
    r.m = 9;
    CHECK_THROWS_AS(run(r), UsageError);
    Request h;
    h.command = "hochschild";
    h.m = 4;
    h.k = 0;
    CHECK_THROWS_AS(run(h), UsageError);
    Request u;
    u.command = "nope";
    CHECK_THROWS_AS(run(u), UsageError);
    Request bad = fixture();
    bad.inputs = "v1, Q2";
    CHECK_THROWS_AS(run(bad), UsageError);
}

TEST_CASE("worker count does not change reports")
{
    for (auto c : {"dd-check", "perm-sum", "atoms"}) {
        Request r;
        r.command = c;
        std::string one = run(r).dump();
        r.workers = 3;
        CHECK(run(r).dump() == one);
    }
}

TEST_CASE("command list")
{
    CHECK(command_names().size() == 14);
    CHECK(std::find(command_names().begin(), command_names().end(), "all") != command_names().end());
}
