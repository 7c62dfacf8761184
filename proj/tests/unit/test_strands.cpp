#include "doctest.h"
#include "pong/strands.hpp"

#include <cmath>

using namespace pong;

namespace {

// Fold a real position into [1/2, m-1/2] by the two wall reflections.
double fold_real(int m, double x)
{
    double P = 2.0 * m - 2.0;
    double y = std::fmod(x - 0.5, P);
    if (y < 0) y += P;
    if (y > m - 1) y = P - y;
    return y + 0.5;
}

// Doubled weight by walking the lifted strand one half-level at a time.
Weight walk_weight(const PongData& g)
{
    Weight w;
    for (int s = 1; s < g.m; ++s) {
        if (!g.has(s)) continue;
        long a = std::min<long>(s, g.f[s]), b = std::max<long>(s, g.f[s]);
        for (long j = a; j < b; ++j) {
            int c = int(std::lround(fold_real(g.m, j + 0.5) + 0.5));
            w[c - 1] += (c == 1 || c == g.m) ? 2 : 1;
        }
    }
    return w;
}

// Crossings counted on the folded picture: sign changes between strands plus wall contacts.
int sampled_crossings(const PongData& g)
{
    const int N = 20011;
    std::vector<int> st;
    for (int s = 1; s < g.m; ++s)
        if (g.has(s)) st.push_back(s);
    auto pos = [&](int s, double t) { return fold_real(g.m, s + (g.f[s] - s) * t); };
    int count = 0;
    for (size_t a = 0; a < st.size(); ++a) {
        // wall contacts: the lifted position passes a wall
        long lo = std::min<long>(st[a], g.f[st[a]]), hi = std::max<long>(st[a], g.f[st[a]]);
        for (long j = lo; j < hi; ++j) {
            double h = j + 0.5;
            double y = std::fmod(h - 0.5, 2.0 * g.m - 2.0);
            if (y < 0) y += 2.0 * g.m - 2.0;
            if (y == 0 || y == g.m - 1) ++count;
        }
        for (size_t b = a + 1; b < st.size(); ++b) {
            double prev = pos(st[a], 0.5 / N) - pos(st[b], 0.5 / N);
            for (int i = 1; i < N; ++i) {
                double t = (i + 0.5) / N;
                double cur = pos(st[a], t) - pos(st[b], t);
                if ((prev < 0) != (cur < 0)) ++count;
                prev = cur;
            }
        }
    }
    return count;
}

}  // namespace

TEST_CASE("parse and format round trip")
{
    PongData g = parse_pong("m=4 ((1,-2),(2,1))");
    CHECK(g.m == 4);
    CHECK(g.mask == 0b110);
    CHECK(g.f[1] == -2);
    CHECK(g.f[2] == 1);
    CHECK(format_pong(g) == "((1,-2),(2,1))");
    CHECK(parse_pong("m=4 " + format_pong(g)) == g);
}

TEST_CASE("running example weight and crossings")
{
    PongData g = make_pong(4, {{1, -2}, {2, 1}});
    Weight w = local_multiplicities(g);
    CHECK(format_weight(w, 4) == "(1,1,1/2,0)");
    CHECK(cross_count(g) == 2);
    CHECK(walk_weight(g) == w);
    CHECK(sampled_crossings(g) == 2);
}

TEST_CASE("folded targets must be distinct")
{
    CHECK_THROWS_AS(make_pong(4, {{1, 3}, {2, -3}}), Error);
    CHECK(valid(make_pong(5, {{1, 3}, {2, -3}})));
}

TEST_CASE("weights and crossings agree with the folded picture")
{
    for (auto [m, k] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 2}, {4, 3}, {5, 2}}) {
        auto gens = enumerate_pong(m, k, Weight::constant(m, m == 5 ? 2 : 4));
        REQUIRE(!gens.empty());
        for (auto& g : gens) {
            CHECK(walk_weight(g) == local_multiplicities(g));
            CHECK(sampled_crossings(g) == cross_count(g));
        }
    }
}

TEST_CASE("resolving a crossing removes it")
{
    PongData g = make_pong(4, {{1, -2}, {2, 1}});
    for (auto& c : crossings(g)) {
        PongData r = resolve(g, c);
        CHECK(valid(r));
        CHECK(cross_count(r) < cross_count(g));
        Weight drop = local_multiplicities(g) - local_multiplicities(r);
        CHECK(drop.nonneg());
        CHECK(drop.integral());
    }
}

TEST_CASE("composition adds weight")
{
    auto gens = enumerate_pong(3, 1, Weight::constant(3, 2));
    size_t composed = 0;
    for (auto& a : gens)
        for (auto& b : gens) {
            auto c = compose(a, b);
            if (!c) continue;
            ++composed;
            CHECK(c->mask == a.mask);
            CHECK(c->image() == b.image());
            CHECK(walk_weight(*c).leq(walk_weight(a) + walk_weight(b)));
        }
    CHECK(composed > 0);
}

TEST_CASE("tikz output is a picture")
{
    std::string t = tikz_pong(make_pong(4, {{1, -2}, {2, 1}}));
    CHECK(t.find("tikzpicture") != std::string::npos);
}
