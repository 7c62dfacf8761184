#include "pong/strands.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace pong {

namespace {

long floor_div(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
long ceil_div(long a, long b) { return -floor_div(-a, b); }
long mod(long a, long b) { return ((a % b) + b) % b; }

}  // namespace

GroupElement GroupElement::operator*(const GroupElement& o) const
{
    if (!reflect) return {o.reflect, o.t + t};
    return {!o.reflect, t - o.t};
}

Fold fold(int m, long n)
{
    if (m < 2) throw Error("m must be at least 2");
    long P = 2 * m - 2;
    long r = mod(n, P);
    if (r >= 1 && r <= m - 1) return {int(r), {false, (n - r) / P}};
    long c = mod(1 - n, P);
    return {int(c), {true, (n - 1 + c) / P}};
}

int fold_half(int m, long j)
{
    long u = mod(j, 2 * m - 2);
    return u <= m - 1 ? int(u + 1) : int(2 * m - 1 - u);
}

uint32_t PongData::image() const
{
    uint32_t r = 0;
    for (int s = 1; s < m; ++s)
        if (has(s)) r |= 1u << fold(m, f[s]).cls;
    return r;
}

bool PongData::idempotent() const
{
    for (int s = 1; s < m; ++s)
        if (has(s) && f[s] != s) return false;
    return true;
}

PongData PongData::idem(int m, uint32_t mask)
{
    PongData d;
    d.m = uint8_t(m);
    d.mask = uint8_t(mask);
    for (int s = 1; s < m; ++s)
        if ((mask >> s) & 1u) d.f[s] = int16_t(s);
    return d;
}

PongData make_pong(int m, const std::vector<std::pair<int, long>>& pairs)
{
    if (m < 2 || m > kMaxM) throw Error("m out of range");
    PongData d;
    d.m = uint8_t(m);
    for (auto [s, t] : pairs) {
        if (s < 1 || s > m - 1) throw Error("source out of range: " + std::to_string(s));
        if (d.has(s)) throw Error("repeated source: " + std::to_string(s));
        d.mask |= uint8_t(1u << s);
        d.f[s] = int16_t(t);
    }
    if (!valid(d)) throw Error("induced map on {1..m-1} is not injective");
    return d;
}

bool valid(const PongData& d)
{
    if (d.m < 2 || d.m > kMaxM) return false;
    if (d.mask & 1u) return false;
    if (d.mask >> d.m) return false;
    if (d.has(d.m)) return false;
    return __builtin_popcount(d.image()) == d.k();
}

long lift_apply(const PongData& d, long n)
{
    Fold fo = fold(d.m, n);
    if (!d.has(fo.cls)) throw Error("source not in domain");
    return fo.gamma.apply(d.m, d.f[fo.cls]);
}

Weight strand_weight(int m, long s, long t)
{
    Weight w;
    long lo = std::min(s, t), hi = std::max(s, t);
    for (long j = lo; j < hi; ++j) {
        int c = fold_half(m, j);
        w[c - 1] += (c == 1 || c == m) ? 2 : 1;
    }
    return w;
}

Weight local_multiplicities(const PongData& d)
{
    Weight w;
    for (int s = 1; s < d.m; ++s)
        if (d.has(s)) w += strand_weight(d.m, s, d.f[s]);
    return w;
}

std::vector<Crossing> crossings(const PongData& d)
{
    const int m = d.m;
    const long P = 2 * m - 2;
    std::vector<Crossing> out;
    auto record = [&](int s, int t, GroupElement g) {
        Crossing a{s, g.apply(m, t), t, g};
        GroupElement gi = g.inverse();
        Crossing b{t, gi.apply(m, s), s, gi};
        const Crossing& c = (a.i < b.i || (a.i == b.i && a.j <= b.j)) ? a : b;
        for (auto& e : out)
            if (e == c) return;
        out.push_back(c);
    };
    for (int s = 1; s < m; ++s) {
        if (!d.has(s)) continue;
        long fs = d.f[s];
        long los = std::min<long>(s, fs), his = std::max<long>(s, fs);
        for (int t = 1; t < m; ++t) {
            if (!d.has(t)) continue;
            long ft = d.f[t];
            long lot = std::min<long>(t, ft), hit = std::max<long>(t, ft);
            for (long n = ceil_div(los - hit, P); n <= floor_div(his - lot, P); ++n) {
                if (t == s && n == 0) continue;
                long b = t + P * n, fb = ft + P * n;
                if ((s - b) * (fs - fb) < 0) record(s, t, {false, n});
            }
            for (long n = ceil_div(los - 1 + lot, P); n <= floor_div(his - 1 + hit, P); ++n) {
                long b = 1 - t + P * n, fb = 1 - ft + P * n;
                if ((s - b) * (fs - fb) < 0) record(s, t, {true, n});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Crossing& a, const Crossing& b) {
        return a.i != b.i ? a.i < b.i : a.j < b.j;
    });
    return out;
}

int cross_count(const PongData& d) { return int(crossings(d).size()); }

PongData resolve(const PongData& d, const Crossing& c)
{
    const int m = d.m;
    int i = int(c.i);
    if (!d.has(i) || !d.has(c.t) || c.gamma.apply(m, c.t) != c.j) throw Error("not a crossing of this datum");
    long fi = d.f[i], fj = c.gamma.apply(m, d.f[c.t]);
    if ((c.i - c.j) * (fi - fj) >= 0) throw Error("not a crossing of this datum");
    PongData r = d;
    if (c.t == i) {
        r.f[i] = int16_t(c.gamma.apply(m, d.f[i]));
    } else {
        r.f[i] = int16_t(fj);
        r.f[c.t] = int16_t(c.gamma.inverse().apply(m, fi));
    }
    return r;
}

std::optional<PongData> compose(const PongData& f, const PongData& g)
{
    if (f.m != g.m) throw Error("ambient mismatch");
    if (f.image() != g.mask) return std::nullopt;
    PongData r = f;
    for (int s = 1; s < f.m; ++s)
        if (f.has(s)) r.f[s] = int16_t(lift_apply(g, f.f[s]));
    return r;
}

std::string format_pong(const PongData& d)
{
    std::string out = "(";
    bool first = true;
    for (int s = 1; s < d.m; ++s) {
        if (!d.has(s)) continue;
        if (!first) out += ",";
        out += "(" + std::to_string(s) + "," + std::to_string(d.f[s]) + ")";
        first = false;
    }
    return out + ")";
}

std::string format_pong_full(const PongData& d)
{
    return "m=" + std::to_string(d.m) + " k=" + std::to_string(d.k()) + " " + format_pong(d);
}

PongData parse_pong(const std::string& text)
{
    int m = -1, k = -1;
    std::string rest = text;
    auto take = [&](const char* key) {
        auto p = rest.find(key);
        if (p == std::string::npos) return -1;
        size_t q = p + std::string(key).size();
        size_t e = q;
        while (e < rest.size() && (std::isdigit(uint8_t(rest[e])) || rest[e] == '-')) ++e;
        int v = std::stoi(rest.substr(q, e - q));
        rest.erase(p, e - p);
        return v;
    };
    m = take("m=");
    k = take("k=");
    if (m < 0) throw Error("pong datum needs an m= prefix");
    std::vector<long> nums;
    std::string cur;
    for (char c : rest) {
        if (std::isdigit(uint8_t(c)) || c == '-') {
            cur += c;
        } else {
            if (!cur.empty()) nums.push_back(std::stol(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) nums.push_back(std::stol(cur));
    if (nums.size() % 2) throw Error("pong datum needs (source,target) pairs");
    std::vector<std::pair<int, long>> pairs;
    for (size_t i = 0; i < nums.size(); i += 2) pairs.push_back({int(nums[i]), nums[i + 1]});
    PongData d = make_pong(m, pairs);
    if (k >= 0 && d.k() != k) throw Error("k= does not match the number of strands");
    return d;
}

std::vector<PongData> enumerate_pong(int m, const std::vector<uint32_t>& masks, const Weight& cap)
{
    std::vector<PongData> out;
    for (uint32_t mask : masks) {
        std::vector<int> src = mask_elems(mask);
        PongData d = PongData::idem(m, mask);
        std::function<void(size_t, uint32_t, Weight)> rec = [&](size_t idx, uint32_t used, Weight rem) {
            if (idx == src.size()) {
                out.push_back(d);
                return;
            }
            int s = src[idx];
            if (!((used >> s) & 1u)) {
                d.f[s] = int16_t(s);
                rec(idx + 1, used | (1u << s), rem);
            }
            for (int dir : {+1, -1}) {
                Weight acc;
                long t = s;
                while (true) {
                    long j = dir > 0 ? t : t - 1;
                    t += dir;
                    int c = fold_half(m, j);
                    acc[c - 1] += (c == 1 || c == m) ? 2 : 1;
                    if (!acc.leq(rem)) break;
                    int cls = fold(m, t).cls;
                    if ((used >> cls) & 1u) continue;
                    d.f[s] = int16_t(t);
                    rec(idx + 1, used | (1u << cls), rem - acc);
                }
            }
            d.f[s] = int16_t(s);
        };
        rec(0, 0, cap);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PongData> enumerate_pong(int m, int k, const Weight& cap)
{
    return enumerate_pong(m, subsets_of_size(1, m - 1, k), cap);
}

std::string tikz_pong(const PongData& d)
{
    const int m = d.m;
    std::ostringstream os;
    os << "\\begin{tikzpicture}[yscale=2]\n";
    os << "  \\draw[thick] (0.5,0) -- (0.5,1);\n";
    os << "  \\draw[thick] (" << m - 0.5 << ",0) -- (" << m - 0.5 << ",1);\n";
    for (int s = 1; s < m; ++s) {
        if (!d.has(s)) continue;
        long a = s, b = d.f[s];
        // Fold the straight lifted segment into the strip, bending at walls.
        std::vector<std::pair<double, double>> pts;
        auto folded = [&](double x) {
            double P = 2 * m - 2;
            double u = x - 0.5;
            u = u - P * std::floor(u / P);
            return u <= m - 1 ? u + 0.5 : (2 * m - 2 - u) + 0.5;
        };
        pts.push_back({folded(double(a)), 1.0});
        long lo = std::min(a, b), hi = std::max(a, b);
        std::vector<double> walls;
        for (long j = lo; j < hi; ++j) {
            int c = fold_half(m, j);
            if (c == 1 || c == m) walls.push_back(j + 0.5);
        }
        if (b < a) std::reverse(walls.begin(), walls.end());
        for (double x : walls) {
            double tpar = (x - a) / double(b - a);
            pts.push_back({folded(x), 1.0 - tpar});
        }
        pts.push_back({folded(double(b)), 0.0});
        os << "  \\draw";
        for (size_t i = 0; i < pts.size(); ++i)
            os << (i ? " -- " : " ") << "(" << pts[i].first << "," << pts[i].second << ")";
        os << ";\n";
    }
    os << "\\end{tikzpicture}\n";
    return os.str();
}

}  // namespace pong
