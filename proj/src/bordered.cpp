#include "pong/bordered.hpp"

#include <regex>
#include <sstream>

namespace pong {

void ClgElement::normalize()
{
    std::sort(terms.begin(), terms.end());
    size_t w = 0;
    for (size_t r = 0; r < terms.size();) {
        size_t e = r;
        while (e < terms.size() && terms[e] == terms[r]) ++e;
        if ((e - r) & 1) terms[w++] = terms[r];
        r = e;
    }
    terms.resize(w);
}

ClgElement& ClgElement::operator+=(const ClgElement& o)
{
    terms.insert(terms.end(), o.terms.begin(), o.terms.end());
    normalize();
    return *this;
}

std::vector<int> state_weight_vector(uint32_t x, int m)
{
    std::vector<int> v(m, 0);
    for (int i = 1; i <= m; ++i)
        for (int e : mask_elems(x))
            if (e >= i) ++v[i - 1];
    return v;
}

Weight min_weight(uint32_t x, uint32_t y, int m)
{
    auto vx = state_weight_vector(x, m), vy = state_weight_vector(y, m);
    Weight w;
    for (int i = 0; i < m; ++i) w[i] = int16_t(std::abs(vx[i] - vy[i]));
    return w;
}

bool too_far(uint32_t x, uint32_t y)
{
    auto ex = mask_elems(x), ey = mask_elems(y);
    if (ex.size() != ey.size()) return true;
    for (size_t t = 0; t < ex.size(); ++t)
        if (std::abs(ex[t] - ey[t]) >= 2) return true;
    return false;
}

BorderedAlgebra::BorderedAlgebra(int m, int k, Flavor fl) : m_(m), k_(k), fl_(fl)
{
    if (m < 2 || m > kMaxM) throw Error("m out of range");
    if (k < 0) throw Error("k out of range");
    states_ = fl == Flavor::C ? subsets_of_size(1, m - 1, k) : subsets_of_size(0, m, k);
}

bool BorderedAlgebra::is_state(uint32_t x) const
{
    return std::find(states_.begin(), states_.end(), x) != states_.end();
}

bool BorderedAlgebra::well_formed(const ClgPure& p) const
{
    if (!is_state(p.x) || !is_state(p.y)) return false;
    Weight d = p.w - min_weight(p.x, p.y, m_);
    for (int i = m_; i < kMaxM; ++i)
        if (p.w[i]) return false;
    return d.nonneg() && d.integral();
}

bool BorderedAlgebra::nonzero(const ClgPure& p) const
{
    if (!well_formed(p)) return false;
    return fl_ == Flavor::B0 || !ideal_member(p);
}

std::optional<ClgPure> BorderedAlgebra::b0_multiply(const ClgPure& a, const ClgPure& b) const
{
    if (a.y != b.x) return std::nullopt;
    return ClgPure{a.x, b.y, a.w + b.w};
}

bool BorderedAlgebra::ideal_member(const ClgPure& p) const
{
    if (too_far(p.x, p.y)) return true;
    uint32_t both = p.x & p.y;
    auto count_le = [](uint32_t s, int i) {
        int c = 0;
        for (int e : mask_elems(s))
            if (e <= i) ++c;
        return c;
    };
    for (int i = 0; i <= m_; ++i) {
        if ((both >> i) & 1u) continue;
        if (count_le(p.x, i) != count_le(p.y, i)) continue;
        for (int j = i + 1; j <= m_; ++j) {
            if (p.w[j - 1] < 2) break; // weight_t >= 1 needed for t = i+1..j
            if (!((both >> j) & 1u)) return true;
        }
    }
    return false;
}

std::optional<ClgPure> BorderedAlgebra::multiply(const ClgPure& a, const ClgPure& b) const
{
    auto p = b0_multiply(a, b);
    if (!p) return std::nullopt;
    if (fl_ == Flavor::C && ideal_member(*p)) return std::nullopt;
    return p;
}

ClgElement BorderedAlgebra::multiply(const ClgElement& a, const ClgElement& b) const
{
    ClgElement out;
    for (auto& s : a.terms)
        for (auto& t : b.terms)
            if (auto p = multiply(s, t)) out.terms.push_back(*p);
    out.normalize();
    return out;
}

ClgElement BorderedAlgebra::idempotent(uint32_t x) const
{
    if (!is_state(x)) throw Error("not an idempotent state");
    ClgElement e;
    e.terms.push_back({x, x, {}});
    return e;
}

ClgElement BorderedAlgebra::L(int i) const
{
    ClgElement e;
    for (uint32_t x : states_) {
        if (!((x >> i) & 1u) || ((x >> (i - 1)) & 1u) || i - 1 < 0) continue;
        uint32_t y = (x & ~(1u << i)) | (1u << (i - 1));
        if (!is_state(y)) continue;
        ClgPure p{x, y, min_weight(x, y, m_)};
        if (nonzero(p)) e.terms.push_back(p);
    }
    e.normalize();
    return e;
}

ClgElement BorderedAlgebra::R(int i) const
{
    ClgElement l = L(i), e;
    for (auto& p : l.terms) e.terms.push_back({p.y, p.x, p.w});
    e.normalize();
    return e;
}

ClgElement BorderedAlgebra::U(int i) const
{
    ClgElement e;
    for (uint32_t x : states_) {
        ClgPure p{x, x, Weight::unit(i)};
        if (nonzero(p)) e.terms.push_back(p);
    }
    e.normalize();
    return e;
}

std::optional<ClgPure> BorderedAlgebra::pure(uint32_t x, uint32_t y, const Weight& w) const
{
    ClgPure p{x, y, w};
    if (!nonzero(p)) return std::nullopt;
    return p;
}

std::vector<ClgPure> BorderedAlgebra::enumerate(const Weight& cap, bool include_idempotents) const
{
    std::vector<ClgPure> out;
    for (uint32_t x : states_)
        for (uint32_t y : states_) {
            Weight base = min_weight(x, y, m_);
            if (!base.leq(cap)) continue;
            // add U-exponents
            Weight w = base;
            std::function<void(int)> rec = [&](int i) {
                if (i == m_) {
                    ClgPure p{x, y, w};
                    if (!include_idempotents && x == y && w.zero()) return;
                    if (nonzero(p)) out.push_back(p);
                    return;
                }
                for (int e = base[i]; e <= cap[i]; e += 2) {
                    w[i] = int16_t(e);
                    rec(i + 1);
                }
                w[i] = base[i];
            };
            rec(0);
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<int, Weight> BorderedAlgebra::t_gradings(const ClgTPure& e) const
{
    int gr = e.s * (2 * m_ - 2 * k_ - 2);
    return {gr, e.a.w + Weight::constant(m_, 2 * e.s)};
}

std::string BorderedAlgebra::format(const ClgPure& p) const
{
    Weight ex = p.w - min_weight(p.x, p.y, m_);
    std::string mono;
    for (int i = 0; i < m_; ++i) {
        int e = ex[i] / 2;
        if (!e) continue;
        if (!mono.empty()) mono += "*";
        mono += "U" + std::to_string(i + 1);
        if (e > 1) mono += "^" + std::to_string(e);
    }
    std::string head = p.x == p.y ? "I" : "gamma";
    if (!mono.empty()) head = p.x == p.y ? mono : head + "*" + mono;
    return head + " | x=" + format_state(p.x) + " y=" + format_state(p.y);
}

std::string BorderedAlgebra::format(const ClgElement& e) const
{
    if (e.zero()) return "0";
    std::string out;
    for (auto& p : e.terms) {
        if (!out.empty()) out += " + ";
        out += format(p);
    }
    return out;
}

ClgElement BorderedAlgebra::parse(const std::string& text) const
{
    std::string expr = text, sandwich;
    auto bar = text.find('|');
    if (bar != std::string::npos) {
        expr = text.substr(0, bar);
        sandwich = text.substr(bar + 1);
    }
    ClgElement acc;
    for (uint32_t x : states_) acc.terms.push_back({x, x, {}});
    acc.normalize();
    static const std::regex fre(R"(([LRU])(\d+)(\^(\d+))?)");
    std::stringstream ss(expr);
    std::string tok;
    while (std::getline(ss, tok, '*')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
        if (tok.empty() || tok == "1" || tok == "I") continue;
        std::smatch mt;
        if (!std::regex_match(tok, mt, fre)) throw Error("cannot parse factor: " + tok);
        int i = std::stoi(mt[2]);
        int pw = mt[4].matched ? std::stoi(mt[4]) : 1;
        if (i < 1 || i > m_) throw Error("index out of range: " + tok);
        char c = mt[1].str()[0];
        ClgElement f = c == 'L' ? L(i) : c == 'R' ? R(i) : U(i);
        for (int r = 0; r < pw; ++r) acc = multiply(acc, f);
    }
    if (!sandwich.empty()) {
        static const std::regex xre(R"(x\s*=\s*(\{[^}]*\}))"), yre(R"(y\s*=\s*(\{[^}]*\}))");
        std::smatch mx, my;
        std::optional<uint32_t> x, y;
        if (std::regex_search(sandwich, mx, xre)) x = parse_state(mx[1]);
        if (std::regex_search(sandwich, my, yre)) y = parse_state(my[1]);
        ClgElement r;
        for (auto& p : acc.terms)
            if ((!x || p.x == *x) && (!y || p.y == *y)) r.terms.push_back(p);
        acc = r;
    }
    return acc;
}

}  // namespace pong
