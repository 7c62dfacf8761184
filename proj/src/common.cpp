#include "pong/common.hpp"

#include <sstream>

namespace pong {

std::string format_weight(const Weight& w, int m)
{
    std::string out = "(";
    for (int i = 0; i < m; ++i) {
        if (i) out += ",";
        int x = w[i];
        if (x % 2 == 0)
            out += std::to_string(x / 2);
        else
            out += std::to_string(x) + "/2";
    }
    return out + ")";
}

static int parse_half(const std::string& tok)
{
    auto slash = tok.find('/');
    if (slash != std::string::npos) {
        int num = std::stoi(tok.substr(0, slash));
        int den = std::stoi(tok.substr(slash + 1));
        if (den != 2) throw Error("weight components must be multiples of 1/2: " + tok);
        return num;
    }
    auto dot = tok.find('.');
    if (dot != std::string::npos) {
        double v = std::stod(tok);
        int x = int(v * 2 + (v >= 0 ? 0.5 : -0.5));
        if (x != v * 2) throw Error("weight components must be multiples of 1/2: " + tok);
        return x;
    }
    return 2 * std::stoi(tok);
}

Weight parse_weight(const std::string& s, int m)
{
    Weight w;
    std::string t;
    for (char c : s)
        if (c != '(' && c != ')' && c != ' ') t += c;
    std::stringstream ss(t);
    std::string tok;
    int i = 0;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        if (i >= m) throw Error("weight has more than m components");
        w[i++] = int16_t(parse_half(tok));
    }
    if (i != m) throw Error("weight must have exactly m components");
    return w;
}

std::string format_mono(const Mono& v, int m, char letter)
{
    std::string out;
    for (int i = 0; i < m; ++i) {
        if (!v.e[i]) continue;
        if (!out.empty()) out += "*";
        out += letter + std::to_string(i + 1);
        if (v.e[i] > 1) out += "^" + std::to_string(v.e[i]);
    }
    return out.empty() ? "1" : out;
}

std::vector<uint32_t> subsets_of_size(int lo, int hi, int k)
{
    std::vector<uint32_t> out;
    if (k < 0) return out;
    int n = hi - lo + 1;
    if (k > n) return out;
    for (uint32_t bits = 0; bits < (1u << std::max(n, 0)); ++bits)
        if (__builtin_popcount(bits) == k) out.push_back(bits << lo);
    std::sort(out.begin(), out.end(), [](uint32_t a, uint32_t b) {
        // lexicographic on sorted element lists
        auto ea = mask_elems(a), eb = mask_elems(b);
        return ea < eb;
    });
    return out;
}

std::vector<int> mask_elems(uint32_t mask)
{
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
        if ((mask >> i) & 1u) out.push_back(i);
    return out;
}

std::string format_state(uint32_t mask)
{
    std::string out = "{";
    bool first = true;
    for (int i : mask_elems(mask)) {
        if (!first) out += ",";
        out += std::to_string(i);
        first = false;
    }
    return out + "}";
}

uint32_t parse_state(const std::string& s)
{
    uint32_t mask = 0;
    std::string t;
    for (char c : s)
        if (c != '{' && c != '}' && c != ' ') t += c;
    std::stringstream ss(t);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        int v = std::stoi(tok);
        if (v < 0 || v > 31) throw Error("state element out of range: " + tok);
        if ((mask >> v) & 1u) throw Error("repeated state element: " + tok);
        mask |= 1u << v;
    }
    return mask;
}

std::vector<Weight> weights_up_to(int m, int cap2)
{
    std::vector<Weight> out;
    Weight w;
    std::function<void(int)> rec = [&](int i) {
        if (i == m) {
            out.push_back(w);
            return;
        }
        for (int x = 0; x <= cap2; ++x) {
            w[i] = int16_t(x);
            rec(i + 1);
        }
        w[i] = 0;
    };
    rec(0);
    return out;
}

}  // namespace pong
