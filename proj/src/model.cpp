#include "lgt/model.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <istream>
#include <sstream>

namespace lgt {

std::string to_string(GaugeGroup g) {
    switch (g.kind()) {
    case GroupKind::U1: return "u1";
    case GroupKind::SU2: return "su2";
    case GroupKind::SU3: return "su3";
    }
    return "u1";
}

GaugeGroup parse_group(std::string_view s) {
    std::string t(s);
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
    t.erase(std::remove_if(t.begin(), t.end(), [](char c) { return c == '(' || c == ')'; }), t.end());
    if (t == "u1") return GaugeGroup(GroupKind::U1);
    if (t == "su2") return GaugeGroup(GroupKind::SU2);
    if (t == "su3") return GaugeGroup(GroupKind::SU3);
    throw std::invalid_argument("unknown gauge group '" + std::string(s) + "'");
}

void validate(const PhysicalParams& p) {
    auto fail = [](const std::string& what) { throw std::invalid_argument("invalid parameter: " + what); };
    if (!(p.a > 0)) fail("a must be > 0");
    if (!(p.g > 0)) fail("g must be > 0");
    if (!(p.m >= 0)) fail("m must be >= 0");
    if (p.d < 1) fail("d must be >= 1");
    if (p.N < 2) fail("N must be >= 2");
    if (p.lambda < 1) fail("lambda must be >= 1");
    if (p.lambda0 < 0) fail("lambda0 must be >= 0");
    if (!(p.time >= 0)) fail("time must be >= 0");
    if (!(p.epsilon > 0 && p.epsilon < 1)) fail("epsilon must lie in (0,1)");
}

Couplings derive_couplings(const PhysicalParams& p) {
    Couplings c;
    c.g_M = p.m;
    c.g_GM = 1.0 / (2.0 * p.a);
    c.g_E = p.g * p.g / (2.0 * std::pow(p.a, p.d - 2));
    c.g_B = -1.0 / (2.0 * std::pow(p.a, 4 - p.d) * p.g * p.g);
    return c;
}

std::int64_t truncation_growth(const PhysicalParams& p, int c_count, TruncationBound mode) {
    if (c_count < 1) throw std::invalid_argument("c_count must be positive");
    if (p.time == 0.0) return p.lambda0;
    const Couplings c = derive_couplings(p);
    const double chi = c_count * (4.0 * std::abs(c.g_B) + 2.0 * std::abs(c.g_GM));
    const double N = static_cast<double>(p.N);
    double growth = 0;
    if (mode == TruncationBound::Improved) {
        const double arg = N * std::max(1, p.lambda0) * chi * p.time / p.epsilon;
        growth = chi * p.time * std::log2(std::max(2.0, arg));
    } else {
        // (chi T + 1) polylog(N/eps), polylog pinned to a squared log
        const double l = std::log2(std::max(2.0, N / p.epsilon));
        growth = (chi * p.time + 1.0) * l * l;
    }
    return p.lambda0 + static_cast<std::int64_t>(std::ceil(growth));
}

std::int64_t plaquette_count(int d, std::int64_t N) {
    if (d < 2) throw std::invalid_argument("no plaquettes below two dimensions");
    if (N < 1) throw std::invalid_argument("N must be >= 1");
    std::int64_t r = static_cast<std::int64_t>(d) * (d - 1) / 2 * N * N;
    for (int i = 0; i < d - 2; ++i) r *= (N + 1);
    return r;
}

std::int64_t enumerate_plaquettes(int d, std::int64_t N, bool periodic) {
    if (d < 2) throw std::invalid_argument("no plaquettes below two dimensions");
    if (periodic && N < 3) throw std::invalid_argument("periodic enumeration needs N >= 3");
    // Grid graph: (N+1)^d vertices when open, N^d on the torus. Every 4-cycle
    // of a hypercubic grid graph is a plaquette, so count 4-cycles directly.
    const std::int64_t side = periodic ? N : N + 1;
    std::int64_t nv = 1;
    for (int k = 0; k < d; ++k) nv *= side;
    std::vector<std::vector<std::int64_t>> adj(nv);
    for (std::int64_t v = 0; v < nv; ++v) {
        std::int64_t stride = 1;
        for (int k = 0; k < d; ++k, stride *= side) {
            const std::int64_t xk = (v / stride) % side;
            if (xk + 1 < side) adj[v].push_back(v + stride);
            else if (periodic) adj[v].push_back(v - xk * stride);
            if (xk > 0) adj[v].push_back(v - stride);
            else if (periodic) adj[v].push_back(v + (side - 1) * stride);
        }
        std::sort(adj[v].begin(), adj[v].end());
    }
    std::int64_t corners = 0;
    for (std::int64_t v = 0; v < nv; ++v) {
        const auto& nb = adj[v];
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                std::vector<std::int64_t> common;
                std::set_intersection(adj[nb[i]].begin(), adj[nb[i]].end(), adj[nb[j]].begin(),
                                      adj[nb[j]].end(), std::back_inserter(common));
                corners += static_cast<std::int64_t>(std::count_if(
                    common.begin(), common.end(), [v](std::int64_t x) { return x != v; }));
            }
    }
    return corners / 4;
}

namespace {

std::string trim(std::string s) {
    auto ws = [](unsigned char c) { return std::isspace(c); };
    s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), ws));
    s.erase(std::find_if_not(s.rbegin(), s.rend(), ws).base(), s.end());
    return s;
}

template <typename T>
T parse_number(const std::string& key, const std::string& v) {
    T out{};
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size())
        throw std::invalid_argument("config: bad value for '" + key + "': " + v);
    return out;
}

}  // namespace

PhysicalParams parse_config(std::istream& in, PhysicalParams p) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key == "a") p.a = parse_number<double>(key, val);
        else if (key == "g") p.g = parse_number<double>(key, val);
        else if (key == "m") p.m = parse_number<double>(key, val);
        else if (key == "d") p.d = parse_number<int>(key, val);
        else if (key == "N") p.N = parse_number<std::int64_t>(key, val);
        else if (key == "lambda") p.lambda = parse_number<int>(key, val);
        else if (key == "lambda0") p.lambda0 = parse_number<int>(key, val);
        else if (key == "time") p.time = parse_number<double>(key, val);
        else if (key == "epsilon") p.epsilon = parse_number<double>(key, val);
        else if (key == "group") p.group = parse_group(val);
        else throw std::invalid_argument("config: unknown key '" + key + "'");
    }
    validate(p);
    return p;
}

PhysicalParams load_config(const std::string& path, PhysicalParams base) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open config file " + path);
    return parse_config(f, base);
}

}  // namespace lgt
