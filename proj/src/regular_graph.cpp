#include "isinglab/regular_graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "isinglab/numerics.hpp"

namespace isinglab {

RegularGraph::RegularGraph(int n, int d, std::vector<int32_t> pairing, uint64_t seed)
    : n_(n), d_(d), seed_(seed), pairing_(std::move(pairing)) {
    if (n < 1 || d < 1) throw std::invalid_argument("RegularGraph: n >= 1, d >= 1 required");
    if (int64_t(n) * d % 2 != 0) throw std::invalid_argument("RegularGraph: nd must be even");
    const int64_t m = int64_t(n) * d;
    if ((int64_t)pairing_.size() != m) throw std::invalid_argument("RegularGraph: bad pairing size");
    for (int64_t h = 0; h < m; ++h) {
        const int32_t mate = pairing_[h];
        if (mate < 0 || mate >= m || mate == h || pairing_[mate] != h)
            throw std::invalid_argument("RegularGraph: pairing is not a fixed-point-free involution");
    }
    adjacency_.assign(m, 0);
    std::vector<int> fill(n, 0);
    for (int64_t h = 0; h < m; ++h) {
        const int v = int(h / d);
        adjacency_[size_t(v) * d + fill[v]++] = int32_t(pairing_[h] / d);
    }
}

std::vector<std::pair<int, int>> RegularGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(size_t(edge_count()));
    for (int64_t h = 0; h < (int64_t)pairing_.size(); ++h) {
        if (pairing_[h] > h) {
            int u = int(h / d_), v = int(pairing_[h] / d_);
            if (u > v) std::swap(u, v);
            out.emplace_back(u, v);
        }
    }
    return out;
}

RegularGraph sample_configuration_model(int n, int d, uint64_t seed) {
    if (d < 3) throw std::invalid_argument("sample_configuration_model: d >= 3 required");
    if (int64_t(n) * d % 2 != 0)
        throw std::invalid_argument("sample_configuration_model: nd must be even");
    const int64_t m = int64_t(n) * d;
    std::vector<int32_t> order(m);
    for (int64_t h = 0; h < m; ++h) order[h] = int32_t(h);
    SplitMix64 rng(seed);
    for (int64_t i = m - 1; i > 0; --i)
        std::swap(order[i], order[rng.next_below(uint64_t(i + 1))]);
    std::vector<int32_t> pairing(m);
    for (int64_t i = 0; i < m; i += 2) {
        pairing[order[i]] = order[i + 1];
        pairing[order[i + 1]] = order[i];
    }
    return RegularGraph(n, d, std::move(pairing), seed);
}

bool is_simple(const RegularGraph& g) {
    const int n = g.n(), d = g.d();
    std::vector<int32_t> nb(d);
    for (int v = 0; v < n; ++v) {
        auto s = g.neighbors(v);
        nb.assign(s.begin(), s.end());
        std::sort(nb.begin(), nb.end());
        for (int i = 0; i < d; ++i) {
            if (nb[i] == v) return false;                    // self-loop
            if (i > 0 && nb[i] == nb[i - 1]) return false;   // multi-edge
        }
    }
    return true;
}

SimpleSampleResult sample_simple(int n, int d, uint64_t seed, int max_attempts) {
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        RegularGraph g = sample_configuration_model(n, d, SplitMix64::mix(seed) + attempt - 1);
        if (is_simple(g)) return {std::move(g), attempt};
    }
    return {std::nullopt, max_attempts};
}

SubsetCut crossing_edges(const RegularGraph& g, const std::vector<int>& A) {
    std::vector<char> in(g.n(), 0);
    for (int v : A) {
        if (v < 0 || v >= g.n()) throw std::invalid_argument("crossing_edges: vertex out of range");
        in[v] = 1;
    }
    SubsetCut cut;
    cut.subset = A;
    cut.crossing = cut.internal = 0;
    for (auto [u, v] : g.edges()) {
        if (in[u] && in[v])
            ++cut.internal;
        else if (in[u] != in[v])
            ++cut.crossing;
    }
    return cut;
}

int64_t crossing_via_adjacency(const RegularGraph& g, const std::vector<char>& in_A) {
    int64_t count = 0;
    for (int v = 0; v < g.n(); ++v) {
        if (!in_A[v]) continue;
        for (int32_t w : g.neighbors(v))
            if (!in_A[w]) ++count;
    }
    return count;
}

IsoperimetricResult isoperimetric_number(const RegularGraph& g) {
    const int n = g.n();
    if (n > 24) throw BudgetError("isoperimetric_number: exact enumeration limited to n <= 24");
    int64_t cut = 0;
    int size = 0;
    std::vector<char> in(n, 0);
    int64_t best_cut = -1;
    int best_size = 1;
    uint32_t best_mask = 0;
    uint32_t mask = 0;

    const uint64_t total = 1ull << n;
    for (uint64_t i = 1; i < total; ++i) {
        const int b = __builtin_ctzll(i);  // Gray code: flip bit b
        const bool entering = !in[b];
        // incremental cut update over b's neighbor multiset
        for (int32_t w : g.neighbors(b)) {
            if (w == b) continue;  // self-loops never cross
            if (in[w])
                cut += entering ? -1 : 1;
            else
                cut += entering ? 1 : -1;
        }
        in[b] ^= 1;
        size += entering ? 1 : -1;
        mask ^= (1u << b);
        if (size >= 1 && size * 2 <= n) {
            if (best_cut < 0 || cut * int64_t(best_size) < best_cut * int64_t(size)) {
                best_cut = cut;
                best_size = size;
                best_mask = mask;
            }
        }
    }
    IsoperimetricResult r;
    r.cut = best_cut;
    r.size = best_size;
    r.value = double(best_cut) / best_size;
    for (int v = 0; v < n; ++v)
        if (best_mask >> v & 1) r.subset.push_back(v);
    return r;
}

double isoperimetric_whp_bound(int d) { return d / 2.0 - std::sqrt(d * std::log(2.0)); }

BallResult ball_and_cycles(const RegularGraph& g, int v, int radius) {
    if (v < 0 || v >= g.n()) throw std::invalid_argument("ball_and_cycles: vertex out of range");
    std::vector<int> dist(g.n(), -1);
    std::queue<int> q;
    dist[v] = 0;
    q.push(v);
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        if (dist[u] == radius) continue;
        for (int32_t w : g.neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
        }
    }
    BallResult r;
    for (int u = 0; u < g.n(); ++u)
        if (dist[u] >= 0) r.ball.push_back(u);
    int64_t induced = 0;
    for (auto [a, b] : g.edges())
        if (dist[a] >= 0 && dist[b] >= 0) ++induced;
    r.cycles = induced - int64_t(r.ball.size()) + 1;
    return r;
}

int64_t ball_volume_bound(int d, int radius) {
    int64_t bound = 1, layer = d;
    for (int i = 1; i <= radius; ++i) {
        bound += layer;
        layer *= (d - 1);
    }
    return bound;
}

std::string serialize_edge_list(const RegularGraph& g) {
    std::ostringstream os;
    os << "# " << g.n() << " " << g.d() << " " << g.seed() << "\n";
    for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
    return os.str();
}

RegularGraph parse_edge_list(const std::string& text) {
    std::istringstream is(text);
    std::string hash;
    int n, d;
    uint64_t seed;
    if (!(is >> hash >> n >> d >> seed) || hash != "#")
        throw std::invalid_argument("parse_edge_list: bad header");
    std::vector<int> next(n, 0);
    std::vector<int32_t> pairing(size_t(n) * d, -1);
    int u, v;
    while (is >> u >> v) {
        if (u < 0 || u >= n || v < 0 || v >= n || next[u] >= d)
            throw std::invalid_argument("parse_edge_list: bad edge");
        const int32_t hu = int32_t(u) * d + next[u]++;
        if (next[v] >= d) throw std::invalid_argument("parse_edge_list: degree overflow");
        const int32_t hv = int32_t(v) * d + next[v]++;
        pairing[hu] = hv;
        pairing[hv] = hu;
    }
    return RegularGraph(n, d, std::move(pairing), seed);
}

}  // namespace isinglab
