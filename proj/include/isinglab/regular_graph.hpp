#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace isinglab {

// d-regular configuration-model multigraph on n vertices. The half-edge
// pairing is the ground truth; half-edge h belongs to vertex h / d. The
// adjacency table is derived and cached (self-loops appear twice in the
// owning vertex's multiset). Immutable after construction.
class RegularGraph {
  public:
    RegularGraph(int n, int d, std::vector<int32_t> pairing, uint64_t seed = 0);

    int n() const { return n_; }
    int d() const { return d_; }
    uint64_t seed() const { return seed_; }
    const std::vector<int32_t>& pairing() const { return pairing_; }

    std::span<const int32_t> neighbors(int v) const {
        return {adjacency_.data() + size_t(v) * d_, size_t(d_)};
    }

    // one entry per edge (u <= v), multiplicities repeated, self-loops included
    std::vector<std::pair<int, int>> edges() const;

    int64_t edge_count() const { return int64_t(n_) * d_ / 2; }

  private:
    int n_, d_;
    uint64_t seed_;
    std::vector<int32_t> pairing_;
    std::vector<int32_t> adjacency_;
};

// Uniform pairing of the nd half-edges via a seeded Fisher-Yates shuffle.
RegularGraph sample_configuration_model(int n, int d, uint64_t seed);

bool is_simple(const RegularGraph& g);

struct SimpleSampleResult {
    std::optional<RegularGraph> graph;
    int attempts;  // number of pairings drawn (including the accepted one)
};

// Rejection sampling of a uniform simple d-regular graph.
SimpleSampleResult sample_simple(int n, int d, uint64_t seed, int max_attempts);

struct SubsetCut {
    std::vector<int> subset;
    int64_t crossing;
    int64_t internal;
};

SubsetCut crossing_edges(const RegularGraph& g, const std::vector<int>& A);

// Same count through the adjacency multisets; independent of the pairing path.
int64_t crossing_via_adjacency(const RegularGraph& g, const std::vector<char>& in_A);

struct IsoperimetricResult {
    std::vector<int> subset;
    int64_t cut;
    int size;
    double value;  // cut / |A|
};

// Exact minimum of e(A, A^c)/|A| over nonempty A with |A| <= n/2 by Gray-code
// enumeration with O(d) incremental cut updates. n <= 24.
IsoperimetricResult isoperimetric_number(const RegularGraph& g);

// closed-form lower bound d/2 - sqrt(d log 2) that holds whp
double isoperimetric_whp_bound(int d);

struct BallResult {
    std::vector<int> ball;  // vertices within distance R of v
    int64_t cycles;         // induced edges - |ball| + 1
};

BallResult ball_and_cycles(const RegularGraph& g, int v, int radius);

// volume bound 1 + d sum_{i=1}^R (d-1)^{i-1}
int64_t ball_volume_bound(int d, int radius);

// edge-list text with "# n d seed" header
std::string serialize_edge_list(const RegularGraph& g);
RegularGraph parse_edge_list(const std::string& text);

}  // namespace isinglab
