#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "isinglab/model_params.hpp"
#include "isinglab/numerics.hpp"
#include "isinglab/regular_graph.hpp"

namespace isinglab {

// Spin state with cached plus count and self-loop-free local fields
// S'_i = sum_{j ~ i, j != i} k_{ij} sigma_j.
struct SpinConfig {
    std::vector<int8_t> spins;
    int plus_count = 0;
    std::vector<int32_t> local_fields;
};

SpinConfig make_uniform_config(const RegularGraph& g, int8_t value);
SpinConfig make_config(const RegularGraph& g, std::vector<int8_t> spins);

// -beta sum_{i<=j} k_ij sigma_i sigma_j - B sum_i sigma_i (self-loops included)
double hamiltonian(const RegularGraph& g, const SpinConfig& sigma, const ModelParams& p);

// One heat-bath update at the given site with the given uniform draw; returns
// the energy change (0 when the spin is unchanged). Shared (site, u) streams
// give the monotone grand coupling.
double glauber_step_given(const RegularGraph& g, SpinConfig& sigma, const ModelParams& p,
                          int site, double u);

// One full step: uniform site + uniform draw from the stream.
double glauber_step(const RegularGraph& g, SpinConfig& sigma, const ModelParams& p,
                    SplitMix64& rng);

struct SimConfig {
    uint64_t seed = 1;
    int64_t steps = 0;
    int replicas = 1;
    int64_t record_stride = 1;
};

struct CouplingResult {
    std::vector<int64_t> coalescence;  // per replica; horizon when censored
    std::vector<char> censored;
    bool order_preserved;  // checked at every record stride
};

// Monotone grand coupling from all-plus and all-minus. B >= 0 required.
CouplingResult grand_coupling_run(const RegularGraph& g, const ModelParams& p,
                                  const SimConfig& sim);

struct HittingSimResult {
    std::vector<int64_t> times;
    std::vector<char> censored;
};

// First time plus_count >= threshold starting from all-minus.
HittingSimResult hitting_time_sim(const RegularGraph& g, const ModelParams& p, int threshold,
                                  const SimConfig& sim);

// plus_count / n recorded every record_stride steps, one row per replica.
std::vector<std::vector<double>> magnetization_trace(const RegularGraph& g,
                                                     const ModelParams& p, int8_t start_value,
                                                     const SimConfig& sim);

struct FullChainResult {
    double gap;
    std::vector<double> stationary;        // over 2^n states
    std::optional<int64_t> t_mix_quarter;  // exact worst-start; computed for 2^n <= 1024
};

// Exact dense analysis of single-site heat-bath dynamics for an arbitrary
// log-weight function on {0,1}^n (bit set <=> spin +1). 2^n <= 4096.
FullChainResult exact_full_chain_weights(int n, const std::function<double(uint32_t)>& log_weight);

// Quenched Ising instance on a concrete graph.
FullChainResult exact_full_chain(const RegularGraph& g, const ModelParams& p);

// Generalized Curie-Weiss instance: log weight n F_n(|sigma_+|).
FullChainResult exact_full_curie_weiss(int n, const std::vector<double>& logw);

}  // namespace isinglab
