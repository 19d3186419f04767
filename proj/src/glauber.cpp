#include "isinglab/glauber.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace isinglab {

SpinConfig make_uniform_config(const RegularGraph& g, int8_t value) {
    return make_config(g, std::vector<int8_t>(g.n(), value));
}

SpinConfig make_config(const RegularGraph& g, std::vector<int8_t> spins) {
    if ((int)spins.size() != g.n()) throw std::invalid_argument("make_config: size mismatch");
    SpinConfig c;
    c.spins = std::move(spins);
    c.plus_count = 0;
    for (int8_t s : c.spins) {
        if (s != 1 && s != -1) throw std::invalid_argument("make_config: spins must be +-1");
        if (s == 1) ++c.plus_count;
    }
    c.local_fields.assign(g.n(), 0);
    for (int v = 0; v < g.n(); ++v) {
        int32_t f = 0;
        for (int32_t w : g.neighbors(v))
            if (w != v) f += c.spins[w];
        c.local_fields[v] = f;
    }
    return c;
}

double hamiltonian(const RegularGraph& g, const SpinConfig& sigma, const ModelParams& p) {
    if ((int)sigma.spins.size() != g.n()) throw std::invalid_argument("hamiltonian: size mismatch");
    int64_t bond = 0;
    for (auto [u, v] : g.edges()) bond += int(sigma.spins[u]) * int(sigma.spins[v]);
    const int64_t mag = 2 * int64_t(sigma.plus_count) - g.n();
    return -p.beta * double(bond) - p.field * double(mag);
}

double glauber_step_given(const RegularGraph& g, SpinConfig& sigma, const ModelParams& p,
                          int site, double u) {
    const double prob_plus = sigmoid(2.0 * (p.beta * sigma.local_fields[site] + p.field));
    const int8_t next = (u < prob_plus) ? int8_t(1) : int8_t(-1);
    const int8_t prev = sigma.spins[site];
    if (next == prev) return 0.0;
    sigma.spins[site] = next;
    sigma.plus_count += (next == 1) ? 1 : -1;
    const int32_t delta = 2 * next;  // next - prev
    for (int32_t w : g.neighbors(site))
        if (w != site) sigma.local_fields[w] += delta;
    return -double(delta) * (p.beta * sigma.local_fields[site] + p.field);
}

double glauber_step(const RegularGraph& g, SpinConfig& sigma, const ModelParams& p,
                    SplitMix64& rng) {
    const int site = int(rng.next_below(uint64_t(g.n())));
    const double u = rng.next_double();
    return glauber_step_given(g, sigma, p, site, u);
}

CouplingResult grand_coupling_run(const RegularGraph& g, const ModelParams& p,
                                  const SimConfig& sim) {
    if (p.field < 0)
        throw std::invalid_argument("grand_coupling_run: B >= 0 required for monotonicity use");
    CouplingResult out;
    out.order_preserved = true;
    for (int rep = 0; rep < sim.replicas; ++rep) {
        SplitMix64 rng(sim.seed, uint64_t(rep));
        SpinConfig hi = make_uniform_config(g, 1);
        SpinConfig lo = make_uniform_config(g, -1);
        int64_t coalesced = -1;
        for (int64_t t = 1; t <= sim.steps; ++t) {
            const int site = int(rng.next_below(uint64_t(g.n())));
            const double u = rng.next_double();
            glauber_step_given(g, hi, p, site, u);
            glauber_step_given(g, lo, p, site, u);
            if (t % sim.record_stride == 0) {
                for (int v = 0; v < g.n(); ++v)
                    if (lo.spins[v] > hi.spins[v]) out.order_preserved = false;
            }
            if (hi.plus_count == lo.plus_count && hi.spins == lo.spins) {
                coalesced = t;
                break;
            }
        }
        out.coalescence.push_back(coalesced < 0 ? sim.steps : coalesced);
        out.censored.push_back(coalesced < 0);
    }
    return out;
}

HittingSimResult hitting_time_sim(const RegularGraph& g, const ModelParams& p, int threshold,
                                  const SimConfig& sim) {
    if (threshold <= 0) threshold = (g.n() + 1) / 2;
    HittingSimResult out;
    for (int rep = 0; rep < sim.replicas; ++rep) {
        SplitMix64 rng(sim.seed, uint64_t(rep));
        SpinConfig c = make_uniform_config(g, -1);
        int64_t hit = -1;
        for (int64_t t = 1; t <= sim.steps; ++t) {
            glauber_step(g, c, p, rng);
            if (c.plus_count >= threshold) {
                hit = t;
                break;
            }
        }
        out.times.push_back(hit < 0 ? sim.steps : hit);
        out.censored.push_back(hit < 0);
    }
    return out;
}

std::vector<std::vector<double>> magnetization_trace(const RegularGraph& g,
                                                     const ModelParams& p, int8_t start_value,
                                                     const SimConfig& sim) {
    std::vector<std::vector<double>> traces(sim.replicas);
    for (int rep = 0; rep < sim.replicas; ++rep) {
        SplitMix64 rng(sim.seed, uint64_t(rep));
        SpinConfig c = make_uniform_config(g, start_value);
        auto& row = traces[rep];
        row.push_back(double(c.plus_count) / g.n());
        for (int64_t t = 1; t <= sim.steps; ++t) {
            glauber_step(g, c, p, rng);
            if (t % sim.record_stride == 0) row.push_back(double(c.plus_count) / g.n());
        }
    }
    return traces;
}

FullChainResult exact_full_chain_weights(int n,
                                         const std::function<double(uint32_t)>& log_weight) {
    const int64_t N = int64_t(1) << n;
    if (N > 4096) throw BudgetError("exact_full_chain: 2^n <= 4096 required");

    std::vector<double> logw(N);
    for (int64_t s = 0; s < N; ++s) logw[s] = log_weight(uint32_t(s));

    // stationary
    std::vector<double> lognu(logw);
    const double z = log_sum_exp(lognu);
    for (auto& x : lognu) x -= z;
    std::vector<double> nu(N);
    for (int64_t s = 0; s < N; ++s) nu[s] = std::exp(lognu[s]);

    // heat-bath kernel: choose site i, then set bit i to 1 with prob
    // w(s|1_i) / (w(s|1_i) + w(s|0_i))
    auto row = [&](uint32_t s, auto&& emit) {
        double stay = 0.0;
        for (int i = 0; i < n; ++i) {
            const uint32_t s1 = s | (1u << i);
            const uint32_t s0 = s & ~(1u << i);
            const double pp = sigmoid(logw[s1] - logw[s0]);
            const uint32_t other = (s >> i & 1) ? s0 : s1;
            const double p_other = (s >> i & 1) ? (1.0 - pp) : pp;
            emit(other, p_other / n);
            stay += ((s >> i & 1) ? pp : (1.0 - pp)) / n;
        }
        emit(s, stay);
    };

    // symmetrized dense matrix
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(N, N);
    for (int64_t s = 0; s < N; ++s) {
        row(uint32_t(s), [&](uint32_t t, double pr) {
            A(s, t) += pr * std::exp(0.5 * (lognu[s] - lognu[t]));
        });
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A, Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();  // ascending
    FullChainResult out;
    out.gap = 1.0 - ev(N - 2);
    out.stationary = std::move(nu);

    if (N <= 1024) {
        // exact worst-start TV mixing: propagate all rows of P^t
        std::vector<std::vector<double>> rows(N, std::vector<double>(N, 0.0));
        for (int64_t s = 0; s < N; ++s) rows[s][s] = 1.0;
        std::vector<double> scratch(N);
        const int64_t horizon = 64LL * n * n + 256;
        for (int64_t t = 1; t <= horizon; ++t) {
            for (int64_t s = 0; s < N; ++s) {
                std::fill(scratch.begin(), scratch.end(), 0.0);
                auto& mu = rows[s];
                for (int64_t x = 0; x < N; ++x) {
                    if (mu[x] == 0.0) continue;
                    const double mx = mu[x];
                    row(uint32_t(x), [&](uint32_t y, double pr) { scratch[y] += mx * pr; });
                }
                mu.swap(scratch);
            }
            double worst = 0.0;
            for (int64_t s = 0; s < N; ++s) {
                KahanSum acc;
                for (int64_t x = 0; x < N; ++x) acc.add(std::fabs(rows[s][x] - out.stationary[x]));
                worst = std::max(worst, 0.5 * acc.value());
            }
            if (worst <= 0.25) {
                out.t_mix_quarter = t;
                break;
            }
        }
    }
    return out;
}

FullChainResult exact_full_chain(const RegularGraph& g, const ModelParams& p) {
    const int n = g.n();
    if (n > 12) throw BudgetError("exact_full_chain: n <= 12 required");
    return exact_full_chain_weights(n, [&](uint32_t s) {
        std::vector<int8_t> spins(n);
        for (int i = 0; i < n; ++i) spins[i] = (s >> i & 1) ? 1 : -1;
        return -hamiltonian(g, make_config(g, std::move(spins)), p);
    });
}

FullChainResult exact_full_curie_weiss(int n, const std::vector<double>& logw) {
    if ((int)logw.size() != n + 1)
        throw std::invalid_argument("exact_full_curie_weiss: need n+1 weights");
    return exact_full_chain_weights(
        n, [&](uint32_t s) { return logw[std::popcount(s)]; });
}

}  // namespace isinglab
