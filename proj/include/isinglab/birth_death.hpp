#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace isinglab {

// Birth-death projection chain on {0..n} built from log weights
// logw[k] = n F_n(k):
//   p(k) = (n-k)/n * sigmoid(logw[k+1]-logw[k]),
//   q(k) = k/n     * sigmoid(logw[k-1]-logw[k]),  r = 1-p-q.
struct BirthDeathSpec {
    int n;
    std::vector<double> logw;
    std::vector<double> p, q, r;
};

BirthDeathSpec build_chain(int n, std::vector<double> logw);

struct StationaryMeasure {
    std::vector<double> logpi;  // log binom(n,k) + logw[k] - logw[0]
    std::vector<double> lognu;  // normalized
    std::vector<double> nu;
};

StationaryMeasure stationary(const BirthDeathSpec& spec);

struct ChenBounds {
    double lower, upper;  // 1/(4 l(i0)) <= gap <= 2/l(i0)
    double log_ell;
    int i0;  // median state
};

ChenBounds chen_gap_bounds(const BirthDeathSpec& spec);

// 1 - lambda_2 of the kernel, from Sturm bisection on the symmetrized
// tridiagonal I - D^{1/2} P D^{-1/2}. n <= 20000.
double exact_gap(const BirthDeathSpec& spec);

struct MixingBounds {
    double lower, upper;  // (1/gap - 1) log 2  and  log(4/min_nu)/gap
};
MixingBounds mixing_bounds_from_gap(double gamma, double min_nu);

// Prefix-set bottleneck for S = {0..m}: Phi(S) = nu(m) p(m) / nu(S).
struct BottleneckResult {
    double log_flow, log_mass;
    double phi;
    bool mass_le_half;
};
BottleneckResult bottleneck(const BirthDeathSpec& spec, int m);

// Exhaustive minimum of Phi(S) over all subsets with nu(S) <= 1/2; n <= 12.
struct BruteBottleneck {
    double phi_star;
    uint32_t witness_mask;
};
BruteBottleneck brute_force_bottleneck(const BirthDeathSpec& spec);

// log E[tau_{from -> to}], exact, via the one-step expectation sums in log space.
double expected_hitting_log(const BirthDeathSpec& spec, int from, int to);

// first and second moment of the passage time (log domain); variance adds over
// the independent one-step passages.
struct HittingMoments {
    double log_mean;
    double log_variance;
};
HittingMoments hitting_moments(const BirthDeathSpec& spec, int from, int to);

struct TVStart {
    enum class Mode { State, Extremes, All } mode = Mode::Extremes;
    int state = 0;
    static TVStart from_state(int k) { return {Mode::State, k}; }
    static TVStart extremes() { return {Mode::Extremes, 0}; }
    static TVStart all() { return {Mode::All, 0}; }
};

struct TVCurve {
    std::vector<int64_t> times;
    std::vector<double> dist;
    double t_mix_quarter;  // NaN when the curve never crosses 1/4
    double window;         // t_mix(1/4) - t_mix(3/4)
};

// Exact TV distance to stationarity of the propagated distribution(s).
// Worst case over starts {0,n} by default; full sweep only for n <= 128.
TVCurve tv_evolution(const BirthDeathSpec& spec, TVStart start, int64_t horizon,
                     int64_t stride = 0, int64_t budget_cap = 4'000'000'000LL);

// linear interpolation of the first eps-crossing; NaN if none
double tv_crossing(const TVCurve& curve, double eps);

// R(s) = sigmoid(F'(s)) - s
double drift(double s, const std::function<double(double)>& F_prime);

// c* = (2 s*(1-s*) |G''(s*)|)^{-1}; requires G''(s*) < 0.
double cutoff_constant(double s_star, double G_second);

}  // namespace isinglab
