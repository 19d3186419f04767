#pragma once

#include <optional>
#include <vector>

#include "isinglab/model_params.hpp"

namespace isinglab {

// L_beta(x) = (e^{2b} x + 1) / (e^{2b} + x), the Ising tree recursion kernel.
double L_beta(double x, double beta);
double L_beta_prime(double x, double beta);

// log L_beta(e^theta), stable for |theta| up to ~700.
double log_L_beta_theta(double theta, double beta);

struct TreeFixedPoints {
    std::vector<double> roots;   // sorted, r = e^{-2B} L(r)^{d-1}
    std::vector<bool> stable;    // |map derivative| < 1 at each root
    std::optional<double> r_star;  // set iff a single root
    std::optional<double> kappa;   // e^{-2B} L(r*)^{d-2} L'(r*), iff unique
};

// All fixed points by sign-change scan of theta -> -2B + (d-1) log L(e^theta) - theta
// on a grid of 1e4 points, refined by bisection. Roots closer than 1e-7 in theta
// are merged (tangency guard).
TreeFixedPoints tree_fixed_points(const ModelParams& p);

// Critical field for Gibbs uniqueness on the d-ary tree: bisection on B of the
// 3 -> 1 root-count transition, to 1e-9. Returns 0 for beta <= beta_c.
double tree_critical_field(const ModelParams& p);

// change of variables between the tree ratio r and the annealed coordinate t
double map_r_to_t(double r, double beta);  // p(r) = 1 / (r L(r) + 1)
double map_t_to_r(double t, double beta);  // f_beta(t)(1-t)/t

// e^{-2B} L(r*)^{d-2} L'(r*) when the fixed point is unique; absent otherwise.
std::optional<double> kappa(const ModelParams& p);

enum class LeafState { Plus, Minus, Free };

// Log root ratio theta = log R for a homogeneous boundary at distance `depth`
// below the root; interior arity d-1, root arity d unless overridden
// (pass d-1 for the pure fixed-point recursion). depth 0 returns the seed.
double root_ratio_log(int depth, LeafState boundary, const ModelParams& p, int root_arity = 0);
double root_ratio(int depth, LeafState boundary, const ModelParams& p, int root_arity = 0);

// Fully general boundary: one seed per leaf, leaves ordered left-to-right.
// Materializes the whole tree; meant for small depths.
double root_ratio_general_log(int depth, const std::vector<LeafState>& leaves,
                              const ModelParams& p, int root_arity = 0);

// (1 - R)/(1 + R) at root arity d.
double root_magnetization(int depth, LeafState boundary, const ModelParams& p);

// |P(sigma_o=+ | eta+) - P(sigma_o=+ | eta-)| where eta+/eta- agree with `base`
// everywhere at distance `depth` except one leaf set to plus/minus. Exact even
// when the difference is ~kappa^depth (paired recursion carrying the log-ratio
// difference through expm1/log1p). Throws std::domain_error outside the
// uniqueness regime (B <= B_c^G).
double influence_decay(int depth, const ModelParams& p, LeafState base = LeafState::Plus);

// influence at depths 1..max_depth plus consecutive ratios; ratios[i] =
// infl(i+2)/infl(i+1).
struct InfluenceSeries {
    std::vector<double> influence;  // influence[i] = infl(depth i+1)
    std::vector<double> ratios;
    double kappa_bound;
};
InfluenceSeries influence_decay_series(int max_depth, const ModelParams& p,
                                       LeafState base = LeafState::Plus);

}  // namespace isinglab
