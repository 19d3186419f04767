#include "isinglab/tree_gibbs.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "isinglab/landscape.hpp"
#include "isinglab/numerics.hpp"

namespace isinglab {

double L_beta(double x, double beta) {
    if (x < 0.0) throw std::invalid_argument("L_beta: x >= 0 required");
    if (std::isinf(x)) return std::exp(2.0 * beta);
    const double e2 = std::exp(2.0 * beta);
    return (e2 * x + 1.0) / (e2 + x);
}

double L_beta_prime(double x, double beta) {
    const double e2 = std::exp(2.0 * beta);
    const double den = e2 + x;
    return (e2 * e2 - 1.0) / (den * den);
}

double log_L_beta_theta(double theta, double beta) {
    return log_add_exp(2.0 * beta + theta, 0.0) - log_add_exp(2.0 * beta, theta);
}

namespace {

double seed_theta(LeafState s, const ModelParams& p) {
    const double clamp = 50.0 + 2.0 * p.beta;
    switch (s) {
        case LeafState::Plus: return -clamp;
        case LeafState::Minus: return clamp;
        case LeafState::Free: return -2.0 * p.field;
    }
    return 0.0;
}

// derivative of theta -> -2B + (d-1) log L(e^theta) with respect to theta
double map_derivative(double theta, const ModelParams& p) {
    // (d-1) * x L'(x)/L(x) = (d-1) * x (e^{4b}-1) / ((e^{2b}+x)(e^{2b}x+1))
    const double lf = std::log(std::expm1(4.0 * p.beta)) + theta -
                      log_add_exp(2.0 * p.beta, theta) -
                      log_add_exp(2.0 * p.beta + theta, 0.0);
    return (p.d - 1) * std::exp(lf);
}

// log L(e^{theta+delta}) - log L(e^theta) without cancellation, delta >= 0.
double log_L_diff(double theta, double delta, double beta) {
    const double A = theta + std::log(std::expm1(4.0 * beta)) -
                     log1p_exp(2.0 * beta + theta) - log_add_exp(2.0 * beta, theta + delta);
    return std::log1p(std::expm1(delta) * std::exp(A));
}

}  // namespace

TreeFixedPoints tree_fixed_points(const ModelParams& p) {
    const double B = p.field;
    auto h = [&](double th) {
        return -2.0 * B + (p.d - 1) * log_L_beta_theta(th, p.beta) - th;
    };
    const double lo = -2.0 * p.beta * (p.d - 1) - 2.0 * B - 5.0;
    const double hi = 2.0 * p.beta * (p.d - 1) + 5.0;
    const int grid = 10000;

    std::vector<double> thetas;
    double prev_x = lo, prev_f = h(lo);
    for (int i = 1; i <= grid; ++i) {
        const double x = lo + (hi - lo) * i / grid;
        const double f = h(x);
        if (prev_f == 0.0)
            thetas.push_back(prev_x);
        else if ((prev_f > 0) != (f > 0))
            thetas.push_back(bisect_root(h, prev_x, x, 1e-14));
        prev_x = x;
        prev_f = f;
    }
    // tangency guard: merge near-coincident roots
    std::sort(thetas.begin(), thetas.end());
    std::vector<double> kept;
    for (double th : thetas)
        if (kept.empty() || th - kept.back() > 1e-7) kept.push_back(th);

    TreeFixedPoints out;
    for (double th : kept) {
        out.roots.push_back(std::exp(th));
        out.stable.push_back(std::fabs(map_derivative(th, p)) < 1.0);
    }
    if (out.roots.size() == 1) {
        const double r = out.roots[0];
        out.r_star = r;
        out.kappa = std::exp(-2.0 * B) * std::pow(L_beta(r, p.beta), p.d - 2) *
                    L_beta_prime(r, p.beta);
    }
    return out;
}

double tree_critical_field(const ModelParams& p) {
    if (!p.supercritical()) return 0.0;
    double lo = 0.0, hi = p.beta * p.d;  // B_c < beta d
    auto triple = [&](double B) {
        return tree_fixed_points(ModelParams(p.d, p.beta, B)).roots.size() >= 3;
    };
    if (!triple(lo)) return 0.0;
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        (triple(mid) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double map_r_to_t(double r, double beta) {
    if (r <= 0.0) throw std::invalid_argument("map_r_to_t: r > 0 required");
    return 1.0 / (r * L_beta(r, beta) + 1.0);
}

double map_t_to_r(double t, double beta) {
    if (t <= 0.0 || t >= 1.0) throw std::invalid_argument("map_t_to_r: t in (0,1) required");
    return f_beta(t, beta) * (1.0 - t) / t;
}

std::optional<double> kappa(const ModelParams& p) {
    return tree_fixed_points(p).kappa;
}

double root_ratio_log(int depth, LeafState boundary, const ModelParams& p, int root_arity) {
    if (depth < 0) throw std::invalid_argument("root_ratio_log: depth >= 0 required");
    if (root_arity == 0) root_arity = p.d;
    double th = seed_theta(boundary, p);
    if (depth == 0) return th;
    for (int i = 0; i < depth - 1; ++i)
        th = -2.0 * p.field + (p.d - 1) * log_L_beta_theta(th, p.beta);
    return -2.0 * p.field + root_arity * log_L_beta_theta(th, p.beta);
}

double root_ratio(int depth, LeafState boundary, const ModelParams& p, int root_arity) {
    return std::exp(root_ratio_log(depth, boundary, p, root_arity));
}

namespace {

double eval_subtree(int level, int depth, int64_t offset, int arity,
                    const std::vector<LeafState>& leaves, const ModelParams& p) {
    if (level == depth) return seed_theta(leaves[offset], p);
    // children of a node at this level root subtrees with (depth-level-1) more levels
    int64_t block = 1;
    for (int j = level + 1; j < depth; ++j) block *= (p.d - 1);
    double th = -2.0 * p.field;
    for (int c = 0; c < arity; ++c)
        th += log_L_beta_theta(
            eval_subtree(level + 1, depth, offset + c * block, p.d - 1, leaves, p), p.beta);
    return th;
}

}  // namespace

double root_ratio_general_log(int depth, const std::vector<LeafState>& leaves,
                              const ModelParams& p, int root_arity) {
    if (root_arity == 0) root_arity = p.d;
    if (depth == 0) {
        if (leaves.size() != 1) throw std::invalid_argument("depth 0 takes one leaf state");
        return seed_theta(leaves[0], p);
    }
    int64_t want = root_arity;
    for (int j = 1; j < depth; ++j) want *= (p.d - 1);
    if ((int64_t)leaves.size() != want)
        throw std::invalid_argument("root_ratio_general_log: wrong leaf count");
    // root children each own a contiguous block of leaves
    int64_t block = want / root_arity;
    double th = -2.0 * p.field;
    for (int c = 0; c < root_arity; ++c)
        th += log_L_beta_theta(eval_subtree(1, depth, c * block, p.d - 1, leaves, p), p.beta);
    return th;
}

double root_magnetization(int depth, LeafState boundary, const ModelParams& p) {
    const double th = root_ratio_log(depth, boundary, p, p.d);
    return -std::tanh(0.5 * th);
}

double influence_decay(int depth, const ModelParams& p, LeafState base) {
    if (p.supercritical() && p.field <= tree_critical_field(p))
        throw std::domain_error("influence_decay: requires uniqueness regime (B > B_c^G)");
    const double B = p.field;
    const double th_p = seed_theta(LeafState::Plus, p);
    const double th_m = seed_theta(LeafState::Minus, p);

    if (depth == 0) {
        const double dp = 1.0 / (1.0 + std::exp(th_p)) - 1.0 / (1.0 + std::exp(th_m));
        return std::fabs(dp);
    }

    // hom[j]: subtree root theta j interior levels above a homogeneous `base` boundary
    std::vector<double> hom(depth);
    hom[0] = seed_theta(base, p);
    for (int j = 1; j < depth; ++j)
        hom[j] = -2.0 * B + (p.d - 1) * log_L_beta_theta(hom[j - 1], p.beta);

    // walk the flipped-leaf path from its parent up to the root, carrying
    // theta (flipped leaf = plus) and delta = theta(minus) - theta(plus) >= 0
    double theta, delta;
    if (depth == 1) {
        theta = -2.0 * B + (p.d - 1) * log_L_beta_theta(hom[0], p.beta) +
                log_L_beta_theta(th_p, p.beta);
        delta = log_L_beta_theta(th_m, p.beta) - log_L_beta_theta(th_p, p.beta);
    } else {
        theta = -2.0 * B + (p.d - 2) * log_L_beta_theta(hom[0], p.beta) +
                log_L_beta_theta(th_p, p.beta);
        delta = log_L_beta_theta(th_m, p.beta) - log_L_beta_theta(th_p, p.beta);
        for (int i = depth - 2; i >= 1; --i) {
            const double next_delta = log_L_diff(theta, delta, p.beta);
            theta = -2.0 * B + (p.d - 2) * log_L_beta_theta(hom[depth - 1 - i], p.beta) +
                    log_L_beta_theta(theta, p.beta);
            delta = next_delta;
        }
        const double root_delta = log_L_diff(theta, delta, p.beta);
        theta = -2.0 * B + (p.d - 1) * log_L_beta_theta(hom[depth - 1], p.beta) +
                log_L_beta_theta(theta, p.beta);
        delta = root_delta;
    }
    // P(+|plus-leaf) - P(+|minus-leaf) = e^theta expm1(delta) / ((1+e^theta)(1+e^{theta+delta}))
    const double log_diff = theta + std::log(std::expm1(delta)) - log1p_exp(theta) -
                            log1p_exp(theta + delta);
    return std::exp(log_diff);
}

InfluenceSeries influence_decay_series(int max_depth, const ModelParams& p, LeafState base) {
    InfluenceSeries s;
    const auto k = kappa(p);
    if (!k) throw std::domain_error("influence_decay_series: non-unique fixed point");
    s.kappa_bound = *k;
    for (int ell = 1; ell <= max_depth; ++ell) s.influence.push_back(influence_decay(ell, p, base));
    for (size_t i = 1; i < s.influence.size(); ++i)
        s.ratios.push_back(s.influence[i] / s.influence[i - 1]);
    return s;
}

}  // namespace isinglab
