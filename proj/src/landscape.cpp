#include "isinglab/landscape.hpp"

#include <algorithm>
#include <cmath>

#include "isinglab/numerics.hpp"

namespace isinglab {

double f_beta(double t, double beta) {
    if (t < 0.0 || t > 1.0) throw std::invalid_argument("f_beta: t outside [0,1]");
    if (t == 1.0) return 1.0 / f_beta(0.0, beta);  // product identity
    const double a = std::exp(-2.0 * beta);
    const double u = 1.0 - 2.0 * t;
    return (a * u + std::sqrt(1.0 + (a * a - 1.0) * u * u)) / (2.0 * (1.0 - t));
}

double binary_entropy(double t) {
    if (t <= 0.0 || t >= 1.0) return 0.0;
    return -(1.0 - t) * std::log1p(-t) - t * std::log(t);
}

namespace {

double log_f_integral(double upper, double beta) {
    if (upper <= 0.0) return 0.0;
    return integrate([beta](double s) { return std::log(f_beta(s, beta)); }, 0.0, upper, 1e-11);
}

// phi_hat'_{beta,0}(e^theta): the zero-field slope in log coordinates.
// Stable for theta down to ~-700.
double slope0_logspace(double theta, const ModelParams& p) {
    const double t = std::exp(theta);
    return std::log1p(-t) - theta + p.d * std::log(f_beta(t, p.beta));
}

}  // namespace

double phi_hat(double t, const ModelParams& p) {
    if (t < 0.0 || t > 1.0) throw std::invalid_argument("phi_hat: t outside [0,1]");
    const double up = std::min(t, 1.0 - t);
    return p.beta * p.d / 2.0 - p.field + binary_entropy(t) + 2.0 * p.field * t +
           p.d * log_f_integral(up, p.beta);
}

double phi_hat_prime(double t, const ModelParams& p) {
    if (t <= 0.0) return std::numeric_limits<double>::infinity();
    if (t >= 1.0) return -std::numeric_limits<double>::infinity();
    return std::log((1.0 - t) / t) + p.d * std::log(f_beta(t, p.beta)) + 2.0 * p.field;
}

double phi_hat_second(double t, const ModelParams& p) {
    const double a = std::exp(-2.0 * p.beta);
    const double u = 1.0 - 2.0 * t;
    const double s = std::sqrt(1.0 + (a * a - 1.0) * u * u);
    return -1.0 / t + (p.d - 1.0) / (1.0 - t) -
           p.d * (a - u * s) / (2.0 * s * t * (1.0 - t));
}

double F_limit(double t, const ModelParams& p) {
    const double up = std::min(t, 1.0 - t);
    return p.beta * p.d / 2.0 + p.field * (2.0 * t - 1.0) + p.d * log_f_integral(up, p.beta);
}

double F_limit_prime(double t, const ModelParams& p) {
    return 2.0 * p.field + p.d * std::log(f_beta(t, p.beta));
}

std::optional<double> inflection_tu(const ModelParams& p) {
    const double e4 = std::exp(-4.0 * p.beta);
    const double c = e4 * (p.d - 1) / ((p.d - 2.0) * (p.d - 2.0) * (1.0 - e4));
    const double disc = 1.0 - 4.0 * c;
    if (disc < 0.0) return std::nullopt;
    // smaller root of t^2 - t + c = 0, in the form that survives c -> 0
    return 2.0 * c / (1.0 + std::sqrt(disc));
}

double annealed_Bc(const ModelParams& p) {
    if (!p.supercritical()) return 0.0;
    const double tu = *inflection_tu(p);
    return -0.5 * slope0_logspace(std::log(tu), p);
}

namespace {

LandscapeReport mirror_report(LandscapeReport r) {
    std::reverse(r.criticals.begin(), r.criticals.end());
    for (auto& c : r.criticals) {
        std::swap(c.log_t, c.log_1mt);
        c.t = 1.0 - c.t;
    }
    return r;
}

}  // namespace

LandscapeReport critical_points(const ModelParams& p) {
    if (p.field < 0.0)
        return mirror_report(critical_points(ModelParams(p.d, p.beta, -p.field)));

    const double B = p.field;
    LandscapeReport rep;
    rep.t_u = inflection_tu(p);

    double b_hat = 0.0;
    bool triple = false;
    if (p.supercritical()) {
        b_hat = annealed_Bc(p);
        rep.b_hat_c = b_hat;
        triple = B < b_hat;
    }

    const double theta_lo = -(2.0 * p.beta * p.d + 2.0 * B + 35.0);
    auto slope0 = [&](double th) { return slope0_logspace(th, p); };

    // t1 via its mirror complement: eps solves phi'_{beta,0}(eps) = 2B, t1 = 1-eps.
    const double hi1 = triple ? std::log(*rep.t_u) : std::log(0.5);
    const double eps1 =
        std::exp(bisect_root([&](double th) { return slope0(th) - 2.0 * B; }, theta_lo, hi1));
    CriticalPoint c1;
    c1.t = 1.0 - eps1;
    c1.log_t = std::log1p(-eps1);
    c1.log_1mt = std::log(eps1);
    c1.phi = phi_hat(eps1, ModelParams(p.d, p.beta, 0.0)) + B * (1.0 - 2.0 * eps1);
    c1.kind = CriticalKind::GlobalMax;

    if (!triple) {
        rep.criticals = {c1};
        rep.pressure = c1.phi;
        return rep;
    }

    const double log_tu = std::log(*rep.t_u);
    const double t3 =
        std::exp(bisect_root([&](double th) { return slope0(th) + 2.0 * B; }, theta_lo, log_tu));
    const double t2 = std::exp(
        bisect_root([&](double th) { return slope0(th) + 2.0 * B; }, log_tu, std::log(0.5)));

    CriticalPoint c3{t3, CriticalKind::LocalMax, phi_hat(t3, p), std::log(t3), std::log1p(-t3)};
    CriticalPoint c2{t2, CriticalKind::LocalMin, phi_hat(t2, p), std::log(t2), std::log1p(-t2)};

    // bottom-of-valley label is fixed; the larger maximum is global (tie at B=0)
    const double tol = 1e-12 * (1.0 + std::fabs(c1.phi));
    if (c3.phi > c1.phi + tol) {
        c1.kind = CriticalKind::LocalMax;
        c3.kind = CriticalKind::GlobalMax;
    } else if (c3.phi >= c1.phi - tol) {
        c3.kind = CriticalKind::GlobalMax;
    }

    rep.criticals = {c3, c2, c1};
    rep.lambda = std::min(c3.phi, c1.phi) - c2.phi;
    rep.pressure = std::max(c3.phi, c1.phi);
    return rep;
}

std::optional<double> barrier_lambda(const ModelParams& p) {
    return critical_points(p).lambda;
}

std::string to_string(CriticalKind k) {
    switch (k) {
        case CriticalKind::LocalMax: return "local-max";
        case CriticalKind::LocalMin: return "local-min";
        case CriticalKind::GlobalMax: return "global-max";
    }
    return "?";
}

}  // namespace isinglab
