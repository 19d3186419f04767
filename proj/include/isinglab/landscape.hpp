#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isinglab/model_params.hpp"

namespace isinglab {

// f_beta(t) = (e^{-2b}(1-2t) + sqrt(1+(e^{-4b}-1)(1-2t)^2)) / (2(1-t)),
// extended to t=1 by the product identity f(t) f(1-t) = 1.
double f_beta(double t, double beta);

// binary entropy I(t) = (t-1)log(1-t) - t log t, I(0)=I(1)=0.
double binary_entropy(double t);

// Annealed fixed-spin free-energy density
//   phi_hat(t) = beta d/2 - B + I(t) + 2Bt + d * int_0^{t ^ (1-t)} log f_beta(s) ds.
double phi_hat(double t, const ModelParams& p);

// Closed form: phi_hat'(t) = log((1-t)/t) + d log f_beta(t) + 2B, valid on (0,1).
// t in {0,1} yields +/-infinity.
double phi_hat_prime(double t, const ModelParams& p);

// Closed-form second derivative (derived from f_beta; used for cross-checks).
double phi_hat_second(double t, const ModelParams& p);

// F(t) = phi_hat(t) - I(t): the smooth limit of the annealed weights F_n(k).
double F_limit(double t, const ModelParams& p);
// F'(t) = 2B + d log f_beta(t).
double F_limit_prime(double t, const ModelParams& p);

// Inflection point t_u in (0, 1/2): smaller root of t^2 - t + c = 0 with
// c = e^{-4b}(d-1) / ((d-2)^2 (1-e^{-4b})). Absent for beta <= beta_c.
std::optional<double> inflection_tu(const ModelParams& p);

enum class CriticalKind { LocalMax, LocalMin, GlobalMax };

struct CriticalPoint {
    double t;
    CriticalKind kind;
    double phi;      // phi_hat at the root, evaluated in mirrored form when t ~ 1
    double log_t;    // log t, kept for roots collapsing to 0
    double log_1mt;  // log(1-t), kept for roots collapsing to 1
};

struct LandscapeReport {
    std::optional<double> t_u;
    std::vector<CriticalPoint> criticals;  // sorted by t; length 1 or 3
    std::optional<double> b_hat_c;
    std::optional<double> lambda;  // barrier; present only with three criticals
    double pressure;
};

// All critical points of phi_hat, classified, with pressure. Accepts any B;
// B < 0 is mapped through (B, t) -> (-B, 1-t).
LandscapeReport critical_points(const ModelParams& p);

// B_hat_c = -phi_hat'_{beta,0}(t_u)/2 for beta > beta_c, else 0.
double annealed_Bc(const ModelParams& p);

// min{phi(t3), phi(t1)} - phi(t2) when the landscape has three criticals.
std::optional<double> barrier_lambda(const ModelParams& p);

std::string to_string(CriticalKind k);

}  // namespace isinglab
