#include "isinglab/birth_death.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "isinglab/numerics.hpp"

namespace isinglab {

BirthDeathSpec build_chain(int n, std::vector<double> logw) {
    if (n < 1) throw std::invalid_argument("build_chain: n >= 1 required");
    if ((int)logw.size() != n + 1)
        throw std::invalid_argument("build_chain: need n+1 weights");
    for (double w : logw)
        if (!std::isfinite(w)) throw std::invalid_argument("build_chain: non-finite weight");

    BirthDeathSpec s;
    s.n = n;
    s.logw = std::move(logw);
    s.p.assign(n + 1, 0.0);
    s.q.assign(n + 1, 0.0);
    s.r.assign(n + 1, 0.0);
    for (int k = 0; k <= n; ++k) {
        if (k < n) s.p[k] = double(n - k) / n * sigmoid(s.logw[k + 1] - s.logw[k]);
        if (k > 0) s.q[k] = double(k) / n * sigmoid(s.logw[k - 1] - s.logw[k]);
        s.r[k] = 1.0 - s.p[k] - s.q[k];
    }
    return s;
}

StationaryMeasure stationary(const BirthDeathSpec& spec) {
    const int n = spec.n;
    StationaryMeasure m;
    m.logpi.resize(n + 1);
    for (int k = 0; k <= n; ++k)
        m.logpi[k] = log_binomial(n, k) + (spec.logw[k] - spec.logw[0]);
    const double z = log_sum_exp(m.logpi);
    m.lognu.resize(n + 1);
    m.nu.resize(n + 1);
    for (int k = 0; k <= n; ++k) {
        m.lognu[k] = m.logpi[k] - z;
        m.nu[k] = std::exp(m.lognu[k]);
    }
    return m;
}

ChenBounds chen_gap_bounds(const BirthDeathSpec& spec) {
    const int n = spec.n;
    const StationaryMeasure m = stationary(spec);

    // median state: nu([0,i0]) >= 1/2 and nu([i0,n]) >= 1/2
    int i0 = 0;
    {
        KahanSum c;
        for (int k = 0; k <= n; ++k) {
            c.add(m.nu[k]);
            if (c.value() >= 0.5) {
                i0 = k;
                break;
            }
        }
    }

    // prefix/suffix cumulative log-masses
    std::vector<double> log_prefix(n + 1), log_suffix(n + 1);
    double acc = kNegInf;
    for (int k = 0; k <= n; ++k) log_prefix[k] = acc = log_add_exp(acc, m.lognu[k]);
    acc = kNegInf;
    for (int k = n; k >= 0; --k) log_suffix[k] = acc = log_add_exp(acc, m.lognu[k]);

    double log_ell = kNegInf;
    // left: max_{j<i0} nu([0,j]) * sum_{k=j}^{i0-1} 1/(nu(k) p(k))
    acc = kNegInf;
    for (int j = i0 - 1; j >= 0; --j) {
        acc = log_add_exp(acc, -(m.lognu[j] + std::log(spec.p[j])));
        log_ell = std::max(log_ell, log_prefix[j] + acc);
    }
    // right: max_{j>i0} nu([j,n]) * sum_{k=i0+1}^{j} 1/(nu(k) q(k))
    acc = kNegInf;
    for (int j = i0 + 1; j <= n; ++j) {
        acc = log_add_exp(acc, -(m.lognu[j] + std::log(spec.q[j])));
        log_ell = std::max(log_ell, log_suffix[j] + acc);
    }

    ChenBounds b;
    b.log_ell = log_ell;
    b.i0 = i0;
    b.lower = 0.25 * std::exp(-log_ell);
    b.upper = 2.0 * std::exp(-log_ell);
    return b;
}

namespace {

// number of eigenvalues of the symmetric tridiagonal (diag, off) strictly below x
int sturm_count(const std::vector<double>& diag, const std::vector<double>& off2, double x) {
    int count = 0;
    double d = diag[0] - x;
    if (d < 0) ++count;
    for (size_t i = 1; i < diag.size(); ++i) {
        if (d == 0.0) d = -1e-300;
        d = diag[i] - x - off2[i - 1] / d;
        if (d < 0) ++count;
    }
    return count;
}

}  // namespace

double exact_gap(const BirthDeathSpec& spec) {
    const int n = spec.n;
    if (n > 20000) throw BudgetError("exact_gap: n > 20000");
    // T = I - D^{1/2} P D^{-1/2}: diag = p+q, off = -sqrt(p(k) q(k+1)).
    // gap = second smallest eigenvalue of T (smallest is 0).
    std::vector<double> diag(n + 1), off2(n);
    for (int k = 0; k <= n; ++k) diag[k] = spec.p[k] + spec.q[k];
    for (int k = 0; k < n; ++k) off2[k] = spec.p[k] * spec.q[k + 1];

    double lo = -1e-9, hi = 2.0 + 1e-9;
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (sturm_count(diag, off2, mid) >= 2)
            hi = mid;
        else
            lo = mid;
    }
    return std::max(0.0, 0.5 * (lo + hi));
}

MixingBounds mixing_bounds_from_gap(double gamma, double min_nu) {
    if (gamma <= 0.0 || gamma > 1.0)
        throw std::invalid_argument("mixing_bounds_from_gap: gamma in (0,1] required");
    if (min_nu <= 0.0 || min_nu >= 1.0)
        throw std::invalid_argument("mixing_bounds_from_gap: min_nu in (0,1) required");
    return {(1.0 / gamma - 1.0) * std::log(2.0), std::log(4.0 / min_nu) / gamma};
}

BottleneckResult bottleneck(const BirthDeathSpec& spec, int m) {
    if (m < 0 || m >= spec.n) throw std::invalid_argument("bottleneck: need 0 <= m < n");
    const StationaryMeasure mm = stationary(spec);
    double log_mass = kNegInf;
    for (int k = 0; k <= m; ++k) log_mass = log_add_exp(log_mass, mm.lognu[k]);
    BottleneckResult r;
    r.log_flow = mm.lognu[m] + std::log(spec.p[m]);
    r.log_mass = log_mass;
    r.phi = std::exp(r.log_flow - r.log_mass);
    r.mass_le_half = log_mass <= std::log(0.5) + 1e-12;
    return r;
}

BruteBottleneck brute_force_bottleneck(const BirthDeathSpec& spec) {
    const int n = spec.n;
    if (n > 12) throw BudgetError("brute_force_bottleneck: n > 12");
    const StationaryMeasure m = stationary(spec);

    BruteBottleneck best{std::numeric_limits<double>::infinity(), 0};
    const uint32_t full = (n + 1 >= 32) ? 0xffffffffu : ((1u << (n + 1)) - 1);
    for (uint32_t mask = 1; mask < full; ++mask) {
        double mass = 0.0, flow = 0.0;
        for (int k = 0; k <= n; ++k) {
            if (!(mask >> k & 1)) continue;
            mass += m.nu[k];
            if (k < n && !(mask >> (k + 1) & 1)) flow += m.nu[k] * spec.p[k];
            if (k > 0 && !(mask >> (k - 1) & 1)) flow += m.nu[k] * spec.q[k];
        }
        if (mass > 0.5 || mass == 0.0) continue;
        const double phi = flow / mass;
        if (phi < best.phi_star) best = {phi, mask};
    }
    return best;
}

namespace {

// log E[tau_{k -> k-1}] for all k in [lo+1, hi], using
// E tau_{k->k-1} = (1/q(k)) sum_{j>=k} pi(j)/pi(k)
std::vector<double> down_step_logs(const BirthDeathSpec& spec, const StationaryMeasure& m) {
    const int n = spec.n;
    std::vector<double> out(n + 1, kNegInf);
    double tail = kNegInf;
    for (int k = n; k >= 1; --k) {
        tail = log_add_exp(tail, m.logpi[k]);
        out[k] = -std::log(spec.q[k]) + tail - m.logpi[k];
    }
    return out;
}

std::vector<double> up_step_logs(const BirthDeathSpec& spec, const StationaryMeasure& m) {
    const int n = spec.n;
    std::vector<double> out(n + 1, kNegInf);
    double head = kNegInf;
    for (int k = 0; k < n; ++k) {
        head = log_add_exp(head, m.logpi[k]);
        out[k] = -std::log(spec.p[k]) + head - m.logpi[k];
    }
    return out;
}

}  // namespace

double expected_hitting_log(const BirthDeathSpec& spec, int from, int to) {
    const int n = spec.n;
    if (from < 0 || from > n || to < 0 || to > n)
        throw std::invalid_argument("expected_hitting_log: state out of range");
    if (from == to) return kNegInf;  // tau = 0
    const StationaryMeasure m = stationary(spec);
    double acc = kNegInf;
    if (from > to) {
        const auto step = down_step_logs(spec, m);
        for (int k = to + 1; k <= from; ++k) acc = log_add_exp(acc, step[k]);
    } else {
        const auto step = up_step_logs(spec, m);
        for (int k = from; k < to; ++k) acc = log_add_exp(acc, step[k]);
    }
    return acc;
}

HittingMoments hitting_moments(const BirthDeathSpec& spec, int from, int to) {
    const int n = spec.n;
    if (from == to) return {kNegInf, kNegInf};
    const StationaryMeasure m = stationary(spec);
    double log_mean = kNegInf, log_var = kNegInf;
    if (from > to) {
        const auto step = down_step_logs(spec, m);
        // E tau^2_{k->k-1} = (2/(q(k) pi(k))) sum_{j>=k} E(tau_{j->k-1}) pi(j) - E tau_{k->k-1}
        for (int k = to + 1; k <= from; ++k) {
            double cum = kNegInf;      // log E tau_{j->k-1} built up in j
            double weighted = kNegInf;  // log sum_j E(tau_{j->k-1}) pi(j)
            for (int j = k; j <= n; ++j) {
                cum = log_add_exp(cum, step[j]);
                weighted = log_add_exp(weighted, cum + m.logpi[j]);
            }
            const double l2 = std::log(2.0) - std::log(spec.q[k]) - m.logpi[k] + weighted;
            const double lsq = l2 + std::log1p(-std::exp(step[k] - l2));
            // Var = E tau^2 - (E tau)^2
            const double lvar = lsq + std::log1p(-std::exp(2.0 * step[k] - lsq));
            log_mean = log_add_exp(log_mean, step[k]);
            log_var = log_add_exp(log_var, lvar);
        }
    } else {
        const auto step = up_step_logs(spec, m);
        for (int k = from; k < to; ++k) {
            double cum = kNegInf, weighted = kNegInf;
            for (int j = k; j >= 0; --j) {
                cum = log_add_exp(cum, step[j]);
                weighted = log_add_exp(weighted, cum + m.logpi[j]);
            }
            const double l2 = std::log(2.0) - std::log(spec.p[k]) - m.logpi[k] + weighted;
            const double lsq = l2 + std::log1p(-std::exp(step[k] - l2));
            const double lvar = lsq + std::log1p(-std::exp(2.0 * step[k] - lsq));
            log_mean = log_add_exp(log_mean, step[k]);
            log_var = log_add_exp(log_var, lvar);
        }
    }
    return {log_mean, log_var};
}

namespace {

std::vector<double> propagate_tv(const BirthDeathSpec& spec, int start,
                                 const std::vector<double>& nu, int64_t horizon,
                                 int64_t stride) {
    const int n = spec.n;
    std::vector<double> mu(n + 1, 0.0), nxt(n + 1);
    mu[start] = 1.0;
    std::vector<double> out;
    for (int64_t t = 0; t <= horizon; ++t) {
        if (t % stride == 0) {
            KahanSum s;
            for (int k = 0; k <= n; ++k) s.add(std::fabs(mu[k] - nu[k]));
            out.push_back(0.5 * s.value());
        }
        if (t == horizon) break;
        for (int k = 0; k <= n; ++k) {
            double v = mu[k] * spec.r[k];
            if (k > 0) v += mu[k - 1] * spec.p[k - 1];
            if (k < n) v += mu[k + 1] * spec.q[k + 1];
            nxt[k] = v;
        }
        mu.swap(nxt);
    }
    return out;
}

}  // namespace

double tv_crossing(const TVCurve& curve, double eps) {
    for (size_t i = 0; i < curve.dist.size(); ++i) {
        if (curve.dist[i] <= eps) {
            if (i == 0) return double(curve.times[0]);
            const double d0 = curve.dist[i - 1], d1 = curve.dist[i];
            const double t0 = double(curve.times[i - 1]), t1 = double(curve.times[i]);
            if (d0 == d1) return t1;
            return t0 + (d0 - eps) / (d0 - d1) * (t1 - t0);
        }
    }
    return std::numeric_limits<double>::quiet_NaN();
}

TVCurve tv_evolution(const BirthDeathSpec& spec, TVStart start, int64_t horizon,
                     int64_t stride, int64_t budget_cap) {
    const int n = spec.n;
    if (stride <= 0) stride = std::max<int64_t>(1, n / 8);
    int n_starts = 1;
    if (start.mode == TVStart::Mode::Extremes) n_starts = 2;
    if (start.mode == TVStart::Mode::All) {
        if (n > 128) throw BudgetError("tv_evolution: full start sweep only for n <= 128");
        n_starts = n + 1;
    }
    if (int64_t(n + 1) * horizon * n_starts > budget_cap)
        throw BudgetError("tv_evolution: (n+1) * horizon * starts exceeds budget");

    const StationaryMeasure m = stationary(spec);
    std::vector<std::vector<double>> curves;
    if (start.mode == TVStart::Mode::State) {
        curves.push_back(propagate_tv(spec, start.state, m.nu, horizon, stride));
    } else if (start.mode == TVStart::Mode::Extremes) {
        curves.push_back(propagate_tv(spec, 0, m.nu, horizon, stride));
        curves.push_back(propagate_tv(spec, n, m.nu, horizon, stride));
    } else {
        for (int k = 0; k <= n; ++k)
            curves.push_back(propagate_tv(spec, k, m.nu, horizon, stride));
    }

    TVCurve c;
    const size_t len = curves[0].size();
    for (size_t i = 0; i < len; ++i) {
        double w = 0.0;
        for (const auto& cv : curves) w = std::max(w, cv[i]);
        c.times.push_back(int64_t(i) * stride);
        c.dist.push_back(w);
    }
    c.t_mix_quarter = tv_crossing(c, 0.25);
    c.window = c.t_mix_quarter - tv_crossing(c, 0.75);
    return c;
}

double drift(double s, const std::function<double(double)>& F_prime) {
    if (s <= 0.0 || s >= 1.0) throw std::invalid_argument("drift: s in (0,1) required");
    return sigmoid(F_prime(s)) - s;
}

double cutoff_constant(double s_star, double G_second) {
    if (G_second >= 0.0)
        throw std::invalid_argument("cutoff_constant: G''(s*) < 0 required");
    return 1.0 / (2.0 * s_star * (1.0 - s_star) * std::fabs(G_second));
}

}  // namespace isinglab
