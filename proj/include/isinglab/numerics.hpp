#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace isinglab {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log(e^a + e^b), safe for infinities.
inline double log_add_exp(double a, double b) {
    if (a == kNegInf) return b;
    if (b == kNegInf) return a;
    const double m = std::max(a, b);
    return m + std::log1p(std::exp(-std::fabs(a - b)));
}

inline double log_sum_exp(std::span<const double> xs) {
    double m = kNegInf;
    for (double x : xs) m = std::max(m, x);
    if (m == kNegInf) return kNegInf;
    double s = 0.0;
    for (double x : xs) s += std::exp(x - m);
    return m + std::log(s);
}

// 1/(1+e^{-x}) without overflow on either tail.
inline double sigmoid(double x) {
    if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
    const double e = std::exp(x);
    return e / (1.0 + e);
}

// log(1+e^x)
inline double log1p_exp(double x) {
    if (x > 0) return x + std::log1p(std::exp(-x));
    return std::log1p(std::exp(x));
}

inline double log_binomial(int64_t n, int64_t k) {
    if (k < 0 || k > n) return kNegInf;
    return std::lgamma(double(n) + 1) - std::lgamma(double(k) + 1) - std::lgamma(double(n - k) + 1);
}

// Compensated accumulator for long probability sums.
class KahanSum {
  public:
    void add(double x) {
        const double y = x - c_;
        const double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }

  private:
    double s_ = 0.0;
    double c_ = 0.0;
};

// Bisection refinement of a bracketed sign change. f(lo) and f(hi) must have
// opposite signs (zero endpoints are returned as-is).
double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   double tol = 1e-13, int max_iter = 200);

// Adaptive Gauss-Kronrod (G7,K15) quadrature of a smooth integrand on [a,b].
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-11);

// SplitMix64: counter-based stream generator. A stream is a pure function of
// (seed, stream_id, counter), so replicas get independent reproducible
// randomness regardless of scheduling.
class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed, uint64_t stream = 0) {
        state_ = mix(seed + 0x9e3779b97f4a7c15ull * (stream + 1));
    }

    uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix(state_);
    }

    // uniform in [0,1)
    double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

    // uniform in {0,...,n-1}
    uint64_t next_below(uint64_t n) {
        // rejection-free Lemire reduction with one retry loop for exactness
        while (true) {
            uint64_t x = next_u64();
            __uint128_t m = (__uint128_t)x * n;
            uint64_t lo = (uint64_t)m;
            if (lo >= n || lo >= (uint64_t)(-(int64_t)n) % n) return (uint64_t)(m >> 64);
        }
    }

    static uint64_t mix(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

  private:
    uint64_t state_;
};

// Thrown when a request exceeds a declared state-space or wall budget.
// The CLI maps it to exit code 2.
class BudgetError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace isinglab
