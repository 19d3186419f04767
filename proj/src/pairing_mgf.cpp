#include "isinglab/pairing_mgf.hpp"

#include <cmath>
#include <stdexcept>

#include "isinglab/numerics.hpp"

namespace isinglab {

PairingMgfTable build_pairing_table(int total, double beta) {
    if (total < 0 || total % 2 != 0)
        throw std::invalid_argument("build_pairing_table: total must be even and >= 0");
    const double c = -2.0 * beta;
    std::vector<double> prev = {0.0};  // diagonal T=0
    std::vector<double> cur;
    for (int T = 2; T <= total; T += 2) {
        cur.assign(T + 1, 0.0);
        for (int a = 1; a <= T; ++a) {
            const int b = T - a;
            double term_pp = (a >= 2) ? std::log(double(a - 1)) + prev[a - 2] : kNegInf;
            double term_pm = (b >= 1) ? std::log(double(b)) + c + prev[a - 1] : kNegInf;
            cur[a] = log_add_exp(term_pp, term_pm) - std::log(double(a + b - 1));
        }
        prev = cur;
    }
    return PairingMgfTable{beta, total, std::move(prev)};
}

double pairing_mgf_log(int a, int b, double beta) {
    if (a < 0 || b < 0) throw std::invalid_argument("pairing_mgf_log: negative count");
    if ((a + b) % 2 != 0)
        throw std::invalid_argument("pairing_mgf_log: a+b odd, no perfect matching");
    return build_pairing_table(a + b, beta).logg[a];
}

std::vector<double> exact_Fn_all(int n, const ModelParams& p) {
    if ((int64_t(n) * p.d) % 2 != 0)
        throw std::invalid_argument("exact_Fn_all: nd must be even");
    const PairingMgfTable tab = build_pairing_table(n * p.d, p.beta);
    std::vector<double> F(n + 1);
    for (int k = 0; k <= n; ++k)
        F[k] = p.beta * p.d / 2.0 + tab.logg[p.d * k] / n + p.field * (2.0 * k / n - 1.0);
    return F;
}

double exact_Fn(int k, int n, const ModelParams& p) {
    if (k < 0 || k > n) throw std::invalid_argument("exact_Fn: k outside [0,n]");
    return p.beta * p.d / 2.0 + pairing_mgf_log(p.d * k, p.d * (n - k), p.beta) / n +
           p.field * (2.0 * k / n - 1.0);
}

}  // namespace isinglab
