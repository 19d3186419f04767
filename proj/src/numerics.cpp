#include "isinglab/numerics.hpp"

namespace isinglab {

double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   double tol, int max_iter) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0) == (fhi > 0))
        throw std::invalid_argument("bisect_root: endpoints do not bracket a sign change");
    for (int i = 0; i < max_iter && (hi - lo) > tol * (1.0 + std::fabs(lo) + std::fabs(hi)); ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

namespace {

// 7-point Gauss, 15-point Kronrod nodes/weights on [-1,1].
constexpr double kk_x[8] = {0.0,
                            0.2077849550078985,
                            0.4058451513773972,
                            0.5860872354676911,
                            0.7415311855993944,
                            0.8648644233597691,
                            0.9491079123427585,
                            0.9914553711208126};
constexpr double kk_w[8] = {0.2094821410847278, 0.2044329400752989, 0.1903505780647854,
                            0.1690047266392679, 0.1406532597155259, 0.1047900103222502,
                            0.0630920926299786, 0.0229353220105292};
constexpr double kg_w[4] = {0.4179591836734694, 0.3818300505051189, 0.2797053914892767,
                            0.1294849661688697};

struct GkResult {
    double kronrod;
    double err;
};

GkResult gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    fv[7] = f(c);
    for (int i = 1; i < 8; ++i) {
        fv[7 - i] = f(c - h * kk_x[i]);
        fv[7 + i] = f(c + h * kk_x[i]);
    }
    double resk = kk_w[0] * fv[7];
    double resg = kg_w[0] * fv[7];
    for (int i = 1; i < 8; ++i) {
        resk += kk_w[i] * (fv[7 - i] + fv[7 + i]);
        if (i % 2 == 0) resg += kg_w[i / 2] * (fv[7 - i] + fv[7 + i]);
    }
    resk *= h;
    resg *= h;
    return {resk, std::fabs(resk - resg)};
}

double integrate_rec(const std::function<double(double)>& f, double a, double b,
                     double tol, int depth) {
    const GkResult r = gk15(f, a, b);
    if (r.err <= tol || depth >= 50 || (b - a) < 1e-300) return r.kronrod;
    const double c = 0.5 * (a + b);
    return integrate_rec(f, a, c, 0.5 * tol, depth + 1) +
           integrate_rec(f, c, b, 0.5 * tol, depth + 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double abs_tol) {
    if (a == b) return 0.0;
    return integrate_rec(f, a, b, abs_tol, 0);
}

}  // namespace isinglab
