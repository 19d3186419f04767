#pragma once

#include <cmath>
#include <stdexcept>

namespace isinglab {

// One (d, beta, B) point. Landscape routines assume field >= 0; negative
// fields are handled by the spin-flip symmetry (B, t) -> (-B, 1-t).
struct ModelParams {
    int d;
    double beta;
    double field;

    ModelParams(int d_, double beta_, double field_ = 0.0) : d(d_), beta(beta_), field(field_) {
        if (d < 3) throw std::invalid_argument("ModelParams: d >= 3 required");
        if (beta < 0) throw std::invalid_argument("ModelParams: beta >= 0 required");
    }

    // atanh(1/(d-1))
    double beta_c() const { return std::atanh(1.0 / (d - 1)); }

    bool supercritical() const { return beta > beta_c(); }
};

}  // namespace isinglab
