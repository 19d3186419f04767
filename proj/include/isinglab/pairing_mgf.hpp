#pragma once

#include <vector>

#include "isinglab/model_params.hpp"

namespace isinglab {

// log g(a, b): log E[e^{-2 beta X}] where X counts plus-minus pairs in a
// uniform perfect matching of a plus and b minus half-edges. Built bottom-up
// along diagonals of constant a+b via
//   g(a,b) = [(a-1) g(a-2,b) + b e^{-2beta} g(a-1,b-1)] / (a+b-1),  g(0,b) = 1.
struct PairingMgfTable {
    double beta;
    int total;                 // a + b, even
    std::vector<double> logg;  // logg[a] = log g(a, total - a)

    double at_plus(int a) const { return logg[a]; }
};

PairingMgfTable build_pairing_table(int total, double beta);

// One-off query; a = plus half-edges, b = minus half-edges, a+b even.
double pairing_mgf_log(int a, int b, double beta);

// Exact finite-n annealed weight F_n(k) = beta d/2 + (1/n) log g(dk, d(n-k)) + B(2k/n - 1)
// for all k = 0..n, sharing one matching table.
std::vector<double> exact_Fn_all(int n, const ModelParams& p);
double exact_Fn(int k, int n, const ModelParams& p);

}  // namespace isinglab
