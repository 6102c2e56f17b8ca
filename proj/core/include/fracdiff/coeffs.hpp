#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace fracdiff {

// Grunwald-Letnikov and WSGD weight sequences for a fractional order
// alpha in (1,2].  The WSGD combination uses the shift pair (p,q) = (1,0):
//   w_0 = (alpha/2) g_0,
//   w_k = (alpha/2) g_k + ((2-alpha)/2) g_{k-1},   k >= 1,
// where g_k are the power-series coefficients of (1-z)^alpha.
struct WsgdWeights {
    double alpha = 0.0;
    std::vector<double> g;  // g_0 .. g_n
    std::vector<double> w;  // w_0 .. w_n
};

// g_0 = 1, g_k = (1 - (alpha+1)/k) g_{k-1}.  Equals (-1)^k binom(alpha,k).
std::vector<double> grunwald_weights(double alpha, std::size_t n);

WsgdWeights wsgd_weights(double alpha, std::size_t n);

// Closed form for w_2: alpha (alpha^2 + alpha - 4) / 4.
double wsgd_w2_closed_form(double alpha);

// Upper bound for |sum_{k=0}^n w_k|.  The infinite sum vanishes; the
// truncated sum decays like n^{-alpha}.  The constant 2/|Gamma(1-alpha)|
// doubles the leading asymptotic term and is validated against direct
// summation at n = 10^6 in the test suite.
double weight_sum_tail_bound(double alpha, std::size_t n);

struct PropertyCheck {
    std::string name;
    bool passed = false;
    double value = 0.0;  // measured quantity
    double bound = 0.0;  // bound it was compared against
};

struct WeightPropertyReport {
    std::vector<PropertyCheck> checks;
    bool all_passed() const;
};

// Evaluates the analytic identities of the (1,0) WSGD weights:
// w_0 = alpha/2, w_1 < 0, the w_2 closed form, 1 >= w_0 >= w_3 >= ... >= 0,
// partial sums negative from m = 2 on, and |sum_{k<=n} w_k| within the
// truncation tail bound.
WeightPropertyReport verify_weight_properties(const WsgdWeights& w);

}  // namespace fracdiff
