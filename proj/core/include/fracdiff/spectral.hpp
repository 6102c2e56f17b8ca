#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "fracdiff/linalg.hpp"

namespace fracdiff {

// Extreme |Im/Re| ratio of the WSGD generating function: tan(-alpha*pi/2).
double rho_alpha(double alpha);

// sigma_alpha = min_x Re[-g(alpha,x)] / |g(alpha,x)| = |cos(alpha*pi/2)|,
// the constant entering all of the stability conditions.
double sigma_alpha(double alpha);

// Generating function of W_alpha,
//   g(alpha,x) = [(alpha/2) e^{-ix} + (2-alpha)/2] (1 - e^{ix})^alpha,
// evaluated through the polar form of (1 - e^{ix}): modulus
// (2 sin|x/2|)^alpha, argument alpha*(x -+ pi)/2 by half-interval.
std::complex<double> generating_function(double alpha, double x);

// Grid minimum of Re[-g]/|g| over x in (-pi,pi) excluding x = 0, where the
// ratio is undefined (g = 0); the infimum is the x->0 limit and the grid
// point nearest zero stands in for it.
double sigma_alpha_numeric(double alpha, std::size_t n_grid);

struct GeneratingFunctionSample {
    double x = 0.0;
    std::complex<double> g;
    double ratio = 0.0;  // Re[-g]/|g|; NaN at x = 0
};

struct GeneratingFunctionProfile {
    double alpha = 0.0;
    double rho = 0.0;
    double sigma = 0.0;
    std::vector<GeneratingFunctionSample> samples;
};

// Samples g on n_grid+1 uniform points over [-pi,pi].
GeneratingFunctionProfile sample_generating_function(double alpha, std::size_t n_grid);

// (1/2pi) int_{-pi}^{pi} (sum_k u_k e^{-ikx}) (sum_k v_k e^{ikx}) g(alpha,x) dx
// by the trapezoidal rule on n_quad uniform points (power of two,
// >= 8*length).  The real part equals u^T W_alpha v.
double quadratic_form_integral(const std::vector<double>& u, const std::vector<double>& v,
                               double alpha, std::size_t n_quad);

// Largest eigenvalue of (a + a^T)/2 via cyclic Jacobi; dimension <= 2048.
double symmetric_part_max_eigenvalue(const DenseMatrix& a);

// All eigenvalues of a general real matrix (dimension <= 512) via
// Hessenberg reduction and shifted QR.  Throws on non-convergence.
std::vector<std::complex<double>> eigenvalues_small(const DenseMatrix& a);

struct EigenPair {
    std::complex<double> value;
    std::vector<std::complex<double>> vector;  // unit 2-norm
    double residual = 0.0;                     // ||a v - lambda v||
};

// Eigenvalues plus inverse-iteration eigenvectors and their residuals.
std::vector<EigenPair> eigenpairs_small(const DenseMatrix& a);

}  // namespace fracdiff
