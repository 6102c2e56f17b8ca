#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace fracdiff {

// Real gamma function for x > 0 (all uses here have x in (0, 9]).
double gamma_real(double x);

enum class Side { left, right };

struct Domain1D {
    double left = 0.0;
    double right = 1.0;
    double width() const { return right - left; }
};

// Riemann-Liouville derivative of order alpha of the shifted monomial:
//   left : Gamma(k+1)/Gamma(k+1-alpha) (x - x_L)^{k-alpha}
//   right: Gamma(k+1)/Gamma(k+1-alpha) (x_R - x)^{k-alpha}
// Classically valid with zero boundary data for k >= 2 and alpha in (1,2].
double rl_derivative_monomial(int k, double alpha, Side side, double x, const Domain1D& domain);

// Polynomial in the left-shifted basis sum c_k (x - x_L)^k, with the
// right-shifted re-expansion sum ct_k (x_R - x)^k cached at construction.
class SpatialPolynomial {
public:
    SpatialPolynomial() = default;
    SpatialPolynomial(std::vector<double> left_coeffs, Domain1D domain);

    double operator()(double x) const;
    // Fractional derivative of the polynomial via term-wise monomial rule.
    double rl_derivative(double alpha, Side side, double x) const;

    const std::vector<double>& left_coeffs() const { return left_; }
    const std::vector<double>& right_coeffs() const { return right_; }
    const Domain1D& domain() const { return domain_; }
    bool zero_boundary(double tol = 1e-12) const;

private:
    std::vector<double> left_;
    std::vector<double> right_;
    Domain1D domain_;
};

// Separable space-time solution u(x,t) = scale * t^p * P(x).
struct PolynomialSolution {
    SpatialPolynomial space;
    double time_exponent = 0.0;  // p
    double scale = 1.0;          // s

    double operator()(double x, double t) const;
    double time_derivative(double x, double t) const;
};

using ScalarFn = std::function<double(double)>;
using SpaceTimeFn = std::function<double(double, double)>;

// Forcing as a sum of separable terms spatial(x) * t^exponent; solvers
// sample the spatial parts once per run.
struct ForcingTerm1D {
    double time_exponent = 0.0;
    ScalarFn spatial;
};

struct ProblemSpec {
    std::string label;
    Domain1D domain;
    double alpha = 1.5;    // default order; solvers may override
    double horizon = 1.0;  // T
    ScalarFn d_plus;
    ScalarFn d_minus;
    std::vector<ForcingTerm1D> forcing_terms;  // preferred by the solver when present
    SpaceTimeFn forcing;                       // pointwise fallback f(x,t)
    std::optional<PolynomialSolution> exact;
    ScalarFn initial;  // phi(x); equals exact(x,0) when an exact solution exists

    // The forcing for a given order: manufactured problems depend on alpha.
    std::vector<ForcingTerm1D> forcing_for(double alpha) const;

    std::function<std::vector<ForcingTerm1D>(double)> forcing_builder;  // optional
};

// f = u_t - d+ * (left RL of u) - d- * (right RL of u), exact by linearity
// of the monomial rule.  Requires zero boundary values of the polynomial.
std::vector<ForcingTerm1D> manufacture_forcing(const PolynomialSolution& sol,
                                               const ScalarFn& d_plus, const ScalarFn& d_minus,
                                               double alpha);

SpaceTimeFn forcing_function(std::vector<ForcingTerm1D> terms);

// ---- two-dimensional problems -------------------------------------------

struct Domain2D {
    Domain1D x;
    Domain1D y;
};

struct SeparableSolution2D {
    SpatialPolynomial x_space;
    SpatialPolynomial y_space;
    double time_exponent = 0.0;
    double scale = 1.0;

    double operator()(double x, double y, double t) const;
};

struct ForcingTerm2D {
    double time_exponent = 0.0;
    std::function<double(double, double)> spatial;
};

struct ProblemSpec2D {
    std::string label;
    Domain2D domain;
    double alpha = 1.5;
    double beta = 1.5;
    double horizon = 1.0;
    ScalarFn d_plus, d_minus;  // functions of x
    ScalarFn e_plus, e_minus;  // functions of y
    std::vector<ForcingTerm2D> forcing_terms;
    std::function<double(double, double, double)> forcing;  // f(x,y,t) fallback
    std::optional<SeparableSolution2D> exact;
    std::function<double(double, double)> initial;

    std::vector<ForcingTerm2D> forcing_for(double alpha, double beta) const;
    std::function<std::vector<ForcingTerm2D>(double, double)> forcing_builder;
};

std::vector<ForcingTerm2D> manufacture_forcing_2d(const SeparableSolution2D& sol,
                                                  const ScalarFn& d_plus, const ScalarFn& d_minus,
                                                  const ScalarFn& e_plus, const ScalarFn& e_minus,
                                                  double alpha, double beta);

// ---- registry -------------------------------------------------------------

// Diagnostic coefficient pair highlighting indefiniteness of A for orders
// near one (three interior nodes, m = 4).
struct DiagnosticMatrices {
    std::string label;
    double alpha = 1.1;
    std::size_t m = 4;
    std::vector<double> dplus_diag;
    std::vector<double> dminus_diag;
};

using RegistryEntry = std::variant<ProblemSpec, ProblemSpec2D, DiagnosticMatrices>;
using ProblemRegistry = std::map<std::string, RegistryEntry>;

// Built-in problem set: the accuracy benchmarks, the condition
// counterexamples, and the indefiniteness diagnostic.
const ProblemRegistry& builtin_problems();

// Lookup helpers that throw with the list of known labels on a miss.
const RegistryEntry& find_problem(const ProblemRegistry& reg, const std::string& label);

}  // namespace fracdiff
