#include "fracdiff/problems.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace fracdiff {

namespace {
constexpr double kPi = std::numbers::pi;
}

double gamma_real(double x) {
    if (!(x > 0.0)) throw std::domain_error("gamma_real: argument must be positive");
    return std::tgamma(x);
}

namespace {

// Gamma(k+1)/Gamma(k+1-alpha); zero when the denominator argument hits a
// pole (nonpositive integer), e.g. the alpha = 2 limit acting on x^1.
double rl_monomial_factor(int k, double alpha) {
    const double denom_arg = static_cast<double>(k) + 1.0 - alpha;
    if (denom_arg <= 0.0 && std::abs(denom_arg - std::round(denom_arg)) < 1e-12) return 0.0;
    return gamma_real(static_cast<double>(k) + 1.0) / std::tgamma(denom_arg);
}

}  // namespace

double rl_derivative_monomial(int k, double alpha, Side side, double x, const Domain1D& domain) {
    if (k < 0) throw std::domain_error("rl_derivative_monomial: k must be nonnegative");
    const double factor = rl_monomial_factor(k, alpha);
    if (factor == 0.0) return 0.0;
    const double s = side == Side::left ? x - domain.left : domain.right - x;
    return factor * std::pow(s, static_cast<double>(k) - alpha);
}

SpatialPolynomial::SpatialPolynomial(std::vector<double> left_coeffs, Domain1D domain)
    : left_(std::move(left_coeffs)), domain_(domain) {
    if (left_.empty()) throw std::invalid_argument("SpatialPolynomial: empty coefficients");
    const std::size_t deg = left_.size() - 1;
    const double width = domain_.width();
    if (!(width > 0.0)) throw std::invalid_argument("SpatialPolynomial: degenerate domain");

    // re-expansion about the right endpoint:
    //   ct_j = (-1)^j sum_{k>=j} c_k binom(k,j) width^{k-j}
    right_.assign(deg + 1, 0.0);
    std::vector<double> binom(deg + 1, 0.0);
    for (std::size_t j = 0; j <= deg; ++j) {
        // binom(k, j) for k = j..deg, built incrementally
        double b = 1.0;
        double acc = 0.0;
        double wpow = 1.0;
        for (std::size_t k = j; k <= deg; ++k) {
            if (k > j) {
                b = b * static_cast<double>(k) / static_cast<double>(k - j);
                wpow *= width;
            }
            acc += left_[k] * b * wpow;
        }
        right_[j] = (j % 2 == 0 ? acc : -acc);
    }

    // both expansions must agree (exact re-expansion; this guards typos)
    double scale = 0.0;
    double wk = 1.0;
    for (std::size_t k = 0; k <= deg; ++k) {
        scale += std::abs(left_[k]) * wk;
        wk *= std::max(width, 1.0);
    }
    for (int q = 0; q < 10; ++q) {
        const double x = domain_.left + width * (q + 0.5) / 10.0;
        double pl = 0.0, pr = 0.0;
        for (std::size_t k = left_.size(); k-- > 0;) pl = pl * (x - domain_.left) + left_[k];
        for (std::size_t k = right_.size(); k-- > 0;) pr = pr * (domain_.right - x) + right_[k];
        if (std::abs(pl - pr) > 1e-12 * std::max(scale, 1.0))
            throw std::logic_error("SpatialPolynomial: basis re-expansion mismatch");
    }
}

double SpatialPolynomial::operator()(double x) const {
    double p = 0.0;
    for (std::size_t k = left_.size(); k-- > 0;) p = p * (x - domain_.left) + left_[k];
    return p;
}

double SpatialPolynomial::rl_derivative(double alpha, Side side, double x) const {
    const auto& coeffs = side == Side::left ? left_ : right_;
    double acc = 0.0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0.0) continue;
        acc += coeffs[k] * rl_derivative_monomial(static_cast<int>(k), alpha, side, x, domain_);
    }
    return acc;
}

bool SpatialPolynomial::zero_boundary(double tol) const {
    return std::abs((*this)(domain_.left)) <= tol && std::abs((*this)(domain_.right)) <= tol;
}

double PolynomialSolution::operator()(double x, double t) const {
    return scale * std::pow(t, time_exponent) * space(x);
}

double PolynomialSolution::time_derivative(double x, double t) const {
    if (time_exponent == 0.0) return 0.0;
    return scale * time_exponent * std::pow(t, time_exponent - 1.0) * space(x);
}

std::vector<ForcingTerm1D> manufacture_forcing(const PolynomialSolution& sol,
                                               const ScalarFn& d_plus, const ScalarFn& d_minus,
                                               double alpha) {
    if (!sol.space.zero_boundary())
        throw std::invalid_argument("manufacture_forcing: solution must vanish on the boundary");
    std::vector<ForcingTerm1D> terms;
    const SpatialPolynomial space = sol.space;
    const double s = sol.scale;
    const double p = sol.time_exponent;
    if (s * p != 0.0)
        terms.push_back({p - 1.0, [space, s, p](double x) { return s * p * space(x); }});
    terms.push_back({p, [space, s, d_plus, d_minus, alpha](double x) {
                         return -s * (d_plus(x) * space.rl_derivative(alpha, Side::left, x) +
                                      d_minus(x) * space.rl_derivative(alpha, Side::right, x));
                     }});
    return terms;
}

SpaceTimeFn forcing_function(std::vector<ForcingTerm1D> terms) {
    return [terms = std::move(terms)](double x, double t) {
        double acc = 0.0;
        for (const auto& term : terms) acc += std::pow(t, term.time_exponent) * term.spatial(x);
        return acc;
    };
}

std::vector<ForcingTerm1D> ProblemSpec::forcing_for(double a) const {
    if (forcing_builder) return forcing_builder(a);
    return forcing_terms;
}

double SeparableSolution2D::operator()(double x, double y, double t) const {
    return scale * std::pow(t, time_exponent) * x_space(x) * y_space(y);
}

std::vector<ForcingTerm2D> manufacture_forcing_2d(const SeparableSolution2D& sol,
                                                  const ScalarFn& d_plus, const ScalarFn& d_minus,
                                                  const ScalarFn& e_plus, const ScalarFn& e_minus,
                                                  double alpha, double beta) {
    if (!sol.x_space.zero_boundary() || !sol.y_space.zero_boundary())
        throw std::invalid_argument("manufacture_forcing_2d: solution must vanish on the boundary");
    std::vector<ForcingTerm2D> terms;
    const SpatialPolynomial xs = sol.x_space, ys = sol.y_space;
    const double s = sol.scale;
    const double p = sol.time_exponent;
    if (s * p != 0.0)
        terms.push_back({p - 1.0, [xs, ys, s, p](double x, double y) {
                             return s * p * xs(x) * ys(y);
                         }});
    terms.push_back(
        {p, [xs, ys, s, d_plus, d_minus, e_plus, e_minus, alpha, beta](double x, double y) {
             const double dx = d_plus(x) * xs.rl_derivative(alpha, Side::left, x) +
                               d_minus(x) * xs.rl_derivative(alpha, Side::right, x);
             const double dy = e_plus(y) * ys.rl_derivative(beta, Side::left, y) +
                               e_minus(y) * ys.rl_derivative(beta, Side::right, y);
             return -s * (dx * ys(y) + xs(x) * dy);
         }});
    return terms;
}

std::vector<ForcingTerm2D> ProblemSpec2D::forcing_for(double a, double b) const {
    if (forcing_builder) return forcing_builder(a, b);
    return forcing_terms;
}

namespace {

// u(x,t) = 2^6 x^3 (1-x)^3 t^3 on [0,1]: shared by every 1D benchmark.
PolynomialSolution benchmark_solution_1d() {
    PolynomialSolution sol;
    sol.space = SpatialPolynomial({0.0, 0.0, 0.0, 1.0, -3.0, 3.0, -1.0}, {0.0, 1.0});
    sol.time_exponent = 3.0;
    sol.scale = 64.0;
    return sol;
}

ProblemSpec make_1d_problem(std::string label, ScalarFn d_plus, ScalarFn d_minus,
                            double default_alpha) {
    ProblemSpec p;
    p.label = std::move(label);
    p.domain = {0.0, 1.0};
    p.alpha = default_alpha;
    p.horizon = 1.0;
    p.d_plus = std::move(d_plus);
    p.d_minus = std::move(d_minus);
    p.exact = benchmark_solution_1d();
    const PolynomialSolution exact = *p.exact;
    p.initial = [exact](double x) { return exact(x, 0.0); };
    const ScalarFn dp = p.d_plus, dm = p.d_minus;
    p.forcing_builder = [exact, dp, dm](double alpha) {
        return manufacture_forcing(exact, dp, dm, alpha);
    };
    p.forcing_terms = p.forcing_builder(default_alpha);
    p.forcing = forcing_function(p.forcing_terms);
    return p;
}

ProblemRegistry build_registry() {
    ProblemRegistry reg;

    reg.emplace("ex5.1", make_1d_problem(
                             "ex5.1", [](double x) { return (x + 2.0) * (x + 2.0); },
                             [](double x) { return 5.0 * (x + 2.0) * (x + 2.0) * (x + 2.0); },
                             1.5));

    reg.emplace("ex5.2", make_1d_problem(
                             "ex5.2", [](double x) { return std::cos(kPi / 12.0 * (x + 2.0)); },
                             [](double x) { return 0.5 * (x - 0.5) * (x - 0.5); }, 1.5));

    reg.emplace("ex5.4", make_1d_problem(
                             "ex5.4", [](double x) { return -10000.0 * x * (1.0 - x) + 2500.0; },
                             [](double) { return 1.0; }, 1.005));

    reg.emplace("ex5.5", make_1d_problem(
                             "ex5.5", [](double x) { return std::cos(35.0 * kPi * x) + 1.01; },
                             [](double x) { return std::sin(35.0 * kPi * x) + 1.01; }, 1.005));

    reg.emplace("ex5.6", make_1d_problem(
                             "ex5.6",
                             [](double x) {
                                 if (x < 1.0 / 3.0) return x / 10.0;
                                 if (x <= 2.0 / 3.0) return 1.0 / 15.0;
                                 return -x / 10.0 + 0.1;
                             },
                             [](double) { return 1.0; }, 1.07));

    reg.emplace("ex5.7", make_1d_problem(
                             "ex5.7",
                             [](double x) {
                                 if (x < 1.0 / 3.0) return 2.0 * x;
                                 if (x <= 2.0 / 3.0) return 20.0;
                                 return -2.0 * x + 2.0;
                             },
                             [](double) { return 1.0; }, 1.01));

    {
        // u(x,y,t) = x^4 (2-x)^4 y^4 (2-y)^4 t^3 on [0,2]^2
        ProblemSpec2D p;
        p.label = "ex5.3";
        p.domain = {{0.0, 2.0}, {0.0, 2.0}};
        p.alpha = 1.3;
        p.beta = 1.5;
        p.horizon = 1.0;
        p.d_plus = [](double x) { return std::cos(kPi / 24.0 * (x + 4.0)); };
        p.d_minus = [](double x) { return std::sin(kPi / 24.0 * (x + 4.0)); };
        p.e_plus = [](double y) { return std::sin(kPi / 12.0 * (y + 6.0)); };
        p.e_minus = [](double y) { return 0.125 * (y - 1.0) * (y - 1.0); };
        SeparableSolution2D exact;
        exact.x_space = SpatialPolynomial({0.0, 0.0, 0.0, 0.0, 16.0, -32.0, 24.0, -8.0, 1.0},
                                          {0.0, 2.0});
        exact.y_space = exact.x_space;
        exact.time_exponent = 3.0;
        exact.scale = 1.0;
        p.exact = exact;
        p.initial = [exact](double x, double y) { return exact(x, y, 0.0); };
        const ScalarFn dp = p.d_plus, dm = p.d_minus, ep = p.e_plus, em = p.e_minus;
        p.forcing_builder = [exact, dp, dm, ep, em](double a, double b) {
            return manufacture_forcing_2d(exact, dp, dm, ep, em, a, b);
        };
        p.forcing_terms = p.forcing_builder(p.alpha, p.beta);
        auto terms = p.forcing_terms;
        p.forcing = [terms](double x, double y, double t) {
            double acc = 0.0;
            for (const auto& term : terms) acc += std::pow(t, term.time_exponent) * term.spatial(x, y);
            return acc;
        };
        reg.emplace("ex5.3", std::move(p));
    }

    {
        DiagnosticMatrices d;
        d.label = "remark2.1";
        d.alpha = 1.1;
        d.m = 4;
        d.dplus_diag = {3.0, 0.5, std::sqrt(3.0)};
        d.dminus_diag = {1.0, 1.0, std::sqrt(3.0)};
        reg.emplace("remark2.1", std::move(d));
    }

    return reg;
}

}  // namespace

const ProblemRegistry& builtin_problems() {
    static const ProblemRegistry reg = build_registry();
    return reg;
}

const RegistryEntry& find_problem(const ProblemRegistry& reg, const std::string& label) {
    const auto it = reg.find(label);
    if (it == reg.end()) {
        std::ostringstream os;
        os << "unknown problem '" << label << "'; known labels:";
        for (const auto& [name, entry] : reg) os << ' ' << name;
        throw std::invalid_argument(os.str());
    }
    return it->second;
}

}  // namespace fracdiff
