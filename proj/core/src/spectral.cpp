#include "fracdiff/spectral.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "fracdiff/fft.hpp"

namespace fracdiff {

namespace {

constexpr double kPi = std::numbers::pi;

void require_open_order(double alpha) {
    if (!(alpha > 1.0) || !(alpha < 2.0))
        throw std::domain_error("spectral: order must lie in (1,2)");
}

}  // namespace

double rho_alpha(double alpha) {
    require_open_order(alpha);
    return std::tan(-alpha * kPi / 2.0);
}

double sigma_alpha(double alpha) {
    require_open_order(alpha);
    return std::abs(std::cos(alpha * kPi / 2.0));
}

std::complex<double> generating_function(double alpha, double x) {
    require_open_order(alpha);
    if (x == 0.0) return {0.0, 0.0};
    // (1 - e^{ix})^alpha in polar form, principal branch
    const double mod = std::pow(2.0 * std::sin(std::abs(x) / 2.0), alpha);
    const double arg = (x >= 0.0) ? alpha * (x - kPi) / 2.0 : alpha * (x + kPi) / 2.0;
    const std::complex<double> pw = std::polar(mod, arg);
    const std::complex<double> mix =
        alpha / 2.0 * std::complex<double>(std::cos(x), -std::sin(x)) + (2.0 - alpha) / 2.0;
    return mix * pw;
}

double sigma_alpha_numeric(double alpha, std::size_t n_grid) {
    require_open_order(alpha);
    if (n_grid < 64) throw std::invalid_argument("sigma_alpha_numeric: n_grid must be >= 64");
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j <= n_grid; ++j) {
        const double x = -kPi + 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n_grid);
        if (x == 0.0) continue;
        const std::complex<double> g = generating_function(alpha, x);
        const double mag = std::abs(g);
        if (mag == 0.0) continue;
        best = std::min(best, -g.real() / mag);
    }
    return best;
}

GeneratingFunctionProfile sample_generating_function(double alpha, std::size_t n_grid) {
    GeneratingFunctionProfile p;
    p.alpha = alpha;
    p.rho = rho_alpha(alpha);
    p.sigma = sigma_alpha(alpha);
    p.samples.resize(n_grid + 1);
    for (std::size_t j = 0; j <= n_grid; ++j) {
        const double x = -kPi + 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n_grid);
        const std::complex<double> g = generating_function(alpha, x);
        const double mag = std::abs(g);
        p.samples[j].x = x;
        p.samples[j].g = g;
        p.samples[j].ratio = mag > 0.0 ? -g.real() / mag : std::numeric_limits<double>::quiet_NaN();
    }
    return p;
}

double quadratic_form_integral(const std::vector<double>& u, const std::vector<double>& v,
                               double alpha, std::size_t n_quad) {
    if (u.size() != v.size())
        throw std::invalid_argument("quadratic_form_integral: dimension mismatch");
    const std::size_t m1 = u.size();  // M-1
    if (!is_power_of_two(n_quad) || n_quad < 8 * m1)
        throw std::invalid_argument("quadratic_form_integral: n_quad must be a power of two >= 8(M-1)");
    const std::size_t L = n_quad;

    // U(x_s) = sum_{k=1}^{M-1} u_k e^{-ik x_s} on x_s = -pi + 2 pi s / L.
    // With e^{-ik x_s} = (-1)^k e^{-2 pi i k s / L} this is a forward DFT of
    // the sign-flipped, zero-padded coefficients; V uses the inverse kernel.
    std::vector<std::complex<double>> ubuf(L, 0.0), vbuf(L, 0.0);
    for (std::size_t k = 1; k <= m1; ++k) {
        const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
        ubuf[k] = sgn * u[k - 1];
        vbuf[k] = sgn * v[k - 1];
    }
    fft_inplace(ubuf, false);
    fft_inplace(vbuf, true);
    const double scale_v = static_cast<double>(L);  // undo the 1/L of the inverse transform

    std::complex<double> acc(0.0, 0.0);
    for (std::size_t s = 0; s < L; ++s) {
        const double x = -kPi + 2.0 * kPi * static_cast<double>(s) / static_cast<double>(L);
        acc += ubuf[s] * (vbuf[s] * scale_v) * generating_function(alpha, x);
    }
    return (acc / static_cast<double>(L)).real();
}

double symmetric_part_max_eigenvalue(const DenseMatrix& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("symmetric_part_max_eigenvalue: matrix must be square");
    if (a.rows() > 2048)
        throw std::invalid_argument("symmetric_part_max_eigenvalue: dimension capped at 2048");
    const auto ev = symmetric_eigenvalues_jacobi(a.symmetric_part());
    return ev.empty() ? 0.0 : ev.back();
}

std::vector<std::complex<double>> eigenvalues_small(const DenseMatrix& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("eigenvalues_small: matrix must be square");
    if (a.rows() > 512)
        throw std::invalid_argument("eigenvalues_small: dimension capped at 512");
    auto result = eigenvalues_qr(a);
    if (!result.converged)
        throw std::runtime_error("eigenvalues_small: QR iteration did not converge");
    return std::move(result.values);
}

std::vector<EigenPair> eigenpairs_small(const DenseMatrix& a) {
    const auto values = eigenvalues_small(a);
    const std::size_t n = a.rows();
    std::vector<EigenPair> pairs;
    pairs.reserve(values.size());
    const double anorm = a.frobenius_norm();
    for (const auto& lambda : values) {
        // inverse iteration with a slightly perturbed shift
        const double nudge = 1e-10 * std::max(1.0, std::abs(lambda)) + 1e-14 * anorm;
        ComplexLuFactorization lu(a, lambda + std::complex<double>(nudge, nudge));
        std::vector<std::complex<double>> v(n);
        for (std::size_t i = 0; i < n; ++i)
            v[i] = std::complex<double>(1.0 / std::sqrt(static_cast<double>(n)),
                                        static_cast<double>(i % 3) * 1e-2);
        for (int it = 0; it < 3; ++it) {
            lu.solve_in_place(v);
            double nrm = 0.0;
            for (const auto& z : v) nrm += std::norm(z);
            nrm = std::sqrt(nrm);
            for (auto& z : v) z /= nrm;
        }
        // residual ||a v - lambda v||
        double res = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            std::complex<double> acc(0.0, 0.0);
            for (std::size_t j = 0; j < n; ++j) acc += a(i, j) * v[j];
            acc -= lambda * v[i];
            res += std::norm(acc);
        }
        pairs.push_back({lambda, std::move(v), std::sqrt(res)});
    }
    return pairs;
}

}  // namespace fracdiff
