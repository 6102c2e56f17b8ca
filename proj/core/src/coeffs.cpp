#include "fracdiff/coeffs.hpp"

#include <cmath>
#include <stdexcept>

namespace fracdiff {

namespace {

void require_order(double alpha) {
    if (!(alpha > 1.0) || !(alpha <= 2.0))
        throw std::domain_error("wsgd: order alpha must lie in (1,2]");
}

}  // namespace

std::vector<double> grunwald_weights(double alpha, std::size_t n) {
    require_order(alpha);
    std::vector<double> g(n + 1);
    g[0] = 1.0;
    for (std::size_t k = 1; k <= n; ++k)
        g[k] = (1.0 - (alpha + 1.0) / static_cast<double>(k)) * g[k - 1];
    return g;
}

WsgdWeights wsgd_weights(double alpha, std::size_t n) {
    require_order(alpha);
    if (n < 1)
        throw std::domain_error("wsgd_weights: need n >= 1");
    WsgdWeights out;
    out.alpha = alpha;
    out.g = grunwald_weights(alpha, n);
    out.w.resize(n + 1);
    const double a = alpha / 2.0;
    const double b = (2.0 - alpha) / 2.0;
    out.w[0] = a * out.g[0];
    for (std::size_t k = 1; k <= n; ++k)
        out.w[k] = a * out.g[k] + b * out.g[k - 1];
    return out;
}

double wsgd_w2_closed_form(double alpha) {
    return alpha * (alpha * alpha + alpha - 4.0) / 4.0;
}

double weight_sum_tail_bound(double alpha, std::size_t n) {
    if (alpha == 2.0) return 1e-15;  // stencil is finite, sum is exactly zero
    const double c = 2.0 / std::abs(std::tgamma(1.0 - alpha));
    return c * std::pow(static_cast<double>(n), -alpha);
}

bool WeightPropertyReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

WeightPropertyReport verify_weight_properties(const WsgdWeights& w) {
    WeightPropertyReport rep;
    const auto& v = w.w;
    const std::size_t n = v.empty() ? 0 : v.size() - 1;
    auto add = [&rep](std::string name, bool ok, double value, double bound) {
        rep.checks.push_back({std::move(name), ok, value, bound});
    };

    add("w0 = alpha/2", std::abs(v[0] - w.alpha / 2.0) <= 1e-14, v[0], w.alpha / 2.0);
    if (n >= 1) add("w1 < 0", v[1] < 0.0, v[1], 0.0);
    if (n >= 2) {
        const double w2 = wsgd_w2_closed_form(w.alpha);
        add("w2 closed form", std::abs(v[2] - w2) <= 1e-13 * std::max(1.0, std::abs(w2)), v[2], w2);
    }
    if (n >= 3) {
        add("w0 <= 1", v[0] <= 1.0, v[0], 1.0);
        add("w0 >= w3", v[0] >= v[3] - 1e-15, v[3], v[0]);
        bool monotone = true;
        double worst = 0.0;
        for (std::size_t k = 3; k < n; ++k) {
            if (v[k] < v[k + 1] - 1e-15) { monotone = false; worst = v[k + 1] - v[k]; }
        }
        add("w3 >= w4 >= ... >= 0", monotone && v[n] >= -1e-15, worst, 0.0);
    }
    if (n >= 2) {
        double partial = v[0] + v[1];
        bool negative = true;
        double worst = 0.0;
        for (std::size_t m = 2; m <= n; ++m) {
            partial += v[m];
            if (partial >= 0.0) { negative = false; worst = partial; }
        }
        add("partial sums < 0 for m >= 2", negative, worst, 0.0);
        const double bound = weight_sum_tail_bound(w.alpha, n);
        add("total sum within tail bound", std::abs(partial) <= bound, std::abs(partial), bound);
    }
    return rep;
}

}  // namespace fracdiff
