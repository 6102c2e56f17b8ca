#include "fracdiff/conditions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "fracdiff/spectral.hpp"

namespace fracdiff {

const char* to_string(ShapeClass s) {
    switch (s) {
        case ShapeClass::convex: return "convex";
        case ShapeClass::concave: return "concave";
        case ShapeClass::neither: return "neither";
        case ShapeClass::asserted_convex: return "user-asserted-convex";
        case ShapeClass::asserted_concave: return "user-asserted-concave";
    }
    return "?";
}

bool is_convex(ShapeClass s) {
    return s == ShapeClass::convex || s == ShapeClass::asserted_convex;
}

bool is_concave(ShapeClass s) {
    return s == ShapeClass::concave || s == ShapeClass::asserted_concave;
}

ShapeClass classify_shape(const std::vector<double>& samples, double tol) {
    if (samples.size() < 3)
        throw std::invalid_argument("classify_shape: need at least 3 samples");
    bool convex_ok = true, concave_ok = true;
    for (std::size_t i = 1; i + 1 < samples.size(); ++i) {
        const double d2 = samples[i - 1] - 2.0 * samples[i] + samples[i + 1];
        if (d2 < -tol) convex_ok = false;
        if (d2 > tol) concave_ok = false;
    }
    if (convex_ok) return ShapeClass::convex;  // affine counts as convex
    if (concave_ok) return ShapeClass::concave;
    return ShapeClass::neither;
}

namespace {

double shape_tolerance(const std::vector<double>& d) {
    double m = 0.0;
    for (double v : d) m = std::max(m, std::abs(v));
    return 1e-10 * std::max(m, 1.0);
}

CoefficientProfile finish_profile(CoefficientProfile p, std::optional<ShapeClass> asserted) {
    p.min_val = *std::min_element(p.d.begin(), p.d.end());
    p.max_val = *std::max_element(p.d.begin(), p.d.end());
    if (asserted) {
        p.shape = *asserted == ShapeClass::convex || *asserted == ShapeClass::asserted_convex
                      ? ShapeClass::asserted_convex
                      : ShapeClass::asserted_concave;
    } else {
        p.shape = classify_shape(p.d, shape_tolerance(p.d));
    }
    return p;
}

}  // namespace

CoefficientProfile make_profile(const std::function<double(double)>& f,
                                const std::vector<double>& grid,
                                std::optional<ShapeClass> asserted_shape) {
    CoefficientProfile p;
    p.x = grid;
    p.d.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) p.d[i] = f(grid[i]);
    return finish_profile(std::move(p), asserted_shape);
}

CoefficientProfile make_profile(std::vector<double> grid, std::vector<double> samples,
                                std::optional<ShapeClass> asserted_shape) {
    if (grid.size() != samples.size())
        throw std::invalid_argument("make_profile: grid/sample size mismatch");
    CoefficientProfile p;
    p.x = std::move(grid);
    p.d = std::move(samples);
    return finish_profile(std::move(p), asserted_shape);
}

const char* to_string(ConditionId id) {
    switch (id) {
        case ConditionId::cond12: return "cond-12";
        case ConditionId::cond24: return "cond-24";
        case ConditionId::cond28: return "cond-28";
    }
    return "?";
}

const char* to_string(RatioOrientation o) {
    return o == RatioOrientation::minus_over_plus ? "d-/d+" : "d+/d-";
}

namespace {

bool strictly_positive(const CoefficientProfile& p) { return p.min_val > 0.0; }

ConditionReport ratio_report_for(const CoefficientProfile& num, const CoefficientProfile& den,
                                 RatioOrientation orientation, double alpha,
                                 std::optional<ShapeClass> asserted_shape) {
    ConditionReport rep;
    rep.id = ConditionId::cond12;
    rep.order = alpha;
    rep.sigma = sigma_alpha(alpha);

    std::vector<double> ratio(num.d.size());
    for (std::size_t i = 0; i < ratio.size(); ++i) ratio[i] = num.d[i] / den.d[i];

    RatioBounds b;
    b.orientation = orientation;
    b.kappa_min = *std::min_element(ratio.begin(), ratio.end());
    b.kappa_max = *std::max_element(ratio.begin(), ratio.end());
    if (asserted_shape) {
        b.shape = is_convex(*asserted_shape) ? ShapeClass::asserted_convex
                                             : ShapeClass::asserted_concave;
    } else {
        b.shape = classify_shape(ratio, shape_tolerance(ratio));
    }

    if (b.shape == ShapeClass::neither) {
        rep.ratio = b;
        rep.satisfied = false;
        rep.lhs_value = std::numeric_limits<double>::quiet_NaN();
        rep.notes = "condition framework inapplicable: ratio is neither convex nor concave";
        return rep;
    }

    b.kappa = is_concave(b.shape) ? b.kappa_max : b.kappa_min;
    rep.lhs_value = 1.0 + b.kappa - std::sqrt(2.0) * (b.kappa_max - b.kappa_min) / rep.sigma;
    rep.satisfied = rep.lhs_value >= 0.0;
    rep.ratio = b;
    return rep;
}

}  // namespace

ConditionReport check_condition_ratio(const CoefficientProfile& dplus,
                                      const CoefficientProfile& dminus, double alpha,
                                      std::optional<ShapeClass> asserted_shape) {
    const bool plus_pos = strictly_positive(dplus);
    const bool minus_pos = strictly_positive(dminus);
    if (!plus_pos && !minus_pos)
        throw std::invalid_argument(
            "check_condition_ratio: neither coefficient is strictly positive on the grid; "
            "use check_condition_sum instead");

    std::optional<ConditionReport> from_plus, from_minus;
    if (plus_pos)
        from_plus = ratio_report_for(dminus, dplus, RatioOrientation::minus_over_plus, alpha,
                                     asserted_shape);
    if (minus_pos)
        from_minus = ratio_report_for(dplus, dminus, RatioOrientation::plus_over_minus, alpha,
                                      asserted_shape);

    if (from_plus && from_minus) {
        // prefer a satisfied verdict, then the larger margin
        if (from_plus->satisfied != from_minus->satisfied)
            return from_plus->satisfied ? *from_plus : *from_minus;
        const double a = std::isnan(from_plus->lhs_value) ? -1e300 : from_plus->lhs_value;
        const double b = std::isnan(from_minus->lhs_value) ? -1e300 : from_minus->lhs_value;
        return a >= b ? *from_plus : *from_minus;
    }
    return from_plus ? *from_plus : *from_minus;
}

ConditionReport check_condition_sum(const CoefficientProfile& dplus,
                                    const CoefficientProfile& dminus, double order, double sigma,
                                    ConditionId id) {
    if (dplus.min_val < 0.0 || dminus.min_val < 0.0)
        throw std::invalid_argument("check_condition_sum: coefficients must be nonnegative");

    ConditionReport rep;
    rep.id = id;
    rep.order = order;
    rep.sigma = sigma;

    SumBounds b;
    b.plus_min = dplus.min_val;
    b.plus_max = dplus.max_val;
    b.plus_shape = dplus.shape;
    b.minus_min = dminus.min_val;
    b.minus_max = dminus.max_val;
    b.minus_shape = dminus.shape;

    if (b.plus_shape == ShapeClass::neither || b.minus_shape == ShapeClass::neither) {
        rep.sum = b;
        rep.satisfied = false;
        rep.lhs_value = std::numeric_limits<double>::quiet_NaN();
        rep.notes = "condition framework inapplicable: coefficient shape not classifiable";
        return rep;
    }

    b.plus_kappa = is_concave(b.plus_shape) ? b.plus_max : b.plus_min;
    b.minus_kappa = is_concave(b.minus_shape) ? b.minus_max : b.minus_min;
    rep.lhs_value = b.plus_kappa + b.minus_kappa -
                    std::sqrt(2.0) * (b.plus_max + b.minus_max - b.plus_min - b.minus_min) / sigma;
    rep.satisfied = rep.lhs_value > 0.0;
    rep.sum = b;
    return rep;
}

std::string format_report(const ConditionReport& rep) {
    std::ostringstream os;
    os.precision(6);
    os << "condition   : " << to_string(rep.id) << "\n";
    os << "order       : " << rep.order << "\n";
    os << "sigma       : " << rep.sigma << "\n";
    if (rep.ratio) {
        const auto& b = *rep.ratio;
        os << "orientation : " << to_string(b.orientation) << "\n";
        os << "shape       : " << to_string(b.shape) << "\n";
        os << "kappa range : [" << b.kappa_min << ", " << b.kappa_max << "]\n";
        if (b.shape != ShapeClass::neither) os << "kappa       : " << b.kappa << "\n";
    }
    if (rep.sum) {
        const auto& b = *rep.sum;
        os << "d+ shape    : " << to_string(b.plus_shape) << ", range [" << b.plus_min << ", "
           << b.plus_max << "]\n";
        os << "d- shape    : " << to_string(b.minus_shape) << ", range [" << b.minus_min << ", "
           << b.minus_max << "]\n";
        if (b.plus_shape != ShapeClass::neither && b.minus_shape != ShapeClass::neither)
            os << "kappa+/-    : " << b.plus_kappa << " / " << b.minus_kappa << "\n";
    }
    os << "lhs         : " << rep.lhs_value << "\n";
    os << "satisfied   : " << (rep.satisfied ? "yes" : "no") << "\n";
    if (!rep.notes.empty()) os << "notes       : " << rep.notes << "\n";
    return os.str();
}

}  // namespace fracdiff
