#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fracdiff {

enum class ShapeClass {
    convex,
    concave,
    neither,
    asserted_convex,
    asserted_concave,
};

const char* to_string(ShapeClass s);
bool is_convex(ShapeClass s);
bool is_concave(ShapeClass s);

// Classifies discrete second differences on a uniform grid: convex when all
// are >= -tol, concave when all are <= tol; a function that is both (affine)
// reports convex.
ShapeClass classify_shape(const std::vector<double>& samples, double tol);

// Coefficient samples on the open (interior) grid, with shape and range.
struct CoefficientProfile {
    std::vector<double> x;
    std::vector<double> d;
    ShapeClass shape = ShapeClass::neither;
    double min_val = 0.0;
    double max_val = 0.0;
};

// Relative tolerance applied to the shape classifier: tol = 1e-10 * max|d|.
CoefficientProfile make_profile(const std::function<double(double)>& f,
                                const std::vector<double>& grid,
                                std::optional<ShapeClass> asserted_shape = std::nullopt);

CoefficientProfile make_profile(std::vector<double> grid, std::vector<double> samples,
                                std::optional<ShapeClass> asserted_shape = std::nullopt);

enum class ConditionId { cond12, cond24, cond28 };
const char* to_string(ConditionId id);

enum class RatioOrientation { minus_over_plus, plus_over_minus };
const char* to_string(RatioOrientation o);

struct RatioBounds {
    double kappa_min = 0.0;
    double kappa_max = 0.0;
    double kappa = 0.0;  // kappa_max when the ratio is concave, kappa_min when convex
    RatioOrientation orientation = RatioOrientation::minus_over_plus;
    ShapeClass shape = ShapeClass::neither;
};

struct SumBounds {
    double plus_min = 0.0, plus_max = 0.0, plus_kappa = 0.0;
    ShapeClass plus_shape = ShapeClass::neither;
    double minus_min = 0.0, minus_max = 0.0, minus_kappa = 0.0;
    ShapeClass minus_shape = ShapeClass::neither;
};

struct ConditionReport {
    ConditionId id = ConditionId::cond12;
    double order = 0.0;   // alpha for cond12/cond24, beta for cond28
    double sigma = 0.0;   // sigma_alpha or sigma_beta
    double lhs_value = 0.0;
    bool satisfied = false;
    std::string notes;
    std::optional<RatioBounds> ratio;
    std::optional<SumBounds> sum;
};

// Ratio condition: 1 + kappa - sqrt(2)(kappa_max - kappa_min)/sigma_alpha >= 0
// for the ratio d-/d+ (d+ positive on the grid) or d+/d- (d- positive).
// When both coefficients are strictly positive both orientations are
// evaluated and the more favorable one is reported.  A ratio that is
// neither convex nor concave makes the framework inapplicable and the
// report comes back unsatisfied with a note.  asserted_shape overrides the
// grid classification of the ratio.
ConditionReport check_condition_ratio(const CoefficientProfile& dplus,
                                      const CoefficientProfile& dminus, double alpha,
                                      std::optional<ShapeClass> asserted_shape = std::nullopt);

// Sum condition (strict):
//   k+ + k- - sqrt(2)(k+_max + k-_max - k+_min - k-_min)/sigma > 0,
// with k+ picked from d+'s own shape and k- from d-'s.  Covers both (24)
// (order = alpha) and (28) (order = beta, coefficients e+/e-).
ConditionReport check_condition_sum(const CoefficientProfile& dplus,
                                    const CoefficientProfile& dminus, double order, double sigma,
                                    ConditionId id = ConditionId::cond24);

std::string format_report(const ConditionReport& report);

}  // namespace fracdiff
