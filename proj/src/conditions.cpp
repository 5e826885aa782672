#include "orthobound/conditions.hpp"

#include <algorithm>
#include <cmath>

namespace orthobound {

BoxBounds::BoxBounds(std::vector<Scalar> lower, std::vector<Scalar> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_.size() != upper_.size()) {
        throw ShapeError("box bounds: lower and upper must have equal length");
    }
    if (lower_.empty()) {
        throw ShapeError("box bounds must be nonempty");
    }
    double spread = 0.0;
    for (std::size_t i = 0; i < lower_.size(); ++i) {
        if (!is_finite(lower_[i]) || !is_finite(upper_[i])) {
            throw DomainError("box bounds entry " + std::to_string(i) + " is not finite");
        }
        spread += std::norm(upper_[i] - lower_[i]);
    }
    if (spread <= 0.0) {
        throw DomainError("box bounds are fully degenerate (all lower_i == upper_i)");
    }
}

std::vector<Scalar> BoxBounds::midpoints() const {
    std::vector<Scalar> mids(lower_.size());
    for (std::size_t i = 0; i < lower_.size(); ++i) {
        mids[i] = 0.5 * (lower_[i] + upper_[i]);
    }
    return mids;
}

double BoxBounds::spread_sq() const {
    double sum = 0.0;
    for (std::size_t i = 0; i < lower_.size(); ++i) {
        sum += std::norm(upper_[i] - lower_[i]);
    }
    return sum;
}

double ConditionReport::scale() const noexcept {
    return std::max(1.0, norm_form_rhs * norm_form_rhs);
}

double ConditionReport::equivalence_residual() const noexcept {
    return re_form_value + norm_form_lhs * norm_form_lhs - norm_form_rhs * norm_form_rhs;
}

namespace {

void require_condition_shapes(const Vector& x, const OrthonormalFamily& family,
                              const BoxBounds& box, double tolerance) {
    if (x.dim() != family.dim() || x.mode() != family.mode()) {
        throw ShapeError("condition check: vector and family shapes disagree");
    }
    if (box.size() != family.size()) {
        throw ShapeError("condition check: box size " + std::to_string(box.size()) +
                         " does not match family size " + std::to_string(family.size()));
    }
    if (tolerance < 0.0) {
        throw DomainError("condition tolerance must be nonnegative");
    }
}

/// Evaluates every field of the report; `by_norm_form` selects which route
/// decides the satisfied flag.
ConditionReport evaluate(const Vector& x, const OrthonormalFamily& family,
                         const BoxBounds& box, double tolerance, bool by_norm_form) {
    require_condition_shapes(x, family, box, tolerance);

    const Vector upper_vec = combination(family, box.upper());
    const Vector lower_vec = combination(family, box.lower());
    const Vector mid_vec = combination(family, box.midpoints());

    ConditionReport report;
    report.re_form_value = inner(upper_vec - x, x - lower_vec).real();
    report.norm_form_lhs = norm(x - mid_vec);
    report.norm_form_rhs = 0.5 * std::sqrt(box.spread_sq());
    report.tolerance_used = tolerance;

    const double band = tolerance * report.scale();
    if (by_norm_form) {
        const double lhs_sq = report.norm_form_lhs * report.norm_form_lhs;
        const double rhs_sq = report.norm_form_rhs * report.norm_form_rhs;
        report.satisfied = rhs_sq - lhs_sq >= -band;
    } else {
        report.satisfied = report.re_form_value >= -band;
    }
    return report;
}

}  // namespace

ConditionReport check_re_form(const Vector& x, const OrthonormalFamily& family,
                              const BoxBounds& box, double tolerance) {
    return evaluate(x, family, box, tolerance, /*by_norm_form=*/false);
}

ConditionReport check_norm_form(const Vector& x, const OrthonormalFamily& family,
                                const BoxBounds& box, double tolerance) {
    return evaluate(x, family, box, tolerance, /*by_norm_form=*/true);
}

std::pair<ConditionReport, ConditionReport> check_pair(
    const Vector& x, const Vector& y, const OrthonormalFamily& family,
    const BoxBounds& box_x, const BoxBounds& box_y, double tolerance) {
    return {check_re_form(x, family, box_x, tolerance),
            check_re_form(y, family, box_y, tolerance)};
}

Vector mix_vector(const Vector& x, const Vector& y, double lambda, MixSign sign) {
    if (!(lambda > 0.0 && lambda < 1.0)) {
        throw DomainError("mixture weight must lie in the open interval (0, 1)");
    }
    const double s = (sign == MixSign::plus) ? 1.0 : -1.0;
    return lambda * x + (s * (1.0 - lambda)) * y;
}

ConditionReport check_mixture(const Vector& x, const Vector& y,
                              const OrthonormalFamily& family, const BoxBounds& box,
                              double lambda, MixSign sign, double tolerance) {
    return check_re_form(mix_vector(x, y, lambda, sign), family, box, tolerance);
}

}  // namespace orthobound
