#include "orthobound/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace orthobound {

std::string to_string(TheoremTag tag) {
    switch (tag) {
        case TheoremTag::lemma21: return "lemma21";
        case TheoremTag::bessel_b1: return "bessel_b1";
        case TheoremTag::bessel_b2: return "bessel_b2";
        case TheoremTag::compare: return "compare";
        case TheoremTag::gruess_v1: return "gruess_v1";
        case TheoremTag::gruess_v2: return "gruess_v2";
        case TheoremTag::companion: return "companion";
        case TheoremTag::companion_abs: return "companion_abs";
        case TheoremTag::integral_bessel: return "integral_bessel";
        case TheoremTag::integral_gruess: return "integral_gruess";
    }
    return "unknown";
}

const std::vector<TheoremTag>& all_theorem_tags() {
    static const std::vector<TheoremTag> tags = {
        TheoremTag::lemma21,       TheoremTag::bessel_b1,     TheoremTag::bessel_b2,
        TheoremTag::compare,       TheoremTag::gruess_v1,     TheoremTag::gruess_v2,
        TheoremTag::companion,     TheoremTag::companion_abs, TheoremTag::integral_bessel,
        TheoremTag::integral_gruess};
    return tags;
}

std::optional<TheoremTag> parse_theorem_tag(const std::string& name) {
    for (TheoremTag tag : all_theorem_tags()) {
        if (to_string(tag) == name) return tag;
    }
    return std::nullopt;
}

MixWeight::MixWeight(double value) : value_(value) {
    if (!(value > 0.0 && value < 1.0)) {
        throw DomainError("mixture weight must lie in the open interval (0, 1)");
    }
}

double BoundReport::chain_scale() const noexcept {
    return std::max(1.0, outer_bound);
}

bool BoundReport::conditions_satisfied() const noexcept {
    for (const ConditionReport& c : condition_reports) {
        if (!c.satisfied) return false;
    }
    return true;
}

namespace {

void finalize_chain(BoundReport& report) {
    const double tol = kChainTolerance * report.chain_scale();
    report.chain_ok = report.left_value <= report.refined_bound + tol &&
                      report.refined_bound <= report.outer_bound + tol;
}

void enforce(const ConditionReport& condition, const std::string& subject, bool force) {
    if (condition.satisfied || force) return;
    throw HypothesisError("hypothesis failed for " + subject + ": Re-form value " +
                              std::to_string(condition.re_form_value) + " < 0",
                          subject, -condition.re_form_value);
}

double sum_abs_sq(const std::vector<Scalar>& values) {
    double sum = 0.0;
    for (const Scalar& v : values) sum += std::norm(v);
    return sum;
}

}  // namespace

Scalar gruess_residual(const Vector& x, const Vector& y, const OrthonormalFamily& family) {
    const std::vector<Scalar> cx = fourier_coefficients(x, family);
    const std::vector<Scalar> cy = fourier_coefficients(y, family);
    Scalar sum(0.0, 0.0);
    for (std::size_t i = 0; i < cx.size(); ++i) {
        // <x,e_i><e_i,y> = <x,e_i> conj(<y,e_i>)
        sum += cx[i] * std::conj(cy[i]);
    }
    return inner(x, y) - sum;
}

double bessel_difference(const Vector& x, const OrthonormalFamily& family) {
    if (x.dim() != family.dim() || x.mode() != family.mode()) {
        throw ShapeError("bessel_difference: vector and family shapes disagree");
    }
    const double n = norm(x);
    return n * n - sum_abs_sq(fourier_coefficients(x, family));
}

BoundReport lemma21_bound(const Vector& x, const OrthonormalFamily& family,
                          const std::vector<Scalar>& lambdas, double r,
                          double tolerance, bool force) {
    if (lambdas.size() != family.size()) {
        throw ShapeError("lemma21_bound: lambda count must match family size");
    }
    if (r <= 0.0) {
        throw DomainError("lemma21_bound: radius r must be positive");
    }
    const Vector center = combination(family, lambdas);
    const double distance = norm(x - center);
    const double excess = distance - r;
    if (excess > tolerance * std::max(1.0, r) && !force) {
        throw HypothesisError("lemma21_bound: |x - sum lambda_i e_i| exceeds r by " +
                                  std::to_string(excess),
                              "x", excess);
    }

    const std::vector<Scalar> coeffs = fourier_coefficients(x, family);
    double shift_sq = 0.0;
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        shift_sq += std::norm(lambdas[i] - coeffs[i]);
    }

    BoundReport report;
    report.theorem_tag = TheoremTag::lemma21;
    report.left_value = bessel_difference(x, family);
    report.refined_bound = r * r - shift_sq;
    report.outer_bound = r * r;
    report.identity_residual =
        std::abs((distance * distance - shift_sq) - report.left_value);

    // Express the ball hypothesis in the condition-report vocabulary so the
    // report carries a satisfied flag like every other chain.
    ConditionReport hypothesis;
    hypothesis.re_form_value = r * r - distance * distance;
    hypothesis.norm_form_lhs = distance;
    hypothesis.norm_form_rhs = r;
    hypothesis.tolerance_used = tolerance;
    hypothesis.satisfied = excess <= tolerance * std::max(1.0, r);
    report.condition_reports.push_back(hypothesis);

    finalize_chain(report);
    return report;
}

BoundReport bessel_counterpart_b1(const Vector& x, const OrthonormalFamily& family,
                                  const BoxBounds& box, double tolerance, bool force) {
    const ConditionReport condition = check_re_form(x, family, box, tolerance);
    enforce(condition, "x", force);

    BoundReport report;
    report.theorem_tag = TheoremTag::bessel_b1;
    report.left_value = bessel_difference(x, family);
    report.outer_bound = 0.25 * box.spread_sq();
    report.refined_bound = report.outer_bound - condition.re_form_value;
    report.condition_reports.push_back(condition);
    finalize_chain(report);
    return report;
}

BoundReport bessel_counterpart_b2(const Vector& x, const OrthonormalFamily& family,
                                  const BoxBounds& box, double tolerance, bool force) {
    const ConditionReport condition = check_re_form(x, family, box, tolerance);
    enforce(condition, "x", force);

    const std::vector<Scalar> coeffs = fourier_coefficients(x, family);
    const std::vector<Scalar> mids = box.midpoints();
    double shift_sq = 0.0;
    for (std::size_t i = 0; i < mids.size(); ++i) {
        shift_sq += std::norm(mids[i] - coeffs[i]);
    }

    BoundReport report;
    report.theorem_tag = TheoremTag::bessel_b2;
    report.left_value = bessel_difference(x, family);
    report.outer_bound = 0.25 * box.spread_sq();
    report.refined_bound = report.outer_bound - shift_sq;
    report.condition_reports.push_back(condition);
    finalize_chain(report);
    return report;
}

std::string to_string(Tighter which) {
    switch (which) {
        case Tighter::b1: return "B1";
        case Tighter::b2: return "B2";
        case Tighter::tie: return "tie";
    }
    return "unknown";
}

B1B2Comparison compare_b1_b2(const Vector& x, const OrthonormalFamily& family,
                             const BoxBounds& box, double tolerance, bool force) {
    const BoundReport r1 = bessel_counterpart_b1(x, family, box, tolerance, force);
    const BoundReport r2 = bessel_counterpart_b2(x, family, box, tolerance, force);

    B1B2Comparison cmp;
    cmp.b1 = r1.refined_bound;
    cmp.b2 = r2.refined_bound;
    const double tie_band =
        kChainTolerance * std::max({1.0, std::abs(cmp.b1), std::abs(cmp.b2)});
    if (std::abs(cmp.b1 - cmp.b2) <= tie_band) {
        cmp.tighter = Tighter::tie;
    } else {
        cmp.tighter = cmp.b1 < cmp.b2 ? Tighter::b1 : Tighter::b2;
    }
    return cmp;
}

BoundReport gruess_v1(const Vector& x, const Vector& y, const OrthonormalFamily& family,
                      const BoxBounds& box_x, const BoxBounds& box_y,
                      double tolerance, bool force) {
    const ConditionReport cond_x = check_re_form(x, family, box_x, tolerance);
    enforce(cond_x, "x", force);
    const ConditionReport cond_y = check_re_form(y, family, box_y, tolerance);
    enforce(cond_y, "y", force);

    // Floating point can make a boundary Re-form value land at -1e-17; the
    // square roots below need the clamp.
    const double re_x = std::max(0.0, cond_x.re_form_value);
    const double re_y = std::max(0.0, cond_y.re_form_value);

    BoundReport report;
    report.theorem_tag = TheoremTag::gruess_v1;
    report.left_value = std::abs(gruess_residual(x, y, family));
    report.outer_bound =
        0.25 * std::sqrt(box_x.spread_sq()) * std::sqrt(box_y.spread_sq());
    report.refined_bound = report.outer_bound - std::sqrt(re_x) * std::sqrt(re_y);
    report.condition_reports = {cond_x, cond_y};
    finalize_chain(report);
    return report;
}

BoundReport gruess_v2(const Vector& x, const Vector& y, const OrthonormalFamily& family,
                      const BoxBounds& box_x, const BoxBounds& box_y,
                      double tolerance, bool force) {
    const ConditionReport cond_x = check_re_form(x, family, box_x, tolerance);
    enforce(cond_x, "x", force);
    const ConditionReport cond_y = check_re_form(y, family, box_y, tolerance);
    enforce(cond_y, "y", force);

    const std::vector<Scalar> cx = fourier_coefficients(x, family);
    const std::vector<Scalar> cy = fourier_coefficients(y, family);
    const std::vector<Scalar> mx = box_x.midpoints();
    const std::vector<Scalar> my = box_y.midpoints();
    double cross = 0.0;
    for (std::size_t i = 0; i < cx.size(); ++i) {
        cross += std::abs(mx[i] - cx[i]) * std::abs(my[i] - cy[i]);
    }

    BoundReport report;
    report.theorem_tag = TheoremTag::gruess_v2;
    report.left_value = std::abs(gruess_residual(x, y, family));
    report.outer_bound =
        0.25 * std::sqrt(box_x.spread_sq()) * std::sqrt(box_y.spread_sq());
    report.refined_bound = report.outer_bound - cross;
    report.condition_reports = {cond_x, cond_y};
    finalize_chain(report);
    return report;
}

AczelResult aczel_check(double a, double b, const std::vector<double>& as,
                        const std::vector<double>& bs) {
    if (as.size() != bs.size()) {
        throw ShapeError("aczel_check: sequences must have equal length");
    }
    if (!(a > 0.0) || !(b > 0.0)) {
        throw DomainError("aczel_check: a and b must be positive");
    }
    double sum_a_sq = 0.0, sum_b_sq = 0.0, sum_ab = 0.0;
    for (std::size_t i = 0; i < as.size(); ++i) {
        if (!(as[i] > 0.0) || !(bs[i] > 0.0)) {
            throw DomainError("aczel_check: all sequence entries must be positive");
        }
        sum_a_sq += as[i] * as[i];
        sum_b_sq += bs[i] * bs[i];
        sum_ab += as[i] * bs[i];
    }
    if (a * a < sum_a_sq || b * b < sum_b_sq) {
        throw DomainError("aczel_check: leading terms must dominate (a^2 >= sum a_i^2)");
    }

    AczelResult result;
    result.lhs = (a * a - sum_a_sq) * (b * b - sum_b_sq);
    const double gap = a * b - sum_ab;
    result.rhs = gap * gap;
    const double scale = std::max(1.0, a * a * b * b);
    result.holds = result.lhs <= result.rhs + 1e-12 * scale;
    return result;
}

BoundReport companion_bound(const Vector& x, const Vector& y,
                            const OrthonormalFamily& family, const BoxBounds& box,
                            MixWeight lambda, double tolerance, bool force) {
    const double lam = lambda.value();
    const Vector mixed = mix_vector(x, y, lam, MixSign::plus);
    const ConditionReport condition = check_re_form(mixed, family, box, tolerance);
    enforce(condition, "lambda*x + (1-lambda)*y", force);

    const std::vector<Scalar> mids = box.midpoints();
    const std::vector<Scalar> mixed_coeffs = fourier_coefficients(mixed, family);
    double shift_sq = 0.0;
    for (std::size_t i = 0; i < mids.size(); ++i) {
        shift_sq += std::norm(mids[i] - mixed_coeffs[i]);
    }

    const double factor = 1.0 / (lam * (1.0 - lam));
    BoundReport report;
    report.theorem_tag = TheoremTag::companion;
    report.left_value = gruess_residual(x, y, family).real();
    report.outer_bound = (1.0 / 16.0) * factor * box.spread_sq();
    report.refined_bound = report.outer_bound - 0.25 * factor * shift_sq;
    report.condition_reports.push_back(condition);
    finalize_chain(report);
    return report;
}

BoundReport companion_abs(const Vector& x, const Vector& y,
                          const OrthonormalFamily& family, const BoxBounds& box,
                          MixWeight lambda, double tolerance, bool force) {
    const double lam = lambda.value();
    const ConditionReport cond_plus =
        check_re_form(mix_vector(x, y, lam, MixSign::plus), family, box, tolerance);
    enforce(cond_plus, "lambda*x + (1-lambda)*y", force);
    const ConditionReport cond_minus =
        check_re_form(mix_vector(x, y, lam, MixSign::minus), family, box, tolerance);
    enforce(cond_minus, "lambda*x - (1-lambda)*y", force);

    BoundReport report;
    report.theorem_tag = TheoremTag::companion_abs;
    report.left_value = std::abs(gruess_residual(x, y, family).real());
    report.outer_bound = (1.0 / 16.0) / (lam * (1.0 - lam)) * box.spread_sq();
    // Single-bound statement: no middle refinement.
    report.refined_bound = report.outer_bound;
    report.condition_reports = {cond_plus, cond_minus};
    finalize_chain(report);
    return report;
}

}  // namespace orthobound
