#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orthobound/conditions.hpp"
#include "orthobound/linalg.hpp"

namespace orthobound {

/// Tolerance for chain ordering checks, applied at scale max(1, outer_bound).
inline constexpr double kChainTolerance = 1e-9;

enum class TheoremTag {
    lemma21,
    bessel_b1,
    bessel_b2,
    compare,
    gruess_v1,
    gruess_v2,
    companion,
    companion_abs,
    integral_bessel,
    integral_gruess,
};

std::string to_string(TheoremTag tag);
std::optional<TheoremTag> parse_theorem_tag(const std::string& name);
const std::vector<TheoremTag>& all_theorem_tags();

/// Mixture weight lambda in the open interval (0, 1).
class MixWeight {
public:
    explicit MixWeight(double value);
    double value() const noexcept { return value_; }

private:
    double value_;
};

/// One fully evaluated inequality chain: left <= refined <= outer, with the
/// hypothesis diagnostics attached.
struct BoundReport {
    TheoremTag theorem_tag = TheoremTag::bessel_b2;
    /// The quantity being bounded (Bessel difference, Gruess residual, ...).
    double left_value = 0.0;
    /// Middle term of the chain.
    double refined_bound = 0.0;
    /// Last term of the chain.
    double outer_bound = 0.0;
    /// left <= refined <= outer within kChainTolerance * max(1, outer).
    bool chain_ok = false;
    std::vector<ConditionReport> condition_reports;
    /// Residual of the exact norm identity; present for lemma21 reports only.
    std::optional<double> identity_residual;

    double chain_scale() const noexcept;
    bool conditions_satisfied() const noexcept;
};

/// |x|^2 - sum_i |<x,e_i>|^2, the gap closed by Bessel's inequality.
double bessel_difference(const Vector& x, const OrthonormalFamily& family);

/// Chain 0 <= |x|^2 - sum |<x,e_i>|^2 <= r^2 - sum |lambda_i - <x,e_i>|^2
/// under |x - sum lambda_i e_i| <= r. Also evaluates the exact identity
/// behind it and records its residual.
BoundReport lemma21_bound(const Vector& x, const OrthonormalFamily& family,
                          const std::vector<Scalar>& lambdas, double r,
                          double tolerance = kConditionTolerance, bool force = false);

/// Bessel counterpart, variant 1: refined bound
/// (1/4) sum |Phi-phi|^2 - Re< sum Phi e - x, x - sum phi e >.
BoundReport bessel_counterpart_b1(const Vector& x, const OrthonormalFamily& family,
                                  const BoxBounds& box,
                                  double tolerance = kConditionTolerance, bool force = false);

/// Bessel counterpart, variant 2: refined bound
/// (1/4) sum |Phi-phi|^2 - sum |(phi+Phi)/2 - <x,e_i>|^2.
BoundReport bessel_counterpart_b2(const Vector& x, const OrthonormalFamily& family,
                                  const BoxBounds& box,
                                  double tolerance = kConditionTolerance, bool force = false);

enum class Tighter { b1, b2, tie };

struct B1B2Comparison {
    double b1 = 0.0;
    double b2 = 0.0;
    Tighter tighter = Tighter::tie;
};

std::string to_string(Tighter which);

/// The two counterpart bounds on the same input; they cannot be compared in
/// general, so both are reported along with which is smaller.
B1B2Comparison compare_b1_b2(const Vector& x, const OrthonormalFamily& family,
                             const BoxBounds& box,
                             double tolerance = kConditionTolerance, bool force = false);

/// Gruess refinement, variant 1: subtracts the product of square roots of the
/// two re-form values from (1/4) Sx Sy.
BoundReport gruess_v1(const Vector& x, const Vector& y, const OrthonormalFamily& family,
                      const BoxBounds& box_x, const BoxBounds& box_y,
                      double tolerance = kConditionTolerance, bool force = false);

/// Gruess refinement, variant 2: subtracts
/// sum_i |mid_i - <x,e_i>| |mid'_i - <y,e_i>| from (1/4) Sx Sy.
BoundReport gruess_v2(const Vector& x, const Vector& y, const OrthonormalFamily& family,
                      const BoxBounds& box_x, const BoxBounds& box_y,
                      double tolerance = kConditionTolerance, bool force = false);

struct AczelResult {
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
};

/// Aczel's inequality for positive reals:
/// (a^2 - sum a_i^2)(b^2 - sum b_i^2) <= (ab - sum a_i b_i)^2,
/// provided a^2 >= sum a_i^2 and b^2 >= sum b_i^2.
AczelResult aczel_check(double a, double b, const std::vector<double>& as,
                        const std::vector<double>& bs);

/// Companion bound on the signed real part of the Gruess residual, controlled
/// through the mixture lambda x + (1-lambda) y.
BoundReport companion_bound(const Vector& x, const Vector& y,
                            const OrthonormalFamily& family, const BoxBounds& box,
                            MixWeight lambda, double tolerance = kConditionTolerance,
                            bool force = false);

/// Two-sided companion bound |Re[...]| <= (1/16) (1/(lambda(1-lambda))) sum
/// |Phi-phi|^2, requiring the mixture condition for both signs.
BoundReport companion_abs(const Vector& x, const Vector& y,
                          const OrthonormalFamily& family, const BoxBounds& box,
                          MixWeight lambda, double tolerance = kConditionTolerance,
                          bool force = false);

/// <x,y> - sum_i <x,e_i><e_i,y>, the quantity the Gruess bounds control.
Scalar gruess_residual(const Vector& x, const Vector& y, const OrthonormalFamily& family);

}  // namespace orthobound
