#pragma once

#include <utility>
#include <vector>

#include "orthobound/linalg.hpp"

namespace orthobound {

/// Default tolerance for hypothesis checks. "Re<...> >= 0" is tested as
/// >= -tolerance * scale with scale = max(1, norm_form_rhs^2), so boundary
/// witnesses pass under floating point.
inline constexpr double kConditionTolerance = 1e-9;

/// Per-index scalar bounds (phi_i, Phi_i) constraining a vector relative to
/// an orthonormal family.
class BoxBounds {
public:
    BoxBounds(std::vector<Scalar> lower, std::vector<Scalar> upper);

    std::size_t size() const noexcept { return lower_.size(); }
    const std::vector<Scalar>& lower() const noexcept { return lower_; }
    const std::vector<Scalar>& upper() const noexcept { return upper_; }

    /// (lower_i + upper_i) / 2 per index.
    std::vector<Scalar> midpoints() const;
    /// sum_i |upper_i - lower_i|^2.
    double spread_sq() const;

private:
    std::vector<Scalar> lower_;
    std::vector<Scalar> upper_;
};

/// Evaluation of one hypothesis in both of its equivalent forms.
struct ConditionReport {
    /// Re< sum Phi_i e_i - x, x - sum phi_i e_i >.
    double re_form_value = 0.0;
    /// |x - sum (Phi_i + phi_i)/2 e_i|.
    double norm_form_lhs = 0.0;
    /// (1/2) (sum |Phi_i - phi_i|^2)^(1/2).
    double norm_form_rhs = 0.0;
    bool satisfied = false;
    double tolerance_used = 0.0;

    double scale() const noexcept;
    /// re_form_value + norm_form_lhs^2 - norm_form_rhs^2; zero in exact
    /// arithmetic for an exactly orthonormal family.
    double equivalence_residual() const noexcept;
};

enum class MixSign { plus, minus };

/// Check the real-part bilinear form Re< sum Phi e - x, x - sum phi e > >= 0.
/// The satisfied flag is decided by the bilinear form; the norm-ball fields
/// are evaluated independently for the equivalence diagnostics.
ConditionReport check_re_form(const Vector& x, const OrthonormalFamily& family,
                              const BoxBounds& box, double tolerance = kConditionTolerance);

/// Check the equivalent norm-ball form |x - midpoint| <= rhs. The satisfied
/// flag is decided by rhs^2 - lhs^2 >= -tolerance * scale.
ConditionReport check_norm_form(const Vector& x, const OrthonormalFamily& family,
                                const BoxBounds& box, double tolerance = kConditionTolerance);

/// Componentwise re-form check for a pair (x, box_x), (y, box_y).
std::pair<ConditionReport, ConditionReport> check_pair(
    const Vector& x, const Vector& y, const OrthonormalFamily& family,
    const BoxBounds& box_x, const BoxBounds& box_y, double tolerance = kConditionTolerance);

/// Re-form check for the mixture lambda * x + sign * (1 - lambda) * y,
/// lambda in (0,1).
ConditionReport check_mixture(const Vector& x, const Vector& y,
                              const OrthonormalFamily& family, const BoxBounds& box,
                              double lambda, MixSign sign,
                              double tolerance = kConditionTolerance);

/// The mixed vector itself (shared with the bounds module).
Vector mix_vector(const Vector& x, const Vector& y, double lambda, MixSign sign);

}  // namespace orthobound
