#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "orthobound/errors.hpp"

namespace orthobound {

/// Scalars are double-precision complex pairs. Real spaces are the special
/// case with every imaginary part structurally zero, so each formula is
/// written once.
using Scalar = std::complex<double>;

enum class Mode { real, complex_ };

std::string to_string(Mode mode);

bool is_finite(Scalar value);

/// Default absolute tolerance on Gram entries of an orthonormal family.
inline constexpr double kGramTolerance = 1e-10;

/// An element of the ambient coordinate space. Immutable after construction;
/// construction validates finiteness and, in real mode, zero imaginary parts.
class Vector {
public:
    Vector(std::vector<Scalar> coords, Mode mode);

    static Vector real(std::vector<double> coords);
    static Vector complex(std::vector<Scalar> coords);
    static Vector zero(std::size_t dim, Mode mode);

    std::size_t dim() const noexcept { return coords_.size(); }
    Mode mode() const noexcept { return mode_; }
    const Scalar& operator[](std::size_t k) const noexcept { return coords_[k]; }
    const std::vector<Scalar>& coords() const noexcept { return coords_; }

    friend Vector operator+(const Vector& a, const Vector& b);
    friend Vector operator-(const Vector& a, const Vector& b);
    friend Vector operator*(Scalar s, const Vector& v);
    friend Vector operator*(double s, const Vector& v);

private:
    std::vector<Scalar> coords_;
    Mode mode_;
};

/// Coordinate inner product, linear in the first argument and conjugate-linear
/// in the second: sum_k x_k * conj(y_k).
Scalar inner(const Vector& x, const Vector& y);

/// Norm induced by the inner product.
double norm(const Vector& x);

/// A finite orthonormal family {e_i}. Construction verifies the Gram
/// structure: |<e_i,e_j> - delta_ij| <= gram_tolerance for all i, j.
class OrthonormalFamily {
public:
    OrthonormalFamily(std::vector<Vector> members, std::vector<std::string> labels,
                      double gram_tolerance = kGramTolerance);

    std::size_t size() const noexcept { return members_.size(); }
    std::size_t dim() const noexcept { return members_.front().dim(); }
    Mode mode() const noexcept { return members_.front().mode(); }
    const Vector& member(std::size_t i) const noexcept { return members_[i]; }
    const std::vector<Vector>& members() const noexcept { return members_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    double gram_tolerance() const noexcept { return gram_tolerance_; }

    /// Largest |<e_i,e_j> - delta_ij| measured at construction.
    double max_gram_error() const noexcept { return max_gram_error_; }

private:
    std::vector<Vector> members_;
    std::vector<std::string> labels_;
    double gram_tolerance_;
    double max_gram_error_;
};

struct GramSchmidtResult {
    OrthonormalFamily family;
    /// Input indices dropped as linearly dependent (residual below tolerance).
    std::vector<std::size_t> dropped;
};

/// Modified Gram-Schmidt with one reorthogonalization pass. Inputs whose
/// residual norm falls below tolerance (relative to max(1, |v|)) are dropped.
GramSchmidtResult gram_schmidt(const std::vector<Vector>& vectors,
                               double tolerance = kGramTolerance);

/// Coefficients <x, e_i> in family order.
std::vector<Scalar> fourier_coefficients(const Vector& x, const OrthonormalFamily& family);

/// sum_i coeffs[i] * e_i, in the family's mode. Real mode requires real
/// coefficients.
Vector combination(const OrthonormalFamily& family, const std::vector<Scalar>& coeffs);

}  // namespace orthobound
