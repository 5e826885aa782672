#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

#include "orthobound/bounds.hpp"
#include "orthobound/linalg.hpp"

namespace orthobound {

/// Family tolerance for quadrature-built orthonormal families. Quadrature
/// rules cannot deliver exact Gram entries, but spectral rules keep the error
/// far below this.
inline constexpr double kFamilyGramTolerance = 1e-8;

/// Nodes, weights, and sampled density realizing a weighted L^2 inner product
/// as a finite-dimensional one. Immutable after construction.
class QuadratureSpace {
public:
    QuadratureSpace(std::vector<double> nodes, std::vector<double> weights,
                    std::vector<double> density, Mode mode);

    /// Closed composite trapezoid rule with `node_count` nodes on [a, b].
    /// On periodic integrands this is spectrally accurate, which is what the
    /// Fourier families rely on.
    static std::shared_ptr<const QuadratureSpace> trapezoid(
        double a, double b, std::size_t node_count, Mode mode,
        const std::function<double(double)>& density = {});

    /// Gauss-Legendre rule with `node_count` nodes on [a, b]; exact for
    /// polynomials of degree 2*node_count - 1.
    static std::shared_ptr<const QuadratureSpace> gauss_legendre(
        double a, double b, std::size_t node_count, Mode mode,
        const std::function<double(double)>& density = {});

    std::size_t size() const noexcept { return nodes_.size(); }
    Mode mode() const noexcept { return mode_; }
    double node(std::size_t k) const noexcept { return nodes_[k]; }
    double weight(std::size_t k) const noexcept { return weights_[k]; }
    double density(std::size_t k) const noexcept { return density_[k]; }
    /// weight_k * density_k, the discrete measure of node k.
    double measure(std::size_t k) const noexcept { return weights_[k] * density_[k]; }

    const std::vector<double>& nodes() const noexcept { return nodes_; }
    const std::vector<double>& weights() const noexcept { return weights_; }
    const std::vector<double>& densities() const noexcept { return density_; }

private:
    std::vector<double> nodes_;
    std::vector<double> weights_;
    std::vector<double> density_;
    Mode mode_;
};

/// A function known by its values at the quadrature nodes.
class FunctionSample {
public:
    FunctionSample(std::shared_ptr<const QuadratureSpace> space, std::vector<Scalar> values);

    static FunctionSample from_function(std::shared_ptr<const QuadratureSpace> space,
                                        const std::function<Scalar(double)>& fn);

    const QuadratureSpace& space() const noexcept { return *space_; }
    const std::shared_ptr<const QuadratureSpace>& space_ptr() const noexcept { return space_; }
    std::size_t size() const noexcept { return values_.size(); }
    const Scalar& value(std::size_t k) const noexcept { return values_[k]; }
    const std::vector<Scalar>& values() const noexcept { return values_; }

private:
    std::shared_ptr<const QuadratureSpace> space_;
    std::vector<Scalar> values_;
};

/// Isometry into coordinate space: coordinate_k = sqrt(weight_k * density_k)
/// * f(s_k). All Section 1-4 machinery applies to the embedded vectors.
Vector embed(const FunctionSample& f);

/// Quadrature realization of the weighted inner product; evaluated through
/// the embedding so it agrees with the coordinate inner product exactly.
Scalar weighted_inner(const FunctionSample& f, const FunctionSample& g);

enum class FamilyKind { fourier, legendre, custom };

struct FamilyBuild {
    std::vector<FunctionSample> samples;
    /// Embedded family; passes the orthonormality invariants at
    /// kFamilyGramTolerance.
    OrthonormalFamily family;
    std::vector<std::size_t> dropped;
};

/// Build an orthonormal function family. `fourier` samples the trigonometric
/// family on [0, 2pi]; `legendre` samples normalized Legendre polynomials on
/// [-1, 1]; both require unit density to be orthonormal. For FamilyKind::custom
/// use build_custom_family.
FamilyBuild build_family(FamilyKind kind, std::size_t count,
                         const std::shared_ptr<const QuadratureSpace>& space);

/// Gram-Schmidt in the weighted inner product over arbitrary input samples.
/// Dependent inputs are dropped; an all-dependent set raises DependenceError.
FamilyBuild build_custom_family(const std::vector<FunctionSample>& raw,
                                double tolerance = kGramTolerance);

struct PointwiseBoxReport {
    bool holds = false;
    std::vector<std::size_t> violating_nodes;
};

/// Checks sum_i lower_i f_i(s) <= f(s) <= sum_i upper_i f_i(s) at every node
/// carrying positive measure (the discretization of "mu-a.e."). Real mode
/// only.
PointwiseBoxReport pointwise_box_check(const FunctionSample& f,
                                       const std::vector<FunctionSample>& family_samples,
                                       const BoxBounds& box);

/// Integral counterpart of Bessel's inequality: delegates to the coordinate
/// bound on the embedded data.
BoundReport integral_bessel(const FunctionSample& f, const OrthonormalFamily& family,
                            const BoxBounds& box, double tolerance = kConditionTolerance,
                            bool force = false);

/// Integral Gruess bound: delegates to the coordinate bound on the embedded
/// data.
BoundReport integral_gruess(const FunctionSample& f, const FunctionSample& g,
                            const OrthonormalFamily& family, const BoxBounds& box_f,
                            const BoxBounds& box_g, double tolerance = kConditionTolerance,
                            bool force = false);

/// Legendre polynomial P_n(s) by the three-term recurrence.
double legendre_polynomial(std::size_t n, double s);

}  // namespace orthobound
