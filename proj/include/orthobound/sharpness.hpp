#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "orthobound/bounds.hpp"
#include "orthobound/quadrature.hpp"

namespace orthobound {

/// A complete bound instance: whatever one theorem tag needs to be evaluated.
/// Coordinate tags fill the vector fields; integral tags additionally carry
/// the quadrature space and node values.
struct ProbeInstance {
    TheoremTag theorem_tag = TheoremTag::bessel_b2;
    std::optional<OrthonormalFamily> family;
    std::optional<Vector> x;
    std::optional<Vector> y;
    std::optional<BoxBounds> box_x;
    std::optional<BoxBounds> box_y;
    std::optional<double> lambda;
    std::optional<std::vector<Scalar>> lambdas;  // lemma21
    std::optional<double> r;                     // lemma21

    std::shared_ptr<const QuadratureSpace> space;  // integral tags
    std::optional<std::vector<Scalar>> f_values;
    std::optional<std::vector<Scalar>> g_values;
};

/// Evaluate the instance's theorem and return the full chain report.
BoundReport evaluate_instance(const ProbeInstance& instance,
                              double tolerance = kConditionTolerance, bool force = false);

struct SharpnessResult {
    TheoremTag theorem_tag = TheoremTag::bessel_b2;
    /// max observed left_value / outer_bound over all probes, floored at 0.
    double best_ratio = 0.0;
    std::optional<ProbeInstance> witness;
    std::uint64_t probes = 0;
    std::optional<double> lambda;
};

/// The equality-achieving input of the sharpness proof, scaled by m > 0:
/// F = {1}, e = (1/sqrt2, 1/sqrt2) in R^2, x = (m/sqrt2, -m/sqrt2),
/// Phi = m, phi = -m. Supported tags: bessel_b2, gruess_v1, gruess_v2,
/// companion (at lambda = 1/2), integral_bessel, integral_gruess (through a
/// constant-density two-node embedding).
ProbeInstance paper_witness(TheoremTag tag, double m);

/// Randomized tightness search: `probes` feasible instances drawn
/// deterministically from (seed, probe index). When dim == 2 and
/// family_size == 1 the paper witness is evaluated as well, so best_ratio = 1
/// is always reachable there for the supported tags.
SharpnessResult probe(TheoremTag tag, std::size_t dim, std::size_t family_size,
                      std::uint64_t probes, std::uint64_t seed,
                      std::optional<double> lambda = std::nullopt);

}  // namespace orthobound
