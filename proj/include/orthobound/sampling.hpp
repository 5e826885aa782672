#pragma once

#include <cstdint>
#include <random>

#include "orthobound/conditions.hpp"
#include "orthobound/linalg.hpp"

namespace orthobound {

using Rng = std::mt19937_64;

/// Engine for probe `index` of a run seeded with `seed`; probes drawn this
/// way agree between serial and fanned-out evaluation.
Rng rng_for_probe(std::uint64_t seed, std::uint64_t index);

double uniform(Rng& rng, double lo, double hi);
double gaussian(Rng& rng);
Scalar random_scalar(Rng& rng, Mode mode, double scale = 1.0);

/// Gaussian coordinates; mode-aware (real or complex).
Vector random_vector(Rng& rng, std::size_t dim, Mode mode, double scale = 1.0);

/// Orthonormal family spanned by `size` random Gaussian vectors. Degenerate
/// draws (probability zero) are redrawn.
OrthonormalFamily random_family(Rng& rng, std::size_t dim, std::size_t size, Mode mode);

/// Random nondegenerate box for a family of the given size; entries have
/// magnitudes of order `scale`.
BoxBounds random_box(Rng& rng, std::size_t size, Mode mode, double scale = 1.0);

/// Uniform point of the ball |x - center| <= radius (or of its boundary
/// sphere), the exact feasibility region of the norm-form condition.
Vector sample_in_ball(Rng& rng, const Vector& center, double radius, bool boundary = false);

/// Feasible vector for (family, box): uniform in the norm-form ball, with
/// `boundary_fraction` of draws placed on the sphere where the equality cases
/// live.
Vector random_feasible(Rng& rng, const OrthonormalFamily& family, const BoxBounds& box,
                       double boundary_fraction = 0.1);

}  // namespace orthobound
