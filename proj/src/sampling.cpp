#include "orthobound/sampling.hpp"

#include <cmath>

namespace orthobound {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

Rng rng_for_probe(std::uint64_t seed, std::uint64_t index) {
    return Rng(splitmix64(seed) ^ splitmix64(index * 0x9e3779b97f4a7c15ULL + 1));
}

double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

double gaussian(Rng& rng) {
    return std::normal_distribution<double>(0.0, 1.0)(rng);
}

Scalar random_scalar(Rng& rng, Mode mode, double scale) {
    if (mode == Mode::real) return Scalar(scale * gaussian(rng), 0.0);
    return Scalar(scale * gaussian(rng), scale * gaussian(rng));
}

Vector random_vector(Rng& rng, std::size_t dim, Mode mode, double scale) {
    std::vector<Scalar> coords(dim);
    for (Scalar& c : coords) c = random_scalar(rng, mode, scale);
    return Vector(std::move(coords), mode);
}

OrthonormalFamily random_family(Rng& rng, std::size_t dim, std::size_t size, Mode mode) {
    if (size > dim) {
        throw ShapeError("random_family: size must not exceed dimension");
    }
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<Vector> raw;
        raw.reserve(size);
        for (std::size_t i = 0; i < size; ++i) {
            raw.push_back(random_vector(rng, dim, mode));
        }
        GramSchmidtResult result = gram_schmidt(raw, 1e-12);
        if (result.dropped.empty()) return result.family;
    }
    throw DependenceError("random_family: repeated degenerate draws");
}

BoxBounds random_box(Rng& rng, std::size_t size, Mode mode, double scale) {
    std::vector<Scalar> lower(size), upper(size);
    for (std::size_t i = 0; i < size; ++i) {
        lower[i] = random_scalar(rng, mode, scale);
        // Strictly positive spread on every index keeps the box nondegenerate.
        const double gap = scale * (0.1 + uniform(rng, 0.0, 2.0));
        if (mode == Mode::real) {
            upper[i] = lower[i] + Scalar(gap, 0.0);
        } else {
            const double angle = uniform(rng, 0.0, 2.0 * 3.141592653589793);
            upper[i] = lower[i] + Scalar(gap * std::cos(angle), gap * std::sin(angle));
        }
    }
    return BoxBounds(std::move(lower), std::move(upper));
}

Vector sample_in_ball(Rng& rng, const Vector& center, double radius, bool boundary) {
    if (radius < 0.0) {
        throw DomainError("sample_in_ball: radius must be nonnegative");
    }
    const std::size_t dim = center.dim();
    const Mode mode = center.mode();
    Vector direction = random_vector(rng, dim, mode);
    double len = norm(direction);
    while (len == 0.0) {
        direction = random_vector(rng, dim, mode);
        len = norm(direction);
    }
    // Real dimension of the ball: n for real mode, 2n for complex.
    const double real_dim = static_cast<double>(mode == Mode::real ? dim : 2 * dim);
    const double factor =
        boundary ? 1.0 : std::pow(uniform(rng, 0.0, 1.0), 1.0 / real_dim);
    return center + (radius * factor / len) * direction;
}

Vector random_feasible(Rng& rng, const OrthonormalFamily& family, const BoxBounds& box,
                       double boundary_fraction) {
    const Vector center = combination(family, box.midpoints());
    const double radius = 0.5 * std::sqrt(box.spread_sq());
    const bool boundary = uniform(rng, 0.0, 1.0) < boundary_fraction;
    return sample_in_ball(rng, center, radius, boundary);
}

}  // namespace orthobound
