#include "orthobound/sharpness.hpp"

#include <algorithm>
#include <cmath>

#include "orthobound/sampling.hpp"

namespace orthobound {

namespace {

const Vector& require(const std::optional<Vector>& v, const char* name) {
    if (!v) throw DomainError(std::string("probe instance is missing ") + name);
    return *v;
}

const BoxBounds& require(const std::optional<BoxBounds>& b, const char* name) {
    if (!b) throw DomainError(std::string("probe instance is missing ") + name);
    return *b;
}

FunctionSample sample_of(const ProbeInstance& instance,
                         const std::optional<std::vector<Scalar>>& values,
                         const char* name) {
    if (!instance.space || !values) {
        throw DomainError(std::string("probe instance is missing quadrature data for ") + name);
    }
    return FunctionSample(instance.space, *values);
}

}  // namespace

BoundReport evaluate_instance(const ProbeInstance& instance, double tolerance, bool force) {
    if (!instance.family) {
        throw DomainError("probe instance is missing its orthonormal family");
    }
    const OrthonormalFamily& family = *instance.family;
    switch (instance.theorem_tag) {
        case TheoremTag::lemma21:
            if (!instance.lambdas || !instance.r) {
                throw DomainError("lemma21 instance needs lambdas and r");
            }
            return lemma21_bound(require(instance.x, "x"), family, *instance.lambdas,
                                 *instance.r, tolerance, force);
        case TheoremTag::bessel_b1:
            return bessel_counterpart_b1(require(instance.x, "x"), family,
                                         require(instance.box_x, "box_x"), tolerance, force);
        case TheoremTag::bessel_b2:
            return bessel_counterpart_b2(require(instance.x, "x"), family,
                                         require(instance.box_x, "box_x"), tolerance, force);
        case TheoremTag::gruess_v1:
            return gruess_v1(require(instance.x, "x"), require(instance.y, "y"), family,
                             require(instance.box_x, "box_x"), require(instance.box_y, "box_y"),
                             tolerance, force);
        case TheoremTag::gruess_v2:
            return gruess_v2(require(instance.x, "x"), require(instance.y, "y"), family,
                             require(instance.box_x, "box_x"), require(instance.box_y, "box_y"),
                             tolerance, force);
        case TheoremTag::companion:
            if (!instance.lambda) throw DomainError("companion instance needs lambda");
            return companion_bound(require(instance.x, "x"), require(instance.y, "y"), family,
                                   require(instance.box_x, "box_x"), MixWeight(*instance.lambda),
                                   tolerance, force);
        case TheoremTag::companion_abs:
            if (!instance.lambda) throw DomainError("companion_abs instance needs lambda");
            return companion_abs(require(instance.x, "x"), require(instance.y, "y"), family,
                                 require(instance.box_x, "box_x"), MixWeight(*instance.lambda),
                                 tolerance, force);
        case TheoremTag::integral_bessel:
            return integral_bessel(sample_of(instance, instance.f_values, "f"), family,
                                   require(instance.box_x, "box_x"), tolerance, force);
        case TheoremTag::integral_gruess:
            return integral_gruess(sample_of(instance, instance.f_values, "f"),
                                   sample_of(instance, instance.g_values, "g"), family,
                                   require(instance.box_x, "box_x"),
                                   require(instance.box_y, "box_y"), tolerance, force);
        case TheoremTag::compare:
            break;
    }
    throw DomainError("theorem tag '" + to_string(instance.theorem_tag) +
                      "' has no single chain to evaluate");
}

ProbeInstance paper_witness(TheoremTag tag, double m) {
    if (!(m > 0.0)) {
        throw DomainError("paper witness needs m > 0");
    }
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

    ProbeInstance instance;
    instance.theorem_tag = tag;

    switch (tag) {
        case TheoremTag::bessel_b2:
        case TheoremTag::gruess_v1:
        case TheoremTag::gruess_v2:
        case TheoremTag::companion: {
            const Vector e = Vector::real({inv_sqrt2, inv_sqrt2});
            instance.family = OrthonormalFamily({e}, {"e"}, 1e-12);
            instance.x = Vector::real({m * inv_sqrt2, -m * inv_sqrt2});
            instance.box_x = BoxBounds({Scalar(-m, 0.0)}, {Scalar(m, 0.0)});
            if (tag != TheoremTag::bessel_b2) {
                instance.y = instance.x;
                instance.box_y = instance.box_x;
            }
            if (tag == TheoremTag::companion) {
                instance.lambda = 0.5;
            }
            return instance;
        }
        case TheoremTag::integral_bessel:
        case TheoremTag::integral_gruess: {
            // Two nodes of unit measure realize the R^2 witness in L^2_rho.
            instance.space = std::make_shared<QuadratureSpace>(
                std::vector<double>{0.0, 1.0}, std::vector<double>{1.0, 1.0},
                std::vector<double>{1.0, 1.0}, Mode::real);
            const FunctionSample basis(instance.space,
                                       {Scalar(inv_sqrt2, 0.0), Scalar(inv_sqrt2, 0.0)});
            instance.family = OrthonormalFamily({embed(basis)}, {"f0"}, 1e-12);
            instance.f_values = {Scalar(m * inv_sqrt2, 0.0), Scalar(-m * inv_sqrt2, 0.0)};
            instance.box_x = BoxBounds({Scalar(-m, 0.0)}, {Scalar(m, 0.0)});
            if (tag == TheoremTag::integral_gruess) {
                instance.g_values = instance.f_values;
                instance.box_y = instance.box_x;
            }
            return instance;
        }
        default:
            throw DomainError("no paper witness for theorem tag '" + to_string(tag) + "'");
    }
}

namespace {

bool witness_supported(TheoremTag tag, const std::optional<double>& lambda) {
    switch (tag) {
        case TheoremTag::bessel_b2:
        case TheoremTag::gruess_v1:
        case TheoremTag::gruess_v2:
        case TheoremTag::integral_bessel:
        case TheoremTag::integral_gruess:
            return true;
        case TheoremTag::companion:
            return lambda && *lambda == 0.5;
        default:
            return false;
    }
}

double box_scale(Rng& rng) {
    return std::exp(uniform(rng, std::log(0.1), std::log(10.0)));
}

ProbeInstance draw_coordinate_instance(TheoremTag tag, Rng& rng, std::size_t dim,
                                       std::size_t family_size, Mode mode,
                                       const std::optional<double>& lambda) {
    ProbeInstance instance;
    instance.theorem_tag = tag;
    instance.family = random_family(rng, dim, family_size, mode);
    const OrthonormalFamily& family = *instance.family;
    const double scale = box_scale(rng);

    switch (tag) {
        case TheoremTag::lemma21: {
            std::vector<Scalar> lambdas(family_size);
            for (Scalar& l : lambdas) l = random_scalar(rng, mode, scale);
            const double r = scale * (0.1 + uniform(rng, 0.0, 2.0));
            const Vector center = combination(family, lambdas);
            const bool boundary = uniform(rng, 0.0, 1.0) < 0.1;
            instance.x = sample_in_ball(rng, center, r, boundary);
            instance.lambdas = std::move(lambdas);
            instance.r = r;
            break;
        }
        case TheoremTag::bessel_b1:
        case TheoremTag::bessel_b2: {
            instance.box_x = random_box(rng, family_size, mode, scale);
            instance.x = random_feasible(rng, family, *instance.box_x);
            break;
        }
        case TheoremTag::gruess_v1:
        case TheoremTag::gruess_v2: {
            instance.box_x = random_box(rng, family_size, mode, scale);
            instance.box_y = random_box(rng, family_size, mode, scale);
            instance.x = random_feasible(rng, family, *instance.box_x);
            instance.y = random_feasible(rng, family, *instance.box_y);
            break;
        }
        case TheoremTag::companion: {
            const double lam = *lambda;
            instance.lambda = lam;
            instance.box_x = random_box(rng, family_size, mode, scale);
            const Vector mixed = random_feasible(rng, family, *instance.box_x);
            const Vector x = random_vector(rng, dim, mode, scale);
            // y reconstructed so that lambda*x + (1-lambda)*y hits the sample.
            instance.y = (1.0 / (1.0 - lam)) * (mixed - lam * x);
            instance.x = x;
            break;
        }
        case TheoremTag::companion_abs: {
            const double lam = *lambda;
            instance.lambda = lam;
            instance.box_x = random_box(rng, family_size, mode, scale);
            const Vector mixed_plus = random_feasible(rng, family, *instance.box_x);
            const Vector mixed_minus = random_feasible(rng, family, *instance.box_x);
            instance.x = (0.5 / lam) * (mixed_plus + mixed_minus);
            instance.y = (0.5 / (1.0 - lam)) * (mixed_plus - mixed_minus);
            break;
        }
        default:
            throw DomainError("tag is not a coordinate probe");
    }
    return instance;
}

ProbeInstance draw_integral_instance(TheoremTag tag, Rng& rng, std::size_t node_count,
                                     std::size_t family_size, Mode mode) {
    // Random strictly-increasing nodes with positive weights and strictly
    // positive density, so every node carries measure and un-embedding is
    // well defined.
    std::vector<double> nodes(node_count), weights(node_count), density(node_count);
    double position = uniform(rng, -1.0, 1.0);
    for (std::size_t k = 0; k < node_count; ++k) {
        position += 0.01 + uniform(rng, 0.0, 1.0);
        nodes[k] = position;
        weights[k] = 0.1 + uniform(rng, 0.0, 1.5);
        density[k] = 0.1 + uniform(rng, 0.0, 2.0);
    }
    auto space = std::make_shared<const QuadratureSpace>(std::move(nodes), std::move(weights),
                                                         std::move(density), mode);

    std::vector<FunctionSample> raw;
    raw.reserve(family_size);
    for (std::size_t i = 0; i < family_size; ++i) {
        std::vector<Scalar> values(node_count);
        for (Scalar& v : values) v = random_scalar(rng, mode);
        raw.emplace_back(space, std::move(values));
    }
    FamilyBuild build = build_custom_family(raw, 1e-12);
    if (build.family.size() != family_size) {
        throw DependenceError("degenerate draw");  // redrawn by caller
    }

    auto unembed = [&](const Vector& v) {
        std::vector<Scalar> values(v.dim());
        for (std::size_t k = 0; k < v.dim(); ++k) {
            values[k] = v[k] / std::sqrt(space->measure(k));
        }
        return values;
    };

    ProbeInstance instance;
    instance.theorem_tag = tag;
    instance.space = space;
    instance.family = build.family;
    const double scale = box_scale(rng);
    instance.box_x = random_box(rng, family_size, mode, scale);
    instance.f_values = unembed(random_feasible(rng, build.family, *instance.box_x));
    if (tag == TheoremTag::integral_gruess) {
        instance.box_y = random_box(rng, family_size, mode, scale);
        instance.g_values = unembed(random_feasible(rng, build.family, *instance.box_y));
    }
    return instance;
}

}  // namespace

SharpnessResult probe(TheoremTag tag, std::size_t dim, std::size_t family_size,
                      std::uint64_t probes, std::uint64_t seed,
                      std::optional<double> lambda) {
    if (dim < 1 || family_size < 1 || family_size > dim) {
        throw ShapeError("probe needs 1 <= family_size <= dim");
    }
    if (probes < 1) {
        throw DomainError("probe needs at least one probe");
    }
    const bool needs_lambda =
        tag == TheoremTag::companion || tag == TheoremTag::companion_abs;
    if (needs_lambda) {
        if (!lambda) throw DomainError("companion probes need lambda");
        MixWeight validate(*lambda);
    }
    if (tag == TheoremTag::compare) {
        throw DomainError("'compare' has no outer bound to probe against");
    }
    const bool integral =
        tag == TheoremTag::integral_bessel || tag == TheoremTag::integral_gruess;

    SharpnessResult result;
    result.theorem_tag = tag;
    result.probes = probes;
    result.lambda = lambda;

    auto consider = [&](const ProbeInstance& instance) {
        const BoundReport report = evaluate_instance(instance);
        if (!(report.outer_bound > 1e-300)) return;
        const double ratio = report.left_value / report.outer_bound;
        if (ratio > result.best_ratio) {
            result.best_ratio = ratio;
            result.witness = instance;
        }
    };

    for (std::uint64_t i = 0; i < probes; ++i) {
        Rng rng = rng_for_probe(seed, i);
        const Mode mode = (i % 2 == 0) ? Mode::real : Mode::complex_;
        for (int attempt = 0; attempt < 16; ++attempt) {
            try {
                consider(integral
                             ? draw_integral_instance(tag, rng, dim, family_size, mode)
                             : draw_coordinate_instance(tag, rng, dim, family_size, mode,
                                                        lambda));
                break;
            } catch (const DependenceError&) {
                continue;  // probability-zero degenerate draw
            }
        }
    }

    if (dim == 2 && family_size == 1 && witness_supported(tag, lambda)) {
        consider(paper_witness(tag, 1.0));
    }
    return result;
}

}  // namespace orthobound
