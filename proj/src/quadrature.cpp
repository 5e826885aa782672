#include "orthobound/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

namespace orthobound {

QuadratureSpace::QuadratureSpace(std::vector<double> nodes, std::vector<double> weights,
                                 std::vector<double> density, Mode mode)
    : nodes_(std::move(nodes)),
      weights_(std::move(weights)),
      density_(std::move(density)),
      mode_(mode) {
    if (nodes_.empty()) {
        throw ShapeError("quadrature space must have at least one node");
    }
    if (weights_.size() != nodes_.size() || density_.size() != nodes_.size()) {
        throw ShapeError("quadrature nodes, weights, and density must have equal length");
    }
    double total_measure = 0.0;
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
        if (!std::isfinite(nodes_[k])) {
            throw DomainError("quadrature node " + std::to_string(k) + " is not finite");
        }
        if (k > 0 && nodes_[k] <= nodes_[k - 1]) {
            throw DomainError("quadrature nodes must be strictly increasing");
        }
        if (!(weights_[k] > 0.0) || !std::isfinite(weights_[k])) {
            throw DomainError("quadrature weight " + std::to_string(k) +
                              " must be positive and finite");
        }
        if (density_[k] < 0.0 || !std::isfinite(density_[k])) {
            throw DomainError("density sample " + std::to_string(k) +
                              " must be nonnegative and finite");
        }
        total_measure += weights_[k] * density_[k];
    }
    if (!(total_measure > 0.0)) {
        throw DomainError("quadrature measure is degenerate: sum of weight*density is zero");
    }
}

namespace {

std::vector<double> sample_density(const std::vector<double>& nodes,
                                   const std::function<double(double)>& density) {
    std::vector<double> rho(nodes.size(), 1.0);
    if (density) {
        for (std::size_t k = 0; k < nodes.size(); ++k) rho[k] = density(nodes[k]);
    }
    return rho;
}

}  // namespace

std::shared_ptr<const QuadratureSpace> QuadratureSpace::trapezoid(
    double a, double b, std::size_t node_count, Mode mode,
    const std::function<double(double)>& density) {
    if (node_count < 2) {
        throw DomainError("trapezoid rule needs at least 2 nodes");
    }
    if (!(b > a)) {
        throw DomainError("trapezoid rule needs b > a");
    }
    const double h = (b - a) / static_cast<double>(node_count - 1);
    std::vector<double> nodes(node_count), weights(node_count, h);
    for (std::size_t k = 0; k < node_count; ++k) {
        nodes[k] = a + static_cast<double>(k) * h;
    }
    weights.front() = 0.5 * h;
    weights.back() = 0.5 * h;
    std::vector<double> rho = sample_density(nodes, density);
    return std::make_shared<QuadratureSpace>(std::move(nodes), std::move(weights),
                                             std::move(rho), mode);
}

std::shared_ptr<const QuadratureSpace> QuadratureSpace::gauss_legendre(
    double a, double b, std::size_t node_count, Mode mode,
    const std::function<double(double)>& density) {
    if (node_count < 1) {
        throw DomainError("Gauss-Legendre rule needs at least 1 node");
    }
    if (!(b > a)) {
        throw DomainError("Gauss-Legendre rule needs b > a");
    }
    const std::size_t n = node_count;
    std::vector<double> nodes(n), weights(n);
    // Newton iteration on P_n from the Chebyshev initial guesses; symmetric
    // roots are filled in pairs.
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (std::size_t k = 2; k <= n; ++k) {
                const double pk = ((2.0 * static_cast<double>(k) - 1.0) * x * p1 -
                                   (static_cast<double>(k) - 1.0) * p0) /
                                  static_cast<double>(k);
                p0 = p1;
                p1 = pk;
            }
            dp = static_cast<double>(n) * (p0 - x * p1) / (1.0 - x * x);
            const double step = p1 / dp;
            x -= step;
            if (std::abs(step) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    // Affine map [-1,1] -> [a,b].
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    for (std::size_t k = 0; k < n; ++k) {
        nodes[k] = mid + half * nodes[k];
        weights[k] *= half;
    }
    std::vector<double> rho = sample_density(nodes, density);
    return std::make_shared<QuadratureSpace>(std::move(nodes), std::move(weights),
                                             std::move(rho), mode);
}

FunctionSample::FunctionSample(std::shared_ptr<const QuadratureSpace> space,
                               std::vector<Scalar> values)
    : space_(std::move(space)), values_(std::move(values)) {
    if (!space_) {
        throw ShapeError("function sample needs a quadrature space");
    }
    if (values_.size() != space_->size()) {
        throw ShapeError("function sample needs one value per node (" +
                         std::to_string(space_->size()) + " expected, " +
                         std::to_string(values_.size()) + " given)");
    }
    for (std::size_t k = 0; k < values_.size(); ++k) {
        if (!is_finite(values_[k])) {
            throw DomainError("function value at node " + std::to_string(k) +
                              " is not finite");
        }
        if (space_->mode() == Mode::real && values_[k].imag() != 0.0) {
            throw ShapeError("real-mode function sample has nonzero imaginary part at node " +
                             std::to_string(k));
        }
    }
}

FunctionSample FunctionSample::from_function(std::shared_ptr<const QuadratureSpace> space,
                                             const std::function<Scalar(double)>& fn) {
    if (!space) {
        throw ShapeError("function sample needs a quadrature space");
    }
    std::vector<Scalar> values(space->size());
    for (std::size_t k = 0; k < space->size(); ++k) {
        values[k] = fn(space->node(k));
    }
    return FunctionSample(std::move(space), std::move(values));
}

Vector embed(const FunctionSample& f) {
    const QuadratureSpace& space = f.space();
    std::vector<Scalar> coords(space.size());
    for (std::size_t k = 0; k < space.size(); ++k) {
        coords[k] = std::sqrt(space.measure(k)) * f.value(k);
    }
    return Vector(std::move(coords), space.mode());
}

Scalar weighted_inner(const FunctionSample& f, const FunctionSample& g) {
    if (f.space_ptr() != g.space_ptr()) {
        throw ShapeError("weighted_inner: samples live on different quadrature spaces");
    }
    return inner(embed(f), embed(g));
}

double legendre_polynomial(std::size_t n, double s) {
    if (n == 0) return 1.0;
    double p0 = 1.0, p1 = s;
    for (std::size_t k = 2; k <= n; ++k) {
        const double pk = ((2.0 * static_cast<double>(k) - 1.0) * s * p1 -
                           (static_cast<double>(k) - 1.0) * p0) /
                          static_cast<double>(k);
        p0 = p1;
        p1 = pk;
    }
    return p1;
}

namespace {

FamilyBuild assemble(std::vector<FunctionSample> samples, std::vector<std::string> labels,
                     std::vector<std::size_t> dropped, double tolerance) {
    std::vector<Vector> embedded;
    embedded.reserve(samples.size());
    for (const FunctionSample& s : samples) embedded.push_back(embed(s));
    OrthonormalFamily family(std::move(embedded), std::move(labels), tolerance);
    return FamilyBuild{std::move(samples), std::move(family), std::move(dropped)};
}

}  // namespace

FamilyBuild build_family(FamilyKind kind, std::size_t count,
                         const std::shared_ptr<const QuadratureSpace>& space) {
    if (!space) {
        throw ShapeError("build_family needs a quadrature space");
    }
    if (count == 0) {
        throw DomainError("build_family needs count >= 1");
    }
    if (count > space->size()) {
        throw ResolutionError("family of " + std::to_string(count) +
                              " functions needs at least that many quadrature nodes (" +
                              std::to_string(space->size()) + " available)");
    }

    std::vector<FunctionSample> samples;
    std::vector<std::string> labels;
    samples.reserve(count);
    labels.reserve(count);

    switch (kind) {
        case FamilyKind::fourier: {
            const double two_pi = 2.0 * std::numbers::pi;
            const double lo = space->node(0);
            const double hi = space->node(space->size() - 1);
            if (lo < -1e-12 || hi > two_pi + 1e-12) {
                throw DomainError("fourier family expects nodes within [0, 2pi]");
            }
            const double c0 = 1.0 / std::sqrt(two_pi);
            const double c = 1.0 / std::sqrt(std::numbers::pi);
            for (std::size_t i = 0; i < count; ++i) {
                const std::size_t freq = (i + 1) / 2;
                samples.push_back(FunctionSample::from_function(space, [&](double s) {
                    if (i == 0) return Scalar(c0, 0.0);
                    const double arg = static_cast<double>(freq) * s;
                    return Scalar(c * ((i % 2 == 1) ? std::cos(arg) : std::sin(arg)), 0.0);
                }));
                if (i == 0) {
                    labels.push_back("const");
                } else {
                    labels.push_back(((i % 2 == 1) ? "cos" : "sin") + std::to_string(freq));
                }
            }
            break;
        }
        case FamilyKind::legendre: {
            if (space->node(0) < -1.0 - 1e-12 || space->node(space->size() - 1) > 1.0 + 1e-12) {
                throw DomainError("legendre family expects nodes within [-1, 1]");
            }
            for (std::size_t i = 0; i < count; ++i) {
                const double normalization =
                    std::sqrt((2.0 * static_cast<double>(i) + 1.0) / 2.0);
                samples.push_back(FunctionSample::from_function(space, [&](double s) {
                    return Scalar(normalization * legendre_polynomial(i, s), 0.0);
                }));
                labels.push_back("P" + std::to_string(i));
            }
            break;
        }
        case FamilyKind::custom:
            throw DomainError("custom families are built from samples; use build_custom_family");
    }

    return assemble(std::move(samples), std::move(labels), {}, kFamilyGramTolerance);
}

FamilyBuild build_custom_family(const std::vector<FunctionSample>& raw, double tolerance) {
    if (raw.empty()) {
        throw ShapeError("build_custom_family requires at least one sample");
    }
    const auto& space = raw.front().space_ptr();
    for (const FunctionSample& s : raw) {
        if (s.space_ptr() != space) {
            throw ShapeError("build_custom_family: samples live on different spaces");
        }
    }
    if (raw.size() > space->size()) {
        throw ResolutionError("family of " + std::to_string(raw.size()) +
                              " functions needs at least that many quadrature nodes");
    }

    // Modified Gram-Schmidt in the weighted inner product, directly on the
    // samples so values at measure-null nodes stay meaningful.
    auto axpy = [](const FunctionSample& f, Scalar alpha, const FunctionSample& g) {
        std::vector<Scalar> values(f.size());
        for (std::size_t k = 0; k < f.size(); ++k) {
            values[k] = f.value(k) + alpha * g.value(k);
        }
        return FunctionSample(f.space_ptr(), values);
    };
    auto scale = [](double alpha, const FunctionSample& f) {
        std::vector<Scalar> values(f.size());
        for (std::size_t k = 0; k < f.size(); ++k) {
            values[k] = alpha * f.value(k);
        }
        return FunctionSample(f.space_ptr(), values);
    };
    auto weighted_norm = [](const FunctionSample& f) {
        return norm(embed(f));
    };

    std::vector<FunctionSample> accepted;
    std::vector<std::string> labels;
    std::vector<std::size_t> dropped;
    for (std::size_t idx = 0; idx < raw.size(); ++idx) {
        FunctionSample w = raw[idx];
        for (int pass = 0; pass < 2; ++pass) {
            for (const FunctionSample& e : accepted) {
                w = axpy(w, -weighted_inner(w, e), e);
            }
        }
        const double residual = weighted_norm(w);
        if (residual < tolerance * std::max(1.0, weighted_norm(raw[idx]))) {
            dropped.push_back(idx);
            continue;
        }
        accepted.push_back(scale(1.0 / residual, w));
        labels.push_back("f" + std::to_string(idx));
    }
    if (accepted.empty()) {
        throw DependenceError("build_custom_family: all samples are dependent");
    }
    return assemble(std::move(accepted), std::move(labels), std::move(dropped),
                    kFamilyGramTolerance);
}

PointwiseBoxReport pointwise_box_check(const FunctionSample& f,
                                       const std::vector<FunctionSample>& family_samples,
                                       const BoxBounds& box) {
    if (f.space().mode() != Mode::real) {
        throw ShapeError("pointwise_box_check is defined for real spaces only");
    }
    if (family_samples.empty() || box.size() != family_samples.size()) {
        throw ShapeError("pointwise_box_check: box size must match family size");
    }
    for (const FunctionSample& s : family_samples) {
        if (s.space_ptr() != f.space_ptr()) {
            throw ShapeError("pointwise_box_check: samples live on different spaces");
        }
    }

    constexpr double kSlack = 1e-12;
    const QuadratureSpace& space = f.space();
    PointwiseBoxReport report;
    report.holds = true;
    for (std::size_t k = 0; k < space.size(); ++k) {
        if (!(space.measure(k) > 0.0)) continue;  // measure-null node
        double lower_env = 0.0, upper_env = 0.0;
        for (std::size_t i = 0; i < family_samples.size(); ++i) {
            const double fi = family_samples[i].value(k).real();
            lower_env += box.lower()[i].real() * fi;
            upper_env += box.upper()[i].real() * fi;
        }
        const double value = f.value(k).real();
        if (value < lower_env - kSlack || value > upper_env + kSlack) {
            report.holds = false;
            report.violating_nodes.push_back(k);
        }
    }
    return report;
}

BoundReport integral_bessel(const FunctionSample& f, const OrthonormalFamily& family,
                            const BoxBounds& box, double tolerance, bool force) {
    BoundReport report = bessel_counterpart_b2(embed(f), family, box, tolerance, force);
    report.theorem_tag = TheoremTag::integral_bessel;
    return report;
}

BoundReport integral_gruess(const FunctionSample& f, const FunctionSample& g,
                            const OrthonormalFamily& family, const BoxBounds& box_f,
                            const BoxBounds& box_g, double tolerance, bool force) {
    if (f.space_ptr() != g.space_ptr()) {
        throw ShapeError("integral_gruess: samples live on different quadrature spaces");
    }
    BoundReport report = gruess_v2(embed(f), embed(g), family, box_f, box_g, tolerance, force);
    report.theorem_tag = TheoremTag::integral_gruess;
    return report;
}

}  // namespace orthobound
