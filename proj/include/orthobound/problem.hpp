#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "orthobound/quadrature.hpp"
#include "orthobound/sharpness.hpp"

namespace orthobound {

inline constexpr const char* kSchemaId = "orthobound/1";

/// A fully resolved problem description: space, family, vectors, boxes, and
/// per-theorem extras, plus the normalized input echo.
struct Problem {
    Mode mode = Mode::real;

    /// Non-null for weighted-L2 problems; coordinate problems use `dimension`.
    std::shared_ptr<const QuadratureSpace> quadrature;
    std::size_t dimension = 0;

    std::optional<OrthonormalFamily> family;
    std::vector<FunctionSample> family_samples;  // quadrature problems
    std::vector<std::size_t> family_dropped;

    std::optional<Vector> x, y;                  // coordinate problems
    std::optional<FunctionSample> fx, fy;        // quadrature problems
    std::optional<BoxBounds> box_x, box_y;
    std::optional<double> lambda;
    std::optional<std::vector<Scalar>> lemma_lambdas;
    std::optional<double> lemma_r;
    double tolerance = kConditionTolerance;

    /// Normalized input; re-parsing it reproduces this problem exactly.
    nlohmann::json echo;

    bool is_quadrature() const noexcept { return quadrature != nullptr; }
};

/// Parse and resolve a problem document. Throws InputError naming the failing
/// field on malformed input.
Problem parse_problem(const nlohmann::json& doc);

/// Read and parse a problem file.
Problem load_problem(const std::string& path);

/// Assemble the evaluation instance for one theorem tag, validating that the
/// problem provides everything the tag needs.
ProbeInstance instance_for(const Problem& problem, TheoremTag tag);

}  // namespace orthobound
