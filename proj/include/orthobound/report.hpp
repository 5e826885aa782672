#pragma once

#include <string>

#include "json.hpp"

#include "orthobound/problem.hpp"
#include "orthobound/sharpness.hpp"

namespace orthobound {

inline constexpr const char* kToolName = "orthobound";
inline constexpr const char* kToolVersion = "0.1.0";

nlohmann::json condition_to_json(const ConditionReport& report, const std::string& subject,
                                 const std::string& form);
nlohmann::json bound_to_json(const BoundReport& report);
nlohmann::json comparison_to_json(const B1B2Comparison& comparison);
nlohmann::json instance_to_json(const ProbeInstance& instance);
nlohmann::json sharpness_to_json(const SharpnessResult& result, std::uint64_t seed,
                                 std::size_t dim, std::size_t family_size);

/// Shell shared by every report: schema id, tool identity, and optionally the
/// input echo.
nlohmann::json report_shell(const nlohmann::json* echo);

/// One row per chain term, '.' decimal, 17 significant digits.
std::string bound_to_csv(const BoundReport& report);
std::string comparison_to_csv(const B1B2Comparison& comparison);

}  // namespace orthobound
