#include "orthobound/report.hpp"

#include <cstdio>

namespace orthobound {

using nlohmann::json;

namespace {

std::string format_sig17(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

json scalar_to_json(const Scalar& s, Mode mode) {
    if (mode == Mode::real) return s.real();
    return json::array({s.real(), s.imag()});
}

json scalars_to_json(const std::vector<Scalar>& values, Mode mode) {
    json arr = json::array();
    for (const Scalar& s : values) arr.push_back(scalar_to_json(s, mode));
    return arr;
}

json vector_to_json(const Vector& v, Mode mode) {
    return scalars_to_json(v.coords(), mode);
}

json box_to_json(const BoxBounds& box, Mode mode) {
    return json{{"lower", scalars_to_json(box.lower(), mode)},
                {"upper", scalars_to_json(box.upper(), mode)}};
}

}  // namespace

json condition_to_json(const ConditionReport& report, const std::string& subject,
                       const std::string& form) {
    return json{{"subject", subject},
                {"form", form},
                {"re_form_value", report.re_form_value},
                {"norm_form_lhs", report.norm_form_lhs},
                {"norm_form_rhs", report.norm_form_rhs},
                {"satisfied", report.satisfied},
                {"tolerance_used", report.tolerance_used},
                {"equivalence_residual", report.equivalence_residual()}};
}

json bound_to_json(const BoundReport& report) {
    json conditions = json::array();
    for (std::size_t i = 0; i < report.condition_reports.size(); ++i) {
        conditions.push_back(condition_to_json(report.condition_reports[i],
                                               "condition " + std::to_string(i + 1),
                                               "re_form"));
    }
    json out{{"theorem", to_string(report.theorem_tag)},
             {"left_value", report.left_value},
             {"refined_bound", report.refined_bound},
             {"outer_bound", report.outer_bound},
             {"chain_ok", report.chain_ok},
             {"conditions_satisfied", report.conditions_satisfied()},
             {"conditions", conditions}};
    if (report.identity_residual) {
        out["identity_residual"] = *report.identity_residual;
    }
    return out;
}

json comparison_to_json(const B1B2Comparison& comparison) {
    return json{{"b1", comparison.b1},
                {"b2", comparison.b2},
                {"tighter", to_string(comparison.tighter)}};
}

json instance_to_json(const ProbeInstance& instance) {
    const Mode mode = instance.family ? instance.family->mode() : Mode::real;
    json out;
    out["theorem"] = to_string(instance.theorem_tag);
    out["mode"] = to_string(mode);
    if (instance.family) {
        json members = json::array();
        for (const Vector& e : instance.family->members()) {
            members.push_back(vector_to_json(e, mode));
        }
        out["family"] = {{"members", members},
                         {"gram_tolerance", instance.family->gram_tolerance()}};
    }
    if (instance.x) out["x"] = vector_to_json(*instance.x, mode);
    if (instance.y) out["y"] = vector_to_json(*instance.y, mode);
    if (instance.box_x) out["box_x"] = box_to_json(*instance.box_x, mode);
    if (instance.box_y) out["box_y"] = box_to_json(*instance.box_y, mode);
    if (instance.lambda) out["lambda"] = *instance.lambda;
    if (instance.lambdas) out["lambdas"] = scalars_to_json(*instance.lambdas, mode);
    if (instance.r) out["r"] = *instance.r;
    if (instance.space) {
        out["space"] = {{"nodes", instance.space->nodes()},
                        {"weights", instance.space->weights()},
                        {"density", instance.space->densities()}};
    }
    if (instance.f_values) out["f_values"] = scalars_to_json(*instance.f_values, mode);
    if (instance.g_values) out["g_values"] = scalars_to_json(*instance.g_values, mode);
    return out;
}

json sharpness_to_json(const SharpnessResult& result, std::uint64_t seed, std::size_t dim,
                       std::size_t family_size) {
    json out{{"theorem", to_string(result.theorem_tag)},
             {"best_ratio", result.best_ratio},
             {"probes", result.probes},
             {"seed", seed},
             {"dim", dim},
             {"family_size", family_size}};
    if (result.lambda) out["lambda"] = *result.lambda;
    if (result.witness) out["witness"] = instance_to_json(*result.witness);
    return out;
}

json report_shell(const json* echo) {
    json out;
    out["schema"] = kSchemaId;
    out["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    if (echo) out["input"] = *echo;
    return out;
}

std::string bound_to_csv(const BoundReport& report) {
    const std::string tag = to_string(report.theorem_tag);
    std::string csv = "theorem,term,value\n";
    csv += tag + ",left_value," + format_sig17(report.left_value) + "\n";
    csv += tag + ",refined_bound," + format_sig17(report.refined_bound) + "\n";
    csv += tag + ",outer_bound," + format_sig17(report.outer_bound) + "\n";
    return csv;
}

std::string comparison_to_csv(const B1B2Comparison& comparison) {
    std::string csv = "theorem,term,value\n";
    csv += "compare,b1," + format_sig17(comparison.b1) + "\n";
    csv += "compare,b2," + format_sig17(comparison.b2) + "\n";
    csv += "compare,tighter," + to_string(comparison.tighter) + "\n";
    return csv;
}

}  // namespace orthobound
