#include "orthobound/problem.hpp"

#include <fstream>

namespace orthobound {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
    throw InputError(path + ": " + message);
}

const json& member(const json& obj, const std::string& key, const std::string& path) {
    if (!obj.is_object()) fail(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(path, "missing required field '" + key + "'");
    return *it;
}

double number(const json& value, const std::string& path) {
    if (!value.is_number()) fail(path, "expected a number");
    return value.get<double>();
}

std::size_t count(const json& value, const std::string& path) {
    if (!value.is_number_unsigned() || value.get<std::uint64_t>() == 0) {
        fail(path, "expected a positive integer");
    }
    return value.get<std::size_t>();
}

std::size_t index(const json& value, const std::string& path) {
    if (!value.is_number_unsigned()) {
        fail(path, "expected a nonnegative integer");
    }
    return value.get<std::size_t>();
}

Scalar scalar(const json& value, Mode mode, const std::string& path) {
    if (value.is_number()) {
        return Scalar(value.get<double>(), 0.0);
    }
    if (value.is_array() && value.size() == 2 && value[0].is_number() && value[1].is_number()) {
        const Scalar s(value[0].get<double>(), value[1].get<double>());
        if (mode == Mode::real && s.imag() != 0.0) {
            fail(path, "complex value in a real-mode problem");
        }
        return s;
    }
    fail(path, "expected a scalar (number or [re, im] pair)");
}

std::vector<Scalar> scalar_array(const json& value, Mode mode, const std::string& path) {
    if (!value.is_array() || value.empty()) fail(path, "expected a nonempty array");
    std::vector<Scalar> out;
    out.reserve(value.size());
    for (std::size_t i = 0; i < value.size(); ++i) {
        out.push_back(scalar(value[i], mode, path + "[" + std::to_string(i) + "]"));
    }
    return out;
}

std::vector<double> number_array(const json& value, const std::string& path) {
    if (!value.is_array() || value.empty()) fail(path, "expected a nonempty array");
    std::vector<double> out;
    out.reserve(value.size());
    for (std::size_t i = 0; i < value.size(); ++i) {
        out.push_back(number(value[i], path + "[" + std::to_string(i) + "]"));
    }
    return out;
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

void parse_space(const json& spec, Problem& problem, json& echo) {
    const std::string path = "space";
    if (spec.contains("coordinates")) {
        const json& coords = spec["coordinates"];
        problem.dimension = count(member(coords, "dimension", path + ".coordinates"),
                                  path + ".coordinates.dimension");
        echo["space"] = {{"coordinates", {{"dimension", problem.dimension}}}};
        return;
    }
    if (!spec.contains("quadrature")) {
        fail(path, "expected 'coordinates' or 'quadrature'");
    }
    const json& quad = spec["quadrature"];
    const std::string qpath = path + ".quadrature";
    const std::string rule = member(quad, "rule", qpath).get<std::string>();

    std::vector<double> nodes, weights;
    json echo_quad;
    echo_quad["rule"] = rule;
    if (rule == "table") {
        nodes = number_array(member(quad, "nodes", qpath), qpath + ".nodes");
        weights = number_array(member(quad, "weights", qpath), qpath + ".weights");
        echo_quad["nodes"] = nodes;
        echo_quad["weights"] = weights;
    } else if (rule == "trapezoid" || rule == "gauss_legendre") {
        const json& interval = member(quad, "interval", qpath);
        if (!interval.is_array() || interval.size() != 2) {
            fail(qpath + ".interval", "expected [a, b]");
        }
        const double a = number(interval[0], qpath + ".interval[0]");
        const double b = number(interval[1], qpath + ".interval[1]");
        const std::size_t n =
            count(member(quad, "node_count", qpath), qpath + ".node_count");
        std::shared_ptr<const QuadratureSpace> generated;
        try {
            generated = (rule == "trapezoid")
                            ? QuadratureSpace::trapezoid(a, b, n, problem.mode)
                            : QuadratureSpace::gauss_legendre(a, b, n, problem.mode);
        } catch (const Error& e) {
            fail(qpath, e.what());
        }
        nodes = generated->nodes();
        weights = generated->weights();
        echo_quad["interval"] = json::array({a, b});
        echo_quad["node_count"] = n;
    } else {
        fail(qpath + ".rule", "unknown rule '" + rule + "'");
    }

    std::vector<double> density(nodes.size(), 1.0);
    if (quad.contains("density") && !quad["density"].is_string()) {
        density = number_array(quad["density"], qpath + ".density");
        if (density.size() != nodes.size()) {
            fail(qpath + ".density", "expected one density value per node");
        }
        echo_quad["density"] = density;
    } else {
        echo_quad["density"] = "uniform";
    }

    try {
        problem.quadrature = std::make_shared<QuadratureSpace>(
            std::move(nodes), std::move(weights), std::move(density), problem.mode);
    } catch (const Error& e) {
        fail(qpath, e.what());
    }
    problem.dimension = problem.quadrature->size();
    echo["space"] = {{"quadrature", echo_quad}};
}

Vector canonical_vector(std::size_t index, std::size_t dim, Mode mode) {
    std::vector<Scalar> coords(dim, Scalar(0.0, 0.0));
    coords[index] = Scalar(1.0, 0.0);
    return Vector(std::move(coords), mode);
}

void parse_family(const json& spec, Problem& problem, json& echo) {
    const std::string path = "family";
    try {
        if (spec.contains("canonical")) {
            if (problem.is_quadrature()) {
                fail(path, "'canonical' families need a coordinate space");
            }
            const json& list = spec["canonical"];
            if (!list.is_array() || list.empty()) {
                fail(path + ".canonical", "expected a nonempty index array");
            }
            std::vector<Vector> members;
            std::vector<std::string> labels;
            std::vector<std::size_t> indices;
            for (std::size_t i = 0; i < list.size(); ++i) {
                const std::size_t idx =
                    index(list[i], path + ".canonical[" + std::to_string(i) + "]");
                if (idx >= problem.dimension) {
                    fail(path + ".canonical[" + std::to_string(i) + "]",
                         "index exceeds dimension");
                }
                members.push_back(canonical_vector(idx, problem.dimension, problem.mode));
                labels.push_back("e" + std::to_string(idx));
                indices.push_back(idx);
            }
            problem.family = OrthonormalFamily(std::move(members), std::move(labels));
            echo["family"] = {{"canonical", indices}};
            return;
        }
        if (spec.contains("gram_schmidt")) {
            if (problem.is_quadrature()) {
                fail(path, "'gram_schmidt' families need a coordinate space");
            }
            const json& gs = spec["gram_schmidt"];
            const json& vecs = member(gs, "vectors", path + ".gram_schmidt");
            if (!vecs.is_array() || vecs.empty()) {
                fail(path + ".gram_schmidt.vectors", "expected a nonempty array of vectors");
            }
            double tol = kGramTolerance;
            if (gs.contains("tolerance")) {
                tol = number(gs["tolerance"], path + ".gram_schmidt.tolerance");
            }
            std::vector<Vector> raw;
            json echo_vecs = json::array();
            for (std::size_t i = 0; i < vecs.size(); ++i) {
                std::vector<Scalar> coords = scalar_array(
                    vecs[i], problem.mode,
                    path + ".gram_schmidt.vectors[" + std::to_string(i) + "]");
                if (coords.size() != problem.dimension) {
                    fail(path + ".gram_schmidt.vectors[" + std::to_string(i) + "]",
                         "expected " + std::to_string(problem.dimension) + " coordinates");
                }
                echo_vecs.push_back(scalars_to_json(coords, problem.mode));
                raw.emplace_back(std::move(coords), problem.mode);
            }
            GramSchmidtResult result = gram_schmidt(raw, tol);
            problem.family = std::move(result.family);
            problem.family_dropped = std::move(result.dropped);
            echo["family"] = {
                {"gram_schmidt", {{"vectors", echo_vecs}, {"tolerance", tol}}}};
            return;
        }
        if (spec.contains("fourier") || spec.contains("legendre")) {
            if (!problem.is_quadrature()) {
                fail(path, "analytic function families need a quadrature space");
            }
            const bool fourier = spec.contains("fourier");
            const std::string key = fourier ? "fourier" : "legendre";
            const std::size_t n = count(spec[key], path + "." + key);
            FamilyBuild build =
                build_family(fourier ? FamilyKind::fourier : FamilyKind::legendre, n,
                             problem.quadrature);
            problem.family = std::move(build.family);
            problem.family_samples = std::move(build.samples);
            echo["family"] = {{key, n}};
            return;
        }
        if (spec.contains("samples")) {
            if (!problem.is_quadrature()) {
                fail(path, "'samples' families need a quadrature space");
            }
            const json& list = spec["samples"];
            if (!list.is_array() || list.empty()) {
                fail(path + ".samples", "expected a nonempty array of node-value tables");
            }
            std::vector<FunctionSample> raw;
            json echo_samples = json::array();
            for (std::size_t i = 0; i < list.size(); ++i) {
                std::vector<Scalar> values = scalar_array(
                    list[i], problem.mode, path + ".samples[" + std::to_string(i) + "]");
                if (values.size() != problem.quadrature->size()) {
                    fail(path + ".samples[" + std::to_string(i) + "]",
                         "expected one value per quadrature node");
                }
                echo_samples.push_back(scalars_to_json(values, problem.mode));
                raw.emplace_back(problem.quadrature, std::move(values));
            }
            FamilyBuild build = build_custom_family(raw);
            problem.family = std::move(build.family);
            problem.family_samples = std::move(build.samples);
            problem.family_dropped = std::move(build.dropped);
            echo["family"] = {{"samples", echo_samples}};
            return;
        }
    } catch (const InputError&) {
        throw;
    } catch (const Error& e) {
        fail(path, e.what());
    }
    fail(path, "expected one of 'canonical', 'gram_schmidt', 'fourier', 'legendre', 'samples'");
}

void parse_vector(const json& value, const std::string& name, Problem& problem, json& echo) {
    std::vector<Scalar> coords = scalar_array(value, problem.mode, "vectors." + name);
    if (coords.size() != problem.dimension) {
        fail("vectors." + name, "expected " + std::to_string(problem.dimension) +
                                    (problem.is_quadrature() ? " node values" : " coordinates"));
    }
    echo["vectors"][name] = scalars_to_json(coords, problem.mode);
    try {
        if (problem.is_quadrature()) {
            FunctionSample sample(problem.quadrature, std::move(coords));
            if (name == "x") {
                problem.fx = sample;
            } else {
                problem.fy = sample;
            }
        } else {
            Vector vec(std::move(coords), problem.mode);
            if (name == "x") {
                problem.x = std::move(vec);
            } else {
                problem.y = std::move(vec);
            }
        }
    } catch (const Error& e) {
        fail("vectors." + name, e.what());
    }
}

BoxBounds parse_box(const json& value, const std::string& name, const Problem& problem,
                    json& echo) {
    const std::string path = "boxes." + name;
    std::vector<Scalar> lower =
        scalar_array(member(value, "lower", path), problem.mode, path + ".lower");
    std::vector<Scalar> upper =
        scalar_array(member(value, "upper", path), problem.mode, path + ".upper");
    if (problem.family && lower.size() != problem.family->size()) {
        fail(path, "expected one bound pair per family member (" +
                       std::to_string(problem.family->size()) + ")");
    }
    echo["boxes"][name] = {{"lower", scalars_to_json(lower, problem.mode)},
                           {"upper", scalars_to_json(upper, problem.mode)}};
    try {
        return BoxBounds(std::move(lower), std::move(upper));
    } catch (const Error& e) {
        fail(path, e.what());
    }
}

}  // namespace

Problem parse_problem(const json& doc) {
    if (!doc.is_object()) {
        throw InputError("document: expected a JSON object");
    }
    const std::string schema = member(doc, "schema", "document").get<std::string>();
    if (schema != kSchemaId) {
        fail("schema", "unsupported schema '" + schema + "' (expected '" +
                           std::string(kSchemaId) + "')");
    }

    Problem problem;
    json echo;
    echo["schema"] = kSchemaId;

    const std::string mode = member(doc, "mode", "document").get<std::string>();
    if (mode == "real") {
        problem.mode = Mode::real;
    } else if (mode == "complex") {
        problem.mode = Mode::complex_;
    } else {
        fail("mode", "expected 'real' or 'complex'");
    }
    echo["mode"] = mode;

    parse_space(member(doc, "space", "document"), problem, echo);
    parse_family(member(doc, "family", "document"), problem, echo);

    if (doc.contains("vectors")) {
        const json& vectors = doc["vectors"];
        if (!vectors.is_object()) fail("vectors", "expected an object");
        for (const auto& [name, value] : vectors.items()) {
            if (name != "x" && name != "y") {
                fail("vectors." + name, "only 'x' and 'y' are recognized");
            }
            parse_vector(value, name, problem, echo);
        }
    }
    if (doc.contains("boxes")) {
        const json& boxes = doc["boxes"];
        if (!boxes.is_object()) fail("boxes", "expected an object");
        for (const auto& [name, value] : boxes.items()) {
            if (name != "x" && name != "y") {
                fail("boxes." + name, "only 'x' and 'y' are recognized");
            }
            if (name == "x") {
                problem.box_x = parse_box(value, name, problem, echo);
            } else {
                problem.box_y = parse_box(value, name, problem, echo);
            }
        }
    }
    if (doc.contains("lambda")) {
        problem.lambda = number(doc["lambda"], "lambda");
        echo["lambda"] = *problem.lambda;
    }
    if (doc.contains("lambdas")) {
        problem.lemma_lambdas = scalar_array(doc["lambdas"], problem.mode, "lambdas");
        echo["lambdas"] = scalars_to_json(*problem.lemma_lambdas, problem.mode);
    }
    if (doc.contains("r")) {
        problem.lemma_r = number(doc["r"], "r");
        echo["r"] = *problem.lemma_r;
    }
    if (doc.contains("tolerance")) {
        problem.tolerance = number(doc["tolerance"], "tolerance");
        if (problem.tolerance < 0.0) fail("tolerance", "must be nonnegative");
    }
    echo["tolerance"] = problem.tolerance;

    problem.echo = std::move(echo);
    return problem;
}

Problem load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot read input file '" + path + "'");
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("invalid JSON in '" + path + "': " + e.what());
    }
    return parse_problem(doc);
}

namespace {

[[noreturn]] void missing(TheoremTag tag, const std::string& field) {
    throw InputError("theorem '" + to_string(tag) + "' needs " + field);
}

}  // namespace

ProbeInstance instance_for(const Problem& problem, TheoremTag tag) {
    const bool integral =
        tag == TheoremTag::integral_bessel || tag == TheoremTag::integral_gruess;
    if (integral && !problem.is_quadrature()) {
        missing(tag, "a quadrature space");
    }
    if (!integral && problem.is_quadrature()) {
        throw InputError("theorem '" + to_string(tag) +
                         "' operates on coordinate spaces; use the integral variants here");
    }
    if (!problem.family) missing(tag, "a family");

    ProbeInstance instance;
    instance.theorem_tag = tag;
    instance.family = problem.family;

    const bool needs_y = tag == TheoremTag::gruess_v1 || tag == TheoremTag::gruess_v2 ||
                         tag == TheoremTag::companion || tag == TheoremTag::companion_abs ||
                         tag == TheoremTag::integral_gruess;
    const bool needs_box_y = tag == TheoremTag::gruess_v1 || tag == TheoremTag::gruess_v2 ||
                             tag == TheoremTag::integral_gruess;

    if (integral) {
        if (!problem.fx) missing(tag, "vectors.x (node values)");
        instance.space = problem.quadrature;
        instance.f_values = problem.fx->values();
        if (needs_y) {
            if (!problem.fy) missing(tag, "vectors.y (node values)");
            instance.g_values = problem.fy->values();
        }
    } else {
        if (!problem.x) missing(tag, "vectors.x");
        instance.x = problem.x;
        if (needs_y) {
            if (!problem.y) missing(tag, "vectors.y");
            instance.y = problem.y;
        }
    }

    if (tag == TheoremTag::lemma21) {
        if (!problem.lemma_lambdas) missing(tag, "'lambdas'");
        if (!problem.lemma_r) missing(tag, "'r'");
        instance.lambdas = problem.lemma_lambdas;
        instance.r = problem.lemma_r;
        return instance;
    }

    if (!problem.box_x) missing(tag, "boxes.x");
    instance.box_x = problem.box_x;
    if (needs_box_y) {
        if (!problem.box_y) missing(tag, "boxes.y");
        instance.box_y = problem.box_y;
    }
    if (tag == TheoremTag::companion || tag == TheoremTag::companion_abs) {
        if (!problem.lambda) missing(tag, "'lambda'");
        instance.lambda = problem.lambda;
    }
    return instance;
}

}  // namespace orthobound
