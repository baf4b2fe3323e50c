#include "polyfp/json_io.hpp"

#include <cstdio>

#include <json.hpp>

namespace polyfp {

namespace {

using nlohmann::json;

json must_parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw Error("malformed JSON input");
    return j;
}

Cplx complex_from(const json& j, const char* what) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw Error(std::string(what) + ": expected [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<Cplx> complex_list_from(const json& j, const char* what) {
    if (!j.is_array()) throw Error(std::string(what) + ": expected an array");
    std::vector<Cplx> out;
    out.reserve(j.size());
    for (const auto& item : j) out.push_back(complex_from(item, what));
    return out;
}

json polynomial_body(const json& j) {
    if (j.is_object()) {
        if (!j.contains("coeffs")) throw Error("polynomial JSON: missing \"coeffs\"");
        return j["coeffs"];
    }
    return j; // bare coefficient array
}

} // namespace

std::string json_real(double x) {
    if (!std::isfinite(x)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string json_complex(Cplx z) {
    return "[" + json_real(z.real()) + "," + json_real(z.imag()) + "]";
}

std::string json_complex_list(const std::vector<Cplx>& zs) {
    std::string out = "[";
    for (std::size_t i = 0; i < zs.size(); ++i) {
        if (i) out += ",";
        out += json_complex(zs[i]);
    }
    return out + "]";
}

std::string json_string(const std::string& s) {
    return json(s).dump();
}

std::string to_json(const Polynomial& p) {
    return "{\"coeffs\":" + json_complex_list(p.coeffs()) + "}";
}

std::string to_json(const NodeSystem& sys) {
    std::string out = "{\"nodes\":[";
    for (int i = 0; i < sys.size(); ++i) {
        if (i) out += ",";
        out += "{\"z\":" + json_complex(sys[i].z) +
               ",\"alpha\":" + json_complex(sys[i].alpha) + "}";
    }
    return out + "]}";
}

std::string to_json(const SynthesisResult& r) {
    return "{\"coeffs\":" + json_complex_list(r.h.coeffs()) +
           ",\"newton_coeffs\":" + json_complex_list(r.newton_coeffs) +
           ",\"leading_coefficient\":" + json_complex(r.leading_coefficient) +
           ",\"achieved_degree\":" + std::to_string(r.achieved_degree) +
           ",\"max_value_residual\":" + json_real(r.max_value_residual) +
           ",\"max_derivative_residual\":" + json_real(r.max_derivative_residual) + "}";
}

std::string to_json(const SearchReport& r) {
    std::string hist = "[";
    for (std::size_t b = 0; b < r.histogram.size(); ++b) {
        if (b) hist += ",";
        hist += std::to_string(r.histogram[b]);
    }
    hist += "]";
    return "{\"min_margin\":" + json_real(r.min_margin) +
           ",\"argmin_coeffs\":" + json_complex_list(r.argmin_coeffs) +
           ",\"histogram\":" + hist +
           ",\"violations\":" + std::to_string(r.violations) +
           ",\"skipped\":" + std::to_string(r.skipped) +
           ",\"samples\":" + std::to_string(r.samples) +
           ",\"seed\":" + std::to_string(r.seed) +
           ",\"strategy\":" + json_string(to_string(r.strategy)) + "}";
}

namespace {

std::string record_json(const FixedPointRecord& rec) {
    return "{\"theta\":" + json_complex(rec.theta) +
           ",\"multiplier\":" + json_complex(rec.multiplier) +
           ",\"modulus\":" + json_real(std::abs(rec.multiplier)) +
           ",\"class\":" + json_string(to_string(rec.cls)) +
           ",\"residual\":" + json_real(rec.residual) + "}";
}

std::string line_json(const std::optional<Line>& line) {
    if (!line) return "null";
    return "{\"point\":" + json_complex(line->point) +
           ",\"direction\":" + json_complex(line->direction) + "}";
}

} // namespace

std::string to_json(const BoundReport& r) {
    std::string recs = "[";
    for (std::size_t i = 0; i < r.records.size(); ++i) {
        if (i) recs += ",";
        recs += record_json(r.records[i]);
    }
    recs += "]";
    return "{\"degree\":" + std::to_string(r.degree) +
           ",\"fixed_points\":" + recs +
           ",\"max_collinear_attractive\":" + std::to_string(r.max_collinear_attractive) +
           ",\"bound\":" + std::to_string(r.bound) +
           ",\"satisfied\":" + (r.satisfied ? std::string("true") : std::string("false")) +
           ",\"witness_line\":" + line_json(r.witness_line) + "}";
}

std::string analyze_json(const BoundReport& r, double conjecture_margin) {
    std::string base = to_json(r);
    base.pop_back(); // reopen the object
    return base + ",\"conjecture_margin\":" + json_real(conjecture_margin) + "}";
}

std::string to_json(const Orbit& o) {
    std::string out = "{\"status\":" + json_string(to_string(o.status)) +
                      ",\"steps\":" + std::to_string(o.steps);
    if (o.status == OrbitStatus::converged)
        out += ",\"limit\":" + json_complex(o.limit);
    out += ",\"points\":" + json_complex_list(o.points) + "}";
    return out;
}

std::string to_json(const CoverageReport& r) {
    std::string recs = "[";
    for (std::size_t i = 0; i < r.fixed_points.size(); ++i) {
        if (i) recs += ",";
        recs += record_json(r.fixed_points[i]);
    }
    recs += "]";
    std::string fates = "[";
    for (std::size_t i = 0; i < r.critical_fate.size(); ++i) {
        if (i) fates += ",";
        fates += std::to_string(r.critical_fate[i]);
    }
    fates += "]";
    std::string covered = "[";
    for (std::size_t a = 0; a < r.covered_by.size(); ++a) {
        if (a) covered += ",";
        covered += "{\"fixed_point\":" + std::to_string(r.attractive_indices[a]) +
                   ",\"critical_points\":[";
        for (std::size_t k = 0; k < r.covered_by[a].size(); ++k) {
            if (k) covered += ",";
            covered += std::to_string(r.covered_by[a][k]);
        }
        covered += "]}";
    }
    covered += "]";
    return "{\"fixed_points\":" + recs +
           ",\"critical_points\":" + json_complex_list(r.criticals) +
           ",\"critical_fate\":" + fates +
           ",\"coverage\":" + covered +
           ",\"all_covered\":" + (r.all_covered ? std::string("true") : std::string("false")) +
           ",\"attractive_count\":" + std::to_string(r.attractive_count) +
           ",\"count_bound_ok\":" +
           (r.count_bound_ok ? std::string("true") : std::string("false")) + "}";
}

std::string to_json(const QuadraticIdentity& q) {
    return "{\"lambda1\":" + json_complex(q.lambda1) +
           ",\"lambda2\":" + json_complex(q.lambda2) +
           ",\"sum\":" + json_complex(q.sum) +
           ",\"ok\":" + (q.ok ? std::string("true") : std::string("false")) + "}";
}

std::string to_json(const CubicDecomposition& d) {
    return "{\"a\":" + json_complex(d.a) +
           ",\"alphas\":" + json_complex_list({d.alphas[0], d.alphas[1], d.alphas[2]}) +
           ",\"lambdas\":" + json_complex_list({d.lambdas[0], d.lambdas[1], d.lambdas[2]}) +
           ",\"same_sign_pair\":[" + std::to_string(d.same_sign_pair.first) + "," +
           std::to_string(d.same_sign_pair.second) + "]" +
           ",\"guaranteed_index\":" + std::to_string(d.guaranteed_index) +
           ",\"margin\":" + json_real(d.margin) + "}";
}

std::string basin_sidecar_json(const BasinImage& img) {
    const auto& palette = basin_palette();
    std::string labels = "[";
    for (std::size_t i = 0; i < img.attractive.size(); ++i) {
        const auto& c = palette[i % palette.size()];
        if (i) labels += ",";
        labels += "{\"index\":" + std::to_string(i) +
                  ",\"theta\":" + json_complex(img.attractive[i].theta) +
                  ",\"multiplier\":" + json_complex(img.attractive[i].multiplier) +
                  ",\"color\":[" + std::to_string(c[0]) + "," + std::to_string(c[1]) +
                  "," + std::to_string(c[2]) + "]}";
    }
    labels += "]";
    std::string palette_json = "[";
    for (std::size_t i = 0; i < palette.size(); ++i) {
        if (i) palette_json += ",";
        palette_json += "[" + std::to_string(palette[i][0]) + "," +
                        std::to_string(palette[i][1]) + "," +
                        std::to_string(palette[i][2]) + "]";
    }
    palette_json += "]";
    return "{\"window\":{\"center\":" + json_complex(img.window.center) +
           ",\"half_width\":" + json_real(img.window.half_width) +
           ",\"half_height\":" + json_real(img.half_height) + "}" +
           ",\"width\":" + std::to_string(img.width) +
           ",\"height\":" + std::to_string(img.height) +
           ",\"labels\":" + labels +
           ",\"palette\":" + palette_json +
           ",\"escape_color\":[0,0,0],\"other_color\":[255,255,255]" +
           ",\"max_steps\":" + std::to_string(img.max_steps) +
           ",\"conv_tol\":" + json_real(img.conv_tol) + "}";
}

Polynomial parse_polynomial(const std::string& text) {
    json j = must_parse(text);
    return Polynomial{complex_list_from(polynomial_body(j), "polynomial coefficients")};
}

NodeSystem parse_node_system(const std::string& text) {
    json j = must_parse(text);
    json body = j.is_object() && j.contains("nodes") ? j["nodes"] : j;
    if (!body.is_array() || body.empty())
        throw Error("node system JSON: expected a nonempty \"nodes\" array");
    std::vector<Node> nodes;
    nodes.reserve(body.size());
    for (const auto& item : body) {
        if (!item.is_object() || !item.contains("z") || !item.contains("alpha"))
            throw Error("node system JSON: each node needs \"z\" and \"alpha\"");
        nodes.push_back(Node{complex_from(item["z"], "node z"),
                             complex_from(item["alpha"], "node alpha")});
    }
    return NodeSystem(std::move(nodes));
}

std::vector<Polynomial> parse_polynomial_list(const std::string& text) {
    json j = must_parse(text);
    json body = j.is_object() && j.contains("polynomials") ? j["polynomials"] : j;
    if (!body.is_array()) throw Error("polynomial list JSON: expected an array");
    std::vector<Polynomial> out;
    out.reserve(body.size());
    for (const auto& item : body)
        out.push_back(Polynomial{complex_list_from(polynomial_body(item), "coefficients")});
    return out;
}

Cplx parse_complex(const std::string& text) {
    return complex_from(must_parse(text), "complex value");
}

} // namespace polyfp
