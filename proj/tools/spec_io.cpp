#include "spec_io.hpp"

#include <cmath>
#include <set>

#include <json.hpp>

namespace implicitize::cli {

using nlohmann::json;

namespace {

double finite_number(const json& v, const std::string& what) {
    if (!v.is_number()) throw SpecError(what + " must be a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw SpecError(what + " must be finite");
    return d;
}

std::vector<Point2> point_list(const json& v, const std::string& what) {
    if (!v.is_array()) throw SpecError(what + " must be an array of [x, y] pairs");
    std::vector<Point2> pts;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const json& p = v[i];
        const std::string where = what + "[" + std::to_string(i) + "]";
        if (!p.is_array() || p.size() != 2) throw SpecError(where + " must be an [x, y] pair");
        pts.emplace_back(finite_number(p[0], where), finite_number(p[1], where));
    }
    return pts;
}

Interval parse_domain(const json& v) {
    if (!v.is_array() || v.size() != 2) throw SpecError("domain must be a [lo, hi] pair");
    const Interval d{finite_number(v[0], "domain[0]"), finite_number(v[1], "domain[1]")};
    if (!(d.hi > d.lo)) throw SpecError("domain must satisfy lo < hi");
    return d;
}

void check_fields(const json& doc, const std::set<std::string>& allowed, const std::string& kind) {
    for (const auto& [key, value] : doc.items())
        if (!allowed.contains(key)) throw SpecError("unknown field '" + key + "' for kind '" + kind + "'");
}

json point_array(const std::vector<Point2>& pts) {
    json arr = json::array();
    for (const auto& p : pts) arr.push_back({p.x(), p.y()});
    return arr;
}

}  // namespace

BezierCurve CurveSpec::bezier() const {
    const Interval d = domain.value_or(Interval{});
    if (kind == Kind::bezier) return BezierCurve(control_points, d);
    if (kind == Kind::power) {
        std::vector<double> xs;
        std::vector<double> ys;
        for (const auto& c : coefficients) {
            xs.push_back(c.x());
            ys.push_back(c.y());
        }
        return BezierCurve::from_power(xs, ys, d);
    }
    throw SpecError("curve '" + name + "' is not polynomial");
}

ParametricCurve CurveSpec::parametric() const {
    if (kind != Kind::named) {
        ParametricCurve p = as_parametric(bezier());
        return p;
    }
    auto c = curves::by_name(name, domain);
    if (!c) throw SpecError("unknown builtin curve '" + name + "'");
    return *c;
}

CurveSpec parse_spec(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw SpecError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw SpecError("spec must be a JSON object");
    if (!doc.contains("kind") || !doc["kind"].is_string()) throw SpecError("missing string field 'kind'");
    const std::string kind = doc["kind"].get<std::string>();

    CurveSpec spec;
    if (doc.contains("domain")) spec.domain = parse_domain(doc["domain"]);

    if (kind == "bezier") {
        check_fields(doc, {"kind", "degree", "control_points", "domain"}, kind);
        spec.kind = CurveSpec::Kind::bezier;
        if (!doc.contains("degree") || !doc["degree"].is_number_integer())
            throw SpecError("bezier spec needs an integer 'degree'");
        spec.degree = doc["degree"].get<int>();
        if (spec.degree < 1) throw SpecError("bezier degree must be >= 1");
        if (!doc.contains("control_points")) throw SpecError("bezier spec needs 'control_points'");
        spec.control_points = point_list(doc["control_points"], "control_points");
        if (static_cast<int>(spec.control_points.size()) != spec.degree + 1)
            throw SpecError("degree " + std::to_string(spec.degree) + " needs " + std::to_string(spec.degree + 1) +
                            " control points, got " + std::to_string(spec.control_points.size()));
    } else if (kind == "named") {
        check_fields(doc, {"kind", "name", "domain"}, kind);
        spec.kind = CurveSpec::Kind::named;
        if (!doc.contains("name") || !doc["name"].is_string()) throw SpecError("named spec needs a string 'name'");
        spec.name = doc["name"].get<std::string>();
        if (!curves::by_name(spec.name)) throw SpecError("unknown builtin curve '" + spec.name + "'");
    } else if (kind == "power") {
        check_fields(doc, {"kind", "degree", "coefficients", "domain"}, kind);
        spec.kind = CurveSpec::Kind::power;
        if (!doc.contains("coefficients")) throw SpecError("power spec needs 'coefficients'");
        spec.coefficients = point_list(doc["coefficients"], "coefficients");
        if (spec.coefficients.size() < 2) throw SpecError("power spec needs at least 2 coefficients");
        spec.degree = static_cast<int>(spec.coefficients.size()) - 1;
        if (doc.contains("degree") && (!doc["degree"].is_number_integer() || doc["degree"].get<int>() != spec.degree))
            throw SpecError("power degree does not match coefficient count");
    } else {
        throw SpecError("unknown kind '" + kind + "'");
    }
    return spec;
}

std::string to_json_text(const CurveSpec& spec) {
    nlohmann::ordered_json doc;
    switch (spec.kind) {
    case CurveSpec::Kind::bezier:
        doc["kind"] = "bezier";
        doc["degree"] = spec.degree;
        doc["control_points"] = point_array(spec.control_points);
        break;
    case CurveSpec::Kind::named:
        doc["kind"] = "named";
        doc["name"] = spec.name;
        break;
    case CurveSpec::Kind::power:
        doc["kind"] = "power";
        doc["degree"] = spec.degree;
        doc["coefficients"] = point_array(spec.coefficients);
        break;
    }
    if (spec.domain) doc["domain"] = {spec.domain->lo, spec.domain->hi};
    return doc.dump();
}

}  // namespace implicitize::cli
