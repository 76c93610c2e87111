#include "report.hpp"

#include <cstdio>

#include <json.hpp>

namespace implicitize::cli {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json vector_json(const Vector& v) {
    ordered_json arr = ordered_json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
    return arr;
}

}  // namespace

std::string report_json(const FitResult& result, const ReportContext& ctx) {
    const FitConfig& cfg = ctx.config;
    ordered_json doc;
    doc["schema"] = 1;
    doc["method"] = std::string(to_string(cfg.method));

    ordered_json config;
    config["n_max"] = cfg.n_max;
    config["lambda"] = cfg.effective_lambda();
    config["eps_ad"] = cfg.eps_ad;
    config["eps_wg"] = cfg.eps_wg;
    config["samples"] = ctx.sampled ? ordered_json(cfg.samples) : ordered_json(nullptr);
    config["degree"] = ctx.fixed_degree ? ordered_json(*ctx.fixed_degree) : ordered_json(nullptr);
    config["normalize"] = cfg.normalize_coords;
    config["normalize_tangents"] = cfg.normalize_tangents;
    doc["config"] = std::move(config);

    ordered_json trace = ordered_json::array();
    for (const DegreeFit& r : result.trace.records) {
        ordered_json entry;
        entry["n"] = r.n;
        entry["e1"] = r.e1;
        entry["e2"] = r.e2;
        entry["lambda_min"] = r.lambda_min;
        entry["near_kernel_dim"] = r.near_kernel_dim;
        entry["coeffs"] = vector_json(r.coeffs);
        trace.push_back(std::move(entry));
    }
    doc["trace"] = std::move(trace);
    doc["chosen_degree"] = result.trace.chosen_degree;
    doc["termination"] = std::string(to_string(result.trace.termination));
    doc["coeffs"] = vector_json(result.curve.coeffs());

    ordered_json order = ordered_json::array();
    for (const Exponent& e : result.curve.basis().exponents()) order.push_back({e.x_power, e.y_power});
    doc["basis_order"] = std::move(order);
    return doc.dump(2) + "\n";
}

std::string coefficients_csv(const ImplicitCurve& curve) {
    std::string out = "a,b,coeff\n";
    char buf[64];
    for (int i = 0; i < curve.basis().size(); ++i) {
        const Exponent& e = curve.basis()[i];
        std::snprintf(buf, sizeof buf, "%d,%d,%.17g\n", e.x_power, e.y_power, curve.coeffs()[i]);
        out += buf;
    }
    return out;
}

}  // namespace implicitize::cli
