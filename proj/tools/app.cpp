#include "app.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "report.hpp"
#include "spec_io.hpp"
#include "svg.hpp"

namespace implicitize::cli {

namespace {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FitOptions {
    std::string spec_path;
    std::string method = "wgm";
    std::optional<int> degree;
    std::optional<int> n_max;
    std::optional<double> lambda;
    std::optional<double> eps_ad;
    std::optional<double> eps_wg;
    std::optional<int> samples;
    bool normalize = false;
    bool normalize_tangents = false;
    std::string svg_path;
    std::string csv_path;
    std::string report_path;
    int resolution = 400;
};

constexpr int default_samples = 20;
constexpr int input_polyline_points = 512;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << text;
    if (!out) throw IoError("write failed for '" + path + "'");
}

int report_error(std::ostream& err, int code, const char* kind, const std::string& message) {
    nlohmann::ordered_json doc;
    doc["error"]["code"] = code;
    doc["error"]["kind"] = kind;
    doc["error"]["message"] = message;
    err << doc.dump() << "\n";
    return code;
}

FitConfig build_config(const FitOptions& opt, bool sampled) {
    FitConfig cfg = sampled ? FitConfig::discrete_defaults(default_samples) : FitConfig::polynomial_defaults();
    if (opt.method == "wgm") cfg.method = Method::wgm;
    else if (opt.method == "dm") cfg.method = Method::dm;
    else throw SpecError("unknown method '" + opt.method + "' (expected wgm or dm)");
    if (opt.n_max) cfg.n_max = *opt.n_max;
    if (opt.lambda) cfg.lambda = *opt.lambda;
    if (opt.eps_ad) cfg.eps_ad = *opt.eps_ad;
    if (opt.eps_wg) cfg.eps_wg = *opt.eps_wg;
    if (opt.samples) cfg.samples = *opt.samples;
    cfg.normalize_coords = opt.normalize;
    cfg.normalize_tangents = opt.normalize_tangents;
    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw SpecError(e.what());
    }
    if (opt.degree && *opt.degree < 1) throw SpecError("degree must be >= 1");
    if (opt.resolution < 2) throw SpecError("resolution must be >= 2");
    return cfg;
}

int run_fit(const FitOptions& opt, std::ostream& out, std::ostream& err) {
    const CurveSpec spec = parse_spec(read_file(opt.spec_path));
    const bool sampled = !spec.is_polynomial();
    const FitConfig cfg = build_config(opt, sampled);

    std::optional<BezierCurve> bezier;
    ParametricCurve parametric;
    try {
        if (!sampled) bezier = spec.bezier();
        parametric = spec.parametric();
    } catch (const std::invalid_argument& e) {
        throw SpecError(e.what());
    }

    std::optional<Problem> problem;
    SampledCurve samples;
    if (sampled) {
        samples = sample_uniform(parametric, cfg.samples);
        problem.emplace(samples);
    } else {
        problem.emplace(*bezier);
    }

    FitResult result = [&] {
        if (opt.degree) return fit_at_degree(*problem, *opt.degree, cfg);
        if (sampled) return wgm_discrete(samples, cfg);
        return wgm_polynomial(*bezier, cfg);
    }();
    for (const auto& w : result.trace.warnings) err << "warning: " << w << "\n";

    const std::string report = report_json(result, {cfg, opt.degree, sampled});
    if (opt.report_path.empty())
        out << report;
    else
        write_file(opt.report_path, report);

    if (!opt.csv_path.empty()) write_file(opt.csv_path, coefficients_csv(result.curve));

    if (!opt.svg_path.empty()) {
        SvgScene scene;
        const Interval d = parametric.domain;
        for (int i = 0; i < input_polyline_points; ++i) {
            const double t = i + 1 == input_polyline_points ? d.hi : d.lo + d.length() * i / (input_polyline_points - 1);
            scene.input_curve.push_back(parametric.position(t));
        }
        scene.samples = samples.points;
        std::vector<Point2> geometry = scene.input_curve;
        geometry.insert(geometry.end(), samples.points.begin(), samples.points.end());
        scene.box = Box::around(geometry, 0.1);
        scene.contour = marching_squares(result.curve, scene.box, opt.resolution);
        scene.contour_color = cfg.method == Method::wgm ? "#d62728" : "#000000";
        write_file(opt.svg_path, render_svg(scene));
    }
    return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Approximate implicitization of planar parametric curves"};
    app.name(args.empty() ? "implicitize" : args.front());
    app.require_subcommand(1);

    FitOptions opt;
    CLI::App* fit = app.add_subcommand("fit", "Fit an implicit polynomial to a curve spec");
    fit->add_option("--spec", opt.spec_path, "Curve spec JSON file")->required();
    fit->add_option("--method", opt.method, "wgm (weak gradient) or dm (algebraic distance only)");
    fit->add_option("--degree", opt.degree, "Fixed implicit degree; skips the adaptive loop");
    fit->add_option("--nmax", opt.n_max, "Maximum implicit degree");
    fit->add_option("--lambda", opt.lambda, "Weight of the weak gradient term");
    fit->add_option("--eps-ad", opt.eps_ad, "Algebraic distance threshold");
    fit->add_option("--eps-wg", opt.eps_wg, "Weak gradient threshold");
    fit->add_option("--samples", opt.samples, "Uniform sample count for non-polynomial curves");
    fit->add_flag("--normalize", opt.normalize, "Fit in coordinates scaled to [-1,1]^2");
    fit->add_flag("--normalize-tangents", opt.normalize_tangents, "Use unit tangents for sampled curves");
    fit->add_option("--svg", opt.svg_path, "Write an SVG rendering");
    fit->add_option("--csv", opt.csv_path, "Write the coefficient CSV");
    fit->add_option("--report", opt.report_path, "Write the JSON report here instead of stdout");
    fit->add_option("--resolution", opt.resolution, "Contour grid cells per side");

    CLI::App* list = app.add_subcommand("list", "List builtin named curves");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return exit_ok;
        }
        return report_error(err, exit_usage, "usage", e.what());
    }

    try {
        if (*list) {
            for (const auto& name : curves::builtin_names()) out << name << "\n";
            return exit_ok;
        }
        return run_fit(opt, out, err);
    } catch (const SpecError& e) {
        return report_error(err, exit_spec, "spec", e.what());
    } catch (const IoError& e) {
        return report_error(err, exit_io, "io", e.what());
    } catch (const SolverError& e) {
        return report_error(err, exit_fit, "fit", e.what());
    } catch (const std::domain_error& e) {
        return report_error(err, exit_fit, "fit", e.what());
    } catch (const std::invalid_argument& e) {
        return report_error(err, exit_spec, "spec", e.what());
    }
}

}  // namespace implicitize::cli
