#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <json.hpp>

#include "app.hpp"
#include "implicitize/adaptive.hpp"
#include "implicitize/contour.hpp"
#include "report.hpp"
#include "spec_io.hpp"

using namespace implicitize;
using namespace implicitize::cli;
using nlohmann::json;

namespace fs = std::filesystem;

namespace {

const std::string golden = IMPLICITIZE_GOLDEN_DIR;

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "implicitize");
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "implicitize_test_cli";
    fs::create_directories(dir);
    return dir / name;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void expect_trace_equal(const json& report, const FitTrace& trace) {
    ASSERT_EQ(report["trace"].size(), trace.records.size());
    for (std::size_t i = 0; i < trace.records.size(); ++i) {
        const auto& r = report["trace"][i];
        const auto& rec = trace.records[i];
        EXPECT_EQ(r["n"].get<int>(), rec.n);
        EXPECT_EQ(r["e1"].get<double>(), rec.e1);
        EXPECT_EQ(r["e2"].get<double>(), rec.e2);
        EXPECT_EQ(r["lambda_min"].get<double>(), rec.lambda_min);
        const auto coeffs = r["coeffs"].get<std::vector<double>>();
        ASSERT_EQ(coeffs.size(), static_cast<std::size_t>(rec.coeffs.size()));
        for (std::size_t j = 0; j < coeffs.size(); ++j) EXPECT_EQ(coeffs[j], rec.coeffs[static_cast<Eigen::Index>(j)]);
    }
    EXPECT_EQ(report["chosen_degree"].get<int>(), trace.chosen_degree);
    EXPECT_EQ(report["termination"].get<std::string>(), std::string(to_string(trace.termination)));
}

}  // namespace

TEST(ParseSpec, BezierC1) {
    const auto spec = parse_spec(R"({"kind":"bezier","degree":3,"control_points":[[0,0],[2,1],[0,2],[1,0]],"domain":[0,1]})");
    EXPECT_EQ(spec.kind, CurveSpec::Kind::bezier);
    EXPECT_EQ(spec.degree, 3);
    ASSERT_EQ(spec.control_points.size(), 4u);
    EXPECT_EQ(spec.control_points[1], Point2(2, 1));
    ASSERT_TRUE(spec.domain);
    EXPECT_EQ(*spec.domain, (Interval{0, 1}));
    EXPECT_EQ(spec.bezier().control_points(), curves::c1().control_points());
}

TEST(ParseSpec, NamedCardioid) {
    const auto spec = parse_spec(R"({"kind":"named","name":"cardioid_c3","domain":[0,10]})");
    EXPECT_EQ(spec.kind, CurveSpec::Kind::named);
    EXPECT_FALSE(spec.is_polynomial());
    const auto c = spec.parametric();
    EXPECT_EQ(c.domain, (Interval{0, 10}));
    const Point2 p = c.position(1.0);
    EXPECT_DOUBLE_EQ(p.x(), 2 * (1 + std::cos(1.0)) * std::cos(1.0));
    EXPECT_DOUBLE_EQ(p.y(), 2 * (1 + std::cos(1.0)) * std::sin(1.0));
}

TEST(ParseSpec, PowerForm) {
    const auto spec = parse_spec(R"({"kind":"power","coefficients":[[0,1],[2,0],[0,3]]})");
    const auto b = spec.bezier();
    EXPECT_EQ(b.degree(), 2);
    for (double t : {0.0, 0.3, 1.0}) {
        EXPECT_NEAR(b.position(t).x(), 2 * t, 1e-15);
        EXPECT_NEAR(b.position(t).y(), 1 + 3 * t * t, 1e-15);
    }
}

TEST(ParseSpec, Errors) {
    const std::vector<std::string> bad = {
        R"({"kind":"bezier","degree":1,"control_points":[[0,0]],"domain":[0,1]})",
        R"({"kind":"bezier","degree":1,"control_points":[[0,0],[1,1]],"domain":[1,1]})",
        R"({"kind":"bezier","degree":1,"control_points":[[0,0],[1,1]],"extra":true})",
        R"({"kind":"bezier","degree":1,"control_points":[[0,0],[1]]})",
        R"({"kind":"nurbs"})",
        R"({"kind":"named","name":"folium"})",
        R"({"kind":"named","name":"circle","degree":2})",
        R"({"degree":1})",
        R"([1,2])",
        R"({"kind":"bezier",)",
    };
    for (const auto& text : bad) EXPECT_THROW(parse_spec(text), SpecError) << text;
}

TEST(ParseSpec, RoundTrip) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-10, 10);
    for (int trial = 0; trial < 20; ++trial) {
        CurveSpec spec;
        spec.degree = 1 + trial % 5;
        for (int i = 0; i <= spec.degree; ++i) spec.control_points.emplace_back(u(rng), u(rng));
        if (trial % 2) spec.domain = Interval{-1.5, u(rng) + 20};
        EXPECT_EQ(parse_spec(to_json_text(spec)), spec);
    }
    for (const auto& name : curves::builtin_names()) {
        CurveSpec spec;
        spec.kind = CurveSpec::Kind::named;
        spec.name = name;
        EXPECT_EQ(parse_spec(to_json_text(spec)), spec);
    }
}

TEST(Run, C1WgmMatchesLibrary) {
    const auto r = invoke({"fit", "--spec", golden + "/c1.json", "--method", "wgm"});
    ASSERT_EQ(r.code, exit_ok) << r.err;
    const json report = json::parse(r.out);
    EXPECT_EQ(report["schema"], 1);
    EXPECT_EQ(report["method"], "wgm");
    const auto lib = wgm_polynomial(curves::c1(), FitConfig::polynomial_defaults());
    expect_trace_equal(report, lib.trace);
    const auto order = report["basis_order"];
    const auto coeffs = report["coeffs"].get<std::vector<double>>();
    ASSERT_EQ(order.size(), coeffs.size());
    const auto& exps = lib.curve.basis().exponents();
    for (std::size_t i = 0; i < exps.size(); ++i) {
        EXPECT_EQ(order[i][0].get<int>(), exps[i].x_power);
        EXPECT_EQ(order[i][1].get<int>(), exps[i].y_power);
        EXPECT_EQ(coeffs[i], lib.curve.coeffs()[static_cast<Eigen::Index>(i)]);
    }
}

TEST(Run, C3DokkenFixedDegree) {
    const auto r = invoke({"fit", "--spec", golden + "/c3.json", "--method", "dm", "--degree", "4", "--samples", "10"});
    ASSERT_EQ(r.code, exit_ok) << r.err;
    const json report = json::parse(r.out);
    EXPECT_EQ(report["method"], "dm");
    EXPECT_EQ(report["termination"], "fixed_degree");
    EXPECT_EQ(report["config"]["samples"], 10);
    EXPECT_EQ(report["config"]["lambda"], 0.0);
    const auto lib = dokken_fit(sample_uniform(curves::cardioid(), 10), 4);
    expect_trace_equal(report, lib.trace);
}

TEST(Run, ReportsAreByteStable) {
    for (const char* name : {"c1", "c2", "c3", "c4"}) {
        const std::vector<std::string> args = {"fit", "--spec", golden + "/" + name + ".json"};
        const auto a = invoke(args);
        const auto b = invoke(args);
        ASSERT_EQ(a.code, exit_ok) << a.err;
        EXPECT_EQ(a.out, b.out) << name;
    }
}

TEST(Run, SpecErrors) {
    const auto neg = invoke({"fit", "--spec", golden + "/c1.json", "--lambda", "-1"});
    EXPECT_EQ(neg.code, exit_spec);
    const json err = json::parse(neg.err);
    EXPECT_EQ(err["error"]["code"], exit_spec);
    EXPECT_EQ(err["error"]["kind"], "spec");
    EXPECT_EQ(invoke({"fit", "--spec", golden + "/c1.json", "--method", "newton"}).code, exit_spec);
    EXPECT_EQ(invoke({"fit", "--spec", golden + "/c1.json", "--degree", "0"}).code, exit_spec);

    const auto bad = scratch("bad.json");
    std::ofstream(bad) << R"({"kind":"bezier","degree":1,"control_points":[[0,0]],"domain":[0,1]})";
    EXPECT_EQ(invoke({"fit", "--spec", bad.string()}).code, exit_spec);
}

TEST(Run, IoAndUsageErrors) {
    const auto missing = invoke({"fit", "--spec", "/nonexistent/c1.json"});
    EXPECT_EQ(missing.code, exit_io);
    EXPECT_EQ(json::parse(missing.err)["error"]["kind"], "io");
    EXPECT_EQ(invoke({"fit", "--spec", golden + "/c1.json", "--csv", "/nonexistent/dir/out.csv"}).code, exit_io);
    EXPECT_EQ(invoke({"fit", "--bogus"}).code, exit_usage);
    EXPECT_EQ(invoke({"fit"}).code, exit_usage);
}

TEST(Run, ListBuiltins) {
    const auto r = invoke({"list"});
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_EQ(r.out, "cardioid_c3\ncircle\nellipse\ngerono\nspiral_c4\n");
}

TEST(Run, WritesArtifacts) {
    const auto svg = scratch("c3.svg");
    const auto csv = scratch("c3.csv");
    const auto rep = scratch("c3.json");
    const auto r = invoke({"fit", "--spec", golden + "/c3.json", "--samples", "10", "--svg", svg.string(), "--csv",
                           csv.string(), "--report", rep.string(), "--resolution", "200"});
    ASSERT_EQ(r.code, exit_ok) << r.err;
    EXPECT_TRUE(r.out.empty());

    const json report = json::parse(slurp(rep));
    const auto fit = wgm_discrete(curves::cardioid(), FitConfig::discrete_defaults(10));
    expect_trace_equal(report, fit.trace);

    std::istringstream rows(slurp(csv));
    std::string line;
    std::getline(rows, line);
    EXPECT_EQ(line, "a,b,coeff");
    std::size_t count = 0;
    while (std::getline(rows, line)) ++count;
    EXPECT_EQ(count, static_cast<std::size_t>(basis_size(fit.trace.chosen_degree)));

    boost::property_tree::ptree tree;
    std::istringstream svg_text(slurp(svg));
    ASSERT_NO_THROW(boost::property_tree::read_xml(svg_text, tree));
    const auto& root = tree.get_child("svg");
    std::size_t paths = 0;
    for (const auto& child : root)
        if (child.first == "path") ++paths;
    const auto samples = sample_uniform(curves::cardioid(), 10);
    std::vector<Point2> geometry;
    const auto c = curves::cardioid();
    for (int i = 0; i < 512; ++i) geometry.push_back(c.position(i + 1 == 512 ? 10.0 : 10.0 * i / 511));
    geometry.insert(geometry.end(), samples.points.begin(), samples.points.end());
    const auto mesh = marching_squares(fit.curve, Box::around(geometry, 0.1), 200);
    EXPECT_EQ(paths, mesh.components.size() + 1);
}

TEST(CoefficientsCsv, RoundTripsDoubles) {
    const ImplicitCurve curve(MonomialBasis(1), (Vector(3) << 0.1, -1.0 / 3.0, 2e-300).finished());
    EXPECT_EQ(coefficients_csv(curve), "a,b,coeff\n0,0,0.10000000000000001\n1,0,-0.33333333333333331\n0,1,2.0000000000000001e-300\n");
}
