#include "implicitize/adaptive.hpp"

#include <cmath>
#include <limits>
#include <type_traits>
#include <stdexcept>

namespace implicitize {

std::string_view to_string(Method m) { return m == Method::wgm ? "wgm" : "dm"; }

std::string_view to_string(Termination t) {
    switch (t) {
    case Termination::threshold_met: return "threshold_met";
    case Termination::reached_n_max: return "reached_n_max";
    case Termination::fixed_degree: return "fixed_degree";
    }
    return "unknown";
}

FitConfig FitConfig::polynomial_defaults() { return {}; }

FitConfig FitConfig::discrete_defaults(int samples) {
    FitConfig cfg;
    cfg.lambda = 0.01;
    cfg.eps_ad = 1e-2;
    cfg.eps_wg = 1e-1;
    cfg.samples = samples;
    return cfg;
}

void FitConfig::validate() const {
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw std::invalid_argument("lambda must be finite and >= 0");
    if (!(eps_ad > 0.0)) throw std::invalid_argument("eps_ad must be > 0");
    if (!(eps_wg > 0.0)) throw std::invalid_argument("eps_wg must be > 0");
    if (samples < 2) throw std::invalid_argument("samples must be >= 2");
}

const DegreeFit& FitTrace::chosen() const {
    for (const auto& r : records)
        if (r.n == chosen_degree) return r;
    throw std::logic_error("FitTrace: chosen degree not in trace");
}

QuadraticForms assemble(const Problem& problem, int n, double lambda) {
    return std::visit([&](const auto& p) { return assemble(p, n, lambda); }, problem);
}

DegreeFit fit_fixed_degree(const Problem& problem, int n, double lambda) {
    const QuadraticForms q = assemble(problem, n, lambda);
    const EigenResult eig = smallest_eigenpair(q.a);
    DegreeFit fit;
    fit.n = n;
    fit.coeffs = eig.vector;
    fit.e1 = fit.coeffs.dot(q.a1 * fit.coeffs);
    fit.e2 = fit.coeffs.dot(q.a2 * fit.coeffs);
    fit.lambda_min = eig.value;
    fit.near_kernel_dim = eig.near_kernel_dim;
    return fit;
}

Similarity normalizing_frame(const Problem& problem) {
    const std::vector<Point2>& pts = std::visit(
        [](const auto& p) -> const std::vector<Point2>& {
            if constexpr (std::is_same_v<std::decay_t<decltype(p)>, BezierCurve>)
                return p.control_points();
            else
                return p.points;
        },
        problem);
    Point2 lo = pts.front();
    Point2 hi = pts.front();
    for (const auto& p : pts) {
        lo = lo.cwiseMin(p);
        hi = hi.cwiseMax(p);
    }
    const double half = 0.5 * (hi - lo).maxCoeff();
    return {0.5 * (lo.x() + hi.x()), 0.5 * (lo.y() + hi.y()), half > 0.0 ? half : 1.0};
}

namespace {

enum class StopRule { wg_difference, wg_absolute };

struct PreparedProblem {
    Problem problem;
    Similarity frame;
};

PreparedProblem prepare(const Problem& problem, const FitConfig& cfg) {
    PreparedProblem out{problem, {}};
    if (cfg.normalize_coords) {
        out.frame = normalizing_frame(problem);
        out.problem = std::visit([&](const auto& p) -> Problem { return p.transformed(out.frame); }, problem);
    }
    if (cfg.normalize_tangents)
        if (auto* s = std::get_if<SampledCurve>(&out.problem)) *s = s->with_unit_tangents();
    return out;
}

DegreeFit solve_degree(const PreparedProblem& prepared, int n, double lambda) {
    DegreeFit fit = fit_fixed_degree(prepared.problem, n, lambda);
    if (!prepared.frame.is_identity())
        fit.coeffs = canonicalize(pull_back(ImplicitCurve(MonomialBasis(n), fit.coeffs), prepared.frame).coeffs());
    return fit;
}

void add_sample_warning(FitTrace& trace, const Problem& problem, int n) {
    if (const auto* s = std::get_if<SampledCurve>(&problem))
        if (auto w = sample_count_warning(s->size(), n)) trace.warnings.push_back(*w);
}

FitResult run_adaptive(const Problem& problem, const FitConfig& cfg, StopRule rule) {
    cfg.validate();
    const PreparedProblem prepared = prepare(problem, cfg);
    const double lambda = cfg.effective_lambda();
    FitTrace trace;
    double previous_e2 = 0.0;
    for (int n = 1; n <= cfg.n_max; ++n) {
        add_sample_warning(trace, problem, n);
        trace.records.push_back(solve_degree(prepared, n, lambda));
        const DegreeFit& fit = trace.records.back();
        if (n == cfg.n_max) {
            trace.termination = Termination::reached_n_max;
            break;
        }
        bool wg_ok = fit.e2 <= cfg.eps_wg;
        if (rule == StopRule::wg_difference) wg_ok = n == 1 || std::abs(fit.e2 - previous_e2) <= cfg.eps_wg;
        if (fit.e1 <= cfg.eps_ad && wg_ok) {
            trace.termination = Termination::threshold_met;
            break;
        }
        previous_e2 = fit.e2;
    }
    const DegreeFit& last = trace.records.back();
    trace.chosen_degree = last.n;
    ImplicitCurve curve(MonomialBasis(last.n), last.coeffs);
    return {std::move(curve), std::move(trace)};
}

}  // namespace

FitResult wgm_polynomial(const BezierCurve& curve, const FitConfig& cfg) {
    return run_adaptive(curve, cfg, StopRule::wg_difference);
}

FitResult wgm_discrete(const SampledCurve& samples, const FitConfig& cfg) {
    return run_adaptive(samples, cfg, StopRule::wg_absolute);
}

FitResult wgm_discrete(const ParametricCurve& curve, const FitConfig& cfg) {
    cfg.validate();
    return wgm_discrete(sample_uniform(curve, cfg.samples), cfg);
}

FitResult fit_at_degree(const Problem& problem, int n, const FitConfig& cfg) {
    if (n < 1) throw std::invalid_argument("degree must be >= 1");
    cfg.validate();
    const PreparedProblem prepared = prepare(problem, cfg);
    FitTrace trace;
    add_sample_warning(trace, problem, n);
    trace.records.push_back(solve_degree(prepared, n, cfg.effective_lambda()));
    trace.chosen_degree = n;
    trace.termination = Termination::fixed_degree;
    ImplicitCurve curve(MonomialBasis(n), trace.records.back().coeffs);
    return {std::move(curve), std::move(trace)};
}

FitResult dokken_fit(const Problem& problem, int n) {
    FitConfig cfg;
    cfg.method = Method::dm;
    return fit_at_degree(problem, n, cfg);
}

}  // namespace implicitize
