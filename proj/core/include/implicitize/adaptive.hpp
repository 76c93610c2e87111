#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "implicitize/continuous.hpp"
#include "implicitize/discrete.hpp"
#include "implicitize/implicit_poly.hpp"
#include "implicitize/spectral.hpp"

namespace implicitize {

enum class Method { wgm, dm };
enum class Termination { threshold_met, reached_n_max, fixed_degree };

std::string_view to_string(Method m);
std::string_view to_string(Termination t);

struct FitConfig {
    int n_max = 7;
    double lambda = 0.1;
    double eps_ad = 1e-4;
    double eps_wg = 1e-3;
    /// Sample count for parametric (non-polynomial) input.
    int samples = 20;
    /// dm ignores lambda and minimizes the algebraic distance alone.
    Method method = Method::wgm;
    /// Fit in coordinates scaled to [-1,1]^2 and map the coefficients back.
    bool normalize_coords = false;
    /// Use unit tangents in the discrete weak-gradient term.
    bool normalize_tangents = false;

    /// n_max = 7, lambda = 0.1, eps_ad = 1e-4, eps_wg = 1e-3.
    static FitConfig polynomial_defaults();
    /// n_max = 7, lambda = 0.01, eps_ad = 1e-2, eps_wg = 1e-1.
    static FitConfig discrete_defaults(int samples = 20);

    double effective_lambda() const { return method == Method::dm ? 0.0 : lambda; }
    /// Throws std::invalid_argument on out-of-range fields.
    void validate() const;
};

/// Result of one eigen-solve at a fixed implicit degree.
struct DegreeFit {
    int n = 0;
    /// Canonical unit coefficient vector in graded-lex order.
    Vector coeffs;
    /// b'A1b, algebraic distance error.
    double e1 = 0.0;
    /// b'A2b, weak gradient error.
    double e2 = 0.0;
    double lambda_min = 0.0;
    int near_kernel_dim = 0;
};

struct FitTrace {
    std::vector<DegreeFit> records;
    int chosen_degree = 0;
    Termination termination = Termination::reached_n_max;
    std::vector<std::string> warnings;

    const DegreeFit& chosen() const;
};

struct FitResult {
    ImplicitCurve curve;
    FitTrace trace;
};

using Problem = std::variant<BezierCurve, SampledCurve>;

QuadraticForms assemble(const Problem& problem, int n, double lambda);

/// Smallest eigenpair of A1 + lambda A2 at degree n, with both errors evaluated
/// at the canonical eigenvector.
DegreeFit fit_fixed_degree(const Problem& problem, int n, double lambda);

/// Adaptive degree selection for polynomial curves: stops at the first n < n_max
/// with e1 <= eps_ad and |e2(n) - e2(n-1)| <= eps_wg (no e2 test at n = 1),
/// otherwise returns the n_max fit.
FitResult wgm_polynomial(const BezierCurve& curve, const FitConfig& cfg);

/// Adaptive degree selection on uniform samples: stops at the first n < n_max
/// with e1 <= eps_ad and e2 <= eps_wg, otherwise returns the n_max fit.
FitResult wgm_discrete(const ParametricCurve& curve, const FitConfig& cfg);
FitResult wgm_discrete(const SampledCurve& samples, const FitConfig& cfg);

/// Single fit at degree n honoring cfg's method and normalization flags.
FitResult fit_at_degree(const Problem& problem, int n, const FitConfig& cfg);

/// Algebraic-distance-only fit at degree n (lambda = 0).
FitResult dokken_fit(const Problem& problem, int n);

/// Frame mapping the problem's bounding box onto [-1,1]^2.
Similarity normalizing_frame(const Problem& problem);

}  // namespace implicitize
