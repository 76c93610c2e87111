#pragma once

#include <optional>
#include <string>

#include "implicitize/adaptive.hpp"

namespace implicitize::cli {

struct ReportContext {
    FitConfig config;
    /// Set in fixed-degree mode.
    std::optional<int> fixed_degree;
    /// False for polynomial input, where the sample count is unused.
    bool sampled = false;
};

/// Versioned fit report ("schema": 1), pretty-printed with a trailing newline.
/// Doubles are written in shortest round-trip form.
std::string report_json(const FitResult& result, const ReportContext& ctx);

/// "a,b,coeff" header and one row per monomial in basis order.
std::string coefficients_csv(const ImplicitCurve& curve);

}  // namespace implicitize::cli
