#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "implicitize/bezier_curve.hpp"

namespace implicitize {

/// General planar parametric curve with an analytic velocity.
struct ParametricCurve {
    std::string name;
    std::function<Point2(double)> position;
    std::function<Point2(double)> velocity;
    Interval domain;
};

/// Point/tangent pairs drawn from a parametric curve.
struct SampledCurve {
    std::vector<double> params;
    std::vector<Point2> points;
    std::vector<Point2> tangents;

    int size() const { return static_cast<int>(points.size()); }

    SampledCurve transformed(const Similarity& frame) const;
    SampledCurve with_unit_tangents() const;
};

/// N samples on the closed uniform grid t_j = lo + j (hi - lo) / (N - 1).
/// Throws std::invalid_argument for N < 2 and std::domain_error, naming the
/// parameter, when position or velocity is not finite.
SampledCurve sample_uniform(const ParametricCurve& curve, int count);

/// Parametric view of a Bezier curve.
ParametricCurve as_parametric(const BezierCurve& curve);

namespace curves {

/// (cos t, sin t) on [0, 2 pi].
ParametricCurve circle(std::optional<Interval> domain = std::nullopt);
/// (2 cos t, sin t) on [0, 2 pi].
ParametricCurve ellipse(std::optional<Interval> domain = std::nullopt);
/// (2 (1 + cos t) cos t, 2 (1 + cos t) sin t) on [0, 10].
ParametricCurve cardioid(std::optional<Interval> domain = std::nullopt);
/// Archimedean spiral (t cos t, t sin t) on [0, 14].
ParametricCurve spiral(std::optional<Interval> domain = std::nullopt);
/// Lemniscate of Gerono (cos t, sin t cos t) on [0, 2 pi]; zero set x^4 = x^2 - y^2.
ParametricCurve gerono(std::optional<Interval> domain = std::nullopt);

/// Builtin lookup by name: circle, ellipse, cardioid_c3, spiral_c4, gerono.
std::optional<ParametricCurve> by_name(std::string_view name, std::optional<Interval> domain = std::nullopt);
std::vector<std::string> builtin_names();

/// Cubic Bezier with control points (0,0), (2,1), (0,2), (1,0).
BezierCurve c1();
/// Closed quartic Bezier with control points (1,5), (-3,-15), (2,20), (11,-5), (1,5).
BezierCurve c2();

}  // namespace curves

}  // namespace implicitize
