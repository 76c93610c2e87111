#pragma once

#include <span>
#include <vector>

#include "implicitize/bernstein.hpp"
#include "implicitize/implicit_poly.hpp"

namespace implicitize {

using Point2 = Eigen::Vector2d;

struct Interval {
    double lo = 0.0;
    double hi = 1.0;

    double length() const { return hi - lo; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Planar polynomial curve p(t) = sum_i P_i B_{i,m}(s), s = (t - lo) / (hi - lo).
class BezierCurve {
public:
    /// Throws std::invalid_argument for fewer than two control points,
    /// non-finite coordinates, or an empty domain.
    explicit BezierCurve(std::vector<Point2> control_points, Interval domain = {});

    /// Curve given by power-basis coordinate polynomials in t over the domain.
    static BezierCurve from_power(std::span<const double> x_coeffs, std::span<const double> y_coeffs,
                                  Interval domain = {});

    int degree() const { return static_cast<int>(control_points_.size()) - 1; }
    const std::vector<Point2>& control_points() const { return control_points_; }
    const Interval& domain() const { return domain_; }

    /// Coordinate polynomials over the normalized parameter s in [0,1].
    const BernsteinPoly& x() const { return x_; }
    const BernsteinPoly& y() const { return y_; }

    /// Position and derivative with respect to the original parameter t.
    Point2 position(double t) const;
    Point2 velocity(double t) const;

    /// Image of the control net under a similarity transform.
    BezierCurve transformed(const Similarity& frame) const;

private:
    std::vector<Point2> control_points_;
    Interval domain_;
    BernsteinPoly x_;
    BernsteinPoly y_;
    BernsteinPoly dx_;
    BernsteinPoly dy_;
};

}  // namespace implicitize
