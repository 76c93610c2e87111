#include "implicitize/bezier_curve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace implicitize {

namespace {

BernsteinPoly coordinate(const std::vector<Point2>& pts, int axis) {
    std::vector<double> c;
    c.reserve(pts.size());
    for (const auto& p : pts) c.push_back(p[axis]);
    return BernsteinPoly(std::move(c));
}

}  // namespace

BezierCurve::BezierCurve(std::vector<Point2> control_points, Interval domain)
    : control_points_(std::move(control_points)), domain_(domain) {
    if (control_points_.size() < 2) throw std::invalid_argument("BezierCurve: need at least two control points");
    for (const auto& p : control_points_)
        if (!std::isfinite(p.x()) || !std::isfinite(p.y()))
            throw std::invalid_argument("BezierCurve: non-finite control point");
    if (!(domain_.hi > domain_.lo) || !std::isfinite(domain_.lo) || !std::isfinite(domain_.hi))
        throw std::invalid_argument("BezierCurve: empty or non-finite parameter domain");
    x_ = coordinate(control_points_, 0);
    y_ = coordinate(control_points_, 1);
    dx_ = derivative(x_);
    dy_ = derivative(y_);
}

BezierCurve BezierCurve::from_power(std::span<const double> x_coeffs, std::span<const double> y_coeffs,
                                    Interval domain) {
    const std::size_t len = std::max({x_coeffs.size(), y_coeffs.size(), std::size_t{2}});
    std::vector<double> xs(len, 0.0);
    std::vector<double> ys(len, 0.0);
    std::copy(x_coeffs.begin(), x_coeffs.end(), xs.begin());
    std::copy(y_coeffs.begin(), y_coeffs.end(), ys.begin());
    const auto bx = power_to_bernstein(affine_substitute(xs, domain.lo, domain.length()));
    const auto by = power_to_bernstein(affine_substitute(ys, domain.lo, domain.length()));
    std::vector<Point2> pts;
    pts.reserve(len);
    for (int i = 0; i <= bx.degree(); ++i) pts.emplace_back(bx[i], by[i]);
    return BezierCurve(std::move(pts), domain);
}

Point2 BezierCurve::position(double t) const {
    const double s = (t - domain_.lo) / domain_.length();
    return {x_(s), y_(s)};
}

Point2 BezierCurve::velocity(double t) const {
    const double s = (t - domain_.lo) / domain_.length();
    return Point2(dx_(s), dy_(s)) / domain_.length();
}

BezierCurve BezierCurve::transformed(const Similarity& frame) const {
    std::vector<Point2> pts;
    pts.reserve(control_points_.size());
    for (const auto& p : control_points_)
        pts.emplace_back((p.x() - frame.center_x) / frame.scale, (p.y() - frame.center_y) / frame.scale);
    return BezierCurve(std::move(pts), domain_);
}

}  // namespace implicitize
