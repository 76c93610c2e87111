#include "implicitize/parametric.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace implicitize {

SampledCurve SampledCurve::transformed(const Similarity& frame) const {
    SampledCurve out = *this;
    for (auto& p : out.points) p = Point2((p.x() - frame.center_x) / frame.scale, (p.y() - frame.center_y) / frame.scale);
    for (auto& v : out.tangents) v /= frame.scale;
    return out;
}

SampledCurve SampledCurve::with_unit_tangents() const {
    SampledCurve out = *this;
    for (auto& v : out.tangents) {
        const double len = v.norm();
        if (len > 0.0) v /= len;
    }
    return out;
}

SampledCurve sample_uniform(const ParametricCurve& curve, int count) {
    if (count < 2) throw std::invalid_argument("sample_uniform: need at least 2 samples, got " + std::to_string(count));
    SampledCurve s;
    s.params.reserve(static_cast<std::size_t>(count));
    s.points.reserve(static_cast<std::size_t>(count));
    s.tangents.reserve(static_cast<std::size_t>(count));
    const double lo = curve.domain.lo;
    const double step = curve.domain.length() / (count - 1);
    for (int j = 0; j < count; ++j) {
        const double t = j + 1 == count ? curve.domain.hi : lo + j * step;
        const Point2 p = curve.position(t);
        const Point2 v = curve.velocity(t);
        if (!p.allFinite() || !v.allFinite()) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "sample_uniform: non-finite curve evaluation at t = " << t;
            throw std::domain_error(msg.str());
        }
        s.params.push_back(t);
        s.points.push_back(p);
        s.tangents.push_back(v);
    }
    return s;
}

ParametricCurve as_parametric(const BezierCurve& curve) {
    return {"bezier", [curve](double t) { return curve.position(t); },
            [curve](double t) { return curve.velocity(t); }, curve.domain()};
}

namespace curves {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

}  // namespace

ParametricCurve circle(std::optional<Interval> domain) {
    return {"circle", [](double t) { return Point2(std::cos(t), std::sin(t)); },
            [](double t) { return Point2(-std::sin(t), std::cos(t)); }, domain.value_or(Interval{0.0, two_pi})};
}

ParametricCurve ellipse(std::optional<Interval> domain) {
    return {"ellipse", [](double t) { return Point2(2.0 * std::cos(t), std::sin(t)); },
            [](double t) { return Point2(-2.0 * std::sin(t), std::cos(t)); }, domain.value_or(Interval{0.0, two_pi})};
}

ParametricCurve cardioid(std::optional<Interval> domain) {
    return {"cardioid_c3",
            [](double t) {
                const double r = 2.0 * (1.0 + std::cos(t));
                return Point2(r * std::cos(t), r * std::sin(t));
            },
            [](double t) {
                const double c = std::cos(t);
                const double s = std::sin(t);
                const double r = 2.0 * (1.0 + c);
                const double dr = -2.0 * s;
                return Point2(dr * c - r * s, dr * s + r * c);
            },
            domain.value_or(Interval{0.0, 10.0})};
}

ParametricCurve spiral(std::optional<Interval> domain) {
    return {"spiral_c4", [](double t) { return Point2(t * std::cos(t), t * std::sin(t)); },
            [](double t) {
                const double c = std::cos(t);
                const double s = std::sin(t);
                return Point2(c - t * s, s + t * c);
            },
            domain.value_or(Interval{0.0, 14.0})};
}

ParametricCurve gerono(std::optional<Interval> domain) {
    return {"gerono", [](double t) { return Point2(std::cos(t), std::sin(t) * std::cos(t)); },
            [](double t) { return Point2(-std::sin(t), std::cos(2.0 * t)); }, domain.value_or(Interval{0.0, two_pi})};
}

std::optional<ParametricCurve> by_name(std::string_view name, std::optional<Interval> domain) {
    if (name == "circle") return circle(domain);
    if (name == "ellipse") return ellipse(domain);
    if (name == "cardioid_c3") return cardioid(domain);
    if (name == "spiral_c4") return spiral(domain);
    if (name == "gerono") return gerono(domain);
    return std::nullopt;
}

std::vector<std::string> builtin_names() { return {"cardioid_c3", "circle", "ellipse", "gerono", "spiral_c4"}; }

BezierCurve c1() { return BezierCurve({{0, 0}, {2, 1}, {0, 2}, {1, 0}}); }

BezierCurve c2() { return BezierCurve({{1, 5}, {-3, -15}, {2, 20}, {11, -5}, {1, 5}}); }

}  // namespace curves

}  // namespace implicitize
