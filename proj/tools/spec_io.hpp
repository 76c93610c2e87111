#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "implicitize/adaptive.hpp"
#include "implicitize/parametric.hpp"

namespace implicitize::cli {

/// Invalid curve spec or option value.
class SpecError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Curve description read from JSON.
///
///   {"kind":"bezier","degree":3,"control_points":[[0,0],[2,1],[0,2],[1,0]],"domain":[0,1]}
///   {"kind":"named","name":"cardioid_c3","domain":[0,10]}
///   {"kind":"power","coefficients":[[0,0],[1,0],[0,1]],"domain":[0,1]}
///
/// Power coefficients list (x_i, y_i) for t^i.
struct CurveSpec {
    enum class Kind { bezier, named, power };

    Kind kind = Kind::bezier;
    int degree = 0;
    std::vector<Point2> control_points;
    std::vector<Point2> coefficients;
    std::string name;
    std::optional<Interval> domain;

    bool is_polynomial() const { return kind != Kind::named; }

    BezierCurve bezier() const;
    ParametricCurve parametric() const;

    friend bool operator==(const CurveSpec&, const CurveSpec&) = default;
};

/// Throws SpecError on malformed JSON, unknown kinds or fields, count/degree
/// mismatches and empty domains.
CurveSpec parse_spec(std::string_view json_text);

std::string to_json_text(const CurveSpec& spec);

}  // namespace implicitize::cli
