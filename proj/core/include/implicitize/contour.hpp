#pragma once

#include <functional>
#include <vector>

#include "implicitize/bezier_curve.hpp"
#include "implicitize/implicit_poly.hpp"

namespace implicitize {

struct Box {
    double xmin = -1.0;
    double ymin = -1.0;
    double xmax = 1.0;
    double ymax = 1.0;

    double width() const { return xmax - xmin; }
    double height() const { return ymax - ymin; }

    /// Smallest box containing the points, each side grown by `fraction` of the
    /// extent. A degenerate extent borrows the other axis (or 1 if both vanish).
    static Box around(const std::vector<Point2>& points, double fraction);
};

struct Segment {
    Point2 a;
    Point2 b;
};

using Polyline = std::vector<Point2>;

struct ContourMesh {
    int resolution = 0;
    Box box;
    std::vector<Segment> segments;
    /// Segments chained into connected components; a closed component repeats
    /// its first point at the end.
    std::vector<Polyline> components;

    double cell_diagonal() const;
};

/// Zero set of `f` on a resolution x resolution cell grid over `box`, by
/// 16-case marching squares with linear edge interpolation. Saddle cells are
/// resolved by the sign at the cell center. Nodes with f >= 0 count as positive.
/// Throws std::invalid_argument for resolution < 2 or an empty box.
ContourMesh marching_squares(const std::function<double(double, double)>& f, const Box& box, int resolution);
ContourMesh marching_squares(const ImplicitCurve& c, const Box& box, int resolution);

}  // namespace implicitize
