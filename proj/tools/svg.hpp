#pragma once

#include <string>
#include <vector>

#include "implicitize/contour.hpp"

namespace implicitize::cli {

struct SvgScene {
    Box box;
    /// Input curve, drawn dashed.
    Polyline input_curve;
    /// Sample points, drawn as dots.
    std::vector<Point2> samples;
    ContourMesh contour;
    /// Contour stroke color.
    std::string contour_color = "#d62728";
};

/// One <path> per input curve and per contour component.
std::string render_svg(const SvgScene& scene, int width_px = 600);

}  // namespace implicitize::cli
