#include "svg.hpp"

#include <cmath>
#include <cstdio>

namespace implicitize::cli {

namespace {

struct Viewport {
    Box box;
    double sx;
    double sy;
    double margin;

    double px(double x) const { return margin + (x - box.xmin) * sx; }
    double py(double y) const { return margin + (box.ymax - y) * sy; }
};

std::string path_data(const Polyline& line, const Viewport& vp) {
    std::string d;
    char buf[64];
    for (std::size_t i = 0; i < line.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%s%.3f %.3f", i == 0 ? "M" : " L", vp.px(line[i].x()), vp.py(line[i].y()));
        d += buf;
    }
    return d;
}

}  // namespace

std::string render_svg(const SvgScene& scene, int width_px) {
    const double margin = 10.0;
    const double inner_w = width_px - 2.0 * margin;
    const double scale = inner_w / scene.box.width();
    const double inner_h = scene.box.height() * scale;
    const Viewport vp{scene.box, scale, scale, margin};
    const double width = width_px;
    const double height = std::ceil(inner_h + 2.0 * margin);

    std::string out;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n",
                  width, height, width, height);
    out += buf;
    out += "<rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    if (scene.input_curve.size() >= 2) {
        out += "<path class=\"input\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\" d=\"";
        out += path_data(scene.input_curve, vp);
        out += "\"/>\n";
    }
    for (const Polyline& line : scene.contour.components) {
        if (line.size() < 2) continue;
        out += "<path class=\"contour\" fill=\"none\" stroke=\"" + scene.contour_color + "\" stroke-width=\"1.5\" d=\"";
        out += path_data(line, vp);
        out += "\"/>\n";
    }
    for (const Point2& p : scene.samples) {
        std::snprintf(buf, sizeof buf, "<circle class=\"sample\" cx=\"%.3f\" cy=\"%.3f\" r=\"3\" fill=\"#1f77b4\"/>\n",
                      vp.px(p.x()), vp.py(p.y()));
        out += buf;
    }
    out += "</svg>\n";
    return out;
}

}  // namespace implicitize::cli
