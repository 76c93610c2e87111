#include "implicitize/contour.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace implicitize {

Box Box::around(const std::vector<Point2>& points, double fraction) {
    if (points.empty()) return {};
    Point2 lo = points.front();
    Point2 hi = points.front();
    for (const auto& p : points) {
        lo = lo.cwiseMin(p);
        hi = hi.cwiseMax(p);
    }
    double w = hi.x() - lo.x();
    double h = hi.y() - lo.y();
    if (!(w > 0.0) && !(h > 0.0)) w = h = 1.0;
    if (!(w > 0.0)) w = h;
    if (!(h > 0.0)) h = w;
    const double cx = 0.5 * (lo.x() + hi.x());
    const double cy = 0.5 * (lo.y() + hi.y());
    const double hw = 0.5 * w + fraction * w;
    const double hh = 0.5 * h + fraction * h;
    return {cx - hw, cy - hh, cx + hw, cy + hh};
}

double ContourMesh::cell_diagonal() const {
    return std::hypot(box.width() / resolution, box.height() / resolution);
}

namespace {

// Edge identifiers: horizontal edge from node (i,j) to (i+1,j) and vertical
// edge from (i,j) to (i,j+1). Both cells sharing an edge compute the same point.
struct EdgeKey {
    int i;
    int j;
    bool vertical;
    auto operator<=>(const EdgeKey&) const = default;
};

struct Grid {
    const Box& box;
    int res;
    std::vector<double> values;

    double x(int i) const { return i == res ? box.xmax : box.xmin + box.width() * i / res; }
    double y(int j) const { return j == res ? box.ymax : box.ymin + box.height() * j / res; }
    double at(int i, int j) const { return values[static_cast<std::size_t>(j * (res + 1) + i)]; }

    Point2 edge_point(const EdgeKey& e) const {
        const int i2 = e.vertical ? e.i : e.i + 1;
        const int j2 = e.vertical ? e.j + 1 : e.j;
        const double f0 = at(e.i, e.j);
        const double f1 = at(i2, j2);
        const double t = f0 / (f0 - f1);
        const double px = x(e.i) + t * (x(i2) - x(e.i));
        const double py = y(e.j) + t * (y(j2) - y(e.j));
        return {px, py};
    }
};

}  // namespace

ContourMesh marching_squares(const std::function<double(double, double)>& f, const Box& box, int resolution) {
    if (resolution < 2) throw std::invalid_argument("marching_squares: resolution must be >= 2");
    if (!(box.width() > 0.0) || !(box.height() > 0.0)) throw std::invalid_argument("marching_squares: empty box");

    Grid grid{box, resolution, {}};
    grid.values.resize(static_cast<std::size_t>((resolution + 1) * (resolution + 1)));
    for (int j = 0; j <= resolution; ++j)
        for (int i = 0; i <= resolution; ++i)
            grid.values[static_cast<std::size_t>(j * (resolution + 1) + i)] = f(grid.x(i), grid.y(j));

    std::vector<std::pair<EdgeKey, EdgeKey>> links;
    for (int j = 0; j < resolution; ++j) {
        for (int i = 0; i < resolution; ++i) {
            // Corners counter-clockwise from bottom-left.
            const bool s0 = grid.at(i, j) >= 0.0;
            const bool s1 = grid.at(i + 1, j) >= 0.0;
            const bool s2 = grid.at(i + 1, j + 1) >= 0.0;
            const bool s3 = grid.at(i, j + 1) >= 0.0;
            const int index = (s0 ? 1 : 0) | (s1 ? 2 : 0) | (s2 ? 4 : 0) | (s3 ? 8 : 0);
            if (index == 0 || index == 15) continue;

            const EdgeKey bottom{i, j, false};
            const EdgeKey right{i + 1, j, true};
            const EdgeKey top{i, j + 1, false};
            const EdgeKey left{i, j, true};

            switch (index) {
            case 1: case 14: links.emplace_back(left, bottom); break;
            case 2: case 13: links.emplace_back(bottom, right); break;
            case 3: case 12: links.emplace_back(left, right); break;
            case 4: case 11: links.emplace_back(right, top); break;
            case 6: case 9: links.emplace_back(bottom, top); break;
            case 7: case 8: links.emplace_back(left, top); break;
            case 5: case 10: {
                const double xc = 0.5 * (grid.x(i) + grid.x(i + 1));
                const double yc = 0.5 * (grid.y(j) + grid.y(j + 1));
                const bool center = f(xc, yc) >= 0.0;
                // Connect the corners that share the center's sign.
                const bool join_02 = (index == 5) == center;
                if (join_02) {
                    links.emplace_back(left, top);
                    links.emplace_back(bottom, right);
                } else {
                    links.emplace_back(left, bottom);
                    links.emplace_back(right, top);
                }
                break;
            }
            default: break;
            }
        }
    }

    ContourMesh mesh;
    mesh.resolution = resolution;
    mesh.box = box;
    mesh.segments.reserve(links.size());

    std::map<EdgeKey, Point2> points;
    std::map<EdgeKey, std::vector<std::size_t>> incident;
    for (std::size_t s = 0; s < links.size(); ++s) {
        for (const EdgeKey& e : {links[s].first, links[s].second}) {
            if (!points.contains(e)) points.emplace(e, grid.edge_point(e));
            incident[e].push_back(s);
        }
        mesh.segments.push_back({points.at(links[s].first), points.at(links[s].second)});
    }

    // Chain segments through shared edge points. Each edge point touches at most
    // two segments, one per adjacent cell.
    std::vector<bool> used(links.size(), false);
    auto other_segment = [&](const EdgeKey& e, std::size_t from) -> std::ptrdiff_t {
        for (std::size_t s : incident.at(e))
            if (s != from && !used[s]) return static_cast<std::ptrdiff_t>(s);
        return -1;
    };
    auto extend = [&](std::vector<EdgeKey>& chain, std::size_t seg) {
        for (;;) {
            const EdgeKey tail = chain.back();
            const std::ptrdiff_t next = other_segment(tail, seg);
            if (next < 0) return;
            seg = static_cast<std::size_t>(next);
            used[seg] = true;
            chain.push_back(links[seg].first == tail ? links[seg].second : links[seg].first);
        }
    };
    for (std::size_t s = 0; s < links.size(); ++s) {
        if (used[s]) continue;
        used[s] = true;
        std::vector<EdgeKey> forward{links[s].first, links[s].second};
        extend(forward, s);
        std::vector<EdgeKey> backward{links[s].first};
        if (forward.back() != forward.front()) extend(backward, s);
        Polyline line;
        line.reserve(forward.size() + backward.size());
        for (auto it = backward.rbegin(); it + 1 != backward.rend(); ++it) line.push_back(points.at(*it));
        for (const EdgeKey& e : forward) line.push_back(points.at(e));
        mesh.components.push_back(std::move(line));
    }
    return mesh;
}

ContourMesh marching_squares(const ImplicitCurve& c, const Box& box, int resolution) {
    return marching_squares([&c](double x, double y) { return c(x, y); }, box, resolution);
}

}  // namespace implicitize
