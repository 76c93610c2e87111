#include <gtest/gtest.h>

#include <algorithm>
#include <string>

#include "geometry.hpp"
#include "implicitize/adaptive.hpp"
#include "implicitize/contour.hpp"

using namespace implicitize;
using namespace implicitize::testing;

namespace {

std::size_t component_points(const ContourMesh& m) {
    std::size_t n = 0;
    for (const auto& c : m.components) n += c.size();
    return n;
}

}  // namespace

TEST(MarchingSquares, UnitCircle) {
    const ImplicitCurve circle(MonomialBasis(2), (Vector(6) << -1, 0, 0, 1, 0, 1).finished());
    const Box box{-2, -2, 2, 2};
    const auto mesh = marching_squares(circle, box, 200);
    ASSERT_FALSE(mesh.segments.empty());
    EXPECT_NEAR(mesh.cell_diagonal(), std::sqrt(2.0) * 0.02, 1e-15);
    for (const auto& s : mesh.segments) {
        EXPECT_LE(std::abs(s.a.norm() - 1.0), mesh.cell_diagonal());
        EXPECT_LE(std::abs(s.b.norm() - 1.0), mesh.cell_diagonal());
    }
    ASSERT_EQ(mesh.components.size(), 1u);
    const auto& loop = mesh.components.front();
    EXPECT_EQ(loop.front(), loop.back());
    EXPECT_EQ(loop.size(), mesh.segments.size() + 1);
}

TEST(MarchingSquares, LineIsInterpolatedExactly) {
    const auto f = [](double x, double y) { return x - y; };
    for (const Box& box : {Box{-1, -1, 1, 1}, Box{-3.7, 0.2, 5.1, 9.3}, Box{100, 90, 130, 140}}) {
        const auto mesh = marching_squares(f, box, 37);
        ASSERT_FALSE(mesh.segments.empty());
        const double scale = std::max({std::abs(box.xmin), std::abs(box.xmax), std::abs(box.ymin), std::abs(box.ymax)});
        for (const auto& s : mesh.segments) {
            EXPECT_LE(std::abs(s.a.x() - s.a.y()), 1e-9 * scale);
            EXPECT_LE(std::abs(s.b.x() - s.b.y()), 1e-9 * scale);
        }
        EXPECT_EQ(mesh.components.size(), 1u);
    }
}

namespace {

// Edges touched by segments inside the cell [0, 0.5]^2: 'b'ottom, 'l'eft,
// 'r'ight, 't'op, each pair sorted.
std::vector<std::string> saddle_cell_edges(double c) {
    const auto f = [c](double x, double y) { return (x - 0.25) * (y - 0.25) + c; };
    const auto mesh = marching_squares(f, Box{0, 0, 1, 1}, 2);
    const auto edge = [](const Point2& p) {
        if (p.y() == 0.0) return 'b';
        if (p.x() == 0.0) return 'l';
        if (p.x() == 0.5) return 'r';
        if (p.y() == 0.5) return 't';
        return '?';
    };
    std::vector<std::string> out;
    for (const auto& s : mesh.segments) {
        if (s.a.x() > 0.5 || s.b.x() > 0.5 || s.a.y() > 0.5 || s.b.y() > 0.5) continue;
        std::string e{edge(s.a), edge(s.b)};
        std::sort(e.begin(), e.end());
        out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST(MarchingSquares, SaddleUsesCellCenter) {
    // Corners alternate in sign; the center takes the sign of c.
    EXPECT_EQ(saddle_cell_edges(0.01), (std::vector<std::string>{"br", "lt"}));
    EXPECT_EQ(saddle_cell_edges(-0.01), (std::vector<std::string>{"bl", "rt"}));
}

TEST(MarchingSquares, SeparateComponents) {
    const auto two = [](double x, double y) {
        const double a = (x - 1) * (x - 1) + y * y - 0.25;
        const double b = (x + 1) * (x + 1) + y * y - 0.25;
        return a * b;
    };
    const auto mesh = marching_squares(two, Box{-2.05, -1.05, 2.05, 1.05}, 120);
    EXPECT_EQ(mesh.components.size(), 2u);
    EXPECT_EQ(component_points(mesh), mesh.segments.size() + 2);
}

TEST(MarchingSquares, NoZeroSet) {
    const auto mesh = marching_squares([](double, double) { return 1.0; }, Box{}, 10);
    EXPECT_TRUE(mesh.segments.empty());
    EXPECT_TRUE(mesh.components.empty());
}

TEST(MarchingSquares, RejectsBadInput) {
    const auto f = [](double x, double) { return x; };
    EXPECT_THROW(marching_squares(f, Box{}, 1), std::invalid_argument);
    EXPECT_THROW(marching_squares(f, Box{0, 0, 0, 1}, 10), std::invalid_argument);
    EXPECT_THROW(marching_squares(f, Box{0, 1, 1, 0}, 10), std::invalid_argument);
}

TEST(MarchingSquares, CardioidFitPassesThroughSamples) {
    const auto samples = sample_uniform(curves::cardioid(), 10);
    const auto fit = fit_at_degree(samples, 4, FitConfig::discrete_defaults(10));
    const Box box = Box::around(samples.points, 0.1);
    const auto mesh = marching_squares(fit.curve, box, 400);
    for (const auto& p : samples.points) EXPECT_LE(distance_to_contour(p, mesh), mesh.cell_diagonal());
}

TEST(Box, AroundPadsAndHandlesDegenerateExtent) {
    const Box b = Box::around({{0, 0}, {2, 1}}, 0.1);
    EXPECT_DOUBLE_EQ(b.xmin, -0.2);
    EXPECT_DOUBLE_EQ(b.xmax, 2.2);
    EXPECT_DOUBLE_EQ(b.ymin, -0.1);
    EXPECT_DOUBLE_EQ(b.ymax, 1.1);
    const Box flat = Box::around({{0, 1}, {4, 1}}, 0.1);
    EXPECT_GT(flat.height(), 0.0);
    const Box point = Box::around({{3, 3}}, 0.1);
    EXPECT_GT(point.width(), 0.0);
    EXPECT_GT(point.height(), 0.0);
}
