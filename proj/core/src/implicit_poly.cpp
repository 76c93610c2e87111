#include "implicitize/implicit_poly.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace implicitize {

namespace {

std::vector<double> powers(double v, int n) {
    std::vector<double> p(static_cast<std::size_t>(n) + 1, 1.0);
    for (int i = 1; i <= n; ++i) p[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i - 1)] * v;
    return p;
}

}  // namespace

MonomialBasis::MonomialBasis(int degree) : degree_(degree) {
    if (degree < 1) throw std::invalid_argument("MonomialBasis: degree must be >= 1, got " + std::to_string(degree));
    exponents_.reserve(static_cast<std::size_t>(basis_size(degree)));
    for (int d = 0; d <= degree; ++d)
        for (int b = 0; b <= d; ++b) exponents_.push_back({d - b, b});
}

int MonomialBasis::index_of(int a, int b) const {
    const int d = a + b;
    if (a < 0 || b < 0 || d > degree_) return -1;
    return d * (d + 1) / 2 + b;
}

Vector MonomialBasis::values(double x, double y) const {
    const auto px = powers(x, degree_);
    const auto py = powers(y, degree_);
    Vector v(size());
    for (int i = 0; i < size(); ++i) {
        const auto& e = exponents_[static_cast<std::size_t>(i)];
        v[i] = px[static_cast<std::size_t>(e.x_power)] * py[static_cast<std::size_t>(e.y_power)];
    }
    return v;
}

std::pair<Vector, Vector> MonomialBasis::gradients(double x, double y) const {
    const auto px = powers(x, degree_);
    const auto py = powers(y, degree_);
    Vector gx = Vector::Zero(size());
    Vector gy = Vector::Zero(size());
    for (int i = 0; i < size(); ++i) {
        const auto [a, b] = exponents_[static_cast<std::size_t>(i)];
        if (a > 0) gx[i] = a * px[static_cast<std::size_t>(a - 1)] * py[static_cast<std::size_t>(b)];
        if (b > 0) gy[i] = b * px[static_cast<std::size_t>(a)] * py[static_cast<std::size_t>(b - 1)];
    }
    return {gx, gy};
}

MonomialBasis basis_exponents(int n) { return MonomialBasis(n); }

ImplicitCurve::ImplicitCurve(MonomialBasis basis, Vector coeffs)
    : basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != basis_.size())
        throw std::invalid_argument("ImplicitCurve: expected " + std::to_string(basis_.size()) +
                                    " coefficients, got " + std::to_string(coeffs_.size()));
}

double ImplicitCurve::operator()(double x, double y) const { return basis_.values(x, y).dot(coeffs_); }

std::pair<double, double> ImplicitCurve::gradient(double x, double y) const {
    const auto [gx, gy] = basis_.gradients(x, y);
    return {gx.dot(coeffs_), gy.dot(coeffs_)};
}

Vector canonicalize(const Vector& b) {
    const double norm = b.norm();
    if (!(norm > 0.0)) throw std::invalid_argument("canonicalize: zero coefficient vector");
    Vector out = std::abs(norm - 1.0) <= 8 * std::numeric_limits<double>::epsilon() ? b : Vector(b / norm);
    const double cut = 1e-12 * out.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < out.size(); ++i) {
        if (std::abs(out[i]) > cut) {
            if (out[i] < 0.0) out = -out;
            break;
        }
    }
    return out;
}

ImplicitCurve canonicalize(const ImplicitCurve& c) { return ImplicitCurve(c.basis(), canonicalize(c.coeffs())); }

ImplicitCurve pull_back(const ImplicitCurve& c, const Similarity& frame) {
    if (frame.is_identity()) return c;
    const MonomialBasis& basis = c.basis();
    const double inv = 1.0 / frame.scale;
    const double ox = -frame.center_x * inv;
    const double oy = -frame.center_y * inv;
    // ((x - cx)/s)^a = sum_i C(a,i) (x/s)^i (-cx/s)^(a-i)
    Vector out = Vector::Zero(basis.size());
    for (int k = 0; k < basis.size(); ++k) {
        const auto [a, b] = basis[k];
        const double bk = c.coeffs()[k];
        if (bk == 0.0) continue;
        for (int i = 0; i <= a; ++i) {
            const double cx = binomial(a, i) * std::pow(inv, i) * std::pow(ox, a - i);
            for (int j = 0; j <= b; ++j) {
                const double cy = binomial(b, j) * std::pow(inv, j) * std::pow(oy, b - j);
                out[basis.index_of(i, j)] += bk * cx * cy;
            }
        }
    }
    return ImplicitCurve(basis, std::move(out));
}

}  // namespace implicitize
