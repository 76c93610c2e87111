#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

namespace implicitize {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Binomial coefficient C(n, k) from a floating-point Pascal triangle.
/// Exact for n <= 56; returns 0 for k < 0 or k > n.
double binomial(int n, int k);

/// Univariate polynomial in the Bernstein basis B_{i,p}(t), i = 0..p, on [0,1].
class BernsteinPoly {
public:
    /// Constant zero of degree 0.
    BernsteinPoly();
    /// Degree is coeffs.size() - 1. Throws std::invalid_argument on empty input.
    explicit BernsteinPoly(std::vector<double> coeffs);

    static BernsteinPoly constant(double value, int degree = 0);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::span<const double> coeffs() const { return coeffs_; }
    double operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }

    /// de Casteljau evaluation; intended for t in [0,1].
    double operator()(double t) const;

    BernsteinPoly& operator+=(const BernsteinPoly& other);
    BernsteinPoly& operator*=(double s);

private:
    std::vector<double> coeffs_;
};

/// Sum of two polynomials; the lower-degree operand is elevated first.
BernsteinPoly operator+(const BernsteinPoly& a, const BernsteinPoly& b);
BernsteinPoly operator*(double s, BernsteinPoly a);

/// Product in the degree deg(a)+deg(b) basis.
BernsteinPoly multiply(const BernsteinPoly& a, const BernsteinPoly& b);

/// Degree elevation preserving values. Throws if target < deg(a).
BernsteinPoly elevate(const BernsteinPoly& a, int target_degree);

/// Derivative in the degree p-1 basis. Throws on degree-0 input.
BernsteinPoly derivative(const BernsteinPoly& a);

/// Integer power a^e, e >= 0 (a^0 is the degree-0 constant 1).
BernsteinPoly power(const BernsteinPoly& a, int e);

/// Gram matrix G(i,j) = \int_0^1 B_{i,p} B_{j,p} dt in closed form.
Matrix gram(int p);

/// Converts power-basis coefficients (a_0 + a_1 t + ...) to Bernstein form of
/// the same degree.
BernsteinPoly power_to_bernstein(std::span<const double> monomial_coeffs);

/// Power-basis coefficients of q(s) = p(offset + scale * s).
std::vector<double> affine_substitute(std::span<const double> monomial_coeffs,
                                      double offset, double scale);

}  // namespace implicitize
