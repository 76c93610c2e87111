#pragma once

#include <utility>
#include <vector>

#include "implicitize/bernstein.hpp"

namespace implicitize {

/// Exponent pair of the monomial x^x_power * y^y_power.
struct Exponent {
    int x_power = 0;
    int y_power = 0;

    int total() const { return x_power + y_power; }
    friend bool operator==(const Exponent&, const Exponent&) = default;
};

/// Graded-lex ordered monomials of total degree <= n: ascending total degree,
/// then ascending power of y within a block (1, x, y, x^2, xy, y^2, ...).
class MonomialBasis {
public:
    /// Throws std::invalid_argument for n < 1.
    explicit MonomialBasis(int degree);

    int degree() const { return degree_; }
    int size() const { return static_cast<int>(exponents_.size()); }
    const std::vector<Exponent>& exponents() const { return exponents_; }
    const Exponent& operator[](int i) const { return exponents_[static_cast<std::size_t>(i)]; }

    /// Index of x^a y^b, or -1 if a+b exceeds the degree.
    int index_of(int a, int b) const;

    /// All monomial values at (x, y), in basis order.
    Vector values(double x, double y) const;
    /// Per-monomial partial derivatives at (x, y), in basis order.
    std::pair<Vector, Vector> gradients(double x, double y) const;

private:
    int degree_;
    std::vector<Exponent> exponents_;
};

/// Number of monomials of total degree <= n, C(n+2, 2).
inline int basis_size(int n) { return (n + 1) * (n + 2) / 2; }

MonomialBasis basis_exponents(int n);

/// Uniform scaling about a center: maps (x, y) to ((x - cx) / s, (y - cy) / s).
struct Similarity {
    double center_x = 0.0;
    double center_y = 0.0;
    double scale = 1.0;

    bool is_identity() const { return center_x == 0.0 && center_y == 0.0 && scale == 1.0; }
};

/// Bivariate polynomial f(x,y) = sum_i b_i phi_i(x,y) over a MonomialBasis.
class ImplicitCurve {
public:
    ImplicitCurve(MonomialBasis basis, Vector coeffs);

    int degree() const { return basis_.degree(); }
    const MonomialBasis& basis() const { return basis_; }
    const Vector& coeffs() const { return coeffs_; }

    double operator()(double x, double y) const;
    std::pair<double, double> gradient(double x, double y) const;

private:
    MonomialBasis basis_;
    Vector coeffs_;
};

inline double eval_implicit(const ImplicitCurve& c, double x, double y) { return c(x, y); }
inline std::pair<double, double> gradient_implicit(const ImplicitCurve& c, double x, double y) {
    return c.gradient(x, y);
}

/// Unit 2-norm with the first nonzero coefficient positive. Throws on the zero vector.
Vector canonicalize(const Vector& b);
ImplicitCurve canonicalize(const ImplicitCurve& c);

/// Coefficients of g(x,y) = f(frame(x,y)) in the same monomial basis, so that
/// a curve fitted in normalized coordinates can be expressed in the original ones.
ImplicitCurve pull_back(const ImplicitCurve& c, const Similarity& frame);

}  // namespace implicitize
