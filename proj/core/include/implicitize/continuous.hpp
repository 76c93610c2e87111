#pragma once

#include "implicitize/bezier_curve.hpp"
#include "implicitize/quadratic_forms.hpp"

namespace implicitize {

/// Bernstein coefficients of x(s)^a * y(s)^b elevated to target_degree.
/// Throws if target_degree < m * (a + b).
BernsteinPoly compose_monomial(const BezierCurve& curve, int a, int b, int target_degree);

/// (mn+1) x k matrix: column i holds phi_i(p(s)) in the degree-mn Bernstein basis.
Matrix build_d1(const BezierCurve& curve, int n);

/// (mn+1) x k matrix: column i holds grad phi_i(p(t)) . p'(t) in the degree-mn
/// Bernstein basis, with p' taken with respect to the curve's own parameter t.
Matrix build_d2(const BezierCurve& curve, int n);

/// Gram matrix of the degree-p Bernstein basis over the curve's domain [lo, hi]
/// (the [0,1] Gram matrix times hi - lo).
Matrix domain_gram(const BezierCurve& curve, int p);

/// A1 = D1' G D1, A2 = D2' G D2, A = A1 + lambda A2, each symmetrized.
/// lambda = 0 gives the plain algebraic-distance objective. Throws for lambda < 0.
QuadraticForms assemble(const BezierCurve& curve, int n, double lambda);

}  // namespace implicitize
