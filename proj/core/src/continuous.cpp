#include "implicitize/continuous.hpp"

#include <stdexcept>
#include <string>

namespace implicitize {

namespace {

void require_degree(int n) {
    if (n < 1) throw std::invalid_argument("implicit degree must be >= 1, got " + std::to_string(n));
}

// x^0..x^n and y^0..y^n in Bernstein form, computed once per assembly.
struct CoordinatePowers {
    std::vector<BernsteinPoly> x;
    std::vector<BernsteinPoly> y;

    CoordinatePowers(const BezierCurve& curve, int n) {
        x.push_back(BernsteinPoly::constant(1.0));
        y.push_back(BernsteinPoly::constant(1.0));
        for (int i = 1; i <= n; ++i) {
            x.push_back(multiply(x.back(), curve.x()));
            y.push_back(multiply(y.back(), curve.y()));
        }
    }
};

void set_column(Matrix& m, int col, const BernsteinPoly& p) {
    for (int r = 0; r <= p.degree(); ++r) m(r, col) = p[r];
}

}  // namespace

BernsteinPoly compose_monomial(const BezierCurve& curve, int a, int b, int target_degree) {
    if (a < 0 || b < 0) throw std::invalid_argument("compose_monomial: negative exponent");
    const int natural = curve.degree() * (a + b);
    if (target_degree < natural)
        throw std::invalid_argument("compose_monomial: target degree " + std::to_string(target_degree) +
                                    " below " + std::to_string(natural));
    return elevate(multiply(power(curve.x(), a), power(curve.y(), b)), target_degree);
}

Matrix build_d1(const BezierCurve& curve, int n) {
    require_degree(n);
    const MonomialBasis basis(n);
    const int d = curve.degree() * n;
    const CoordinatePowers pw(curve, n);
    Matrix d1(d + 1, basis.size());
    for (int i = 0; i < basis.size(); ++i) {
        const auto [a, b] = basis[i];
        set_column(d1, i, elevate(multiply(pw.x[static_cast<std::size_t>(a)], pw.y[static_cast<std::size_t>(b)]), d));
    }
    return d1;
}

Matrix build_d2(const BezierCurve& curve, int n) {
    require_degree(n);
    const MonomialBasis basis(n);
    const int d = curve.degree() * n;
    const CoordinatePowers pw(curve, n);
    const double jacobian = 1.0 / curve.domain().length();
    const BernsteinPoly dx = jacobian * derivative(curve.x());
    const BernsteinPoly dy = jacobian * derivative(curve.y());
    Matrix d2 = Matrix::Zero(d + 1, basis.size());
    for (int i = 0; i < basis.size(); ++i) {
        const auto [a, b] = basis[i];
        if (a + b == 0) continue;
        // a x^(a-1) y^b x' + b x^a y^(b-1) y'
        BernsteinPoly col = BernsteinPoly::constant(0.0, d);
        const auto ua = static_cast<std::size_t>(a);
        const auto ub = static_cast<std::size_t>(b);
        if (a > 0) col += static_cast<double>(a) * multiply(multiply(pw.x[ua - 1], pw.y[ub]), dx);
        if (b > 0) col += static_cast<double>(b) * multiply(multiply(pw.x[ua], pw.y[ub - 1]), dy);
        set_column(d2, i, elevate(col, d));
    }
    return d2;
}

Matrix domain_gram(const BezierCurve& curve, int p) { return curve.domain().length() * gram(p); }

QuadraticForms assemble(const BezierCurve& curve, int n, double lambda) {
    if (!(lambda >= 0.0)) throw std::invalid_argument("assemble: lambda must be >= 0");
    QuadraticForms q;
    q.degree = n;
    q.lambda = lambda;
    q.d1 = build_d1(curve, n);
    q.d2 = build_d2(curve, n);
    const Matrix g = domain_gram(curve, curve.degree() * n);
    q.a1 = symmetrized(q.d1.transpose() * g * q.d1);
    q.a2 = symmetrized(q.d2.transpose() * g * q.d2);
    q.a = symmetrized(q.a1 + lambda * q.a2);
    return q;
}

}  // namespace implicitize
