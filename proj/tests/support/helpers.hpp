#pragma once

#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "implicitize/implicit_poly.hpp"

namespace implicitize::testing {

inline Eigen::VectorXd random_unit(int k, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    Eigen::VectorXd v(k);
    for (int i = 0; i < k; ++i) v[i] = g(rng);
    return v.normalized();
}

/// Haar-ish random orthogonal matrix from the QR of a Gaussian matrix.
inline Eigen::MatrixXd random_orthogonal(int k, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    Eigen::MatrixXd m(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m(i, j) = g(rng);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
    return qr.householderQ() * Eigen::MatrixXd::Identity(k, k);
}

/// f_b(x, y) by direct per-monomial summation with std::pow.
inline double direct_eval(const std::vector<Exponent>& exps, const Eigen::VectorXd& b, double x, double y) {
    double s = 0.0;
    for (std::size_t i = 0; i < exps.size(); ++i)
        s += b[static_cast<Eigen::Index>(i)] * std::pow(x, exps[i].x_power) * std::pow(y, exps[i].y_power);
    return s;
}

inline double direct_dfdx(const std::vector<Exponent>& exps, const Eigen::VectorXd& b, double x, double y) {
    double s = 0.0;
    for (std::size_t i = 0; i < exps.size(); ++i)
        if (exps[i].x_power > 0)
            s += b[static_cast<Eigen::Index>(i)] * exps[i].x_power * std::pow(x, exps[i].x_power - 1) *
                 std::pow(y, exps[i].y_power);
    return s;
}

inline double direct_dfdy(const std::vector<Exponent>& exps, const Eigen::VectorXd& b, double x, double y) {
    double s = 0.0;
    for (std::size_t i = 0; i < exps.size(); ++i)
        if (exps[i].y_power > 0)
            s += b[static_cast<Eigen::Index>(i)] * exps[i].y_power * std::pow(x, exps[i].x_power) *
                 std::pow(y, exps[i].y_power - 1);
    return s;
}

inline double rel_err(double got, double want) {
    const double denom = std::max(std::abs(want), 1e-300);
    return std::abs(got - want) / denom;
}

/// Exact quartic of the cardioid r = 2 + 2 cos(theta):
/// (x^2 + y^2 - 2x)^2 - 4 (x^2 + y^2), in graded-lex order for n = 4.
inline Eigen::VectorXd cardioid_quartic() {
    // Expand: (x^2+y^2)^2 - 4x(x^2+y^2) + 4x^2 - 4x^2 - 4y^2
    //       = x^4 + 2x^2y^2 + y^4 - 4x^3 - 4xy^2 - 4y^2
    const MonomialBasis basis(4);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(basis.size());
    b[basis.index_of(4, 0)] = 1.0;
    b[basis.index_of(2, 2)] = 2.0;
    b[basis.index_of(0, 4)] = 1.0;
    b[basis.index_of(3, 0)] = -4.0;
    b[basis.index_of(1, 2)] = -4.0;
    b[basis.index_of(0, 2)] = -4.0;
    return b;
}

}  // namespace implicitize::testing
