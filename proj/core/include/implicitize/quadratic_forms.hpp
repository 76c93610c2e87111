#pragma once

#include "implicitize/bernstein.hpp"

namespace implicitize {

/// Collocation matrices and the quadratic forms L_AD = b'A1b, L_WG = b'A2b,
/// plus the combined objective matrix a = a1 + lambda * a2.
struct QuadraticForms {
    int degree = 0;
    double lambda = 0.0;
    Matrix d1;
    Matrix d2;
    Matrix a1;
    Matrix a2;
    Matrix a;
};

/// (m + m') / 2
inline Matrix symmetrized(const Matrix& m) { return 0.5 * (m + m.transpose()); }

}  // namespace implicitize
