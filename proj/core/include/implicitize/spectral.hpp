#pragma once

#include <stdexcept>
#include <string>

#include "implicitize/bernstein.hpp"

namespace implicitize {

class SolverError : public std::runtime_error {
public:
    enum class Kind { invalid_input, asymmetric, no_convergence };

    SolverError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Full decomposition A = V diag(values) V', eigenvalues ascending.
struct SymmetricEigen {
    Vector values;
    Matrix vectors;
    int sweeps = 0;
};

/// Cyclic Jacobi rotations with Rutishauser's thresholding.
/// Throws SolverError on non-square, non-finite or asymmetric input, or when
/// max_sweeps is exhausted.
SymmetricEigen jacobi_eigen(const Matrix& a, int max_sweeps = 100);

struct EigenResult {
    double value = 0.0;
    /// Unit norm, first nonzero entry positive.
    Vector vector;
    /// ||A v - value v||_2
    double residual = 0.0;
    /// max |eigenvalue|
    double spectral_norm = 0.0;
    /// Eigenvalues <= 10 * tol * ||A||_2; values above one indicate several
    /// (near-)exact minimizers.
    int near_kernel_dim = 0;
};

inline constexpr double default_eigen_tol = 1e-12;

/// Smallest eigenvalue of a symmetric matrix and its canonical unit eigenvector:
/// the minimizer of v'Av subject to ||v|| = 1. Ties go to the lowest index after
/// an ascending stable sort, so repeated calls are deterministic.
EigenResult smallest_eigenpair(const Matrix& a, double tol = default_eigen_tol);

}  // namespace implicitize
