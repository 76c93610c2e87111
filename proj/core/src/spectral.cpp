#include "implicitize/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "implicitize/implicit_poly.hpp"

namespace implicitize {

namespace {

void rotate(Matrix& m, int i, int j, int k, int l, double s, double tau) {
    const double g = m(i, j);
    const double h = m(k, l);
    m(i, j) = g - s * (h + g * tau);
    m(k, l) = h + s * (g - h * tau);
}

}  // namespace

SymmetricEigen jacobi_eigen(const Matrix& input, int max_sweeps) {
    const auto k = static_cast<int>(input.rows());
    if (k < 1 || input.cols() != k) throw SolverError(SolverError::Kind::invalid_input, "jacobi_eigen: matrix must be square and non-empty");
    if (!input.allFinite()) throw SolverError(SolverError::Kind::invalid_input, "jacobi_eigen: non-finite entries");
    const double scale = input.norm();
    const double asym = (input - input.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-10 * scale)
        throw SolverError(SolverError::Kind::asymmetric, "jacobi_eigen: asymmetry " + std::to_string(asym) +
                                                             " exceeds 1e-10 * ||A|| = " + std::to_string(1e-10 * scale));

    Matrix a = 0.5 * (input + input.transpose());
    Matrix v = Matrix::Identity(k, k);
    Vector d = a.diagonal();
    Vector b = d;
    Vector z = Vector::Zero(k);

    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < k - 1; ++p)
            for (int q = p + 1; q < k; ++q) off += std::abs(a(p, q));
        if (off == 0.0) break;

        const double thresh = sweep < 3 ? 0.2 * off / (k * k) : 0.0;
        for (int p = 0; p < k - 1; ++p) {
            for (int q = p + 1; q < k; ++q) {
                const double g = 100.0 * std::abs(a(p, q));
                // After four sweeps, drop off-diagonal entries that no longer
                // change either diagonal element.
                if (sweep > 3 && std::abs(d[p]) + g == std::abs(d[p]) && std::abs(d[q]) + g == std::abs(d[q])) {
                    a(p, q) = 0.0;
                } else if (std::abs(a(p, q)) > thresh) {
                    const double h = d[q] - d[p];
                    double t;
                    if (std::abs(h) + g == std::abs(h)) {
                        t = a(p, q) / h;
                    } else {
                        const double theta = 0.5 * h / a(p, q);
                        t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                        if (theta < 0.0) t = -t;
                    }
                    const double c = 1.0 / std::sqrt(1.0 + t * t);
                    const double s = t * c;
                    const double tau = s / (1.0 + c);
                    const double hh = t * a(p, q);
                    z[p] -= hh;
                    z[q] += hh;
                    d[p] -= hh;
                    d[q] += hh;
                    a(p, q) = 0.0;
                    for (int j = 0; j < p; ++j) rotate(a, j, p, j, q, s, tau);
                    for (int j = p + 1; j < q; ++j) rotate(a, p, j, j, q, s, tau);
                    for (int j = q + 1; j < k; ++j) rotate(a, p, j, q, j, s, tau);
                    for (int j = 0; j < k; ++j) rotate(v, j, p, j, q, s, tau);
                }
            }
        }
        b += z;
        d = b;
        z.setZero();
    }
    if (sweep == max_sweeps)
        throw SolverError(SolverError::Kind::no_convergence,
                          "jacobi_eigen: no convergence after " + std::to_string(max_sweeps) + " sweeps");

    std::vector<int> order(static_cast<std::size_t>(k));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return d[x] < d[y]; });

    SymmetricEigen out;
    out.values.resize(k);
    out.vectors.resize(k, k);
    out.sweeps = sweep;
    for (int i = 0; i < k; ++i) {
        out.values[i] = d[order[static_cast<std::size_t>(i)]];
        out.vectors.col(i) = v.col(order[static_cast<std::size_t>(i)]);
    }
    return out;
}

EigenResult smallest_eigenpair(const Matrix& a, double tol) {
    const SymmetricEigen eig = jacobi_eigen(a);
    EigenResult r;
    r.spectral_norm = eig.values.cwiseAbs().maxCoeff();
    r.value = eig.values[0];
    r.vector = canonicalize(Vector(eig.vectors.col(0)));
    r.residual = (a * r.vector - r.value * r.vector).norm();
    const double kernel_cut = 10.0 * tol * r.spectral_norm;
    r.near_kernel_dim = static_cast<int>((eig.values.array() <= kernel_cut).count());
    if (r.residual > tol * r.spectral_norm)
        throw SolverError(SolverError::Kind::no_convergence,
                          "smallest_eigenpair: residual " + std::to_string(r.residual) + " above tolerance");
    return r;
}

}  // namespace implicitize
