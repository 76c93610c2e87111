#include "implicitize/discrete.hpp"

#include <stdexcept>

namespace implicitize {

Matrix build_d1(const SampledCurve& samples, int n) {
    const MonomialBasis basis(n);
    Matrix d1(samples.size(), basis.size());
    for (int j = 0; j < samples.size(); ++j) {
        const auto& p = samples.points[static_cast<std::size_t>(j)];
        d1.row(j) = basis.values(p.x(), p.y()).transpose();
    }
    return d1;
}

Matrix build_d2(const SampledCurve& samples, int n) {
    const MonomialBasis basis(n);
    Matrix d2(samples.size(), basis.size());
    for (int j = 0; j < samples.size(); ++j) {
        const auto& p = samples.points[static_cast<std::size_t>(j)];
        const auto& t = samples.tangents[static_cast<std::size_t>(j)];
        const auto [gx, gy] = basis.gradients(p.x(), p.y());
        d2.row(j) = (t.x() * gx + t.y() * gy).transpose();
    }
    return d2;
}

QuadraticForms assemble(const SampledCurve& samples, int n, double lambda) {
    if (!(lambda >= 0.0)) throw std::invalid_argument("assemble: lambda must be >= 0");
    QuadraticForms q;
    q.degree = n;
    q.lambda = lambda;
    q.d1 = build_d1(samples, n);
    q.d2 = build_d2(samples, n);
    q.a1 = symmetrized(q.d1.transpose() * q.d1);
    q.a2 = symmetrized(q.d2.transpose() * q.d2);
    q.a = symmetrized(q.a1 + lambda * q.a2);
    return q;
}

std::optional<std::string> sample_count_warning(int samples, int n) {
    const int k = basis_size(n);
    if (samples >= 3 * k) return std::nullopt;
    return "degree " + std::to_string(n) + ": " + std::to_string(samples) + " samples for " + std::to_string(k) +
           " unknowns (fewer than " + std::to_string(3 * k) + ")";
}

}  // namespace implicitize
