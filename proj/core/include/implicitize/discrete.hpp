#pragma once

#include <optional>
#include <string>

#include "implicitize/parametric.hpp"
#include "implicitize/quadratic_forms.hpp"

namespace implicitize {

/// N x k matrix with entries phi_i(p_j).
Matrix build_d1(const SampledCurve& samples, int n);

/// N x k matrix with entries grad phi_i(p_j) . T_j.
Matrix build_d2(const SampledCurve& samples, int n);

/// A1 = D1'D1, A2 = D2'D2, A = A1 + lambda A2. Throws for lambda < 0.
QuadraticForms assemble(const SampledCurve& samples, int n, double lambda);

/// Warning text when the sample count is below three times the number of
/// unknowns at degree n, where the smallest eigenvalue says little about fit quality.
std::optional<std::string> sample_count_warning(int samples, int n);

}  // namespace implicitize
