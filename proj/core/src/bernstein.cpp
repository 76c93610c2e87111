#include "implicitize/bernstein.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>

namespace implicitize {

namespace {

class PascalTable {
public:
    double get(int n, int k) {
        if (k < 0 || k > n || n < 0) return 0.0;
        std::scoped_lock lock(mutex_);
        while (static_cast<int>(rows_.size()) <= n) {
            const auto& prev = rows_.back();
            std::vector<double> row(prev.size() + 1, 1.0);
            for (std::size_t i = 1; i + 1 < row.size(); ++i) row[i] = prev[i - 1] + prev[i];
            rows_.push_back(std::move(row));
        }
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }

private:
    std::mutex mutex_;
    std::vector<std::vector<double>> rows_{{1.0}};
};

PascalTable& pascal() {
    static PascalTable table;
    return table;
}

}  // namespace

double binomial(int n, int k) { return pascal().get(n, k); }

BernsteinPoly::BernsteinPoly() : coeffs_{0.0} {}

BernsteinPoly::BernsteinPoly(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("BernsteinPoly: empty coefficient list");
}

BernsteinPoly BernsteinPoly::constant(double value, int degree) {
    if (degree < 0) throw std::invalid_argument("BernsteinPoly::constant: negative degree");
    return BernsteinPoly(std::vector<double>(static_cast<std::size_t>(degree) + 1, value));
}

double BernsteinPoly::operator()(double t) const {
    std::vector<double> work = coeffs_;
    const double s = 1.0 - t;
    for (std::size_t level = work.size() - 1; level > 0; --level)
        for (std::size_t i = 0; i < level; ++i) work[i] = s * work[i] + t * work[i + 1];
    return work[0];
}

BernsteinPoly& BernsteinPoly::operator+=(const BernsteinPoly& other) {
    *this = *this + other;
    return *this;
}

BernsteinPoly& BernsteinPoly::operator*=(double s) {
    for (double& c : coeffs_) c *= s;
    return *this;
}

BernsteinPoly operator+(const BernsteinPoly& a, const BernsteinPoly& b) {
    const int d = std::max(a.degree(), b.degree());
    BernsteinPoly ea = elevate(a, d);
    const BernsteinPoly eb = elevate(b, d);
    std::vector<double> c(ea.coeffs().begin(), ea.coeffs().end());
    for (int i = 0; i <= d; ++i) c[static_cast<std::size_t>(i)] += eb[i];
    return BernsteinPoly(std::move(c));
}

BernsteinPoly operator*(double s, BernsteinPoly a) {
    a *= s;
    return a;
}

BernsteinPoly multiply(const BernsteinPoly& a, const BernsteinPoly& b) {
    const int p = a.degree();
    const int q = b.degree();
    std::vector<double> c(static_cast<std::size_t>(p + q) + 1, 0.0);
    for (int i = 0; i <= p; ++i) {
        const double wi = binomial(p, i) * a[i];
        for (int j = 0; j <= q; ++j) c[static_cast<std::size_t>(i + j)] += wi * binomial(q, j) * b[j];
    }
    for (int k = 0; k <= p + q; ++k) c[static_cast<std::size_t>(k)] /= binomial(p + q, k);
    return BernsteinPoly(std::move(c));
}

BernsteinPoly elevate(const BernsteinPoly& a, int target_degree) {
    if (target_degree < a.degree())
        throw std::invalid_argument("elevate: target degree " + std::to_string(target_degree) +
                                    " below input degree " + std::to_string(a.degree()));
    std::vector<double> c(a.coeffs().begin(), a.coeffs().end());
    for (int p = a.degree(); p < target_degree; ++p) {
        std::vector<double> next(static_cast<std::size_t>(p) + 2);
        next.front() = c.front();
        next.back() = c.back();
        for (int i = 1; i <= p; ++i) {
            const double r = static_cast<double>(i) / (p + 1);
            next[static_cast<std::size_t>(i)] =
                r * c[static_cast<std::size_t>(i - 1)] + (1.0 - r) * c[static_cast<std::size_t>(i)];
        }
        c = std::move(next);
    }
    return BernsteinPoly(std::move(c));
}

BernsteinPoly derivative(const BernsteinPoly& a) {
    const int p = a.degree();
    if (p < 1) throw std::invalid_argument("derivative: degree-0 polynomial");
    std::vector<double> c(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) c[static_cast<std::size_t>(i)] = p * (a[i + 1] - a[i]);
    return BernsteinPoly(std::move(c));
}

BernsteinPoly power(const BernsteinPoly& a, int e) {
    if (e < 0) throw std::invalid_argument("power: negative exponent");
    BernsteinPoly result = BernsteinPoly::constant(1.0);
    for (int i = 0; i < e; ++i) result = multiply(result, a);
    return result;
}

Matrix gram(int p) {
    if (p < 0) throw std::invalid_argument("gram: negative degree");
    Matrix g(p + 1, p + 1);
    const double denom = 2.0 * p + 1.0;
    for (int i = 0; i <= p; ++i)
        for (int j = i; j <= p; ++j) {
            const double v = binomial(p, i) * binomial(p, j) / (denom * binomial(2 * p, i + j));
            g(i, j) = v;
            g(j, i) = v;
        }
    return g;
}

BernsteinPoly power_to_bernstein(std::span<const double> monomial_coeffs) {
    if (monomial_coeffs.empty()) return BernsteinPoly();
    const int p = static_cast<int>(monomial_coeffs.size()) - 1;
    // t^j = sum_{i>=j} C(i,j)/C(p,j) B_{i,p}(t)
    std::vector<double> c(static_cast<std::size_t>(p) + 1, 0.0);
    for (int i = 0; i <= p; ++i)
        for (int j = 0; j <= i; ++j)
            c[static_cast<std::size_t>(i)] +=
                binomial(i, j) / binomial(p, j) * monomial_coeffs[static_cast<std::size_t>(j)];
    return BernsteinPoly(std::move(c));
}

std::vector<double> affine_substitute(std::span<const double> monomial_coeffs, double offset,
                                      double scale) {
    const std::size_t n = monomial_coeffs.size();
    std::vector<double> out(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        // (offset + scale s)^j
        double scale_pow = 1.0;
        for (std::size_t i = 0; i <= j; ++i) {
            out[i] += monomial_coeffs[j] * binomial(static_cast<int>(j), static_cast<int>(i)) *
                      std::pow(offset, static_cast<double>(j - i)) * scale_pow;
            scale_pow *= scale;
        }
    }
    return out;
}

}  // namespace implicitize
