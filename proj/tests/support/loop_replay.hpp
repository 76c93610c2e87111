#pragma once

#include <cmath>
#include <vector>

#include "implicitize/adaptive.hpp"

namespace implicitize::testing {

struct ReplayStep {
    int n;
    double e1;
    double e2;
};

struct Replay {
    std::vector<ReplayStep> steps;
    int stop_degree = 0;
    bool hit_n_max = false;
};

/// Straight-line transcription of the two adaptive loops, sharing only the
/// assembly and eigen-solve with the library.
/// polynomial = true: stop when e1 <= eps_ad and |e2 - e2_prev| <= eps_wg, the
/// second test waived at n = 1;
/// polynomial = false: stop when e1 <= eps_ad and e2 <= eps_wg.
inline Replay replay_loop(const Problem& problem, int n_max, double lambda, double eps_ad, double eps_wg, bool polynomial) {
    Replay r;
    double e2_prev = 0.0;
    int n = 1;
    while (n <= n_max) {
        const QuadraticForms q = assemble(problem, n, lambda);
        const Vector b = smallest_eigenpair(q.a).vector;
        const double e1 = b.dot(q.a1 * b);
        const double e2 = b.dot(q.a2 * b);
        r.steps.push_back({n, e1, e2});
        if (n == n_max) {
            r.stop_degree = n;
            r.hit_n_max = true;
            return r;
        }
        bool stop;
        if (polynomial)
            stop = e1 <= eps_ad && (n == 1 || std::abs(e2 - e2_prev) <= eps_wg);
        else
            stop = e1 <= eps_ad && e2 <= eps_wg;
        if (stop) {
            r.stop_degree = n;
            return r;
        }
        e2_prev = e2;
        n = n + 1;
    }
    return r;
}

}  // namespace implicitize::testing
