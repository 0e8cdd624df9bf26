#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace patrol::detail {

/// Golden-section search for the minimum of `f` on [lo, hi]. Stops once the
/// bracket is narrower than `tol` or, when `stop_below` is reached, at the
/// first value not exceeding it. Returns the smallest value seen.
template <class F>
[[nodiscard]] double golden_section_min(F const& f, double lo, double hi, double tol,
                                        double stop_below) {
    constexpr double inv_phi = std::numbers::phi - 1.0;
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    double best = std::min(fc, fd);
    while (best > stop_below && (b - a) > tol) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
            best = std::min(best, fc);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
            best = std::min(best, fd);
        }
    }
    return best;
}

/// Parameters of the grid-plus-refinement closest-approach search.
struct ApproachSearch {
    double radius = 0.0;       // detection radius
    double max_step = 0.0;     // grid spacing upper bound
    double speed_bound = 0.0;  // Lipschitz constant of the distance in time
    double time_tol = 0.0;     // golden-section bracket tolerance
};

/// Smallest squared distance found by sampling `dist_sq(t)` on a uniform grid
/// over [lo, hi] and refining by golden section every grid interval whose
/// Lipschitz lower bound reaches `radius`. Returns early with the first value
/// <= radius^2, so `result <= radius^2` decides detection.
template <class DistSq>
[[nodiscard]] double closest_approach_sq(DistSq const& dist_sq, double lo, double hi,
                                         ApproachSearch const& search) {
    double const r2 = search.radius * search.radius;
    double const span = hi - lo;
    if (!(span > 0.0)) return dist_sq(lo);

    auto const intervals = static_cast<long>(std::max(1.0, std::ceil(span / search.max_step)));
    double const step = span / static_cast<double>(intervals);
    double const slack = 0.5 * search.speed_bound * step;

    auto node = [&](long k) { return k == intervals ? hi : lo + step * static_cast<double>(k); };

    double best = std::numeric_limits<double>::infinity();
    double prev = dist_sq(lo);
    best = prev;
    if (best <= r2) return best;
    for (long k = 1; k <= intervals; ++k) {
        double const cur = dist_sq(node(k));
        best = std::min(best, cur);
        if (best <= r2) return best;
        // min over [t_{k-1}, t_k] >= (d_{k-1} + d_k) / 2 - V * step / 2
        double const floor_bound = 0.5 * (std::sqrt(prev) + std::sqrt(cur)) - slack;
        if (floor_bound <= search.radius) {
            best = std::min(best, golden_section_min(dist_sq, node(k - 1), node(k),
                                                     search.time_tol, r2));
            if (best <= r2) return best;
        }
        prev = cur;
    }
    return best;
}

}  // namespace patrol::detail
