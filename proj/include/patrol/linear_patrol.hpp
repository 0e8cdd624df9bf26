#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "patrol/circular_detection.hpp"
#include "patrol/detail/closest_approach.hpp"
#include "patrol/montecarlo.hpp"
#include "patrol/scenario.hpp"

namespace patrol {

/// Where the intruder crosses the patrolled segment (`a`, from end B) and the
/// phase of the fleet (`b`, distance from B to the nearest vehicle in the
/// unfolded direction of motion).
struct CrossingSample {
    double a = 0.0;
    double b = 0.0;
};

namespace detail {

/// Position on the unfolded loop of circumference 2R.
[[nodiscard]] inline double unfolded_position(int j, double b, double t,
                                              LinearPatrolScenario const& s) noexcept {
    double const loop = 2.0 * s.segment_length;
    double c = std::fmod(b + j * s.spacing() + s.vehicle_speed * t, loop);
    return c < 0.0 ? c + loop : c;
}

[[nodiscard]] inline double fold(double c, double R) noexcept { return c <= R ? c : 2.0 * R - c; }

}  // namespace detail

/// Back-and-forth motion on [0, R] as uniform motion around the 2R loop,
/// folded back onto the segment.
[[nodiscard]] inline double vehicle_position_linear(int j, double b, double t,
                                                    LinearPatrolScenario const& s) noexcept {
    return detail::fold(detail::unfolded_position(j, b, t, s), s.segment_length);
}

/// Detection oracle for a linear scenario. The intruder is at (a, r - u t),
/// so only t in [0, 2r/u] matters. Each vehicle's window is split at its
/// turnarounds; between them the squared distance is a convex quadratic, and
/// the grid-plus-golden search of the circular model (step r / (4 sqrt(u^2 +
/// v^2))) is exact there.
class LinearDetector {
public:
    explicit LinearDetector(LinearPatrolScenario const& s) : s_(validate(s)) {
        window_ = 2.0 * s_.scan_radius / s_.intruder_speed;
        double const speed = std::hypot(s_.intruder_speed, s_.vehicle_speed);
        search_ = {s_.scan_radius, s_.scan_radius / (4.0 * speed), speed, 1e-10 * window_};
        reach_ = s_.scan_radius + s_.vehicle_speed * (0.5 * window_);
    }

    [[nodiscard]] LinearPatrolScenario const& scenario() const noexcept { return s_; }
    [[nodiscard]] double window() const noexcept { return window_; }

    [[nodiscard]] double distance_sq(CrossingSample const& x, int j, double t) const noexcept {
        double const dx = x.a - vehicle_position_linear(j, x.b, t, s_);
        double const dy = s_.scan_radius - s_.intruder_speed * t;
        return dx * dx + dy * dy;
    }

    [[nodiscard]] bool detects_by(CrossingSample const& x, int j) const {
        // |x_j(t) - x_j(r/u)| <= v r/u on the window
        double const mid = vehicle_position_linear(j, x.b, 0.5 * window_, s_);
        if (std::abs(x.a - mid) > reach_) return false;

        double const R = s_.segment_length;
        double const c0 = detail::unfolded_position(j, x.b, 0.0, s_);
        std::vector<double> cuts{0.0};
        for (double m = std::floor(c0 / R) + 1.0;; m += 1.0) {
            double const t = (m * R - c0) / s_.vehicle_speed;
            if (t >= window_) break;
            if (t > 0.0) cuts.push_back(t);
        }
        cuts.push_back(window_);

        double const r2 = s_.scan_radius * s_.scan_radius;
        auto f = [&](double t) { return distance_sq(x, j, t); };
        for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
            if (detail::closest_approach_sq(f, cuts[k], cuts[k + 1], search_) <= r2) return true;
        }
        return false;
    }

    [[nodiscard]] bool detects(CrossingSample const& x) const {
        for (int j = 0; j < s_.vehicles; ++j) {
            if (detects_by(x, j)) return true;
        }
        return false;
    }

private:
    LinearPatrolScenario s_;
    double window_ = 0.0;
    double reach_ = 0.0;
    detail::ApproachSearch search_;
};

[[nodiscard]] inline bool detects_linear(CrossingSample const& x, LinearPatrolScenario const& s) {
    return LinearDetector(s).detects(x);
}

/// (a, b) uniform on [0, R] x [0, 2R / n].
[[nodiscard]] inline EstimateWithCI mc_probability_linear(LinearPatrolScenario const& s,
                                                          std::uint64_t trials, std::uint64_t seed,
                                                          unsigned workers = 0) {
    LinearDetector const det(s);
    double const R = s.segment_length;
    double const spacing = s.spacing();
    return run_bernoulli_trials(
        [&](TrialRng& rng) {
            CrossingSample x;
            x.a = rng.uniform(0.0, R);
            x.b = rng.uniform(0.0, spacing);
            return det.detects(x);
        },
        trials, SeedSchedule{seed}, workers);
}

/// Closed forms for the linear patrol; `chord_l` is a length here.
[[nodiscard]] inline AsymptoticSummary asymptotic_summary_linear(LinearPatrolScenario const& s) {
    validate(s);
    double const sin_alpha = std::sin(inclination(s.intruder_speed, s.vehicle_speed));
    double const per_vehicle = s.scan_radius / (s.segment_length * sin_alpha);
    AsymptoticSummary out;
    out.chord_l = 2.0 * s.scan_radius / sin_alpha;
    out.coverage = s.vehicles * per_vehicle;
    out.p_asym = std::min(1.0, out.coverage);
    out.m_min = detail::minimum_fleet(per_vehicle);
    return out;
}

}  // namespace patrol
