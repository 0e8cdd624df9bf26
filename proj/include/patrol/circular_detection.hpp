#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

#include "patrol/circle_intervals.hpp"
#include "patrol/detail/closest_approach.hpp"
#include "patrol/montecarlo.hpp"
#include "patrol/rotating_frame.hpp"
#include "patrol/scenario.hpp"

namespace patrol {

/// Default size of the starting-angle grid used to locate detection arcs.
inline constexpr int kDefaultResolution = 4096;

/// Angular tolerance for detection-arc endpoints.
inline constexpr double kArcTolerance = 1e-9;

/// Detection oracle for one circular scenario. Everything here works in the
/// co-rotating frame, where vehicle i sits still at (R, 2 pi i / n) and the
/// intruder follows the spiral A_psi.
///
/// The search over time is restricted to "cone windows": at angular offset
/// d from a vehicle the intruder is at least R sin|d| away (|d| < pi/2) or
/// at least R away (|d| >= pi/2), so only times with |d| <= asin(r / R) can
/// produce a detection. Inside a window the distance is sampled on a grid of
/// step r / (4 V), V = sqrt(u^2 + (v (R + r) / R)^2), and refined by golden
/// section.
class CircularDetector {
public:
    explicit CircularDetector(CircularPatrolScenario const& s) : s_(validate(s)) {
        omega_ = s_.vehicle_speed / s_.patrol_radius;
        horizon_ = approach_horizon(s_);
        double const rho_max = s_.patrol_radius + s_.scan_radius;
        double const speed = std::hypot(s_.intruder_speed, omega_ * rho_max);
        search_ = {s_.scan_radius, s_.scan_radius / (4.0 * speed), speed, 1e-10 * horizon_};
        half_cone_ = std::asin(s_.r_over_R()) * (1.0 + 1e-9) + 1e-12;
        spacing_ = kTwoPi / s_.vehicles;
    }

    [[nodiscard]] CircularPatrolScenario const& scenario() const noexcept { return s_; }
    [[nodiscard]] double horizon() const noexcept { return horizon_; }
    [[nodiscard]] double max_step() const noexcept { return search_.max_step; }

    /// Squared distance at time t between the intruder that started at
    /// angular offset `offset` from a vehicle and that vehicle.
    [[nodiscard]] double distance_sq(double offset, double t) const noexcept {
        double const rho = std::max(0.0, s_.patrol_radius + s_.scan_radius - s_.intruder_speed * t);
        return detail::polar_distance_sq(rho, s_.patrol_radius, offset - omega_ * t);
    }

    /// True iff the intruder starting at angular offset `offset` (psi - beta_i)
    /// ever comes within r of the vehicle.
    [[nodiscard]] bool detects_offset(double offset) const {
        double const r2 = s_.scan_radius * s_.scan_radius;
        bool hit = false;
        for_each_window(offset, [&](double lo, double hi) {
            if (hit) return;
            auto f = [&](double t) { return distance_sq(offset, t); };
            hit = detail::closest_approach_sq(f, lo, hi, search_) <= r2;
        });
        return hit;
    }

    [[nodiscard]] bool detects(double psi, int vehicle_index) const {
        return detects_offset(psi - vehicle_bearing(vehicle_index, s_.vehicles));
    }

    /// Detection by any vehicle. Only vehicles whose bearing falls inside the
    /// angular sweep of the spiral are tried.
    [[nodiscard]] bool detects_any(double psi) const {
        int const n = s_.vehicles;
        double const sweep_lo = psi - omega_ * horizon_ - half_cone_;
        double const sweep_hi = psi + half_cone_;
        auto first = static_cast<long long>(std::ceil(sweep_lo / spacing_));
        auto last = static_cast<long long>(std::floor(sweep_hi / spacing_));
        if (last - first + 1 >= n) {
            first = 0;
            last = n - 1;
        }
        for (long long k = first; k <= last; ++k) {
            auto const i = static_cast<int>(((k % n) + n) % n);
            if (detects(psi, i)) return true;
        }
        return false;
    }

    /// Calls `fn(t_lo, t_hi)` for every time window in [0, T] during which
    /// the intruder is within the detection cone of the vehicle.
    template <class Fn>
    void for_each_window(double offset, Fn&& fn) const {
        double const d0 = wrap_pi(offset);
        if (omega_ == 0.0) {
            if (std::abs(d0) <= half_cone_) fn(0.0, horizon_);
            return;
        }
        // offset(t) = d0 - omega t decreases over [d0 - omega T, d0]
        double const d_end = d0 - omega_ * horizon_;
        auto const m_lo = static_cast<long long>(std::ceil((d_end - half_cone_) / kTwoPi));
        auto const m_hi = static_cast<long long>(std::floor((d0 + half_cone_) / kTwoPi));
        for (long long m = m_hi; m >= m_lo; --m) {
            double const centre = d0 - kTwoPi * static_cast<double>(m);
            double const lo = std::max(0.0, (centre - half_cone_) / omega_);
            double const hi = std::min(horizon_, (centre + half_cone_) / omega_);
            if (lo <= hi) fn(lo, hi);
        }
    }

private:
    CircularPatrolScenario s_;
    double omega_ = 0.0;
    double horizon_ = 0.0;
    double half_cone_ = 0.0;
    double spacing_ = 0.0;
    detail::ApproachSearch search_;
};

[[nodiscard]] inline bool detects(double psi, int vehicle_index, CircularPatrolScenario const& s) {
    return CircularDetector(s).detects(psi, vehicle_index);
}

/// Offsets psi - beta_i for which vehicle i detects the intruder. Computed
/// once per scenario; the set for vehicle i is this one turned by beta_i.
[[nodiscard]] inline CircleIntervalSet relative_detection_arcs(CircularDetector const& det,
                                                               int resolution,
                                                               unsigned workers = 1) {
    resolution = std::max(resolution, 16);
    auto const& s = det.scenario();

    // The offset that puts the intruder exactly over the vehicle when it
    // crosses radius R is always detected; seeding it guarantees the main arc
    // is found even when it is narrower than the grid spacing.
    double const direct_hit = wrap_two_pi(s.vehicle_speed / s.patrol_radius *
                                          s.scan_radius / s.intruder_speed);
    std::vector<double> grid(static_cast<std::size_t>(resolution));
    for (int j = 0; j < resolution; ++j) grid[j] = kTwoPi * j / resolution;
    grid.insert(std::upper_bound(grid.begin(), grid.end(), direct_hit), direct_hit);
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    std::vector<char> hit(grid.size(), 0);
    parallel_chunks(grid.size(), workers, [&](std::uint64_t begin, std::uint64_t end, unsigned) {
        for (auto j = begin; j < end; ++j) hit[j] = det.detects_offset(grid[j]) ? 1 : 0;
    });

    std::size_t const m = grid.size();
    std::size_t rising = m;
    for (std::size_t j = 0; j < m; ++j) {
        if (!hit[j] && hit[(j + 1) % m]) {
            rising = j;
            break;
        }
    }
    if (rising == m) return hit[0] ? CircleIntervalSet::full() : CircleIntervalSet{};

    // Bisect a bracket whose ends disagree; `lo` is the side with value `lo_hit`.
    auto boundary = [&](double lo, double hi, bool lo_hit) {
        while (hi - lo > kArcTolerance) {
            double const mid = 0.5 * (lo + hi);
            (det.detects_offset(mid) == lo_hit ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    };

    // Walk once around the circle starting at a rising edge, so every arc
    // opened is closed by the next falling edge.
    std::vector<Arc> arcs;
    double open_at = 0.0;
    for (std::size_t step = 0; step < m; ++step) {
        std::size_t const j = (rising + step) % m;
        std::size_t const k = (j + 1) % m;
        if (hit[j] == hit[k]) continue;
        double const lo = grid[j];
        double const hi = k == 0 ? grid[k] + kTwoPi : grid[k];
        double const edge = boundary(lo, hi, hit[j] != 0);
        if (hit[k]) {
            open_at = edge;
        } else {
            arcs.push_back({open_at, edge < open_at ? edge + kTwoPi : edge});
        }
    }
    return CircleIntervalSet::from_arcs(arcs);
}

/// Detection set F_i: starting angles psi from which vehicle i detects.
[[nodiscard]] inline CircleIntervalSet detection_arc_set(int vehicle_index,
                                                         CircularPatrolScenario const& s,
                                                         int resolution = kDefaultResolution,
                                                         unsigned workers = 1) {
    CircularDetector const det(s);
    return relative_detection_arcs(det, resolution, workers)
        .rotated(vehicle_bearing(vehicle_index, s.vehicles));
}

/// Union of the n detection sets, all obtained by turning F_0.
[[nodiscard]] inline CircleIntervalSet fleet_detection_set(CircularPatrolScenario const& s,
                                                           int resolution = kDefaultResolution,
                                                           unsigned workers = 1) {
    CircularDetector const det(s);
    CircleIntervalSet const base = relative_detection_arcs(det, resolution, workers);
    std::vector<CircleIntervalSet> sets;
    sets.reserve(static_cast<std::size_t>(s.vehicles));
    for (int i = 0; i < s.vehicles; ++i) sets.push_back(base.rotated(vehicle_bearing(i, s.vehicles)));
    return set_union(sets);
}

[[nodiscard]] inline double exact_probability(CircularPatrolScenario const& s,
                                              int resolution = kDefaultResolution,
                                              unsigned workers = 1) {
    return fleet_detection_set(s, resolution, workers).measure() / kTwoPi;
}

[[nodiscard]] inline EstimateWithCI mc_probability(CircularPatrolScenario const& s,
                                                   std::uint64_t trials, std::uint64_t seed,
                                                   unsigned workers = 0) {
    CircularDetector const det(s);
    return run_bernoulli_trials(
        [&det](TrialRng& rng) { return det.detects_any(rng.uniform(0.0, kTwoPi)); }, trials,
        SeedSchedule{seed}, workers);
}

/// Small-r/R closed forms. `chord_l` is in radians for the circular model
/// and in length units for the linear one; `coverage` is the probability
/// before the cap at 1.
struct AsymptoticSummary {
    double chord_l = 0.0;
    double coverage = 0.0;
    double p_asym = 0.0;
    int m_min = 1;
};

namespace detail {

/// Smallest n >= 1 with n * per_vehicle >= 1, using the same product as the
/// reported coverage so the bracketing holds exactly.
inline int minimum_fleet(double per_vehicle) {
    auto coverage = [per_vehicle](long n) { return static_cast<double>(n) * per_vehicle; };
    auto m = static_cast<long>(std::max(1.0, std::ceil(1.0 / per_vehicle)));
    while (coverage(m) < 1.0) ++m;
    while (m > 1 && coverage(m - 1) >= 1.0) --m;
    return static_cast<int>(m);
}

}  // namespace detail

[[nodiscard]] inline AsymptoticSummary asymptotic_summary(CircularPatrolScenario const& s) {
    validate(s);
    double const sin_alpha = std::sin(derived_angles(s).alpha);
    double const per_vehicle = s.scan_radius / (std::numbers::pi * s.patrol_radius * sin_alpha);
    AsymptoticSummary out;
    out.chord_l = 2.0 * s.scan_radius / (s.patrol_radius * sin_alpha);
    out.coverage = s.vehicles * per_vehicle;
    out.p_asym = std::min(1.0, out.coverage);
    out.m_min = detail::minimum_fleet(per_vehicle);
    return out;
}

}  // namespace patrol
