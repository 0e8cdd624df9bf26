#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "patrol/scenario.hpp"

namespace patrol {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Reduces an angle to [0, 2pi).
[[nodiscard]] inline double wrap_two_pi(double angle) noexcept {
    double a = std::fmod(angle, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    return a < kTwoPi ? a : 0.0;
}

/// Reduces an angle to (-pi, pi].
[[nodiscard]] inline double wrap_pi(double angle) noexcept {
    double a = wrap_two_pi(angle);
    return a > std::numbers::pi ? a - kTwoPi : a;
}

/// Point of the normalized polar plane (rho / R, phi).
struct PolarPoint {
    double rho_norm = 0.0;
    double phi = 0.0;  // (-pi, pi]
};

/// Point of the frame co-rotating with the fleet.
struct RotatingFramePoint {
    double radius = 0.0;
    double angle = 0.0;  // [0, 2pi)
};

/// Image of the scan circle x = r cos(psi), y = R + r sin(psi) in the
/// normalized polar plane. phi = atan2(x, y) so the branch is fixed even
/// where y vanishes.
[[nodiscard]] inline PolarPoint scan_circle_polar_exact(double r_over_R, double psi) noexcept {
    double const x = r_over_R * std::cos(psi);
    double const y = 1.0 + r_over_R * std::sin(psi);
    return {std::hypot(x, y), std::atan2(x, y)};
}

/// First-order image for r/R << 1: a circle of radius r/R around (1, 0).
[[nodiscard]] inline PolarPoint scan_circle_polar_approx(double r_over_R, double psi) noexcept {
    return {1.0 + r_over_R * std::sin(psi), r_over_R * std::cos(psi)};
}

/// Time for the intruder to travel from the circle of radius R + r to O.
[[nodiscard]] inline double approach_horizon(CircularPatrolScenario const& s) noexcept {
    return (s.patrol_radius + s.scan_radius) / s.intruder_speed;
}

/// Angular position of vehicle `index` in the rotating frame.
[[nodiscard]] inline double vehicle_bearing(int index, int vehicles) noexcept {
    return kTwoPi * static_cast<double>(index) / static_cast<double>(vehicles);
}

namespace detail {

inline void require_in_horizon(double t, CircularPatrolScenario const& s) {
    if (!(t >= 0.0 && t <= approach_horizon(s))) {
        throw std::domain_error("t must lie in [0, (R + r) / u]");
    }
}

}  // namespace detail

/// Point of the curve A_psi at time t: radial approach in the lab frame,
/// seen from a frame turning at v / R.
[[nodiscard]] inline RotatingFramePoint object_position_rotating(double psi, double t,
                                                                 CircularPatrolScenario const& s) {
    detail::require_in_horizon(t, s);
    double const radius = std::max(0.0, s.patrol_radius + s.scan_radius - s.intruder_speed * t);
    double const omega = s.vehicle_speed / s.patrol_radius;
    return {radius, wrap_two_pi(psi - omega * t)};
}

namespace detail {

/// Squared distance between points (rho, theta) and (R, beta). Written as
/// (rho - R)^2 + 4 rho R sin^2(dtheta / 2), which equals the law of
/// cosines but keeps precision when the points are close.
[[nodiscard]] inline double polar_distance_sq(double rho, double R, double dtheta) noexcept {
    double const dr = rho - R;
    double const h = std::sin(0.5 * dtheta);
    return dr * dr + 4.0 * rho * R * h * h;
}

}  // namespace detail

[[nodiscard]] inline double distance_to_vehicle(double psi, double t, int vehicle_index,
                                                CircularPatrolScenario const& s) {
    RotatingFramePoint const p = object_position_rotating(psi, t, s);
    double const beta = vehicle_bearing(vehicle_index, s.vehicles);
    return std::sqrt(detail::polar_distance_sq(p.radius, s.patrol_radius, p.angle - beta));
}

}  // namespace patrol
