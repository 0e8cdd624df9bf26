#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace patrol {

/// Raised when a parameter record violates one of its invariants. `field()`
/// names the offending parameter so front ends can report it verbatim.
class ValidationError : public std::invalid_argument {
public:
    ValidationError(std::string field, std::string const& message)
        : std::invalid_argument(message), field_(std::move(field)) {}

    [[nodiscard]] std::string const& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Fleet of `vehicles` platforms equally spaced on a circle of radius
/// `patrol_radius`, each carrying a circular scanner of radius `scan_radius`.
/// The intruder starts on the circle of radius R + r and heads straight for
/// the center at `intruder_speed`.
struct CircularPatrolScenario {
    double patrol_radius = 0.0;   // R
    double scan_radius = 0.0;     // r
    int vehicles = 0;             // n
    double vehicle_speed = 0.0;   // v, may be zero (static sensors)
    double intruder_speed = 0.0;  // u

    [[nodiscard]] double r_over_R() const noexcept { return scan_radius / patrol_radius; }

    friend bool operator==(CircularPatrolScenario const&, CircularPatrolScenario const&) = default;
};

/// Back-and-forth patrol of a segment of length `segment_length`; neighbours
/// are 2R/n apart along the unfolded 2R loop. The intruder crosses the strip
/// perpendicular to the segment.
struct LinearPatrolScenario {
    double segment_length = 0.0;  // R
    double scan_radius = 0.0;     // r
    int vehicles = 0;             // n
    double vehicle_speed = 0.0;   // v
    double intruder_speed = 0.0;  // u

    [[nodiscard]] double spacing() const noexcept { return 2.0 * segment_length / vehicles; }

    friend bool operator==(LinearPatrolScenario const&, LinearPatrolScenario const&) = default;
};

struct DerivedAngles {
    double alpha = 0.0;  // inclination of the intruder track, (0, pi/2]
    double omega = 0.0;  // angular speed of the co-rotating frame
};

namespace detail {

inline void require_finite(double value, char const* field) {
    if (!std::isfinite(value)) {
        throw ValidationError(field, std::string(field) + " must be finite");
    }
}

inline void require_positive(double value, char const* field) {
    require_finite(value, field);
    if (!(value > 0.0)) {
        throw ValidationError(field, std::string(field) + " must be positive");
    }
}

}  // namespace detail

inline CircularPatrolScenario const& validate(CircularPatrolScenario const& s) {
    detail::require_positive(s.patrol_radius, "R");
    detail::require_positive(s.scan_radius, "r");
    if (s.vehicles < 1) throw ValidationError("n", "n must be at least 1");
    detail::require_finite(s.vehicle_speed, "v");
    if (s.vehicle_speed < 0.0) throw ValidationError("v", "v must be non-negative");
    detail::require_positive(s.intruder_speed, "u");
    if (!(s.scan_radius < s.patrol_radius)) throw ValidationError("r", "r < R required");
    return s;
}

inline LinearPatrolScenario const& validate(LinearPatrolScenario const& s) {
    detail::require_positive(s.segment_length, "R");
    detail::require_positive(s.scan_radius, "r");
    if (s.vehicles < 1) throw ValidationError("n", "n must be at least 1");
    detail::require_positive(s.vehicle_speed, "v");
    detail::require_positive(s.intruder_speed, "u");
    if (!(2.0 * s.scan_radius < s.segment_length)) {
        throw ValidationError("r", "2r < R required");
    }
    return s;
}

/// Track inclination relative to the fleet's direction of travel. The
/// two-argument form makes v = 0 a clean perpendicular crossing.
[[nodiscard]] inline double inclination(double intruder_speed, double vehicle_speed) noexcept {
    return std::atan2(intruder_speed, vehicle_speed);
}

[[nodiscard]] inline DerivedAngles derived_angles(CircularPatrolScenario const& s) noexcept {
    return {inclination(s.intruder_speed, s.vehicle_speed), s.vehicle_speed / s.patrol_radius};
}

}  // namespace patrol
