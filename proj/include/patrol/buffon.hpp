#pragma once

#include <cmath>
#include <numbers>

#include "patrol/montecarlo.hpp"
#include "patrol/scenario.hpp"

namespace patrol {

/// Needle of length `length` dropped on lines `spacing` apart. Only the
/// short-needle regime (length <= spacing) is supported; length 0 is the
/// degenerate limit and never crosses.
struct NeedleProblem {
    double length = 0.0;
    double spacing = 0.0;
};

inline NeedleProblem const& validate(NeedleProblem const& p) {
    detail::require_finite(p.length, "l");
    if (p.length < 0.0) throw ValidationError("l", "l must be non-negative");
    detail::require_positive(p.spacing, "L");
    if (p.length > p.spacing) {
        throw ValidationError("l", "l <= L required (long-needle regime unsupported)");
    }
    return p;
}

[[nodiscard]] inline double buffon_probability(NeedleProblem const& p) {
    validate(p);
    return 2.0 * p.length / (std::numbers::pi * p.spacing);
}

/// The needle's lower end lies z below the first line above it; it crosses
/// that line iff l sin(phi) >= z.
[[nodiscard]] inline bool needle_crosses(NeedleProblem const& p, double z, double phi) noexcept {
    return p.length * std::sin(phi) >= z;
}

[[nodiscard]] inline EstimateWithCI buffon_mc(NeedleProblem const& p, std::uint64_t trials,
                                              std::uint64_t seed, unsigned workers = 0) {
    validate(p);
    return run_bernoulli_trials(
        [&p](TrialRng& rng) {
            double const z = rng.uniform(0.0, p.spacing);
            double const phi = rng.uniform(0.0, std::numbers::pi);
            return needle_crosses(p, z, phi);
        },
        trials, SeedSchedule{seed}, workers);
}

}  // namespace patrol
