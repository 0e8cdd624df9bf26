#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "patrol/circular_detection.hpp"
#include "patrol/montecarlo.hpp"
#include "patrol/scenario.hpp"

namespace patrol {

struct RadiusAtom {
    double k = 1.0;       // radius multiplier
    double weight = 1.0;  // probability
};

/// Discrete law of the patrol-radius multiplier k, with mean exactly one.
class RadiusDistribution {
public:
    static constexpr double kTolerance = 1e-12;

    /// Support bounds default to the smallest and largest atom.
    explicit RadiusDistribution(std::vector<RadiusAtom> atoms,
                                std::optional<double> k_minus = std::nullopt,
                                std::optional<double> k_plus = std::nullopt)
        : atoms_(std::move(atoms)) {
        if (atoms_.empty()) throw ValidationError("atoms", "at least one atom required");
        double lo = atoms_.front().k;
        double hi = atoms_.front().k;
        double mass = 0.0;
        double mean = 0.0;
        for (auto const& a : atoms_) {
            detail::require_positive(a.k, "k");
            detail::require_positive(a.weight, "p");
            lo = std::min(lo, a.k);
            hi = std::max(hi, a.k);
            mass += a.weight;
            mean += a.weight * a.k;
        }
        k_minus_ = k_minus.value_or(lo);
        k_plus_ = k_plus.value_or(hi);
        if (std::abs(mass - 1.0) > kTolerance) throw ValidationError("p", "weights must sum to 1");
        if (std::abs(mean - 1.0) > kTolerance) throw ValidationError("k", "mean of k must equal 1");
        if (!(k_minus_ > 0.0 && k_minus_ <= 1.0)) {
            throw ValidationError("k_minus", "0 < k_minus <= 1 required");
        }
        if (!(k_plus_ >= 1.0)) throw ValidationError("k_plus", "k_plus >= 1 required");
        if (lo < k_minus_ || hi > k_plus_) {
            throw ValidationError("k", "atoms must lie in [k_minus, k_plus]");
        }
        cumulative_.reserve(atoms_.size());
        double acc = 0.0;
        for (auto const& a : atoms_) cumulative_.push_back(acc += a.weight);
    }

    [[nodiscard]] std::vector<RadiusAtom> const& atoms() const noexcept { return atoms_; }
    [[nodiscard]] std::vector<double> const& cumulative() const noexcept { return cumulative_; }
    [[nodiscard]] double k_minus() const noexcept { return k_minus_; }
    [[nodiscard]] double k_plus() const noexcept { return k_plus_; }

    /// E[1 / k]
    [[nodiscard]] double mean_inverse() const noexcept {
        double acc = 0.0;
        for (auto const& a : atoms_) acc += a.weight / a.k;
        return acc;
    }

    [[nodiscard]] bool degenerate() const noexcept { return atoms_.size() == 1; }

private:
    std::vector<RadiusAtom> atoms_;
    std::vector<double> cumulative_;
    double k_minus_ = 1.0;
    double k_plus_ = 1.0;
};

struct JensenSides {
    double lhs = 0.0;  // (r / R) E[1 / k]
    double rhs = 0.0;  // (r / R) / E[k] = r / R
};

namespace detail {

inline void require_clear_of_centre(RadiusDistribution const& d, double r, double R) {
    if (!(r < d.k_minus() * R)) {
        throw ValidationError("r", "r < k_minus * R required");
    }
}

}  // namespace detail

[[nodiscard]] inline JensenSides jensen_sides(RadiusDistribution const& d, double r, double R) {
    detail::require_positive(r, "r");
    detail::require_positive(R, "R");
    detail::require_clear_of_centre(d, r, R);
    return {r / R * d.mean_inverse(), r / R};
}

/// Small-r/R detection probability when the patrol radius is kR with k ~ d.
[[nodiscard]] inline double asymptotic_probability_randomized(CircularPatrolScenario const& s,
                                                              RadiusDistribution const& d) {
    validate(s);
    detail::require_clear_of_centre(d, s.scan_radius, s.patrol_radius);
    return std::min(1.0, asymptotic_summary(s).coverage * d.mean_inverse());
}

/// Same trial schedule as mc_probability: psi is drawn first, then k, so a
/// degenerate law reproduces mc_probability exactly.
[[nodiscard]] inline EstimateWithCI mc_probability_random_radius(CircularPatrolScenario const& s,
                                                                 RadiusDistribution const& d,
                                                                 std::uint64_t trials,
                                                                 std::uint64_t seed,
                                                                 unsigned workers = 0) {
    validate(s);
    detail::require_clear_of_centre(d, s.scan_radius, s.patrol_radius);
    std::vector<CircularDetector> detectors;
    detectors.reserve(d.atoms().size());
    for (auto const& a : d.atoms()) {
        CircularPatrolScenario scaled = s;
        scaled.patrol_radius = a.k * s.patrol_radius;
        detectors.emplace_back(scaled);
    }
    return run_bernoulli_trials(
        [&](TrialRng& rng) {
            double const psi = rng.uniform(0.0, kTwoPi);
            std::size_t const idx = d.degenerate() ? 0 : rng.categorical(d.cumulative());
            return detectors[idx].detects_any(psi);
        },
        trials, SeedSchedule{seed}, workers);
}

enum class RadiusTransition { cyclic, uniform_random };

/// Piecewise-constant k(t): holds each state for `dwell`, then moves to the
/// next state in list order (cyclic) or to a uniformly chosen state.
struct PiecewiseRadiusProcess {
    std::vector<double> states;
    double dwell = 1.0;
    RadiusTransition transition = RadiusTransition::cyclic;
    double horizon = 100.0;
};

inline PiecewiseRadiusProcess const& validate(PiecewiseRadiusProcess const& p) {
    if (p.states.empty()) throw ValidationError("states", "at least one state required");
    for (double k : p.states) detail::require_positive(k, "k");
    detail::require_positive(p.dwell, "dwell");
    detail::require_finite(p.horizon, "horizon");
    if (!(p.horizon >= 100.0 * p.dwell)) {
        throw ValidationError("horizon", "horizon >= 100 * dwell required");
    }
    return p;
}

struct ErgodicAverages {
    double time_avg_inv_k = 0.0;
    double ensemble_avg_inv_k = 0.0;
    /// Sampling error of the time average, treating dwell segments as
    /// independent (zero for the deterministic cycle).
    double std_error = 0.0;
};

[[nodiscard]] inline ErgodicAverages ergodic_time_average(PiecewiseRadiusProcess const& proc,
                                                          std::uint64_t seed) {
    validate(proc);
    std::size_t const m = proc.states.size();
    ErgodicAverages out;
    // both transition rules leave the uniform law on states invariant
    for (double k : proc.states) out.ensemble_avg_inv_k += 1.0 / k;
    out.ensemble_avg_inv_k /= static_cast<double>(m);

    TrialRng rng = SeedSchedule{seed}.stream(0);
    auto draw = [&] {
        return std::min(static_cast<std::size_t>(rng.uniform() * static_cast<double>(m)), m - 1);
    };
    std::size_t state = proc.transition == RadiusTransition::cyclic ? 0 : draw();
    double t = 0.0;
    double integral = 0.0;
    std::uint64_t segments = 0;
    while (t < proc.horizon) {
        double const hold = std::min(proc.dwell, proc.horizon - t);
        integral += hold / proc.states[state];
        t += hold;
        ++segments;
        if (proc.transition == RadiusTransition::cyclic) {
            state = (state + 1) % m;
        } else {
            state = draw();
        }
    }
    out.time_avg_inv_k = integral / proc.horizon;

    if (proc.transition == RadiusTransition::uniform_random) {
        double var = 0.0;
        for (double k : proc.states) {
            double const dev = 1.0 / k - out.ensemble_avg_inv_k;
            var += dev * dev;
        }
        var /= static_cast<double>(m);
        out.std_error = std::sqrt(var / static_cast<double>(segments));
    }
    return out;
}

}  // namespace patrol
