#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include <boost/math/distributions/normal.hpp>

namespace patrol {

/// Finalizer of splitmix64: a bijective 64-bit avalanche mix.
[[nodiscard]] constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

inline constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

/// Seed used by front ends when no seed is given.
inline constexpr std::uint64_t kDefaultSeed = 20190101ULL;

/// Per-trial random source. A splitmix64 stream whose starting state comes
/// from the SeedSchedule; cheap to construct, so every trial owns one.
class TrialRng {
public:
    using result_type = std::uint64_t;

    explicit constexpr TrialRng(std::uint64_t state) noexcept : state_(state) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    constexpr result_type operator()() noexcept {
        state_ += kGoldenGamma;
        return mix64(state_);
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) noexcept {
        double const x = lo + (hi - lo) * uniform();
        return x < hi ? x : std::nextafter(hi, lo);
    }

    /// Index drawn with probabilities proportional to successive differences
    /// of `cumulative` (a nondecreasing list of partial sums).
    std::size_t categorical(std::span<double const> cumulative) noexcept {
        double const target = uniform() * cumulative.back();
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), target);
        auto idx = static_cast<std::size_t>(it - cumulative.begin());
        return std::min(idx, cumulative.size() - 1);
    }

private:
    std::uint64_t state_;
};

/// Counter-based seeding: trial k always sees the same stream, whichever
/// worker runs it. The map trial -> state is injective for a fixed root.
struct SeedSchedule {
    std::uint64_t root_seed = kDefaultSeed;

    [[nodiscard]] constexpr std::uint64_t state(std::uint64_t trial) const noexcept {
        return mix64(mix64(root_seed) ^ (trial * kGoldenGamma));
    }
    [[nodiscard]] constexpr TrialRng stream(std::uint64_t trial) const noexcept {
        return TrialRng{state(trial)};
    }
};

struct EstimateWithCI {
    double mean = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    double std_error = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;

    [[nodiscard]] bool contains(double p) const noexcept { return ci_low <= p && p <= ci_high; }

    friend bool operator==(EstimateWithCI const&, EstimateWithCI const&) = default;
};

/// Two-sided standard normal quantile for a confidence level in (0, 1).
[[nodiscard]] inline double z_for_confidence(double confidence) {
    if (!(confidence > 0.0 && confidence < 1.0)) {
        throw std::domain_error("confidence level must lie in (0, 1)");
    }
    boost::math::normal_distribution<double> standard;
    return boost::math::quantile(standard, 0.5 + 0.5 * confidence);
}

/// Wilson score interval for a binomial proportion.
[[nodiscard]] inline std::pair<double, double> wilson_interval(std::uint64_t successes,
                                                               std::uint64_t trials,
                                                               double confidence = 0.95) {
    if (trials == 0 || successes > trials) {
        throw std::domain_error("wilson_interval requires 0 <= successes <= trials, trials >= 1");
    }
    double const z = z_for_confidence(confidence);
    double const n = static_cast<double>(trials);
    double const p = static_cast<double>(successes) / n;
    double const z2n = z * z / n;
    double const denom = 1.0 + z2n;
    double const center = (p + 0.5 * z2n) / denom;
    double const half = z / denom * std::sqrt(p * (1.0 - p) / n + z2n / (4.0 * n));
    double low = successes == 0 ? 0.0 : std::clamp(center - half, 0.0, p);
    double high = successes == trials ? 1.0 : std::clamp(center + half, p, 1.0);
    return {low, high};
}

[[nodiscard]] inline EstimateWithCI make_estimate(std::uint64_t successes, std::uint64_t trials) {
    EstimateWithCI e;
    e.trials = trials;
    e.successes = successes;
    e.mean = static_cast<double>(successes) / static_cast<double>(trials);
    e.std_error = std::sqrt(e.mean * (1.0 - e.mean) / static_cast<double>(trials));
    std::tie(e.ci_low, e.ci_high) = wilson_interval(successes, trials);
    return e;
}

/// Number of workers used when a caller passes 0.
[[nodiscard]] inline unsigned default_workers() noexcept {
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Splits [0, count) into contiguous chunks, one per worker, and calls
/// `body(begin, end, worker)` for each. Chunk boundaries depend only on
/// (count, workers); callers keep results index-addressed.
template <class Body>
void parallel_chunks(std::uint64_t count, unsigned workers, Body&& body) {
    if (workers == 0) workers = default_workers();
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(count, 1)));
    if (workers <= 1) {
        body(std::uint64_t{0}, count, 0u);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        std::uint64_t const begin = count * w / workers;
        std::uint64_t const end = count * (w + 1) / workers;
        pool.emplace_back([&body, begin, end, w] { body(begin, end, w); });
    }
}

/// Evaluates `indicator(TrialRng&) -> bool` once per trial index and returns
/// the proportion of successes with its Wilson 95% interval. The result is a
/// function of (indicator, trials, root seed) only.
template <class Indicator>
[[nodiscard]] EstimateWithCI run_bernoulli_trials(Indicator const& indicator,
                                                  std::uint64_t trials,
                                                  SeedSchedule schedule,
                                                  unsigned workers = 0) {
    if (trials == 0) throw std::domain_error("trials must be at least 1");
    if (workers == 0) workers = default_workers();
    std::vector<std::uint64_t> counts(workers, 0);
    parallel_chunks(trials, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
        std::uint64_t hits = 0;
        for (std::uint64_t k = begin; k < end; ++k) {
            TrialRng rng = schedule.stream(k);
            if (indicator(rng)) ++hits;
        }
        counts[w] = hits;
    });
    std::uint64_t successes = 0;
    for (auto c : counts) successes += c;
    return make_estimate(successes, trials);
}

}  // namespace patrol
