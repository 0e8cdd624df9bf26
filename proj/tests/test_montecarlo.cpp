#include <cmath>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "patrol/montecarlo.hpp"

namespace patrol {
namespace {

TEST(MonteCarloTest, ConstantIndicators) {
    auto yes = run_bernoulli_trials([](TrialRng&) { return true; }, 1000, SeedSchedule{1});
    EXPECT_EQ(yes.mean, 1.0);
    EXPECT_EQ(yes.successes, 1000u);
    EXPECT_EQ(yes.ci_high, 1.0);
    EXPECT_EQ(yes.std_error, 0.0);

    auto no = run_bernoulli_trials([](TrialRng&) { return false; }, 1000, SeedSchedule{1});
    EXPECT_EQ(no.mean, 0.0);
    EXPECT_EQ(no.ci_low, 0.0);
}

TEST(MonteCarloTest, FairCoin) {
    auto e = run_bernoulli_trials([](TrialRng& rng) { return rng.uniform() < 0.5; }, 1000000,
                                  SeedSchedule{99});
    EXPECT_NEAR(e.std_error, 0.0005, 1e-6);
    EXPECT_LE(std::abs(e.mean - 0.5), 3 * e.std_error);
}

TEST(MonteCarloTest, ZeroTrialsIsADomainError) {
    EXPECT_THROW((void)run_bernoulli_trials([](TrialRng&) { return true; }, 0, SeedSchedule{}),
                 std::domain_error);
}

TEST(MonteCarloTest, WilsonInterval) {
    // reference: statsmodels proportion_confint(500, 1000, method="wilson")
    auto [lo, hi] = wilson_interval(500, 1000);
    EXPECT_NEAR(lo, 0.4690696003681042, 1e-9);
    EXPECT_NEAR(hi, 0.5309303996318958, 1e-9);

    EXPECT_EQ(wilson_interval(0, 37).first, 0.0);
    EXPECT_EQ(wilson_interval(37, 37).second, 1.0);
    EXPECT_NEAR(z_for_confidence(0.95), 1.959964, 1e-6);
    EXPECT_THROW((void)wilson_interval(5, 4), std::domain_error);
    EXPECT_THROW((void)z_for_confidence(1.0), std::domain_error);
}

TEST(MonteCarloTest, EstimateInvariants) {
    for (std::uint64_t n : {1u, 2u, 7u, 100u, 12345u}) {
        for (std::uint64_t s = 0; s <= n; s += std::max<std::uint64_t>(1, n / 13)) {
            auto e = make_estimate(s, n);
            ASSERT_EQ(e.mean, static_cast<double>(s) / static_cast<double>(n));
            ASSERT_LE(0.0, e.ci_low);
            ASSERT_LE(e.ci_low, e.mean);
            ASSERT_LE(e.mean, e.ci_high);
            ASSERT_LE(e.ci_high, 1.0);
        }
    }
}

TEST(MonteCarloTest, ResultDoesNotDependOnWorkerCount) {
    auto indicator = [](TrialRng& rng) { return rng.uniform() < 0.37; };
    auto base = run_bernoulli_trials(indicator, 100003, SeedSchedule{5}, 1);
    for (unsigned w : {2u, 3u, 7u, 16u}) {
        EXPECT_EQ(run_bernoulli_trials(indicator, 100003, SeedSchedule{5}, w), base) << w;
    }
}

TEST(MonteCarloTest, ChunkedReductionEqualsSequential) {
    SeedSchedule sched{77};
    std::uint64_t hits = 0;
    for (std::uint64_t k = 0; k < 50000; ++k) {
        TrialRng rng = sched.stream(k);
        hits += rng.uniform() < 0.3 ? 1 : 0;
    }
    auto e = run_bernoulli_trials([](TrialRng& rng) { return rng.uniform() < 0.3; }, 50000, sched, 4);
    EXPECT_EQ(e.successes, hits);
}

TEST(MonteCarloTest, WilsonCoverageCalibration) {
    int covered = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto e = run_bernoulli_trials([](TrialRng& rng) { return rng.uniform() < 0.3; }, 10000,
                                      SeedSchedule{1000 + seed});
        covered += e.contains(0.3) ? 1 : 0;
    }
    EXPECT_GE(covered, 93);
}

TEST(MonteCarloTest, TrialStatesAreDistinct) {
    SeedSchedule sched{42};
    std::set<std::uint64_t> states;
    for (std::uint64_t k = 0; k < 200000; ++k) states.insert(sched.state(k));
    EXPECT_EQ(states.size(), 200000u);
    EXPECT_NE(SeedSchedule{1}.state(0), SeedSchedule{2}.state(0));
}

TEST(MonteCarloTest, TrialRngDraws) {
    TrialRng rng(123);
    std::vector<double> cumulative{0.2, 0.5, 1.0};
    std::vector<int> counts(3, 0);
    for (int k = 0; k < 200000; ++k) {
        double const x = rng.uniform(-2.0, 3.0);
        ASSERT_GE(x, -2.0);
        ASSERT_LT(x, 3.0);
        ++counts[rng.categorical(cumulative)];
    }
    EXPECT_NEAR(counts[0] / 200000.0, 0.2, 0.005);
    EXPECT_NEAR(counts[1] / 200000.0, 0.3, 0.005);
    EXPECT_NEAR(counts[2] / 200000.0, 0.5, 0.005);
}

}  // namespace
}  // namespace patrol
