#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "patrol/randomized_radius.hpp"

namespace patrol {
namespace {

using std::numbers::pi;

RadiusDistribution two_point() { return RadiusDistribution({{0.9, 0.5}, {1.1, 0.5}}); }
RadiusDistribution unit_atom() { return RadiusDistribution({{1.0, 1.0}}); }

/// Random law with 2..6 atoms, mean shifted to exactly one.
RadiusDistribution random_distribution(std::mt19937_64& gen) {
    std::uniform_int_distribution<int> count(2, 6);
    std::uniform_real_distribution<double> k(0.8, 1.2);
    std::uniform_real_distribution<double> w(0.05, 1.0);
    int const m = count(gen);
    std::vector<RadiusAtom> atoms(m);
    double mass = 0.0;
    for (auto& a : atoms) mass += (a.weight = w(gen));
    double mean = 0.0;
    for (auto& a : atoms) {
        a.weight /= mass;
        a.k = k(gen);
        mean += a.weight * a.k;
    }
    for (auto& a : atoms) a.k += 1.0 - mean;
    return RadiusDistribution(atoms);
}

TEST(RandomizedRadiusTest, DistributionValidation) {
    EXPECT_THROW(RadiusDistribution({}), ValidationError);
    EXPECT_THROW(RadiusDistribution({{0.9, 0.5}, {1.1, 0.4}}), ValidationError);
    EXPECT_THROW(RadiusDistribution({{0.9, 0.5}, {1.2, 0.5}}), ValidationError);
    EXPECT_THROW(RadiusDistribution({{0.9, 0.5}, {1.1, 0.5}}, 0.95), ValidationError);
    EXPECT_THROW(RadiusDistribution({{1.0, 1.0}}, 1.05), ValidationError);
    EXPECT_NO_THROW(RadiusDistribution({{1.0, 1.0}}, 0.8, 1.3));
    EXPECT_EQ(two_point().k_minus(), 0.9);
    EXPECT_EQ(two_point().k_plus(), 1.1);
}

TEST(RandomizedRadiusTest, JensenSides) {
    auto eq = jensen_sides(unit_atom(), 5, 100);
    EXPECT_DOUBLE_EQ(eq.lhs, 0.05);
    EXPECT_DOUBLE_EQ(eq.rhs, 0.05);

    auto two = jensen_sides(two_point(), 5, 100);
    EXPECT_NEAR(two.lhs, 0.0505050505050505, 1e-15);
    EXPECT_DOUBLE_EQ(two.rhs, 0.05);
    EXPECT_NEAR(two.lhs / two.rhs, 1.0101010, 1e-7);

    EXPECT_THROW((void)jensen_sides(two_point(), 90, 100), ValidationError);
}

TEST(RandomizedRadiusTest, JensenHoldsForRandomDistributions) {
    std::mt19937_64 gen(123);
    for (int k = 0; k < 1000; ++k) {
        auto const d = random_distribution(gen);
        auto const sides = jensen_sides(d, 5, 100);
        ASSERT_GT(sides.lhs - sides.rhs, 1e-12);
    }
    auto const eq = jensen_sides(unit_atom(), 5, 100);
    EXPECT_LE(std::abs(eq.lhs - eq.rhs), 1e-12);
}

TEST(RandomizedRadiusTest, AsymptoticRandomized) {
    CircularPatrolScenario s{100, 5, 10, 2, 1};
    EXPECT_EQ(asymptotic_probability_randomized(s, unit_atom()), asymptotic_summary(s).p_asym);
    EXPECT_NEAR(asymptotic_probability_randomized(s, two_point()), 0.359476032028877302, 1e-12);
    s.vehicles = asymptotic_summary(s).m_min;
    EXPECT_EQ(asymptotic_probability_randomized(s, two_point()), 1.0);
}

TEST(RandomizedRadiusTest, RandomizationNeverLowersTheAsymptote) {
    std::mt19937_64 gen(9);
    std::uniform_real_distribution<double> unit(0.01, 1.0);
    for (int k = 0; k < 500; ++k) {
        auto const d = random_distribution(gen);
        CircularPatrolScenario s{100, 20 * unit(gen), 1 + k % 7, 3 * unit(gen), unit(gen)};
        double const base = asymptotic_summary(s).coverage;
        double const randomized = asymptotic_probability_randomized(s, d);
        EXPECT_GE(randomized, std::min(1.0, base));
    }
}

TEST(RandomizedRadiusTest, DegenerateLawReproducesFixedRadius) {
    CircularPatrolScenario s{100, 5, 10, 2, 1};
    EXPECT_EQ(mc_probability_random_radius(s, unit_atom(), 100000, 21), mc_probability(s, 100000, 21));
}

TEST(RandomizedRadiusTest, StaticMixtureClosedForm) {
    // sum_k p_k min(1, n asin(r / (k R)) / pi), evaluated with mpmath
    constexpr double kMixture = 0.160833050049380446;
    CircularPatrolScenario s{100, 5, 10, 0, 1};
    auto const e = mc_probability_random_radius(s, two_point(), 1000000, 5);
    EXPECT_LE(std::abs(e.mean - kMixture), 3 * e.std_error) << e.mean;
    double const closed = 0.5 * (10 * std::asin(5.0 / 90) / pi + 10 * std::asin(5.0 / 110) / pi);
    EXPECT_NEAR(closed, kMixture, 1e-15);
}

TEST(RandomizedRadiusTest, MonteCarloDeterministic) {
    CircularPatrolScenario s{100, 5, 10, 2, 1};
    EXPECT_EQ(mc_probability_random_radius(s, two_point(), 50000, 8, 1),
              mc_probability_random_radius(s, two_point(), 50000, 8, 5));
}

TEST(RandomizedRadiusTest, ErgodicConstantProcess) {
    PiecewiseRadiusProcess p{{1.0}, 1.0, RadiusTransition::cyclic, 100.0};
    auto const avg = ergodic_time_average(p, 1);
    EXPECT_DOUBLE_EQ(avg.time_avg_inv_k, 1.0);
    EXPECT_DOUBLE_EQ(avg.ensemble_avg_inv_k, 1.0);
}

TEST(RandomizedRadiusTest, ErgodicCyclicProcess) {
    PiecewiseRadiusProcess p{{0.9, 1.1}, 2.0, RadiusTransition::cyclic, 2e4};
    auto const avg = ergodic_time_average(p, 1);
    EXPECT_NEAR(avg.time_avg_inv_k, 1.0101010101010101, 1e-3);
    EXPECT_NEAR(avg.ensemble_avg_inv_k, 1.0101010101010101, 1e-15);
}

TEST(RandomizedRadiusTest, ErgodicRandomProcess) {
    PiecewiseRadiusProcess p{{0.9, 1.1}, 1.0, RadiusTransition::uniform_random, 1e4};
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        auto const avg = ergodic_time_average(p, seed);
        ASSERT_GT(avg.std_error, 0.0);
        EXPECT_LE(std::abs(avg.time_avg_inv_k - avg.ensemble_avg_inv_k), 5 * avg.std_error);
    }
    auto bad = p;
    bad.horizon = 50;
    EXPECT_THROW((void)ergodic_time_average(bad, 1), ValidationError);
}

}  // namespace
}  // namespace patrol
