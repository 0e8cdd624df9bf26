#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "patrol/scenario.hpp"

namespace patrol {
namespace {

CircularPatrolScenario reference() { return {100, 5, 10, 2, 1}; }

std::string field_of(auto const& s) {
    try {
        validate(s);
    } catch (ValidationError const& e) {
        return e.field() + ": " + e.what();
    }
    return "valid";
}

TEST(ScenarioTest, ReferenceIsValid) {
    EXPECT_EQ(validate(reference()), reference());
    EXPECT_EQ(field_of(reference()), "valid");
}

TEST(ScenarioTest, RejectsZeroIntruderSpeed) {
    auto s = reference();
    s.intruder_speed = 0;
    EXPECT_EQ(field_of(s), "u: u must be positive");
}

TEST(ScenarioTest, RejectsScanRadiusBeyondPatrolRadius) {
    CircularPatrolScenario s{100, 150, 1, 2, 1};
    EXPECT_EQ(field_of(s), "r: r < R required");
    s.scan_radius = 100;
    EXPECT_EQ(field_of(s), "r: r < R required");
}

TEST(ScenarioTest, RejectsOtherViolations) {
    auto s = reference();
    s.vehicles = 0;
    EXPECT_EQ(field_of(s), "n: n must be at least 1");
    s = reference();
    s.vehicle_speed = -1;
    EXPECT_EQ(field_of(s), "v: v must be non-negative");
    s = reference();
    s.patrol_radius = NAN;
    EXPECT_EQ(field_of(s), "R: R must be finite");
    s = reference();
    s.scan_radius = 0;
    EXPECT_EQ(field_of(s), "r: r must be positive");
}

TEST(ScenarioTest, StaticCircularFleetIsAllowedButStaticLinearIsNot) {
    auto s = reference();
    s.vehicle_speed = 0;
    EXPECT_EQ(field_of(s), "valid");
    LinearPatrolScenario l{100, 5, 5, 0, 1};
    EXPECT_EQ(field_of(l), "v: v must be positive");
}

TEST(ScenarioTest, LinearNeedsScanDiameterInsideSegment) {
    LinearPatrolScenario l{100, 5, 5, 2, 1};
    EXPECT_EQ(field_of(l), "valid");
    l.scan_radius = 50;
    EXPECT_EQ(field_of(l), "r: 2r < R required");
    EXPECT_DOUBLE_EQ((LinearPatrolScenario{100, 5, 5, 2, 1}.spacing()), 40.0);
}

TEST(ScenarioTest, DerivedAngles) {
    auto a = derived_angles(reference());
    EXPECT_NEAR(a.alpha, 0.4636476090008061, 1e-15);
    EXPECT_DOUBLE_EQ(a.omega, 0.02);

    a = derived_angles({100, 5, 10, 0, 1});
    EXPECT_EQ(a.alpha, std::numbers::pi / 2);
    EXPECT_EQ(a.omega, 0.0);

    a = derived_angles({1, 0.5, 1, 1, 1});
    EXPECT_DOUBLE_EQ(a.alpha, std::numbers::pi / 4);
    EXPECT_DOUBLE_EQ(a.omega, 1.0);
}

TEST(ScenarioTest, InclinationPropertyOverRandomScenarios) {
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> speed(0.0, 50.0);
    std::uniform_real_distribution<double> pos(1e-3, 50.0);
    for (int k = 0; k < 2000; ++k) {
        CircularPatrolScenario s{100, 5, 3, k % 10 == 0 ? 0.0 : speed(gen), pos(gen)};
        auto const alpha = derived_angles(validate(s)).alpha;
        ASSERT_GT(alpha, 0.0);
        ASSERT_LE(alpha, std::numbers::pi / 2);
        double const expected = s.intruder_speed / std::hypot(s.intruder_speed, s.vehicle_speed);
        ASSERT_NEAR(std::sin(alpha), expected, 1e-12 * expected);
        ASSERT_EQ(validate(validate(s)), validate(s));
    }
}

}  // namespace
}  // namespace patrol
