#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "involab/growth.hpp"

using namespace involab;

TEST_CASE("smallest positive root with certified bracket") {
    // 1 - 6x + x^2 has smallest positive root 3 - 2 sqrt(2).
    const Rational tol = Rational(1) / BigInt("1000000000000");
    const GrowthReport rep = smallest_positive_root({1, -6, 1}, tol, "schroder-denominator");
    CHECK(rep.hi - rep.lo <= tol);
    const auto s2 = sqrt_bracket(2, 16);
    CHECK(rep.lo <= 3 - 2 * s2.first);
    CHECK(3 - 2 * s2.second <= rep.hi);
    // Odd sign change across the bracket.
    CHECK(eval_poly({1, -6, 1}, rep.lo) * eval_poly({1, -6, 1}, rep.hi) <= 0);

    CHECK_THROWS_AS(smallest_positive_root({1, 0, 1}, tol), std::domain_error);
    CHECK_THROWS_AS(smallest_positive_root({1, -6, 1}, Rational(0)), std::invalid_argument);
}

TEST_CASE("reciprocal reporting") {
    const Rational tol = Rational(1) / BigInt("1000000000");
    const GrowthReport rep = reciprocal_root_growth({1, -6, 1}, tol);
    CHECK(rep.hi - rep.lo <= tol);
    const auto s2 = sqrt_bracket(2, 16);
    CHECK(rep.lo <= 3 + 2 * s2.second);
    CHECK(3 + 2 * s2.first <= rep.hi);
}

TEST_CASE("closed-form constants") {
    const auto constants = growth_constants();
    CHECK(constants.at("av-i-2413").value(11).substr(0, 13) == "3.14626436994");
    CHECK(constants.at("av-i-1342").value(11).substr(0, 13) == "2.61803398874");
    CHECK(constants.at("av-i-1234").value_double() == 3.0);
    CHECK(constants.at("av-1234").value_double() == 9.0);
    CHECK(constants.at("av-1342").value_double() == 8.0);
    const double g2341 = constants.at("av-i-2341").value_double();
    CHECK(g2341 > 2.535);
    CHECK(g2341 < 2.545);
    for (const auto& [name, rep] : constants) {
        CAPTURE(name);
        CHECK(rep.lo <= rep.hi);
        CHECK(rep.certified);
    }
}

TEST_CASE("the 1324 bounds") {
    const GrowthReport upper = upper_bound_1324();
    CHECK(upper.hi < ratio(484, 100));
    CHECK(upper.lo > ratio(483, 100));
    const auto constants = growth_constants();
    CHECK(constants.at("av-i-1324-lower").lo > ratio(313, 100));
}

TEST_CASE("empirical estimates") {
    CHECK(empirical_growth({1, 1, 1, 1}).value_double() == doctest::Approx(1.0));
    std::vector<BigInt> pow2s;
    for (int n = 1; n <= 16; ++n) pow2s.push_back(pow2(n));
    const GrowthReport two = empirical_growth(pow2s);
    CHECK(two.value_double() == doctest::Approx(2.0).epsilon(0.05));
    CHECK_FALSE(two.certified);
    CHECK(two.method == "empirical-nth-root");
    CHECK_THROWS_AS(empirical_growth({1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(empirical_growth({1, 2, 0, 4}), std::invalid_argument);
}

TEST_CASE("report serialization") {
    const GrowthReport rep = smallest_positive_root({1, -6, 1}, ratio(1, 1024), "demo");
    const std::string json = rep.to_json();
    CHECK(json.find("\"source\":\"demo\"") != std::string::npos);
    CHECK(json.find("\"method\":\"root-of-polynomial\"") != std::string::npos);
    CHECK(json.find("\"bracket\":[\"") != std::string::npos);
    CHECK(json.find("\"certified\":true") != std::string::npos);
}
