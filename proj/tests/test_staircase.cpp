#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "involab/enumerate.hpp"
#include "involab/staircase.hpp"

using namespace involab;

TEST_CASE("closed forms reproduce the printed coefficients") {
    const UniSeries s1 = staircase::closed(1, 19);
    const long s1_expect[] = {2, 2, 10, 22, 68, 184, 530, 1502};
    for (int t = 0; t < 8; ++t) CHECK(s1.integer_coeff(5 + 2 * t) == s1_expect[t]);

    const UniSeries s0 = staircase::closed(0, 20);
    const long s0_expect[] = {1, 2, 8, 22, 68, 198, 586};
    for (int t = 0; t < 7; ++t) CHECK(s0.integer_coeff(8 + 2 * t) == s0_expect[t]);
    for (int k = 0; k < 8; ++k) CHECK(s0.coeff(k) == 0);

    const UniSeries s2 = staircase::closed(2, 18);
    const long s2_expect[] = {3, 4, 15, 36, 105, 288, 819};
    for (int t = 0; t < 7; ++t) CHECK(s2.integer_coeff(6 + 2 * t) == s2_expect[t]);
}

TEST_CASE("the recurrence limit equals the closed forms") {
    for (int fp : {0, 1, 2}) {
        CAPTURE(fp);
        CHECK(staircase::limit(fp, 19) == staircase::closed(fp, 19));
        CHECK(staircase::limit_refined(fp, 14) == staircase::closed_refined(fp, 14));
    }
}

TEST_CASE("stage counts grow toward the limit and stabilize") {
    for (int fp : {0, 1, 2}) {
        const UniSeries lim = staircase::limit(fp, 14);
        // Nothing is complete while the required second-stage dot is open.
        CHECK(staircase::iterate(fp, 2, 14).counts.is_zero());
        UniSeries prev = staircase::iterate(fp, 3, 14).counts;
        for (int stage = 4; stage <= 10; ++stage) {
            const UniSeries cur = staircase::iterate(fp, stage, 14).counts;
            for (int k = 0; k <= 14; ++k) CHECK(cur.coeff(k) >= prev.coeff(k));
            prev = cur;
        }
        for (int k = 4; k <= 14; ++k) {
            const int stage = (k + 1) / 2 + 2;
            CHECK(staircase::iterate(fp, stage, 14).counts.coeff(k) == lim.coeff(k));
        }
    }
    CHECK_THROWS_AS(staircase::iterate(1, 1, 10), std::invalid_argument);
    CHECK_THROWS_AS(staircase::iterate(3, 4, 10), std::invalid_argument);
}

TEST_CASE("marker fixed points satisfy their substitution equations") {
    const UniSeries ystar = staircase::marker_fixed_point(20);
    CHECK(staircase::marker_map(ystar) == ystar);
    CHECK(ystar.coeff(0) == 0);
    CHECK(ystar.coeff(2) == 1);

    const BiSeries yv = staircase::refined_fixed_point_v(16);
    CHECK(staircase::refined_map_v(staircase::refined_map_u(yv)) == yv);
}

TEST_CASE("refined series against the brute-force joint distribution") {
    const int cap = 11;
    const BiSeries h0 = staircase::closed_refined(0, cap);
    const BiSeries h1 = staircase::closed_refined(1, cap);
    const BiSeries h2 = staircase::closed_refined(2, cap);
    for (int n = 4; n <= cap; ++n) {
        const RefinedCount rc = refined_simple_123_counts(n);
        for (int a = 0; a <= n; ++a) {
            const int b = n - a;
            CHECK(h1.integer_coeff(a, b) + h1.integer_coeff(b, a) == rc.total_with(1, a, b));
            CHECK(h0.integer_coeff(a, b) == rc.total_with(0, a, b));
            CHECK(h2.integer_coeff(a, b) == rc.total_with(2, a, b));
        }
    }
}

TEST_CASE("diagonal specialization recovers the univariate series") {
    const int w = 16;
    const UniSeries both = staircase::closed_refined(1, w).eval_diagonal() +
                           staircase::closed_refined(1, w).swapped_vars().eval_diagonal();
    CHECK(both == staircase::closed(1, w));
    CHECK(staircase::closed_refined(0, w).eval_diagonal() == staircase::closed(0, w));
    CHECK(staircase::closed_refined(2, w).eval_diagonal() == staircase::closed(2, w));
}
