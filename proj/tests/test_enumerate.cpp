#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "involab/enumerate.hpp"
#include "involab/permutation.hpp"

#include <set>

using namespace involab;

TEST_CASE("involution stream") {
    int empty_count = 0;
    for_each_involution(0, [&](const Permutation& p) {
        CHECK(p.empty());
        ++empty_count;
    });
    CHECK(empty_count == 1);

    std::set<Permutation> three;
    for_each_involution(3, [&](const Permutation& p) {
        CHECK(is_involution(p));
        three.insert(p);
    });
    CHECK(three == std::set<Permutation>{Permutation{1, 2, 3}, Permutation{1, 3, 2},
                                         Permutation{2, 1, 3}, Permutation{3, 2, 1}});

    BigInt ten = 0;
    for_each_involution(10, [&](const Permutation&) { ten += 1; });
    CHECK(ten == 9496);
    CHECK(involution_count(10) == 9496);
    CHECK(involution_count(0) == 1);
}

TEST_CASE("count_avoiders matches the published values") {
    CHECK(count_avoiders({Permutation::parse("1342")}, 7, true) == 156);
    CHECK(count_avoiders({Permutation::parse("2413")}, 11, true) == 9600);
    CHECK(count_avoiders({Permutation::parse("2431")}, 12, true) == 16238);
    CHECK_THROWS_AS(count_avoiders({}, 5, true), std::invalid_argument);
}

TEST_CASE("count tables") {
    const CountTable t = tabulate_avoiders({Permutation::parse("2341")}, 0, 6, true);
    CHECK(t.rows.size() == 7);
    // Nothing of length <= 3 contains a length-4 pattern, so the low rows
    // are the full involution counts.
    for (int n = 0; n <= 3; ++n) CHECK(t.rows.at(n) == involution_count(n));
    CHECK(t.rows.at(5) == 25);
    CHECK(t.rows.at(6) == 66);
    for (const auto& [n, c] : t.rows) CHECK(c >= 0);
    CHECK_THROWS_AS(tabulate_avoiders({Permutation{2, 1}}, 3, 2, true), std::invalid_argument);
}

TEST_CASE("count_avoiders for plain permutations") {
    // Av_n(123) is counted by the Catalan numbers.
    const long catalan[] = {1, 2, 5, 14, 42, 132};
    for (int n = 1; n <= 6; ++n)
        CHECK(count_avoiders({Permutation{1, 2, 3}}, n, false) == catalan[n - 1]);
    // Small sanity: involutions are a subset of permutations.
    CHECK(count_avoiders({Permutation::parse("1342")}, 6, false) >=
          count_avoiders({Permutation::parse("1342")}, 6, true));
}

TEST_CASE("simple avoider counts") {
    CHECK(count_simple_avoiders(Permutation::parse("1234"), 8) == 35);
    for (int n = 5; n <= 12; ++n) CHECK(count_simple_avoiders(Permutation::parse("2413"), n) == 0);
    CHECK(count_simple_avoiders(Permutation::parse("2341"), 7) == 3);
    CHECK(count_simple_avoiders(Permutation::parse("2341"), 13) == 68);
    CHECK_THROWS_AS(count_simple_avoiders(Permutation::parse("2341"), 1), std::invalid_argument);
}

TEST_CASE("refined counts of simple 123-avoiding involutions") {
    // Totals by fixed-point count match the closed-form series coefficients.
    CHECK(refined_simple_123_counts(5).total_with_fp(1) == 2);
    CHECK(refined_simple_123_counts(6).total_with_fp(2) == 3);
    CHECK(refined_simple_123_counts(8).total_with_fp(0) == 1);
    CHECK(refined_simple_123_counts(7).total_with_fp(1) == 2);
    const RefinedCount rc = refined_simple_123_counts(9);
    for (const auto& [key, cnt] : rc.counts) {
        CHECK(key[0] <= 2);            // at most two fixed points
        CHECK(key[1] + key[2] == 9);   // every entry is a minimum or a maximum
        CHECK(cnt > 0);
    }
    CHECK_THROWS_AS(refined_simple_123_counts(3), std::invalid_argument);
}

TEST_CASE("simples of a class") {
    const auto s4 = simples_of_class({}, 4);
    CHECK(s4 == std::vector<Permutation>{Permutation::parse("2413"), Permutation::parse("3142")});
    for (int n = 4; n <= 7; ++n)
        CHECK(simples_of_class({Permutation::parse("1342"), Permutation::parse("1423")}, n) ==
              simples_of_class({Permutation{1, 2, 3}}, n));
    // The one extra simple involution avoiding 2341 appears at length 7.
    auto avoiding_2341 = simple_involutions_avoiding(Permutation::parse("2341"), 7);
    auto avoiding_123 = simple_involutions_avoiding(Permutation{1, 2, 3}, 7);
    CHECK(avoiding_2341.size() == avoiding_123.size() + 1);
    const Permutation special = Permutation::parse("5274163");
    CHECK(std::find(avoiding_2341.begin(), avoiding_2341.end(), special) != avoiding_2341.end());
    CHECK(std::find(avoiding_123.begin(), avoiding_123.end(), special) == avoiding_123.end());
}

TEST_CASE("merge injection") {
    for (int n = 1; n <= 5; ++n) {
        CHECK(merge_injection_check(Permutation::parse("1324"), n));
        CHECK(merge_injection_check(Permutation::parse("1234"), n));
    }
    // 21 is skew decomposable, 2341 is not an involution.
    CHECK_THROWS_AS(merge_injection_check(Permutation{2, 1}, 1), std::invalid_argument);
    CHECK_THROWS_AS(merge_injection_check(Permutation::parse("2341"), 2), std::invalid_argument);
}

TEST_CASE("threaded counting is deterministic") {
    const Permutation beta = Permutation::parse("3421");
    CHECK(count_avoiders({beta}, 10, true, 1) == count_avoiders({beta}, 10, true, 3));
    CHECK(count_simple_avoiders(beta, 10, 1) == count_simple_avoiders(beta, 10, 3));
}

TEST_CASE("enumeration bounds are validated") {
    CHECK_THROWS_AS(count_avoiders({Permutation{2, 1}}, kMaxEnumerationLength + 1, true),
                    std::invalid_argument);
    CHECK_THROWS_AS(involution_count(-1), std::invalid_argument);
}
