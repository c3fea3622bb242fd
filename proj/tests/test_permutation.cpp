#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "involab/permutation.hpp"

using namespace involab;

TEST_CASE("construction validates one-line notation") {
    CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({2, 3}), std::invalid_argument);
    CHECK(Permutation{}.empty());
    CHECK(Permutation{2, 1}.size() == 2);
}

TEST_CASE("parse and str round trip") {
    CHECK(Permutation::parse("2341") == Permutation{2, 3, 4, 1});
    CHECK(Permutation::parse("10,3,2,1,4,5,6,7,8,9").size() == 10);
    CHECK(Permutation{2, 3, 4, 1}.str() == "2341");
    const Permutation big = Permutation::parse("10,9,8,7,6,5,4,3,2,1");
    CHECK(Permutation::parse(big.str()) == big);
    CHECK_THROWS_AS(Permutation::parse("12x"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("0"), std::invalid_argument);
}

TEST_CASE("containment") {
    CHECK(contains(Permutation::parse("391867452"), Permutation::parse("51342")));
    CHECK(contains(Permutation::parse("2413"), Permutation{1}));
    CHECK_FALSE(contains(Permutation{1, 2, 3}, Permutation{3, 2, 1}));
    CHECK(contains(Permutation{1, 2, 3}, Permutation{}));
    CHECK_FALSE(contains(Permutation{1, 2}, Permutation{1, 2, 3}));
    CHECK(avoids(Permutation::parse("2143"), Permutation::parse("123")));
}

TEST_CASE("inverse and involutions") {
    CHECK(inverse(Permutation{2, 3, 1}) == Permutation{3, 1, 2});
    CHECK(inverse(Permutation::parse("2413")) == Permutation::parse("3142"));
    CHECK_FALSE(is_involution(Permutation::parse("2413")));
    CHECK(is_involution(Permutation{1}));
    CHECK(is_involution(Permutation::parse("5274163")));
    CHECK(is_involution(Permutation{}));
    const Permutation iota = Permutation::parse("4321");
    CHECK(inverse(iota) == iota);
}

TEST_CASE("sums") {
    CHECK(direct_sum(Permutation{1}, Permutation{1, 2}) == Permutation{1, 2, 3});
    const Permutation skew = skew_sum(Permutation{1}, Permutation{1, 2});
    CHECK(skew == Permutation{3, 1, 2});
    CHECK_FALSE(is_involution(skew));
    CHECK(direct_sum(Permutation{}, Permutation{2, 1}) == Permutation{2, 1});
    CHECK(sum_decomposable(Permutation{1, 2}));
    CHECK_FALSE(sum_decomposable(Permutation{2, 4, 1, 3}));
    CHECK(skew_decomposable(Permutation{2, 3, 1}));
    CHECK_FALSE(skew_decomposable(Permutation{2, 3, 1, 4}));
}

TEST_CASE("inflation") {
    const Permutation sigma = Permutation::parse("2413");
    const std::vector<Permutation> parts = {Permutation{1}, Permutation{1, 3, 2},
                                            Permutation{3, 2, 1}, Permutation{1, 2}};
    CHECK(inflate(sigma, parts) == Permutation::parse("479832156"));

    const Permutation any = Permutation::parse("35142");
    std::vector<Permutation> singletons(any.size(), Permutation{1});
    CHECK(inflate(any, singletons) == any);

    CHECK(inflate(Permutation{1, 2}, {Permutation{2, 1}, Permutation{2, 1}}) ==
          Permutation{2, 1, 4, 3});

    CHECK_THROWS_AS(inflate(sigma, {Permutation{1}}), std::invalid_argument);
    CHECK_THROWS_AS(inflate(Permutation{1}, {Permutation{}}), std::invalid_argument);
}

TEST_CASE("simplicity") {
    CHECK(is_simple(Permutation::parse("2413")));
    CHECK(is_simple(Permutation::parse("3142")));
    CHECK(is_simple(Permutation{1, 2}));
    CHECK(is_simple(Permutation{2, 1}));
    CHECK(is_simple(Permutation::parse("5274163")));
    for (const char* s : {"123", "132", "213", "231", "312", "321"})
        CHECK_FALSE(is_simple(Permutation::parse(s)));
    CHECK_FALSE(is_simple(Permutation{1}));
    CHECK_FALSE(is_simple(Permutation{}));
    CHECK_FALSE(is_simple(Permutation::parse("479832156")));
}

TEST_CASE("substitution decomposition") {
    const Decomposition d = decompose(Permutation::parse("479832156"));
    CHECK(d.root == Permutation::parse("2413"));
    REQUIRE(d.parts.size() == 4);
    CHECK(d.parts[0] == Permutation{1});
    CHECK(d.parts[1] == Permutation{1, 3, 2});
    CHECK(d.parts[2] == Permutation{3, 2, 1});
    CHECK(d.parts[3] == Permutation{1, 2});

    // Sums of three or more components split left-greedily, so the first
    // part is sum indecomposable.
    const Decomposition d123 = decompose(Permutation{1, 2, 3});
    CHECK(d123.root == Permutation{1, 2});
    CHECK(d123.parts == std::vector<Permutation>{Permutation{1}, Permutation{1, 2}});

    const Decomposition d2143 = decompose(Permutation{2, 1, 4, 3});
    CHECK(d2143.root == Permutation{1, 2});
    CHECK(d2143.parts == std::vector<Permutation>{Permutation{2, 1}, Permutation{2, 1}});

    const Decomposition d321 = decompose(Permutation{3, 2, 1});
    CHECK(d321.root == Permutation{2, 1});
    CHECK(d321.parts[0] == Permutation{1});
    CHECK(d321.parts[1] == Permutation{2, 1});

    CHECK_THROWS_AS(decompose(Permutation{1}), std::invalid_argument);
    CHECK_THROWS_AS(decompose(Permutation{}), std::invalid_argument);
}

TEST_CASE("statistics") {
    CHECK(stats(Permutation{1}) == StatProfile{1, 1, 1});
    CHECK(stats(Permutation::parse("5274163")) == StatProfile{3, 3, 3});
    CHECK(stats(Permutation{3, 2, 1}) == StatProfile{1, 3, 3});
    CHECK(stats(Permutation{}) == StatProfile{0, 0, 0});
    CHECK(stats(Permutation::parse("759381642")).lrmin == 4);
    CHECK(stats(Permutation::parse("759381642")).rlmax == 5);
}

TEST_CASE("greedy gridding") {
    // The published staircase diagram for 759381642.
    const Gridding g = greedy_gridding(Permutation::parse("759381642"));
    const std::vector<std::vector<int>> expected = {{1, 2}, {3, 5, 7}, {4, 6}, {8, 9}};
    CHECK(g.cells == expected);

    CHECK(greedy_gridding(Permutation{2, 1}).cells == std::vector<std::vector<int>>{{1, 2}});
    CHECK(greedy_gridding(Permutation{}).cells.empty());

    // 3142: after the prefix cell {3,1}, both remaining entries sit above the
    // smallest included value, so the eastward cell takes them together.
    const Gridding g3142 = greedy_gridding(Permutation::parse("3142"));
    CHECK(g3142.cells == std::vector<std::vector<int>>{{1, 2}, {3, 4}});

    // A southward cell that extends past the previous cell's positions.
    const Gridding g231 = greedy_gridding(Permutation{2, 3, 1});
    CHECK(g231.cells == std::vector<std::vector<int>>{{1}, {2}, {3}});

    CHECK_THROWS_AS(greedy_gridding(Permutation{1, 2, 3}), std::domain_error);
    CHECK_THROWS_AS(greedy_gridding(Permutation::parse("391867452")), std::domain_error);
}
