#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "involab/coloring.hpp"
#include "involab/enumerate.hpp"
#include "involab/gf.hpp"

using namespace involab;

TEST_CASE("coloring basics") {
    // Every entry of a decreasing permutation is a right-to-left maximum.
    const ColoredPerm all_blue = color_1324(Permutation{3, 2, 1});
    for (auto c : all_blue.colors) CHECK(c == EntryColor::Blue);

    const ColoredPerm one = color_1324(Permutation{1});
    CHECK(one.colors == std::vector<EntryColor>{EntryColor::Blue});

    CHECK_THROWS_AS(color_1324(Permutation::parse("1324")), std::domain_error);
    CHECK_THROWS_AS(color_1324(Permutation::parse("251364")), std::domain_error);
}

TEST_CASE("encoding examples") {
    const LabelWordPair ddd = encode(Permutation{3, 2, 1});
    CHECK(ddd.e == "ddd");
    CHECK(ddd.v == "ddd");

    const LabelWordPair d = encode(Permutation{1});
    CHECK(d.e == "d");
    CHECK(d.v == "d");

    // In 12 the first entry stays red (a left-to-right minimum), the second
    // is a right-to-left maximum.
    const LabelWordPair ad = encode(Permutation{1, 2});
    CHECK(ad.e == "ad");
    CHECK(ad.v == "ad");
}

TEST_CASE("verification report") {
    for (int n = 1; n <= 8; ++n) {
        const EncodingReport rep = verify_encoding(n);
        CAPTURE(n);
        CHECK(rep.ok());
        CHECK(rep.violations.empty());
        CHECK(rep.distinct_pairs == rep.avoider_count);
        CHECK(rep.avoider_count == count_avoiders({Permutation::parse("1324")}, n, true));
    }
    const EncodingReport one = verify_encoding(1);
    CHECK(one.to_json().find("\"violations\":[]") != std::string::npos);
    CHECK_THROWS_AS(verify_encoding(0), std::invalid_argument);
}

TEST_CASE("word pair counting") {
    CHECK(count_word_pairs(0) == 1);
    CHECK(count_word_pairs(1) == 6);
    const UniSeries h = gf_word_pairs(14);
    const auto counts = word_pair_counts(14);
    for (int n = 0; n <= 14; ++n) CHECK(counts[n] == h.integer_coeff(n));
    for (int n = 1; n <= 9; ++n)
        CHECK(count_word_pairs(n) >= count_avoiders({Permutation::parse("1324")}, n, true));
    CHECK_THROWS_AS(count_word_pairs(-1), std::invalid_argument);
}
