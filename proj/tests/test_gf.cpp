#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "involab/enumerate.hpp"
#include "involab/gf.hpp"
#include "involab/rational.hpp"

using namespace involab;

TEST_CASE("catalog low-order coefficients") {
    const UniSeries cat = gf_known(Gf::Catalan, 8);
    const long cat_expect[] = {1, 2, 5, 14};
    for (int k = 1; k <= 4; ++k) CHECK(cat.integer_coeff(k) == cat_expect[k - 1]);
    CHECK(cat.coeff(0) == 0);

    const UniSeries cbi = gf_known(Gf::CentralBinomialInvolutions, 12);
    const long cbi_expect[] = {1, 2, 3, 6};
    for (int k = 1; k <= 4; ++k) CHECK(cbi.integer_coeff(k) == cbi_expect[k - 1]);
    for (int k = 1; k <= 12; ++k) CHECK(cbi.integer_coeff(k) == binomial(k, k / 2));

    const UniSeries lay = gf_known(Gf::Layered, 10);
    for (int k = 1; k <= 10; ++k) CHECK(lay.integer_coeff(k) == pow2(k - 1));

    CHECK(gf_known("small-schroder", 5).integer_coeff(5) == 45);
    CHECK_THROWS_AS(gf_known("no-such-series", 5), std::invalid_argument);
}

TEST_CASE("motzkin equals the 1234-avoiding involution counts") {
    const UniSeries mot = gf_known(Gf::Motzkin, 12);
    for (int n = 1; n <= 12; ++n)
        CHECK(mot.integer_coeff(n) == count_avoiders({Permutation::parse("1234")}, n, true));
}

TEST_CASE("separable involutions") {
    const UniSeries g = gf_separable_involutions(20);
    CHECK(g.integer_coeff(11) == 9600);
    CHECK(g.integer_coeff(20) == 133517130);
    for (int n = 1; n <= 11; ++n) {
        CHECK(g.integer_coeff(n) ==
              count_avoiders({Permutation::parse("2413"), Permutation::parse("3142")}, n, true));
        // For involutions the two-element basis is redundant.
        CHECK(g.integer_coeff(n) == count_avoiders({Permutation::parse("2413")}, n, true));
    }
}

TEST_CASE("involutions avoiding 1342") {
    const UniSeries g = assemble_1342(20);
    CHECK(g.integer_coeff(7) == 156);
    CHECK(g.integer_coeff(20) == 39469786);
    for (int n = 1; n <= 11; ++n)
        CHECK(g.integer_coeff(n) ==
              count_avoiders({Permutation::parse("1342"), Permutation::parse("1423")}, n, true));
}

TEST_CASE("involutions avoiding 2341") {
    const UniSeries g = assemble_2341(20);
    CHECK(g.integer_coeff(8) == 441);
    CHECK(g.integer_coeff(20) == 31900554);
    for (int n = 1; n <= 11; ++n)
        CHECK(g.integer_coeff(n) ==
              count_avoiders({Permutation::parse("2341"), Permutation::parse("4123")}, n, true));
}

TEST_CASE("word pairs") {
    const UniSeries h = gf_word_pairs(12);
    CHECK(h.integer_coeff(0) == 1);
    CHECK(h.integer_coeff(1) == 6);
    CHECK(h.integer_coeff(2) == 29);
    // h_n = 5 h_{n-1} - h_{n-2} + h_{n-3} from degree 4 on.
    for (int n = 4; n <= 12; ++n)
        CHECK(h.coeff(n) == 5 * h.coeff(n - 1) - h.coeff(n - 2) + h.coeff(n - 3));
}

TEST_CASE("integrality of all class series") {
    for (const UniSeries& s : {gf_separable_involutions(24), assemble_1342(24), assemble_2341(24),
                               gf_known(Gf::Motzkin, 24), gf_word_pairs(24)})
        for (int k = 0; k <= 24; ++k) CHECK(is_integer(s.coeff(k)));
}
