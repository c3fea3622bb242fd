#pragma once

// The red/blue coloring of 1324-avoiders with right-to-left maxima forced
// blue, the four-letter position/value word encoding, exhaustive checking of
// its properties on involutions, and automaton-based counting of the word
// pairs that bound |Av^I_n(1324)| from above.

#include "involab/permutation.hpp"
#include "involab/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace involab {

enum class EntryColor : uint8_t { Red, Blue };

struct ColoredPerm {
    Permutation perm;
    std::vector<EntryColor> colors;  // colors[i] is the color of perm(i+1)
};

// Greedy left-to-right coloring (an entry is red unless that would complete
// a red 132), then every right-to-left maximum is recolored blue. The red
// entries avoid 132 and the blue entries avoid 213. Requires pi in Av(1324).
ColoredPerm color_1324(const Permutation& pi);

// e is indexed by position, v by value. Red entries are labeled 'a' at
// left-to-right minima and 'b' otherwise; blue entries are labeled 'd' at
// right-to-left maxima and 'c' otherwise.
struct LabelWordPair {
    std::string e;
    std::string v;
};
LabelWordPair encode(const Permutation& pi);

struct EncodingReport {
    int n = 0;
    BigInt avoider_count = 0;
    BigInt distinct_pairs = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty() && distinct_pairs == avoider_count; }
    std::string to_json() const;
};

// Exhaustive over Av^I_n(1324): no cb factor in either word, matching a- and
// d-positions between the two words, and injectivity of pi -> (e, v).
EncodingReport verify_encoding(int n);

// Number of pairs (e, v) of length-n words over {a,b,c,d} with no cb factor
// in either word and with a's and d's in identical positions, by a product
// automaton over the six admissible letter pairs.
BigInt count_word_pairs(int n);
std::vector<BigInt> word_pair_counts(int upto);

}  // namespace involab
