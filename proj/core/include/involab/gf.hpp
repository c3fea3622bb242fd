#pragma once

// The generating-function catalog and the assembled enumerations. Every
// assembled series is computed along two independent routes (closed form vs
// structural equations over the substitution decomposition) and the two are
// compared coefficientwise; a mismatch throws, since it can only mean an
// implementation bug.
//
// Class generating functions do not count the empty permutation (c_0 = 0).

#include "involab/series.hpp"

#include <string>

namespace involab {

enum class Gf {
    Catalan,                     // c(x) = (1 - 2x - sqrt(1 - 4x)) / (2x)
    LargeSchroder,               // f(x) = (1 - x - sqrt(1 - 6x + x^2)) / 2
    SmallSchroder,               // f / (1 + f)
    Layered,                     // x / (1 - 2x)
    CentralBinomialInvolutions,  // (1 - 4x^2 - sqrt(1 - 4x^2)) / (4x^2 - 2x)
    Motzkin,                     // involutions avoiding 1234
};

UniSeries gf_known(Gf which, int order);
// Catalog lookup by name: "catalan", "large-schroder", "small-schroder",
// "layered", "central-binomial-involutions", "motzkin".
UniSeries gf_known(const std::string& name, int order);

// Involutions avoiding 2413 (equivalently 2413 and 3142).
UniSeries gf_separable_involutions(int order);
// Involutions avoiding 1342 (equivalently 1342 and 1423).
UniSeries assemble_1342(int order);
// Involutions avoiding 2341 (equivalently 2341 and 4123).
UniSeries assemble_2341(int order);
// Pairs of cb-factor-free words with matching a- and d-positions:
// h(x) = (1 + x) / (1 - 5x + x^2 - x^3).
UniSeries gf_word_pairs(int order);

}  // namespace involab
