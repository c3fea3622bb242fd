#pragma once

// Brute-force oracles: pattern-pruned generation of involutions (and plain
// permutations), simple-involution counting, refined statistics, and the
// computational checks used to validate the structural results.
//
// The involution search places, at each step, the smallest unfilled position:
// either as a fixed point or paired with a larger unfilled position. A branch
// is abandoned as soon as the placed entries contain a basis pattern, and the
// pattern test is incremental (only occurrences through newly placed entries
// are searched). Subtree tasks are independent and side-effect-free, so any
// scheduler yields the same totals.

#include "involab/permutation.hpp"
#include "involab/rational.hpp"

#include <array>
#include <functional>
#include <map>
#include <vector>

namespace involab {

inline constexpr int kMaxEnumerationLength = 32;

// I(n) = I(n-1) + (n-1) I(n-2): total involutions of length n.
BigInt involution_count(int n);

// Every involution of length n, exactly once.
void for_each_involution(int n, const std::function<void(const Permutation&)>& fn);

// |Av^I_n(basis)| (involutions_only) or |Av_n(basis)|.
BigInt count_avoiders(const std::vector<Permutation>& basis, int n, bool involutions_only,
                      int threads = 1);

// A basis together with its counting sequence over a range of lengths.
struct CountTable {
    std::vector<Permutation> basis;
    bool involutions_only = true;
    std::map<int, BigInt> rows;  // n -> exact count
};
CountTable tabulate_avoiders(const std::vector<Permutation>& basis, int lo, int hi,
                             bool involutions_only, int threads = 1);

// Streaming variants (single-threaded, generation order fixed).
void for_each_avoiding_involution(const std::vector<Permutation>& basis, int n,
                                  const std::function<void(const Permutation&)>& fn);
void for_each_avoiding_permutation(const std::vector<Permutation>& basis, int n,
                                   const std::function<void(const Permutation&)>& fn);

// Simple involutions of length n avoiding beta.
BigInt count_simple_avoiders(const Permutation& beta, int n, int threads = 1);
std::vector<Permutation> simple_involutions_avoiding(const Permutation& beta, int n);

// All simple permutations of length n avoiding every basis element (the
// basis may be empty).
std::vector<Permutation> simples_of_class(const std::vector<Permutation>& basis, int n);

// Joint (fp, lrmin, rlmax) distribution over the simple members of
// Av^I(123) of length n. Avoiding 123 forces fp <= 2.
struct RefinedCount {
    int n = 0;
    std::map<std::array<int, 3>, BigInt> counts;  // key = {fp, lrmin, rlmax}
    BigInt total_with_fp(int fp) const;
    BigInt total_with(int fp, int lrmin, int rlmax) const;
};
RefinedCount refined_simple_123_counts(int n);

// Checks that pi -> skew_sum(pi, inverse(pi)) maps Av_n(beta) injectively
// into the involutions of Av_{2n}(beta). Requires beta to be a
// skew-indecomposable involution.
bool merge_injection_check(const Permutation& beta, int n);

}  // namespace involab
