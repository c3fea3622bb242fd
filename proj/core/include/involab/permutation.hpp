#pragma once

// Permutations in one-line notation (1-indexed values) and the structural
// operations on them: pattern containment, inversion, sums, inflation,
// simplicity, substitution decomposition, entry statistics, and the greedy
// staircase gridding of 123-avoiders.
//
// Permutation values are immutable once constructed; every operation here is
// a pure function, so values are freely shareable across threads.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace involab {

class Permutation {
  public:
    // Empty permutation (length 0).
    Permutation() = default;
    // One-line notation; entries must be a bijection on {1..n}.
    explicit Permutation(std::vector<int> values);
    Permutation(std::initializer_list<int> values);

    // Accepts "2341" (single digits, n <= 9) or "10,3,2,..." (comma separated).
    static Permutation parse(const std::string& text);
    // The pattern of an arbitrary sequence of distinct integers.
    static Permutation pattern_of(const std::vector<int>& entries);
    static Permutation identity(int n);
    static Permutation decreasing(int n);

    int size() const { return static_cast<int>(vals_.size()); }
    bool empty() const { return vals_.empty(); }
    // pi(i), 1-indexed.
    int operator()(int i) const { return vals_[i - 1]; }
    const std::vector<int>& values() const { return vals_; }

    std::string str() const;  // matches the parse() conventions

    friend bool operator==(const Permutation& a, const Permutation& b) = default;
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b);

  private:
    std::vector<int> vals_;
};

struct StatProfile {
    int fp = 0;     // fixed points
    int lrmin = 0;  // left-to-right minima
    int rlmax = 0;  // right-to-left maxima
    friend bool operator==(const StatProfile&, const StatProfile&) = default;
};

struct Decomposition {
    Permutation root;                // simple; 12/21 for sum/skew decomposables
    std::vector<Permutation> parts;  // interval contents, |parts| == |root|
};

// Cells of the greedy staircase gridding: 1-indexed positions, in reading
// order within each cell. Cells alternate eastward/southward; within a cell
// the entries form a decreasing sequence.
struct Gridding {
    std::vector<std::vector<int>> cells;
};

// True iff some subsequence of pi is order isomorphic to sigma.
bool contains(const Permutation& pi, const Permutation& sigma);
inline bool avoids(const Permutation& pi, const Permutation& sigma) { return !contains(pi, sigma); }
bool avoids_all(const Permutation& pi, const std::vector<Permutation>& basis);

Permutation inverse(const Permutation& pi);
bool is_involution(const Permutation& pi);

Permutation direct_sum(const Permutation& sigma, const Permutation& tau);
Permutation skew_sum(const Permutation& sigma, const Permutation& tau);
bool sum_decomposable(const Permutation& pi);
bool skew_decomposable(const Permutation& pi);

// sigma[parts[0], ..., parts[m-1]]; parts must be nonempty and match |sigma|.
Permutation inflate(const Permutation& sigma, const std::vector<Permutation>& parts);

// A permutation of length >= 2 with no proper interval.
bool is_simple(const Permutation& pi);

// Substitution decomposition; requires |pi| >= 2. For sum/skew roots the
// first part is the leftmost sum-(skew-)indecomposable component, which
// makes the two-part form unique.
Decomposition decompose(const Permutation& pi);

StatProfile stats(const Permutation& pi);

// Greedy staircase gridding; requires pi in Av(123). The first cell is the
// longest decreasing prefix; then alternately an eastward cell (remaining
// entries with value above the smallest included value) and a southward cell
// (the longest decreasing prefix of the remaining entries).
Gridding greedy_gridding(const Permutation& pi);

}  // namespace involab
