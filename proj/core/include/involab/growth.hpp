#pragma once

// Growth rates: exact-sign root isolation for the singularities of the
// generating functions, closed-form constants, the 1324 bounds, and
// uncertified empirical estimates from count sequences.
//
// Certified values carry a rational bracket [lo, hi] proven to contain the
// exact value; bisection evaluates polynomial signs in exact rational
// arithmetic, so no floating-point sign error is possible.

#include "involab/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace involab {

// Coefficient of x^k at index k.
using Poly = std::vector<Rational>;

Rational eval_poly(const Poly& p, const Rational& x);

struct GrowthReport {
    std::string source;  // class identifier
    std::string method;  // root-of-polynomial | closed-form-constant | empirical-nth-root
    Rational lo, hi;     // bracket; certified methods guarantee lo <= value <= hi
    bool certified = false;
    std::string note;

    std::string value(unsigned digits = 12) const { return to_decimal(Rational((lo + hi) / 2), digits); }
    double value_double() const { return Rational((lo + hi) / 2).get_d(); }
    std::string to_json() const;
};

// Bracket of width <= tol around the smallest positive real root, found by
// scanning at step 1/64 up to x = 1 and bisecting on the first sign change.
GrowthReport smallest_positive_root(const Poly& p, const Rational& tol,
                                    const std::string& source = "");
// As above, reported as the reciprocal (the growth rate of a series whose
// dominant singularity is that root).
GrowthReport reciprocal_root_growth(const Poly& p, const Rational& tol,
                                    const std::string& source = "");

// Closed-form growth constants, 12+ correct digits:
//   av-i-2413 (= sqrt(2) + sqrt(3)), av-i-1342 (= 1 + golden ratio),
//   av-i-1234 (= 3), av-i-2341 (reciprocal root of its denominator),
//   av-1234 (= 9), av-1342 (= 8), av-i-1324-lower (= sqrt(9.81)).
std::map<std::string, GrowthReport> growth_constants();

// 3r/(14 + r - r^2) with r = cbrt(8 + 6 sqrt(78)); asserts agreement with
// the reciprocal root of 1 - 5x + x^2 - x^3 to 1e-9 and that the value is
// strictly below 4.84.
GrowthReport upper_bound_1324();

// Uncertified estimates from the tail of a count sequence: reports both the
// n-th root of the last term and the last consecutive ratio.
GrowthReport empirical_growth(const std::vector<BigInt>& counts, const std::string& source = "");

}  // namespace involab
