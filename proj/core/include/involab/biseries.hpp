#pragma once

// Truncated bivariate power series over exact rationals, truncated by total
// degree. Used for the refined staircase generating functions in two
// statistic-marking variables (u for left-to-right minima, v for
// right-to-left maxima), and as scratch ring for identity checks.

#include "involab/rational.hpp"
#include "involab/series.hpp"

#include <vector>

namespace involab {

class BiSeries {
  public:
    BiSeries() : order_(-1) {}
    explicit BiSeries(int order);

    static BiSeries zero(int order) { return BiSeries(order); }
    static BiSeries constant(const Rational& c, int order);
    static BiSeries one(int order) { return constant(1, order); }
    static BiSeries monomial(int i, int j, const Rational& c, int order);
    static BiSeries u(int order) { return monomial(1, 0, 1, order); }
    static BiSeries v(int order) { return monomial(0, 1, 1, order); }

    int order() const { return order_; }
    const Rational& coeff(int i, int j) const;
    Rational& coeff_mut(int i, int j);
    BigInt integer_coeff(int i, int j) const { return to_integer(coeff(i, j)); }
    bool is_zero() const;

    BiSeries truncated(int new_order) const;

    BiSeries operator-() const;
    friend BiSeries operator+(const BiSeries& a, const BiSeries& b);
    friend BiSeries operator-(const BiSeries& a, const BiSeries& b);
    friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
    friend BiSeries operator*(const Rational& s, const BiSeries& a);
    friend BiSeries operator+(const BiSeries& a, const Rational& s);
    friend BiSeries operator-(const Rational& s, const BiSeries& a);

    // Reciprocal; requires nonzero constant term.
    BiSeries inverse() const;
    BiSeries divided_by(const BiSeries& b) const { return *this * b.inverse(); }
    // Square root, positive branch; constant term must be a rational square.
    BiSeries sqrt() const;

    BiSeries swapped_vars() const;
    // Exact division by u^a v^b; throws if a required coefficient is nonzero.
    BiSeries divided_by_monomial(int a, int b) const;

    // Specialize u = v = x.
    UniSeries eval_diagonal() const;
    // Substitute u^2 = A(x), v^2 = B(x); all exponents must be even and both
    // substituted series must have valuation >= 2 (so the truncation tail
    // only affects degrees beyond the result order).
    UniSeries substitute_even(const UniSeries& A, const UniSeries& B) const;

    friend bool operator==(const BiSeries& a, const BiSeries& b);

  private:
    int order_;
    // c_[i][j] = coefficient of u^i v^j, allocated for i + j <= order_.
    std::vector<std::vector<Rational>> c_;
};

}  // namespace involab
