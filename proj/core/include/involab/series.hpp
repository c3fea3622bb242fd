#pragma once

// Truncated formal power series over exact rationals.
//
// A UniSeries holds coefficients c_0 ... c_order of a series in one variable;
// every operation tracks how far the result is trustworthy (binary operations
// truncate to the smaller order, division by a series of valuation v costs v
// coefficients). Equality compares coefficientwise up to the smaller order.

#include "involab/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace involab {

class UniSeries {
  public:
    UniSeries() : order_(-1) {}
    explicit UniSeries(int order) : order_(order), c_(order + 1, Rational(0)) {
        if (order < 0) throw std::invalid_argument("UniSeries: negative order");
    }

    static UniSeries zero(int order) { return UniSeries(order); }
    static UniSeries constant(const Rational& v, int order);
    static UniSeries one(int order) { return constant(1, order); }
    // c * x^k
    static UniSeries monomial(int k, const Rational& c, int order);
    static UniSeries x(int order) { return monomial(1, 1, order); }
    static UniSeries from_coeffs(std::initializer_list<long> coeffs, int order);

    int order() const { return order_; }
    const Rational& coeff(int k) const;
    Rational& coeff_mut(int k);
    // Exact integer coefficient; throws if the coefficient is not integral.
    BigInt integer_coeff(int k) const { return to_integer(coeff(k)); }

    // Degree of the lowest nonzero coefficient, or order()+1 if identically 0.
    int valuation() const;
    bool is_zero() const { return valuation() > order_; }

    UniSeries truncated(int new_order) const;

    UniSeries operator-() const;
    friend UniSeries operator+(const UniSeries& a, const UniSeries& b);
    friend UniSeries operator-(const UniSeries& a, const UniSeries& b);
    friend UniSeries operator*(const UniSeries& a, const UniSeries& b);
    friend UniSeries operator*(const Rational& s, const UniSeries& a);
    friend UniSeries operator+(const UniSeries& a, const Rational& s);
    friend UniSeries operator-(const Rational& s, const UniSeries& a);

    // Multiply by x^k; the trusted order grows with the shift.
    UniSeries shifted_up(int k) const;
    // Divide exactly by x^k; throws if any of c_0..c_{k-1} is nonzero.
    UniSeries shifted_down(int k) const;

    // Reciprocal; requires nonzero constant term.
    UniSeries inverse() const;
    // this / b. b may have positive valuation v as long as this does too;
    // the result then loses v coefficients of precision.
    UniSeries divided_by(const UniSeries& b) const;
    // Substitute g into this; requires g(0) = 0.
    UniSeries composed_with(const UniSeries& g) const;
    // f(x) -> f(x^m)
    UniSeries scaled_exponent(int m) const;
    // Square root with the positive constant-term branch; requires the
    // constant term to be the square of a rational.
    UniSeries sqrt() const;
    UniSeries pow(int e) const;

    // The root g of A g^2 + B g + C = 0 with g(0) = 0. A degenerate (zero)
    // leading coefficient is handled as the linear equation B g + C = 0.
    static UniSeries solve_quadratic(const UniSeries& A, const UniSeries& B, const UniSeries& C);

    // Coefficientwise equality up to min(order).
    friend bool operator==(const UniSeries& a, const UniSeries& b);

    // "n a(n)" lines, one per degree in [lo, hi]; coefficients must be integers.
    std::string to_bfile(int lo, int hi) const;
    // JSON array of decimal strings (exact integers may exceed 64 bits).
    std::string to_json(int lo, int hi) const;

  private:
    int order_;
    std::vector<Rational> c_;
};

}  // namespace involab
