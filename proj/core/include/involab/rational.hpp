#pragma once

// Exact integer and rational arithmetic, backed by GMP. Everything that
// counts or expands a generating function goes through these types; no
// floating point is used anywhere a result is asserted.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace involab {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline BigInt pow2(unsigned long e) {
    BigInt r = 1;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), e);
    return r;
}

// Canonicalized fraction. The mpq_class(num, den) constructor does not
// reduce, and GMP comparisons assume reduced form, so always go through here.
inline Rational ratio(const BigInt& num, const BigInt& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// True iff r is an integer.
inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Exact integer value; throws if r has a nontrivial denominator.
inline BigInt to_integer(const Rational& r) {
    if (!is_integer(r)) {
        throw std::domain_error("rational is not an integer: " + r.get_str());
    }
    return r.get_num();
}

// Exact square root of a nonnegative integer, or nullopt-like failure via bool.
inline bool exact_sqrt(const BigInt& a, BigInt& root) {
    if (a < 0) return false;
    BigInt rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t());
    return rem == 0;
}

// Exact square root of a rational that is a perfect square (p/q with p, q squares).
inline bool exact_sqrt(const Rational& a, Rational& root) {
    BigInt num, den;
    if (!exact_sqrt(BigInt(a.get_num()), num)) return false;
    if (!exact_sqrt(BigInt(a.get_den()), den)) return false;
    root = Rational(num, den);
    root.canonicalize();
    return true;
}

// Bracket [lo, hi] with lo <= a^(1/k) <= hi and hi - lo = 10^-digits,
// for a >= 0. Exact rational endpoints via integer k-th roots.
inline std::pair<Rational, Rational> root_bracket(const Rational& a, unsigned k, unsigned digits) {
    if (a < 0) throw std::domain_error("root_bracket: negative radicand");
    BigInt scale = 1;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    BigInt scale_k = 1;
    mpz_pow_ui(scale_k.get_mpz_t(), scale.get_mpz_t(), k);
    // floor((a * 10^(k*digits)))^(1/k) as an integer root
    BigInt scaled_num = a.get_num() * scale_k;
    BigInt q = scaled_num / a.get_den();
    BigInt lo;
    mpz_root(lo.get_mpz_t(), q.get_mpz_t(), k);
    Rational lower(lo, scale);
    Rational upper(lo + 1, scale);
    lower.canonicalize();
    upper.canonicalize();
    return {lower, upper};
}

inline std::pair<Rational, Rational> sqrt_bracket(const Rational& a, unsigned digits) {
    return root_bracket(a, 2, digits);
}

// Decimal rendering of a rational, truncated toward zero to `digits` places.
inline std::string to_decimal(const Rational& r, unsigned digits) {
    BigInt scale = 1;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    Rational scaled = r * Rational(scale);
    BigInt t = scaled.get_num() / scaled.get_den();
    bool neg = t < 0;
    BigInt mag = abs(t);
    std::string s = mag.get_str();
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    return (neg ? "-" : "") + s;
}

}  // namespace involab
