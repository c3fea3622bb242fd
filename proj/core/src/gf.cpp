#include "involab/gf.hpp"

#include "involab/biseries.hpp"
#include "involab/staircase.hpp"

#include <stdexcept>

namespace involab {

namespace {

constexpr int kMargin = 8;

UniSeries poly(std::initializer_list<long> coeffs, int order) {
    return UniSeries::from_coeffs(coeffs, order);
}

// x / (1 - x): nonempty decreasing inflations of a single entry.
UniSeries geometric_x(int order) {
    return UniSeries::x(order).divided_by(poly({1, -1}, order));
}

UniSeries catalan(int w) {
    UniSeries num = poly({1, -2}, w + 2) - poly({1, -4}, w + 2).sqrt();
    return num.divided_by(UniSeries::monomial(1, 2, w + 2)).truncated(w);
}

UniSeries large_schroder(int w) {
    return Rational(1, 2) * (poly({1, -1}, w) - poly({1, -6, 1}, w).sqrt());
}

UniSeries small_schroder(int w) {
    return Rational(1, 4) * (poly({1, 1}, w) - poly({1, -6, 1}, w).sqrt());
}

UniSeries central_binomial_involutions(int w) {
    UniSeries num = poly({1, 0, -4}, w + 2) - poly({1, 0, -4}, w + 2).sqrt();
    return num.divided_by(poly({0, -2, 4}, w + 2)).truncated(w);
}

UniSeries motzkin(int w) {
    UniSeries num = poly({1, -1}, w + 2) - poly({1, -2, -3}, w + 2).sqrt();
    UniSeries m = num.divided_by(UniSeries::monomial(2, 2, w + 2));  // constant term 1
    return (m - UniSeries::one(m.order())).truncated(w);
}

void require_equal(const UniSeries& a, const UniSeries& b, const char* what) {
    if (!(a == b)) throw std::logic_error(std::string(what) + ": assembly routes disagree");
}

}  // namespace

UniSeries gf_known(Gf which, int order) {
    const int w = order + kMargin;
    switch (which) {
        case Gf::Catalan: return catalan(w).truncated(order);
        case Gf::LargeSchroder: return large_schroder(w).truncated(order);
        case Gf::SmallSchroder: return small_schroder(w).truncated(order);
        case Gf::Layered: return UniSeries::x(w).divided_by(poly({1, -2}, w)).truncated(order);
        case Gf::CentralBinomialInvolutions: return central_binomial_involutions(w).truncated(order);
        case Gf::Motzkin: return motzkin(w).truncated(order);
    }
    throw std::invalid_argument("gf_known: unknown series");
}

UniSeries gf_known(const std::string& name, int order) {
    if (name == "catalan") return gf_known(Gf::Catalan, order);
    if (name == "large-schroder") return gf_known(Gf::LargeSchroder, order);
    if (name == "small-schroder") return gf_known(Gf::SmallSchroder, order);
    if (name == "layered") return gf_known(Gf::Layered, order);
    if (name == "central-binomial-involutions") return gf_known(Gf::CentralBinomialInvolutions, order);
    if (name == "motzkin") return gf_known(Gf::Motzkin, order);
    throw std::invalid_argument("gf_known: unknown series name '" + name + "'");
}

UniSeries gf_separable_involutions(int order) {
    const int w = order + kMargin;

    // Closed form, with r = sqrt(1 - 6x^2 + x^4).
    const UniSeries r = poly({1, 0, -6, 0, 1}, w).sqrt();
    const UniSeries q = poly({-6, -20, 38, 24, -18, -4, 2}, w) +
                        r * poly({10, 12, -12, -4, 2}, w);
    const UniSeries num = poly({1, -3, 1, 1}, w) + r * poly({1, 1}, w) - q.sqrt();
    const UniSeries den = Rational(2) * (UniSeries::one(w) - r - UniSeries::monomial(2, 1, w));
    const UniSeries closed = num.divided_by(den);

    // Structural route: skew-indecomposable separable pairs are counted by
    // the small Schroder numbers at x^2, and
    //   g = x + g^2/(1+g) + F (1+g)   with F = f(x^2) - f_minus(x^2)
    // rearranges to F g^2 + (x - 1 + 2F) g + (x + F) = 0.
    const UniSeries F = small_schroder(w / 2 + 1).scaled_exponent(2).truncated(w);
    const UniSeries solved = UniSeries::solve_quadratic(
        F, UniSeries::x(w) - UniSeries::one(w) + Rational(2) * F, UniSeries::x(w) + F);
    require_equal(closed, solved, "gf_separable_involutions");

    return closed.truncated(order);
}

UniSeries assemble_1342(int order) {
    const int w = order + kMargin;

    // Closed form.
    const UniSeries closed = (poly({1, -2, 1}, w + 1) + poly({1, 0, -6, 0, 1}, w + 1).sqrt())
                                 .shifted_up(1)
                                 .truncated(w)
                                 .divided_by(Rational(2) * poly({1, -3, 1}, w));

    // Structural route. Sum decomposables: the second component is layered,
    // which gives g_plus = g x/(1-x). Skew decomposables: alpha o alpha^-1
    // around an optional middle involution, counted by F (1+g) with
    // F = f(x^2) - f_minus(x^2). Simple inflations: right-to-left maxima take
    // decreasing intervals (v^2 = x^2/(1-x^2)), left-to-right minima take
    // arbitrary class members paired with their inverses (u^2 = f(x^2)),
    // fixed points take x/(1-x) when right-to-left maxima and a class
    // involution (g) when left-to-right minima.
    const UniSeries xo = geometric_x(w);
    const UniSeries F = small_schroder(w / 2 + 1).scaled_exponent(2).truncated(w);
    const UniSeries A = large_schroder(w / 2 + 1).scaled_exponent(2).truncated(w);  // u^2
    const UniSeries B = UniSeries::monomial(2, 1, w).divided_by(poly({1, 0, -1}, w));  // v^2

    const BiSeries s0 = staircase::closed_refined(0, w);
    const BiSeries s1 = staircase::closed_refined(1, w + 1);
    const BiSeries s2 = staircase::closed_refined(2, w + 2);

    const UniSeries e3 = s0.substitute_even(A, B);
    const UniSeries e4 = s1.divided_by_monomial(0, 1).substitute_even(A, B) * xo;
    const UniSeries e5 = s1.swapped_vars().divided_by_monomial(1, 0).substitute_even(A, B);
    const UniSeries e6 = s2.divided_by_monomial(1, 1).substitute_even(A, B);

    // g (1 - x/(1-x) - F - e5 - e6 x/(1-x)) = x + F + e3 + e4
    const UniSeries rhs = UniSeries::x(w) + F + e3 + e4;
    const UniSeries lhs = UniSeries::one(w) - xo - F - e5 - e6 * xo;
    const UniSeries solved = rhs.divided_by(lhs);
    require_equal(closed, solved, "assemble_1342");

    return closed.truncated(order);
}

UniSeries assemble_2341(int order) {
    const int w = order + kMargin;

    // Closed form (x+1)^4 (x-1)^10 sqrt(1-4x^2) minus a degree-16 polynomial,
    // over twice another degree-16 polynomial.
    const UniSeries p = poly({1, -8, 17, 24, -151, 162, 221, -624, 231, 684, -801, -60, 627,
                              -334, -101, 158, -48},
                             w);
    const UniSeries q = poly({1, -6, 4, 50, -141, 55, 326, -514, -26, 725, -561, -223, 540,
                              -206, -113, 120, -32},
                             w);
    const UniSeries front = poly({1, 1}, w).pow(4) * poly({-1, 1}, w).pow(10);
    const UniSeries closed =
        (front * poly({1, 0, -4}, w).sqrt() - p).divided_by(Rational(2) * q);

    // Structural route. Sum decomposables give g^2/(1+g); skew decomposables
    // are 321-inflations with a skew-indecomposable 123-avoiding pair around
    // an optional 123-avoiding involution; every entry of a simple
    // permutation inflates by a decreasing interval (u^2 = v^2 = x^2/(1-x^2));
    // and 5274163 contributes with its three fixed points.
    const UniSeries xo = geometric_x(w);
    const UniSeries B = UniSeries::monomial(2, 1, w).divided_by(poly({1, 0, -1}, w));
    const UniSeries cx2 = catalan(w / 2 + 1).scaled_exponent(2).truncated(w);
    const UniSeries cbi = central_binomial_involutions(w);

    const UniSeries e2 =
        ((cx2 + Rational(1)) * (cbi + Rational(1))).shifted_up(2).truncated(w);
    const UniSeries e3 = B.pow(2) * xo.pow(3);
    const UniSeries e4 = staircase::closed_refined(0, w).substitute_even(B, B);
    const UniSeries e5 = Rational(2) *
                         (staircase::closed_refined(1, w + 1).divided_by_monomial(0, 1).substitute_even(B, B) * xo);
    const UniSeries e6 =
        staircase::closed_refined(2, w + 2).divided_by_monomial(1, 1).substitute_even(B, B) * xo.pow(2);

    // g = K + g^2/(1+g) collapses to the linear equation (1 - K) g = K.
    const UniSeries K = UniSeries::x(w) + e2 + e3 + e4 + e5 + e6;
    const UniSeries solved =
        UniSeries::solve_quadratic(UniSeries::zero(w), UniSeries::one(w) - K, -K);
    require_equal(closed, solved, "assemble_2341");

    return closed.truncated(order);
}

UniSeries gf_word_pairs(int order) {
    return poly({1, 1}, order).divided_by(poly({1, -5, 1, -1}, order));
}

}  // namespace involab
