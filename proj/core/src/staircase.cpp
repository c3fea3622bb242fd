#include "involab/staircase.hpp"

#include <stdexcept>

namespace involab::staircase {

namespace {

constexpr int kMargin = 8;

void check_fp(int fixed_points) {
    // Fixed points of a 123-avoider form an increasing run, so at most two.
    if (fixed_points < 0 || fixed_points > 2)
        throw std::invalid_argument("staircase: fixed point count must be 0, 1 or 2");
}

UniSeries xpow(int k, int order) { return UniSeries::monomial(k, 1, order); }

// Polynomial in x^2 with the given even-degree coefficients c0, c2, c4, ...
UniSeries even_poly(std::initializer_list<long> coeffs, int order) {
    UniSeries p(order);
    int d = 0;
    for (long c : coeffs) {
        if (d <= order) p.coeff_mut(d) = Rational(c);
        d += 2;
    }
    return p;
}

BiSeries bimono(int i, int j, long c, int order) { return BiSeries::monomial(i, j, Rational(c), order); }

// The shared radical r = sqrt(1 - 6u^2v^2 - 4u^2v^4 - 4u^4v^2 - 3u^4v^4).
BiSeries refined_radical(int order) {
    BiSeries rad = BiSeries::one(order) - bimono(2, 2, 6, order) - bimono(2, 4, 4, order) -
                   bimono(4, 2, 4, order) - bimono(4, 4, 3, order);
    return rad.sqrt();
}

}  // namespace

UniSeries marker_map(const UniSeries& y) {
    const int w = y.order();
    UniSeries num = (UniSeries::one(w) + y).shifted_up(2);       // x^2 (1 + y)
    UniSeries den = UniSeries::one(w + 2) - y.shifted_up(2);     // 1 - x^2 y
    return num.divided_by(den).truncated(w);
}

UniSeries marker_fixed_point(int order) {
    const int w = order + 4;
    UniSeries rad = even_poly({1, -2, -3}, w);  // 1 - 2x^2 - 3x^4
    UniSeries num = UniSeries::one(w) - xpow(2, w) - rad.sqrt();
    return num.shifted_down(2) * UniSeries::constant(Rational(1, 2), w - 2);
}

UniSeries stage2(int fixed_points, const UniSeries& y, const UniSeries& zw) {
    check_fp(fixed_points);
    const int w = std::min(y.order(), zw.order());
    const UniSeries one = UniSeries::one(w);
    const UniSeries yt = y.truncated(w);
    const UniSeries x2y = yt.shifted_up(2).truncated(w);
    // 1 - 2 x^2 y - x^2 y^2
    const UniSeries den2 = one - Rational(2) * x2y - (yt * yt).shifted_up(2).truncated(w);
    switch (fixed_points) {
        case 1: {
            // 2 x^3 z (1 + y) / ((1 - x^2 y)(1 - 2x^2 y - x^2 y^2))
            UniSeries num = Rational(2) * (zw.truncated(w) * (one + yt)).shifted_up(3).truncated(w);
            return num.divided_by((one - x2y) * den2);
        }
        case 0: {
            // x^4 y z (1 + y) / ((1 - x^2 y)(1 - 2x^2 y - x^2 y^2))
            UniSeries num = (yt * zw.truncated(w) * (one + yt)).shifted_up(4).truncated(w);
            return num.divided_by((one - x2y) * den2);
        }
        default: {
            // x^2 (w + 2 x^2 y + x^2 y^2) / (1 - 2x^2 y - x^2 y^2)
            UniSeries num =
                (zw.truncated(w) + Rational(2) * x2y + (yt * yt).shifted_up(2).truncated(w))
                    .shifted_up(2)
                    .truncated(w);
            return num.divided_by(den2);
        }
    }
}

namespace {

// Marker value for the cell that the stage-3 substitution fills: the special
// dot is prevented from taking the optional neighbour, and in the
// two-fixed-point case the w-marked entry requires one.
UniSeries zw_map(int fixed_points, const UniSeries& y) {
    const int w = y.order();
    const UniSeries den = UniSeries::one(w + 2) - y.shifted_up(2);
    if (fixed_points == 2) {
        return y.shifted_up(2).divided_by(den).truncated(w);  // x^2 y / (1 - x^2 y)
    }
    return xpow(2, w + 2).divided_by(den).truncated(w);  // x^2 / (1 - x^2 y)
}

}  // namespace

SubstitutionState iterate(int fixed_points, int stage, int order) {
    check_fp(fixed_points);
    if (stage < 2) throw std::invalid_argument("staircase::iterate: stage must be at least 2");
    const int w = order + kMargin;
    if (stage == 2) {
        // Both markers unfilled: nothing is completed at the second stage.
        return {fixed_points, stage, stage2(fixed_points, UniSeries::zero(w), UniSeries::zero(w)).truncated(order)};
    }
    UniSeries y = UniSeries::zero(w);
    for (int s = stage; s >= 4; --s) y = marker_map(y);
    UniSeries result = stage2(fixed_points, marker_map(y), zw_map(fixed_points, y));
    return {fixed_points, stage, result.truncated(order)};
}

UniSeries limit(int fixed_points, int order) {
    check_fp(fixed_points);
    const int w = order + kMargin;
    UniSeries ystar = marker_fixed_point(w);
    return stage2(fixed_points, ystar, zw_map(fixed_points, ystar)).truncated(order);
}

UniSeries closed(int fixed_points, int order) {
    check_fp(fixed_points);
    const int w = order + kMargin;
    const UniSeries rad = even_poly({1, -2, -3}, w).sqrt();  // sqrt(1 - 2x^2 - 3x^4)
    UniSeries num, den;
    switch (fixed_points) {
        case 1:
            // 2x^5 (1 + x^2 + R) / ((1 + x^2)^2 (1 - 3x^2 + (1 - 2x^2) R))
            num = Rational(2) * (even_poly({1, 1}, w) + rad).shifted_up(5).truncated(w);
            den = even_poly({1, 1}, w).pow(2) * (even_poly({1, -3}, w) + even_poly({1, -2}, w) * rad);
            break;
        case 0:
            // 2x^6 (1 + x^2 - R) / (2 - 2x^2 - 10x^4 - 6x^6 + (2 - 6x^4 - 4x^6) R)
            num = Rational(2) * (even_poly({1, 1}, w) - rad).shifted_up(6).truncated(w);
            den = even_poly({2, -2, -10, -6}, w) + even_poly({2, 0, -6, -4}, w) * rad;
            break;
        default:
            // x^4 (2 + 5x^2 + 3x^4 - (2 + x^2) R) / (1 - x^2 - 5x^4 - 3x^6 + (1 + 2x^2 + x^4) R)
            num = (even_poly({2, 5, 3}, w) - even_poly({2, 1}, w) * rad).shifted_up(4).truncated(w);
            den = even_poly({1, -1, -5, -3}, w) + even_poly({1, 2, 1}, w) * rad;
            break;
    }
    return num.divided_by(den).truncated(order);
}

BiSeries refined_map_u(const BiSeries& y_v) {
    const int w = y_v.order();
    BiSeries u2 = bimono(2, 0, 1, w);
    return (u2 * (BiSeries::one(w) + y_v)).divided_by(BiSeries::one(w) - u2 * y_v);
}

BiSeries refined_map_v(const BiSeries& y_u) {
    const int w = y_u.order();
    BiSeries v2 = bimono(0, 2, 1, w);
    return (v2 * (BiSeries::one(w) + y_u)).divided_by(BiSeries::one(w) - v2 * y_u);
}

BiSeries refined_fixed_point_v(int order) {
    // (1 - u^2 v^2 - r) / (2 u^2 (1 + v^2))
    const int w = order + 2;
    BiSeries num = BiSeries::one(w) - bimono(2, 2, 1, w) - refined_radical(w);
    BiSeries den = Rational(2) * (BiSeries::one(w - 2) + bimono(0, 2, 1, w - 2));
    return num.divided_by_monomial(2, 0).divided_by(den);
}

BiSeries refined_stage2(int fixed_points, const BiSeries& y_u, const BiSeries& zw) {
    check_fp(fixed_points);
    const int w = std::min(y_u.order(), zw.order());
    const BiSeries one = BiSeries::one(w);
    const BiSeries yu = y_u.truncated(w);
    const BiSeries v2 = bimono(0, 2, 1, w);
    const BiSeries v2yu = v2 * yu;
    const BiSeries den2 = one - Rational(2) * v2yu - v2 * yu * yu;
    switch (fixed_points) {
        case 1: {
            // v^3 z (1 + y_u) / ((1 - v^2 y_u)(1 - 2 v^2 y_u - v^2 y_u^2))
            BiSeries num = bimono(0, 3, 1, w) * zw.truncated(w) * (one + yu);
            return num.divided_by((one - v2yu) * den2);
        }
        case 0: {
            // v^4 y_u z (1 + y_u) / ((1 - v^2 y_u)(1 - 2 v^2 y_u - v^2 y_u^2))
            BiSeries num = bimono(0, 4, 1, w) * yu * zw.truncated(w) * (one + yu);
            return num.divided_by((one - v2yu) * den2);
        }
        default: {
            // u v (w + 2 v^2 y_u + v^2 y_u^2) / (1 - 2 v^2 y_u - v^2 y_u^2)
            BiSeries num = bimono(1, 1, 1, w) * (zw.truncated(w) + Rational(2) * v2yu + v2 * yu * yu);
            return num.divided_by(den2);
        }
    }
}

namespace {

BiSeries refined_zw_map(int fixed_points, const BiSeries& y_v) {
    const int w = y_v.order();
    BiSeries u2 = bimono(2, 0, 1, w);
    BiSeries den = BiSeries::one(w) - u2 * y_v;
    if (fixed_points == 2) return (u2 * y_v).divided_by(den);  // u^2 y_v / (1 - u^2 y_v)
    return u2.divided_by(den);                                 // u^2 / (1 - u^2 y_v)
}

}  // namespace

RefinedSubstitutionState iterate_refined(int fixed_points, int stage, int order) {
    check_fp(fixed_points);
    if (stage < 2) throw std::invalid_argument("staircase::iterate_refined: stage must be at least 2");
    const int w = order + 4;
    if (stage == 2) {
        return {fixed_points, stage,
                refined_stage2(fixed_points, BiSeries::zero(w), BiSeries::zero(w)).truncated(order)};
    }
    BiSeries yu = BiSeries::zero(w), yv = BiSeries::zero(w);
    for (int s = stage; s >= 4; --s) {
        BiSeries yu_next = refined_map_u(yv);
        BiSeries yv_next = refined_map_v(yu);
        yu = yu_next;
        yv = yv_next;
    }
    BiSeries result = refined_stage2(fixed_points, refined_map_u(yv), refined_zw_map(fixed_points, yv));
    return {fixed_points, stage, result.truncated(order)};
}

BiSeries limit_refined(int fixed_points, int order) {
    // Coefficients of total degree k are stable from stage ceil(k/2) + 2 on.
    return iterate_refined(fixed_points, order / 2 + 4, order).counts;
}

BiSeries closed_refined(int fixed_points, int order) {
    check_fp(fixed_points);
    const int w = order + 4;
    const BiSeries r = refined_radical(w);
    // 1 - 6u^2v^2 - 4u^2v^4 - 4u^4v^2 - 3u^4v^4, the radicand itself
    const BiSeries rad2 = BiSeries::one(w) - bimono(2, 2, 6, w) - bimono(2, 4, 4, w) -
                          bimono(4, 2, 4, w) - bimono(4, 4, 3, w);
    BiSeries num(w), den(w);
    switch (fixed_points) {
        case 1:
            // u^2 v^3 (1 + u^2)(1 + 2v^2 + u^2 v^2 + r) /
            //   ((1 + v^2)(rad2 + (1 - 3u^2v^2 - 2u^4v^2) r))
            num = bimono(2, 3, 1, w) * (BiSeries::one(w) + bimono(2, 0, 1, w)) *
                  (BiSeries::one(w) + bimono(0, 2, 2, w) + bimono(2, 2, 1, w) + r);
            den = (BiSeries::one(w) + bimono(0, 2, 1, w)) *
                  (rad2 + (BiSeries::one(w) - bimono(2, 2, 3, w) - bimono(4, 2, 2, w)) * r);
            break;
        case 0:
            // 2 u^2 v^4 (1 + u^2)(1 + 2u^2 + u^2 v^2 - r) /
            //   ((1 - u^2 v^2 + r)(rad2 + (1 + 2v^2 + u^2 v^2) r))
            num = bimono(2, 4, 2, w) * (BiSeries::one(w) + bimono(2, 0, 1, w)) *
                  (BiSeries::one(w) + bimono(2, 0, 2, w) + bimono(2, 2, 1, w) - r);
            den = (BiSeries::one(w) - bimono(2, 2, 1, w) + r) *
                  (rad2 + (BiSeries::one(w) + bimono(0, 2, 2, w) + bimono(2, 2, 1, w)) * r);
            break;
        default:
            // u v^3 (2 + 7u^2 + 4u^2v^2 + 4u^4 + 3u^4v^2 - (2 + u^2) r) /
            //   (rad2 + (1 + 2v^2 + u^2 v^2) r)
            num = bimono(1, 3, 1, w) *
                  (BiSeries::constant(2, w) + bimono(2, 0, 7, w) + bimono(2, 2, 4, w) +
                   bimono(4, 0, 4, w) + bimono(4, 2, 3, w) -
                   (BiSeries::constant(2, w) + bimono(2, 0, 1, w)) * r);
            den = rad2 + (BiSeries::one(w) + bimono(0, 2, 2, w) + bimono(2, 2, 1, w)) * r;
            break;
    }
    return num.divided_by(den).truncated(order);
}

}  // namespace involab::staircase
