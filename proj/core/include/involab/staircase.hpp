#pragma once

// Staircase recurrences for the simple 123-avoiding involutions, counted by
// number of fixed points (0, 1 or 2). Each series exists in two forms:
//
//  * closed(...)          - expansion of the closed-form expression;
//  * iterate(...)/limit() - the cell-by-cell recurrence: the second-cell
//    series with its required hollow dot (marked z, or w in the two-fixed-
//    point case), the third-cell substitution that forbids the leftmost
//    optional dot, and the generic marker substitution for later cells.
//
// Entries are counted by x^2 during the recurrence (an entry together with
// its inverse image); markers are placeholders for nonempty decreasing runs
// added by the next cell. In the refined series u marks left-to-right minima
// and v marks right-to-left maxima.

#include "involab/biseries.hpp"
#include "involab/series.hpp"

namespace involab::staircase {

// Closed forms: s^(i)(x) and s-hat^(i)(u, v).
UniSeries closed(int fixed_points, int order);
BiSeries closed_refined(int fixed_points, int order);

struct SubstitutionState {
    int fixed_points;
    int stage;
    UniSeries counts;  // completed configurations (all markers filled)
};
struct RefinedSubstitutionState {
    int fixed_points;
    int stage;
    BiSeries counts;
};

// The stage-n series with every marker still unfilled set to zero, i.e. the
// permutations drawable within `stage` staircase cells. Requires stage >= 2.
SubstitutionState iterate(int fixed_points, int stage, int order);
RefinedSubstitutionState iterate_refined(int fixed_points, int stage, int order);

// The limit of the recurrence. The univariate limit substitutes the marker
// fixed point y = (1 - x^2 - sqrt(1 - 2x^2 - 3x^4)) / (2x^2); the refined
// limit runs the recurrence until the coefficients stabilize.
UniSeries limit(int fixed_points, int order);
BiSeries limit_refined(int fixed_points, int order);

// Building blocks, exposed for direct verification.
UniSeries marker_map(const UniSeries& y);      // y -> x^2 (1 + y) / (1 - x^2 y)
UniSeries marker_fixed_point(int order);       // solves y = marker_map(y)
UniSeries stage2(int fixed_points, const UniSeries& y, const UniSeries& zw);

BiSeries refined_map_u(const BiSeries& y_v);   // y_u slot: u^2 (1 + y_v) / (1 - u^2 y_v)
BiSeries refined_map_v(const BiSeries& y_u);   // y_v slot: v^2 (1 + y_u) / (1 - v^2 y_u)
BiSeries refined_fixed_point_v(int order);     // closed form of the y_v fixed point
BiSeries refined_stage2(int fixed_points, const BiSeries& y_u, const BiSeries& zw);

}  // namespace involab::staircase
