/** \file
 * Continuous piecewise-linear witness supported on an evasion set: a unit
 * tent over every chosen interval. Along each certified family member the
 * function is eventually zero, yet its supremum on every ray (T, oo) is 1 —
 * so it converges to 0 along the family while not converging at infinity.
 */
#pragma once

#include "seqgauge/diagonal.hpp"

namespace seqgauge {

struct PiecewiseLinear {
    /// Breakpoints sorted by strictly increasing x; linear in between,
    /// zero outside the span.
    std::vector<std::pair<Rational, Rational>> breakpoints;
};

/// Tents of height exactly 1 over the chosen intervals of windows
/// k <= min(k_max, eset.k_max): 0 at each endpoint, 1 at the midpoint.
PiecewiseLinear build_bump(const EvasionSet& eset, std::uint64_t k_max);

/// Exact evaluation.
Rational eval_pwl(const PiecewiseLinear& f, const Rational& x);

}  // namespace seqgauge
