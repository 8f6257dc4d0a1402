/** \file
 * The gauge of a divergent sequence and bounds for finite families.
 *
 * For a sequence a converging to infinity, gauge(a, i) is the largest j >= 1
 * such that the open 1/j-neighborhoods of the terms cover the whole ray
 * (i, oo), and 0 when not even j = 1 works. The decision is exact: the tail
 * of the union is controlled through the certified gap metadata, and the
 * finite part through an endpoint sweep.
 *
 * Closely related checks live here too: the crowding bound (two terms inside
 * (k, k+1/j) force gauge(k) >= j, for gap-monotone sequences), the pointwise
 * family bound, and the single-term horizon used by the diagonal
 * construction.
 */
#pragma once

#include "seqgauge/dominance.hpp"
#include "seqgauge/sequences.hpp"

#include <cstdint>
#include <vector>

namespace seqgauge {

struct GaugeValue {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    bool exact() const { return lo == hi; }
};

/// gauge(rule, i); exact for exact-valued kinds. For logshift the value is
/// decided by certified comparison and is indeterminate (lo < hi) only if
/// the adaptive precision cap is reached.
GaugeValue gauge(const SequenceRule& rule, std::uint64_t i);

struct GaugeTable {
    FunctionRule fn;
    bool exact = false;  // all entries exact; indeterminate entries store lo
};

/// Gauge values for i = 0..i_max. For exact kinds the table is extended to
/// the stabilization point and closed with a certified constant tail; the
/// gauge of an eventually affine sequence is eventually constant.
GaugeTable gauge_table(const SequenceRule& rule, std::uint64_t i_max);

struct SequenceFamily {
    std::vector<SequenceRule> members;  // non-empty; members need not be distinct
};

struct FamilyBound {
    FunctionRule fn;
    /// True when the bound dominates every member gauge at every index
    /// (pointwise, with certified tails). False means a truncated,
    /// table-only bound was all that could be offered.
    bool certified = false;
};

/// Pointwise maximum of the member gauge tables.
FamilyBound family_bound(const SequenceFamily& family, std::uint64_t i_max);

struct CrowdingResult {
    bool crowded = false;  // (k, k + 1/j) holds at least two terms
    GaugeValue gauge_at_k;
    /// crowded but gauge(k) certified below j: must never happen for a
    /// gap-monotone sequence; a true value here falsifies the library.
    bool falsification = false;
};

/// Requires condition (2) (positive, non-increasing gaps); throws otherwise.
CrowdingResult crowding_check(const SequenceRule& rule, std::uint64_t k, std::uint64_t j);

/// Smallest certified m such that for every k >= m the window
/// (k, k + 1/(bound(k)+1)) contains at most one term. Routes:
///   - bound pointwise above the gauge and condition (2): m = 0;
///   - condition (3) with window widths eventually below the gap floor;
///   - bound above the gauge in <=* only: m = last violation + 1.
/// Throws std::invalid_argument when no route applies.
std::uint64_t single_term_horizon(const SequenceRule& rule, const FunctionRule& bound);

}  // namespace seqgauge
