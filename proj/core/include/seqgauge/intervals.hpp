/** \file
 * Open intervals with exact rational endpoints, and coverage tests for
 * finite lists of them.
 *
 * Everything here is strictly open: endpoints never belong to an interval,
 * so (0,1) and (1,2) do not merge and the point 1 stays uncovered.
 */
#pragma once

#include "seqgauge/rational.hpp"

#include <vector>

namespace seqgauge {

struct OpenInterval {
    Rational lo;
    Rational hi;

    /// Throws std::invalid_argument unless lo < hi.
    OpenInterval(Rational lo_, Rational hi_);

    bool contains(const Rational& x) const { return lo < x && x < hi; }
    Rational midpoint() const { return (lo + hi) / 2; }
    Rational length() const { return hi - lo; }

    bool operator==(const OpenInterval& other) const = default;
};

/// A finite list of open intervals kept sorted by (lo, hi). Items may
/// overlap; normalize() merges overlaps into a disjoint list.
class IntervalList {
public:
    IntervalList() = default;
    explicit IntervalList(std::vector<OpenInterval> items);

    const std::vector<OpenInterval>& items() const { return items_; }
    bool empty() const { return items_.empty(); }
    std::size_t size() const { return items_.size(); }

private:
    std::vector<OpenInterval> items_;
};

/// Sorted list with strictly overlapping intervals merged. Touching open
/// intervals stay separate; the union of points is unchanged.
IntervalList normalize(std::vector<OpenInterval> items);

/// How far coverage chains to the right of `from`: the largest R such that
/// (from, R) lies inside the union. Returns `from` itself when no interval
/// covers the points immediately above it.
Rational covered_reach(const IntervalList& cover, const Rational& from);

/// Exact test that every point of the open target lies in some cover
/// interval. Decided by an endpoint sweep; cover may contain overlaps.
bool covers_interval(const IntervalList& cover, const OpenInterval& target);

bool point_covered(const IntervalList& cover, const Rational& x);

}  // namespace seqgauge
