#include "seqgauge/intervals.hpp"

#include <algorithm>
#include <stdexcept>

namespace seqgauge {

OpenInterval::OpenInterval(Rational lo_, Rational hi_)
    : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (!(lo < hi)) {
        throw std::invalid_argument("open interval needs lo < hi, got [" +
                                    format_rational(lo) + ", " + format_rational(hi) + "]");
    }
}

IntervalList::IntervalList(std::vector<OpenInterval> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end(), [](const OpenInterval& a, const OpenInterval& b) {
        return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
    });
}

IntervalList normalize(std::vector<OpenInterval> items) {
    IntervalList sorted(std::move(items));
    std::vector<OpenInterval> merged;
    for (const OpenInterval& iv : sorted.items()) {
        // Strict overlap only: a shared endpoint is excluded from both sides.
        if (!merged.empty() && iv.lo < merged.back().hi) {
            if (iv.hi > merged.back().hi) {
                merged.back().hi = iv.hi;
            }
        } else {
            merged.push_back(iv);
        }
    }
    return IntervalList(std::move(merged));
}

Rational covered_reach(const IntervalList& cover, const Rational& from) {
    Rational reach = from;
    bool started = false;
    for (const OpenInterval& iv : cover.items()) {
        if (iv.hi <= reach) {
            continue;
        }
        // The first interval only needs to start at or below `from` (the
        // target is open there); later ones must strictly overlap the reach,
        // otherwise the point `reach` itself is uncovered.
        const bool connects = started ? iv.lo < reach : iv.lo <= from;
        if (!connects) {
            break;
        }
        reach = iv.hi;
        started = true;
    }
    return reach;
}

bool covers_interval(const IntervalList& cover, const OpenInterval& target) {
    return covered_reach(cover, target.lo) >= target.hi;
}

bool point_covered(const IntervalList& cover, const Rational& x) {
    for (const OpenInterval& iv : cover.items()) {
        if (iv.lo >= x) {
            return false;
        }
        if (iv.hi > x) {
            return true;
        }
    }
    return false;
}

}  // namespace seqgauge
