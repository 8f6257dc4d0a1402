#include "seqgauge/bump.hpp"

#include <algorithm>

namespace seqgauge {

PiecewiseLinear build_bump(const EvasionSet& eset, std::uint64_t k_max) {
    PiecewiseLinear f;
    const std::uint64_t upto = std::min<std::uint64_t>(k_max, eset.k_max);
    f.breakpoints.reserve(3 * (upto + 1));
    for (std::uint64_t k = 0; k <= upto && k < eset.chosen.size(); ++k) {
        const OpenInterval& iv = eset.chosen[k];
        f.breakpoints.emplace_back(iv.lo, Rational(0));
        f.breakpoints.emplace_back(iv.midpoint(), Rational(1));
        f.breakpoints.emplace_back(iv.hi, Rational(0));
    }
    return f;
}

Rational eval_pwl(const PiecewiseLinear& f, const Rational& x) {
    const auto& pts = f.breakpoints;
    if (pts.empty() || x <= pts.front().first || x >= pts.back().first) {
        return Rational(0);
    }
    // First breakpoint with x0 >= x.
    const auto it = std::lower_bound(
        pts.begin(), pts.end(), x,
        [](const std::pair<Rational, Rational>& p, const Rational& v) { return p.first < v; });
    if (it->first == x) {
        return it->second;
    }
    const auto& [x1, y1] = *it;
    const auto& [x0, y0] = *(it - 1);
    return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
}

}  // namespace seqgauge
