#include "seqgauge/covering.hpp"

#include <algorithm>
#include <stdexcept>

namespace seqgauge {

namespace {

constexpr std::uint64_t kGaugeSearchCap = 1u << 20;
constexpr std::uint64_t kTableExtensionCap = 1'000'000;

// Exact kinds, coverage of (i, oo) by the open 1/j-neighborhoods of the
// terms. All gaps from tail_start on equal the tail gap, so once that gap
// is < 2/j the neighborhoods beyond tail_start chain into the single ray
// (a_{tail_start} - 1/j, oo); what remains is an exact sweep of the finite
// part against the chain's left end.
bool covers_ray(const SequenceRule& rule, const Rational& i, std::uint64_t j) {
    const Rational inv_j(Int(1), Int(j));
    const std::uint64_t m = rule.tail_start();
    const Rational chain_lo = rule.exact_term(m) - inv_j;
    if (chain_lo <= i) {
        return true;
    }
    std::vector<OpenInterval> finite_part;
    finite_part.reserve(m);
    for (std::uint64_t n = 0; n < m; ++n) {
        const Rational t = rule.exact_term(n);
        finite_part.emplace_back(t - inv_j, t + inv_j);
    }
    return covered_reach(IntervalList(std::move(finite_part)), i) > chain_lo;
}

GaugeValue gauge_exact(const SequenceRule& rule, std::uint64_t i) {
    // The tail chains only while tail_gap < 2/j, which caps the search.
    const Rational tail_gap = rule.tail_gap();
    const Int jmax_int = ceil_rat(Rational(2) / tail_gap) - 1;
    if (jmax_int < 1) {
        return {0, 0};
    }
    const std::uint64_t jmax = to_u64(jmax_int);
    const Rational ri(i);

    if (rule.tail_start() == 0) {
        // No finite part: feasibility is just a_0 - 1/j <= i.
        const Rational a0 = rule.exact_term(0);
        if (a0 - ri <= 0) {
            return {jmax, jmax};
        }
        const Int jstar = floor_rat(Rational(1) / (a0 - ri));
        if (jstar < 1) {
            return {0, 0};
        }
        const std::uint64_t j = std::min(jmax, to_u64(jstar));
        return {j, j};
    }

    if (jmax > kGaugeSearchCap) {
        throw std::overflow_error("gauge search space too large (tail gap too small)");
    }
    // Coverage only gets easier as j shrinks, so the first feasible j going
    // downward is the maximum.
    for (std::uint64_t j = jmax; j >= 1; --j) {
        if (covers_ray(rule, ri, j)) {
            return {j, j};
        }
    }
    return {0, 0};
}

// Least n with ln((n+2)/(n+1)) < 2/j; the enclosing bounds
// 1/(n+2) < gap(n) < 1/(n+1) bracket it within a few candidates.
std::uint64_t first_chaining_index(std::uint64_t j) {
    const Rational threshold(Int(2), Int(j));
    std::uint64_t n = (j < 4) ? 0 : (j - 2) / 2;
    while (log_ratio_cmp(n + 2, n + 1, threshold) != Cmp3::Less) {
        ++n;
    }
    return n;
}

bool logshift_feasible(const Rational& x, std::uint64_t i, std::uint64_t j) {
    const Rational inv_j(Int(1), Int(j));
    const std::uint64_t chain_from = first_chaining_index(j);
    if (chain_from == 0) {
        return x - inv_j <= Rational(i);
    }
    // Uncovered points persist up to a_{chain_from} - 1/j; all of them must
    // sit at or below i: x + ln(chain_from + 1) <= i + 1/j.
    return log_ratio_cmp(chain_from + 1, 1, Rational(i) - x + inv_j) == Cmp3::Less;
}

GaugeValue gauge_logshift(const SequenceRule& rule, std::uint64_t i) {
    const Rational x = std::get<SequenceRule::LogShift>(rule.spec()).x;
    std::uint64_t lo_cert = 0;
    std::uint64_t hi_cert = 0;  // 0 = not yet known
    try {
        if (!logshift_feasible(x, i, 1)) {
            return {0, 0};
        }
        lo_cert = 1;
        std::uint64_t ub = 2;
        while (logshift_feasible(x, i, ub)) {
            lo_cert = ub;
            if (ub > (std::uint64_t(1) << 62)) {
                throw std::overflow_error("gauge exceeds the uint64 range at this index");
            }
            ub *= 2;
        }
        hi_cert = ub;
        while (lo_cert + 1 < hi_cert) {
            const std::uint64_t mid = lo_cert + (hi_cert - lo_cert) / 2;
            if (logshift_feasible(x, i, mid)) {
                lo_cert = mid;
            } else {
                hi_cert = mid;
            }
        }
        return {lo_cert, lo_cert};
    } catch (const std::runtime_error&) {
        // Precision cap reached mid-search: report the honest bracket
        // instead of guessing.
        if (hi_cert == 0) {
            throw;
        }
        return {lo_cert, hi_cert - 1};
    }
}

// First k0 such that fn(k) >= need for every k >= k0, if any.
std::optional<std::uint64_t> stays_at_least_from(const FunctionRule& fn, const Int& need) {
    if (need <= 0) {
        return 0;
    }
    std::uint64_t k0;
    if (fn.tail == FunctionRule::Tail::Constant) {
        if (Int(fn.tail_c) < need) {
            return std::nullopt;
        }
        k0 = fn.table_end();
    } else if (fn.tail == FunctionRule::Tail::Affine) {
        if (fn.tail_a == 0) {
            if (Int(fn.tail_b) < need) {
                return std::nullopt;
            }
            k0 = fn.table_end();
        } else {
            Int cross = ceil_rat(Rational(need - Int(fn.tail_b), Int(fn.tail_a)));
            if (cross < 0) {
                cross = 0;
            }
            k0 = std::max<std::uint64_t>(fn.table_end(), to_u64(cross));
        }
    } else {
        return std::nullopt;
    }
    while (k0 > 0 && k0 - 1 < fn.table_end() && Int(fn.table[k0 - 1]) >= need) {
        --k0;
    }
    return k0;
}

}  // namespace

GaugeValue gauge(const SequenceRule& rule, std::uint64_t i) {
    if (rule.exact_kind()) {
        return gauge_exact(rule, i);
    }
    return gauge_logshift(rule, i);
}

GaugeTable gauge_table(const SequenceRule& rule, std::uint64_t i_max) {
    GaugeTable out;
    std::uint64_t prev = 0;
    if (!rule.exact_kind()) {
        out.exact = true;
        for (std::uint64_t k = 0; k <= i_max; ++k) {
            const GaugeValue v = gauge(rule, k);
            out.exact = out.exact && v.exact();
            if (v.lo < prev) {
                throw std::logic_error("gauge table not non-decreasing");
            }
            prev = v.lo;
            out.fn.table.push_back(v.lo);
        }
        out.fn.tail = FunctionRule::Tail::Undefined;
        return out;
    }

    // Exact kinds: past ceil(a_{tail_start} - 1/jmax) the left-edge condition
    // is free and the gauge sits at its tail value forever.
    const Rational tail_gap = rule.tail_gap();
    const Int jmax_int = ceil_rat(Rational(2) / tail_gap) - 1;
    const std::uint64_t jmax = jmax_int < 1 ? 0 : to_u64(jmax_int);
    std::uint64_t stabilized = 0;
    if (jmax >= 1) {
        const Int s = ceil_rat(rule.exact_term(rule.tail_start()) - Rational(Int(1), Int(jmax)));
        stabilized = s < 0 ? 0 : to_u64(s);
    }
    if (stabilized > kTableExtensionCap) {
        throw std::overflow_error("gauge stabilization point too far out to tabulate");
    }
    const std::uint64_t len = std::max(i_max + 1, stabilized);
    out.fn.table.reserve(len);
    for (std::uint64_t k = 0; k < len; ++k) {
        const GaugeValue v = gauge(rule, k);
        if (v.lo < prev) {
            throw std::logic_error("gauge table not non-decreasing");
        }
        prev = v.lo;
        out.fn.table.push_back(v.lo);
    }
    out.fn.tail = FunctionRule::Tail::Constant;
    out.fn.tail_c = jmax;
    out.exact = true;
    return out;
}

FamilyBound family_bound(const SequenceFamily& family, std::uint64_t i_max) {
    if (family.members.empty()) {
        throw std::invalid_argument("family must be non-empty");
    }
    std::vector<GaugeTable> tables;
    tables.reserve(family.members.size());
    bool certified = true;
    for (const SequenceRule& member : family.members) {
        tables.push_back(gauge_table(member, i_max));
        certified = certified && tables.back().exact && tables.back().fn.total();
    }

    FamilyBound out;
    out.certified = certified;
    if (certified) {
        std::uint64_t len = 0;
        std::uint64_t tail_max = 0;
        for (const GaugeTable& t : tables) {
            len = std::max(len, t.fn.table_end());
            tail_max = std::max(tail_max, t.fn.tail_c);
        }
        for (std::uint64_t k = 0; k < len; ++k) {
            std::uint64_t m = 0;
            for (const GaugeTable& t : tables) {
                m = std::max(m, t.fn.eval(k));
            }
            out.fn.table.push_back(m);
        }
        out.fn.tail = FunctionRule::Tail::Constant;
        out.fn.tail_c = tail_max;
        return out;
    }
    // Truncated bound over [0, i_max] only.
    for (std::uint64_t k = 0; k <= i_max; ++k) {
        std::uint64_t m = 0;
        for (const GaugeTable& t : tables) {
            m = std::max(m, t.fn.eval(k));
        }
        out.fn.table.push_back(m);
    }
    out.fn.tail = FunctionRule::Tail::Undefined;
    return out;
}

CrowdingResult crowding_check(const SequenceRule& rule, std::uint64_t k, std::uint64_t j) {
    if (j == 0) {
        throw std::invalid_argument("crowding level j must be positive");
    }
    const ConditionVerdict cond2 = rule.check_condition2();
    if (cond2.status == VerdictStatus::Fails) {
        throw std::invalid_argument(
            "rule fails condition (2) at n=" + std::to_string(cond2.witness.value_or(0)) +
            "; the crowding bound needs non-increasing gaps");
    }
    CrowdingResult out;
    const OpenInterval window(Rational(k), Rational(k) + Rational(Int(1), Int(j)));
    out.crowded = rule.certified_terms_in(window).size() >= 2;
    if (out.crowded) {
        out.gauge_at_k = gauge(rule, k);
        out.falsification = out.gauge_at_k.hi < j;
    }
    return out;
}

std::uint64_t single_term_horizon(const SequenceRule& rule, const FunctionRule& bound) {
    if (!bound.total()) {
        throw std::invalid_argument("bound must be total");
    }
    std::optional<std::uint64_t> best;

    // Gap-floor route: windows of width <= the least gap can hold only one
    // term of a strictly increasing sequence.
    if (const auto floor_gap = rule.min_gap()) {
        const Int need = ceil_rat(Rational(1) / *floor_gap) - 1;  // bound(k) >= need
        if (const auto k0 = stays_at_least_from(bound, need)) {
            best = best ? std::min(*best, *k0) : *k0;
        }
    }

    // Dominance route: where the bound sits at or above the gauge, two terms
    // in (k, k + 1/(bound(k)+1)) would push the gauge past the bound.
    if (rule.check_condition2().status == VerdictStatus::Holds && rule.exact_kind()) {
        const GaugeTable gt = gauge_table(rule, 0);
        const DominanceVerdict dom = leq_star(gt.fn, bound);
        if (dom.status == DominanceStatus::Holds) {
            const std::uint64_t m = dom.violations.empty() ? 0 : dom.violations.back() + 1;
            best = best ? std::min(*best, m) : m;
        }
    }

    if (!best) {
        throw std::invalid_argument(
            "no certified single-term horizon: the bound does not dominate the gauge and "
            "the gaps have no usable positive floor");
    }
    return *best;
}

}  // namespace seqgauge
