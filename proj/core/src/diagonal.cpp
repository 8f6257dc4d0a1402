#include "seqgauge/diagonal.hpp"

#include <algorithm>
#include <stdexcept>

namespace seqgauge {

namespace {

// Slot index of a relative position rho in (0, 1): the unique i with
// 2^-(i+2) < rho < 2^-(i+1), nothing for the upper half [1/2, 1) or for an
// exact dyadic boundary.
std::optional<std::uint64_t> dyadic_slot_index(const Rational& rho) {
    const Int p = numerator(rho);
    const Int q = denominator(rho);
    // smallest e with p 2^e > q, so 2^-e < rho <= 2^-(e-1)
    unsigned e = 1;
    while ((p << e) <= q) {
        ++e;
    }
    if ((p << (e - 1)) == q) {
        return std::nullopt;  // exactly on a slot endpoint
    }
    if (e < 2) {
        return std::nullopt;  // upper half of the window
    }
    return e - 2;
}

// Slot index of term n of a (possibly logshift) rule inside the window
// (base, base + width); the term is known to lie in the open window.
std::optional<std::uint64_t> slot_of_term(const SequenceRule& rule, std::uint64_t n,
                                          const Rational& base, const Rational& width) {
    if (rule.exact_kind() || n == 0) {
        const Rational t = rule.exact_kind()
                               ? rule.exact_term(n)
                               : std::get<SequenceRule::LogShift>(rule.spec()).x;
        return dyadic_slot_index((t - base) / width);
    }
    // logshift, n >= 1: the term x + ln(n+1) is irrational, so it never sits
    // on a slot endpoint and every comparison below is decidable.
    const Rational x = std::get<SequenceRule::LogShift>(rule.spec()).x;
    const auto term_above = [&](const Rational& boundary) {
        return log_ratio_cmp(n + 1, 1, boundary - x) == Cmp3::Greater;
    };
    if (term_above(base + width / 2)) {
        return std::nullopt;  // upper half
    }
    for (std::uint64_t i = 0;; ++i) {
        if (term_above(base + width * pow2(-static_cast<long>(i + 2)))) {
            return i;
        }
        if (i > 4096) {
            throw std::runtime_error("slot search exhausted; term too close to the window base");
        }
    }
}

SlotChoice choose_slot(const SequenceRule& rule, const OpenInterval& window,
                       const Rational& width) {
    SlotChoice out;
    bool found = false;
    for (std::uint64_t n : rule.certified_terms_in(window)) {
        const auto idx = slot_of_term(rule, n, window.lo, width);
        if (!idx) {
            out.window_only_terms.push_back(n);
            continue;
        }
        ++out.slotted_count;
        if (!found || *idx < out.slot) {
            out.slot = *idx;
            found = true;
        }
    }
    out.occupied = found;
    if (!found) {
        out.slot = 0;
    }
    return out;
}

}  // namespace

WindowScheme::WindowScheme(FunctionRule bound) : bound_(std::move(bound)) {
    if (!bound_.total()) {
        throw std::invalid_argument("window scheme needs a total bound");
    }
}

Rational WindowScheme::width(std::uint64_t k) const {
    return Rational(Int(1), Int(bound_.eval(k)) + 1);
}

OpenInterval WindowScheme::window(std::uint64_t k) const {
    const Rational base(k);
    return OpenInterval(base, base + width(k));
}

OpenInterval WindowScheme::slot(std::uint64_t k, std::uint64_t i) const {
    const Rational base(k);
    const Rational w = width(k);
    return OpenInterval(base + w * pow2(-static_cast<long>(i + 2)),
                        base + w * pow2(-static_cast<long>(i + 1)));
}

std::uint64_t mex(const std::vector<std::uint64_t>& values) {
    std::vector<bool> seen(values.size() + 1, false);
    for (std::uint64_t v : values) {
        if (v < seen.size()) {
            seen[v] = true;
        }
    }
    std::uint64_t r = 0;
    while (seen[r]) {
        ++r;
    }
    return r;
}

SlotChoice slot_selector(const SequenceRule& rule, std::uint64_t k, const WindowScheme& scheme) {
    return choose_slot(rule, scheme.window(k), scheme.width(k));
}

namespace {

// Shared by the builder and the verifier: chosen interval at k, recomputing
// the mex rule past the stored truncation.
class ChosenIntervals {
public:
    ChosenIntervals(const SequenceFamily& family, const WindowScheme& scheme,
                    const EvasionSet* stored)
        : family_(family), scheme_(scheme), stored_(stored) {}

    const OpenInterval& at(std::uint64_t k) {
        if (stored_ && k < stored_->chosen.size()) {
            return stored_->chosen[k];
        }
        auto it = extended_.find(k);
        if (it == extended_.end()) {
            std::vector<std::uint64_t> slots;
            slots.reserve(family_.members.size());
            for (const SequenceRule& member : family_.members) {
                slots.push_back(slot_selector(member, k, scheme_).slot);
            }
            it = extended_.emplace(k, scheme_.slot(k, mex(slots))).first;
        }
        return it->second;
    }

private:
    const SequenceFamily& family_;
    const WindowScheme& scheme_;
    const EvasionSet* stored_;
    std::map<std::uint64_t, OpenInterval> extended_;
};

void require_members_certified(const SequenceFamily& family) {
    if (family.members.empty()) {
        throw std::invalid_argument("family must be non-empty");
    }
    for (std::size_t i = 0; i < family.members.size(); ++i) {
        const ConditionVerdict cond2 = family.members[i].check_condition2();
        if (cond2.status == VerdictStatus::Holds) {
            continue;
        }
        if (family.members[i].check_condition3()) {
            continue;
        }
        throw std::invalid_argument(
            "member " + std::to_string(i) + " fails condition (2) at n=" +
            std::to_string(cond2.witness.value_or(0)) +
            " and has no condition (3) witness");
    }
}

}  // namespace

EvasionResult build_evasion(const SequenceFamily& family, std::uint64_t k_max,
                            const std::optional<FunctionRule>& bound) {
    require_members_certified(family);

    FunctionRule bound_fn;
    if (bound) {
        if (!bound->total()) {
            throw std::invalid_argument("supplied bound must be total");
        }
        bound_fn = *bound;
    } else {
        const FamilyBound fb = family_bound(family, 0);
        if (!fb.certified) {
            throw std::invalid_argument(
                "default bound is uncertified (a member gauge lacks a closed tail); "
                "supply a total bound explicitly");
        }
        bound_fn = fb.fn;
    }

    // Dominance over each member's gauge, pointwise or eventual.
    for (std::size_t i = 0; i < family.members.size(); ++i) {
        const GaugeTable gt = gauge_table(family.members[i], 0);
        const DominanceVerdict dom = leq_star(gt.fn, bound_fn);
        if (dom.status != DominanceStatus::Holds) {
            throw std::invalid_argument("bound does not dominate the gauge of member " +
                                        std::to_string(i));
        }
    }

    EvasionResult out;
    out.eset.bound = bound_fn;
    out.eset.k_max = k_max;
    const WindowScheme scheme(bound_fn);

    out.eset.g.table.reserve(k_max + 1);
    out.eset.chosen.reserve(k_max + 1);
    std::vector<std::vector<std::uint64_t>> member_slots(family.members.size());
    for (std::uint64_t k = 0; k <= k_max; ++k) {
        std::vector<std::uint64_t> slots;
        slots.reserve(family.members.size());
        for (std::size_t i = 0; i < family.members.size(); ++i) {
            const SlotChoice c = slot_selector(family.members[i], k, scheme);
            slots.push_back(c.slot);
            member_slots[i].push_back(c.slot);
        }
        const std::uint64_t gk = mex(slots);
        out.eset.g.table.push_back(gk);
        out.eset.chosen.push_back(scheme.slot(k, gk));
    }
    out.eset.g.tail = FunctionRule::Tail::Undefined;

    ChosenIntervals chosen(family, scheme, &out.eset);
    for (std::size_t i = 0; i < family.members.size(); ++i) {
        const SequenceRule& member = family.members[i];
        FinitenessCertificate cert;
        cert.member = i;
        cert.single_term_from = single_term_horizon(member, bound_fn);
        // g is a mex at every k, so it never collides with a member's slot
        // value; hits are confined to k below the single-term horizon.
        for (std::uint64_t k = 0; k < cert.single_term_from; ++k) {
            const SlotChoice c = slot_selector(member, k, scheme);
            if (c.slotted_count >= 2) {
                cert.crowded_ks.push_back(k);
            }
            for (std::uint64_t n : member.certified_terms_in(chosen.at(k))) {
                ++cert.term_bound;
                cert.last_hit_index = std::max(cert.last_hit_index, n);
            }
        }
        out.certificates.push_back(std::move(cert));
    }
    return out;
}

VerifyReport verify_evasion(const SequenceFamily& family, const EvasionSet& eset,
                            const std::vector<FinitenessCertificate>& certificates,
                            std::uint64_t horizon) {
    if (certificates.size() != family.members.size()) {
        throw std::invalid_argument("one certificate per family member required");
    }
    const WindowScheme scheme(eset.bound);
    ChosenIntervals chosen(family, scheme, &eset);

    VerifyReport report;
    report.horizon = horizon;
    for (std::size_t i = 0; i < family.members.size(); ++i) {
        const SequenceRule& member = family.members[i];
        if (!member.exact_kind()) {
            throw std::invalid_argument("verification requires exact-valued members");
        }
        VerifyMemberReport mr;
        mr.member = i;
        for (std::uint64_t n = 0; n <= horizon; ++n) {
            const Rational a = member.exact_term(n);
            if (a <= 0) {
                continue;
            }
            const Int k_int = floor_rat(a);
            if (a == Rational(k_int)) {
                continue;  // chosen intervals lie strictly inside (k, k+1)
            }
            const std::uint64_t k = to_u64(k_int);
            if (chosen.at(k).contains(a)) {
                ++mr.hit_count;
                mr.last_hit = n;
            }
        }
        const FinitenessCertificate& cert = certificates[i];
        mr.within_certificate =
            mr.hit_count <= cert.term_bound &&
            (!mr.last_hit || *mr.last_hit <= cert.last_hit_index);
        report.falsification = report.falsification || !mr.within_certificate;
        report.members.push_back(std::move(mr));
    }
    return report;
}

void validate_peaks(const PeakWitness& peaks) {
    if (!peaks.xs.exact_kind() || !peaks.ys.exact_kind()) {
        throw std::invalid_argument("peak witnesses must be exact-valued kinds");
    }
    const std::uint64_t scan_to =
        std::max(peaks.xs.tail_start(), peaks.ys.tail_start()) + 1;
    for (std::uint64_t k = 0; k < scan_to; ++k) {
        if (!(peaks.xs.exact_term(k) < peaks.ys.exact_term(k))) {
            throw std::invalid_argument("peak witness violates x_k < y_k at k=" +
                                        std::to_string(k));
        }
        if (!(peaks.ys.exact_term(k) < peaks.xs.exact_term(k + 1))) {
            throw std::invalid_argument("peak witness violates y_k < x_{k+1} at k=" +
                                        std::to_string(k));
        }
    }
    // Affine tails from scan_to on: linear inequalities hold for all k iff
    // they hold at scan_to and the slopes do not eventually reverse them.
    const auto [sx, ox] = peaks.xs.tail_affine();
    const auto [sy, oy] = peaks.ys.tail_affine();
    const Rational L(scan_to);
    const bool first_ok = (sy > sx) ? (sy - sx) * L > ox - oy
                          : (sy == sx && ox < oy);
    const bool second_ok = (sx > sy) ? (sx - sy) * L > oy - ox - sx
                           : (sx == sy && oy < ox + sx);
    if (!first_ok || !second_ok) {
        throw std::invalid_argument("peak witness interleaving fails on the affine tails");
    }
}

WindowsEvasionResult build_windows_evasion(
    const SequenceFamily& family, const PeakWitness& peaks,
    const std::vector<std::vector<std::uint64_t>>& one_term_exceptions, std::uint64_t k_max) {
    require_members_certified(family);
    validate_peaks(peaks);
    if (one_term_exceptions.size() != family.members.size()) {
        throw std::invalid_argument("one exception set per family member required");
    }

    const auto window_at = [&](std::uint64_t k) {
        return OpenInterval(peaks.xs.exact_term(k), peaks.ys.exact_term(k));
    };

    // Refute supplied one-term certificates where the scan can.
    for (std::size_t i = 0; i < family.members.size(); ++i) {
        const auto& exceptions = one_term_exceptions[i];
        for (std::uint64_t k = 0; k <= k_max; ++k) {
            if (family.members[i].certified_terms_in(window_at(k)).size() >= 2 &&
                std::find(exceptions.begin(), exceptions.end(), k) == exceptions.end()) {
                throw std::invalid_argument(
                    "scan refutes the one-term certificate of member " + std::to_string(i) +
                    " at k=" + std::to_string(k));
            }
        }
    }

    WindowsEvasionResult out;
    out.k_max = k_max;
    const auto slot_at = [&](std::uint64_t k, std::uint64_t i) {
        const OpenInterval w = window_at(k);
        const Rational len = w.length();
        return OpenInterval(w.lo + len * pow2(-static_cast<long>(i + 2)),
                            w.lo + len * pow2(-static_cast<long>(i + 1)));
    };
    const auto g_at = [&](std::uint64_t k) {
        const OpenInterval w = window_at(k);
        std::vector<std::uint64_t> slots;
        slots.reserve(family.members.size());
        for (const SequenceRule& member : family.members) {
            slots.push_back(choose_slot(member, w, w.length()).slot);
        }
        return mex(slots);
    };

    out.g.table.reserve(k_max + 1);
    for (std::uint64_t k = 0; k <= k_max; ++k) {
        const std::uint64_t gk = g_at(k);
        out.g.table.push_back(gk);
        out.chosen.push_back(slot_at(k, gk));
    }
    out.g.tail = FunctionRule::Tail::Undefined;

    for (std::size_t i = 0; i < family.members.size(); ++i) {
        FinitenessCertificate cert;
        cert.member = i;
        cert.crowded_ks = one_term_exceptions[i];
        std::sort(cert.crowded_ks.begin(), cert.crowded_ks.end());
        for (std::uint64_t k : cert.crowded_ks) {
            const OpenInterval chosen_k = k <= k_max ? out.chosen[k] : slot_at(k, g_at(k));
            for (std::uint64_t n : family.members[i].certified_terms_in(chosen_k)) {
                ++cert.term_bound;
                cert.last_hit_index = std::max(cert.last_hit_index, n);
            }
        }
        out.certificates.push_back(std::move(cert));
    }
    return out;
}

PeakHitReport peak_hit_counts(const SequenceFamily& family, const PeakWitness& peaks,
                              std::uint64_t m, std::uint64_t k_max, std::uint64_t horizon) {
    if (m == 0) {
        throw std::invalid_argument("m must be positive");
    }
    if (family.members.empty()) {
        throw std::invalid_argument("family must be non-empty");
    }
    validate_peaks(peaks);

    PeakHitReport report;
    report.m = m;
    report.k_max = k_max;
    report.horizon = horizon;
    for (const SequenceRule& member : family.members) {
        PeakHitMemberReport mr;
        mr.counts.reserve(k_max + 1);
        for (std::uint64_t k = 0; k <= k_max; ++k) {
            const OpenInterval w(peaks.xs.exact_term(k), peaks.ys.exact_term(k));
            std::uint64_t count = 0;
            for (std::uint64_t n : member.certified_terms_in(w)) {
                if (n <= horizon) {
                    ++count;
                } else {
                    report.horizon_limited = true;
                }
            }
            mr.counts.push_back(count);
            mr.max_count = std::max(mr.max_count, count);
            if (count >= m) {
                ++mr.windows_with_at_least_m;
            }
        }
        report.overall_max = std::max(report.overall_max, mr.max_count);
        report.members.push_back(std::move(mr));
    }
    report.refuted_up_to_k_max = report.overall_max < m;
    return report;
}

}  // namespace seqgauge
