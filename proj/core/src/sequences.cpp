#include "seqgauge/sequences.hpp"

#include <algorithm>
#include <stdexcept>

namespace seqgauge {

namespace {

constexpr std::uint64_t kMaxJitterSlotValue = 1'000'000;

Rational calkin_wilf_step(const Rational& q) {
    // q_{n+1} = 1 / (2 floor(q_n) - q_n + 1)
    return Rational(1) / (Rational(2 * floor_rat(q)) - q + 1);
}

}  // namespace

Rational calkin_wilf(std::uint64_t n) {
    Rational q(1);
    for (std::uint64_t i = 0; i < n; ++i) {
        q = calkin_wilf_step(q);
    }
    return q;
}

std::vector<Rational> calkin_wilf_first(std::uint64_t count) {
    std::vector<Rational> out;
    out.reserve(count);
    Rational q(1);
    for (std::uint64_t i = 0; i < count; ++i) {
        out.push_back(q);
        q = calkin_wilf_step(q);
    }
    return out;
}

SequenceRule SequenceRule::make(Spec spec) {
    SequenceRule rule(std::move(spec));

    if (const auto* a = std::get_if<Arithmetic>(&rule.spec_)) {
        if (a->x <= 0) {
            throw std::invalid_argument(
                "arithmetic step must be positive; the sequence must converge to infinity");
        }
        rule.monotone_index_ = 0;
        rule.tail_start_ = 0;
    } else if (const auto* l = std::get_if<LogShift>(&rule.spec_)) {
        if (l->precision == 0 || l->precision > 512) {
            throw std::invalid_argument("logshift precision must be in [1, 512]");
        }
        rule.monotone_index_ = 0;
        rule.tail_start_ = 0;
    } else if (const auto* e = std::get_if<Explicit>(&rule.spec_)) {
        if (e->slope <= 0) {
            throw std::invalid_argument(
                "explicit tail slope must be positive; the sequence must converge to infinity");
        }
        rule.tail_start_ = e->prefix.size();
        // Last index where the sequence fails to increase, scanning across
        // the prefix and the prefix/tail boundary.
        std::uint64_t monotone_from = 0;
        for (std::uint64_t n = 0; n + 1 <= e->prefix.size() && !e->prefix.empty(); ++n) {
            const Rational next = (n + 1 < e->prefix.size())
                                      ? e->prefix[n + 1]
                                      : e->slope * Rational(n + 1) + e->offset;
            if (!(next > e->prefix[n])) {
                monotone_from = n + 1;
            }
        }
        rule.monotone_index_ = monotone_from;
    } else {
        auto& j = std::get<Jitter>(rule.spec_);
        if (!j.base) {
            throw std::invalid_argument("jitter needs a base sequence");
        }
        if (!j.base->exact_kind()) {
            throw std::invalid_argument("jitter base must be an exact-valued kind");
        }
        if (!j.slots.total() || j.slots.tail != FunctionRule::Tail::Constant) {
            throw std::invalid_argument(
                "jitter slots must be total with a constant tail; the perturbation range "
                "has to be finite for the metadata to be certified");
        }
        std::vector<std::uint64_t> values = j.slots.table;
        values.push_back(j.slots.tail_c);
        for (std::uint64_t v : values) {
            if (v > kMaxJitterSlotValue) {
                throw std::invalid_argument("jitter slot value too large");
            }
            if (!rule.jitter_psi_.contains(v)) {
                rule.jitter_psi_.emplace(v, calkin_wilf(v));
            }
        }
        rule.tail_start_ = std::max<std::uint64_t>(j.slots.table_end(), j.base->tail_start());
        rule.monotone_index_ =
            std::max<std::uint64_t>(j.slots.table_end(), j.base->monotone_index());
    }
    return rule;
}

std::string SequenceRule::kind_name() const {
    if (std::holds_alternative<Arithmetic>(spec_)) return "arithmetic";
    if (std::holds_alternative<LogShift>(spec_)) return "logshift";
    if (std::holds_alternative<Explicit>(spec_)) return "explicit";
    return "jitter";
}

bool SequenceRule::exact_kind() const {
    return !std::holds_alternative<LogShift>(spec_);
}

unsigned SequenceRule::precision() const {
    if (const auto* l = std::get_if<LogShift>(&spec_)) {
        return l->precision;
    }
    return 0;
}

Rational SequenceRule::exact_term(std::uint64_t n) const {
    if (const auto* a = std::get_if<Arithmetic>(&spec_)) {
        return a->x * Rational(n + 1);
    }
    if (const auto* e = std::get_if<Explicit>(&spec_)) {
        if (n < e->prefix.size()) {
            return e->prefix[n];
        }
        return e->slope * Rational(n) + e->offset;
    }
    if (const auto* j = std::get_if<Jitter>(&spec_)) {
        return j->base->exact_term(n) + jitter_psi_.at(j->slots.eval(n));
    }
    throw std::domain_error("logshift terms are irrational; use approx_term");
}

DyadicApprox SequenceRule::approx_term(std::uint64_t n, unsigned precision_bits) const {
    if (const auto* l = std::get_if<LogShift>(&spec_)) {
        return dyadic_add(log_nat(n + 1, precision_bits), l->x);
    }
    return DyadicApprox::exact(exact_term(n));
}

std::variant<Rational, DyadicApprox> SequenceRule::term(std::uint64_t n) const {
    if (const auto* l = std::get_if<LogShift>(&spec_)) {
        return approx_term(n, l->precision);
    }
    return exact_term(n);
}

std::uint64_t SequenceRule::divergence_index(const Rational& bound) const {
    if (const auto* a = std::get_if<Arithmetic>(&spec_)) {
        if (bound < 0) {
            return 0;
        }
        const Int n = ceil_rat(bound / a->x);
        return n <= 0 ? 0 : to_u64(n);
    }
    if (const auto* e = std::get_if<Explicit>(&spec_)) {
        Int past_tail = floor_rat((bound - e->offset) / e->slope) + 1;
        if (past_tail < 0) {
            past_tail = 0;
        }
        return std::max<std::uint64_t>(e->prefix.size(), to_u64(past_tail));
    }
    if (const auto* j = std::get_if<Jitter>(&spec_)) {
        // Perturbations are positive rationals, so the base modulus carries over.
        return j->base->divergence_index(bound);
    }
    const auto& l = std::get<LogShift>(spec_);
    if (bound < l.x) {
        return 0;
    }
    const Rational target = bound - l.x;  // need ln(n+1) > target
    if (target == 0) {
        return 1;
    }
    std::uint64_t hi = 1;
    while (log_ratio_cmp(hi + 1, 1, target) != Cmp3::Greater) {
        if (hi > (std::uint64_t(1) << 50)) {
            throw std::overflow_error("divergence index out of range for logshift");
        }
        hi *= 2;
    }
    std::uint64_t lo = hi / 2;  // ln(lo+1) <= target < ln(hi+1)
    while (lo + 1 < hi) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (log_ratio_cmp(mid + 1, 1, target) == Cmp3::Greater) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

GapEnvelope SequenceRule::gap_envelope(std::uint64_t m) const {
    if (const auto* a = std::get_if<Arithmetic>(&spec_)) {
        return {a->x, a->x};
    }
    if (std::holds_alternative<LogShift>(spec_)) {
        // gap(n) = ln((n+2)/(n+1)) lies in (1/(n+2), 1/(n+1)); over the
        // suffix the infimum is 0 and the supremum is the first gap bound.
        return {Rational(0), Rational(Int(1), Int(m + 1))};
    }
    // Exact kinds: gaps are the tail gap from tail_start_ on, and finitely
    // many explicitly computable values before that.
    Rational lo = tail_gap();
    Rational hi = lo;
    for (std::uint64_t n = m; n < tail_start_; ++n) {
        const Rational g = exact_gap(n);
        lo = std::min(lo, g);
        hi = std::max(hi, g);
    }
    return {lo, hi};
}

Rational SequenceRule::exact_gap(std::uint64_t n) const {
    return exact_term(n + 1) - exact_term(n);
}

Rational SequenceRule::tail_gap() const {
    if (const auto* a = std::get_if<Arithmetic>(&spec_)) {
        return a->x;
    }
    if (const auto* e = std::get_if<Explicit>(&spec_)) {
        return e->slope;
    }
    if (const auto* j = std::get_if<Jitter>(&spec_)) {
        return j->base->tail_gap();
    }
    throw std::domain_error("logshift gaps shrink to zero; no tail gap");
}

std::pair<Rational, Rational> SequenceRule::tail_affine() const {
    if (const auto* a = std::get_if<Arithmetic>(&spec_)) {
        return {a->x, a->x};  // (n+1) x = x n + x
    }
    if (const auto* e = std::get_if<Explicit>(&spec_)) {
        return {e->slope, e->offset};
    }
    if (const auto* j = std::get_if<Jitter>(&spec_)) {
        auto [slope, offset] = j->base->tail_affine();
        return {slope, offset + jitter_psi_.at(j->slots.tail_c)};
    }
    throw std::domain_error("logshift has no affine tail");
}

std::optional<Rational> SequenceRule::min_gap() const {
    if (!exact_kind()) {
        return std::nullopt;
    }
    Rational g = tail_gap();
    for (std::uint64_t n = 0; n < tail_start_; ++n) {
        g = std::min(g, exact_gap(n));
    }
    if (g <= 0) {
        return std::nullopt;
    }
    return g;
}

TermsInWindow SequenceRule::terms_in(const OpenInterval& window) const {
    TermsInWindow out;
    const Rational& lo = window.lo;
    const Rational& hi = window.hi;

    if (const auto* a = std::get_if<Arithmetic>(&spec_)) {
        // lo < (n+1) x < hi
        Int first = floor_rat(lo / a->x) + 1;
        if (first < 1) {
            first = 1;
        }
        const Int last = ceil_rat(hi / a->x) - 1;
        for (Int m = first; m <= last; ++m) {
            out.inside.push_back(to_u64(m - 1));
        }
        return out;
    }
    if (const auto* e = std::get_if<Explicit>(&spec_)) {
        for (std::uint64_t n = 0; n < e->prefix.size(); ++n) {
            if (window.contains(e->prefix[n])) {
                out.inside.push_back(n);
            }
        }
        // Tail: lo < slope n + offset < hi, n >= prefix length.
        Int first = floor_rat((lo - e->offset) / e->slope) + 1;
        if (first < Int(e->prefix.size())) {
            first = Int(e->prefix.size());
        }
        const Int last = ceil_rat((hi - e->offset) / e->slope) - 1;
        for (Int n = first; n <= last; ++n) {
            out.inside.push_back(to_u64(n));
        }
        return out;
    }
    if (const auto* j = std::get_if<Jitter>(&spec_)) {
        const std::uint64_t cut = j->slots.table_end();
        for (std::uint64_t n = 0; n < cut; ++n) {
            if (window.contains(exact_term(n))) {
                out.inside.push_back(n);
            }
        }
        // Beyond the slot table the perturbation is the constant cw(tail_c).
        const Rational& pert = jitter_psi_.at(j->slots.tail_c);
        const TermsInWindow base_hits =
            j->base->terms_in(OpenInterval(lo - pert, hi - pert));
        for (std::uint64_t n : base_hits.inside) {
            if (n >= cut) {
                out.inside.push_back(n);
            }
        }
        std::sort(out.inside.begin(), out.inside.end());
        return out;
    }

    // logshift: the true index range is certified by adaptive comparison,
    // then each index is classified at the rule's own precision.
    const auto& l = std::get<LogShift>(spec_);
    const std::uint64_t n_begin = divergence_index(lo);
    const std::uint64_t n_end = divergence_index(hi);
    for (std::uint64_t n = n_begin; n < n_end; ++n) {
        if (n == 0 && l.x == hi) {
            continue;  // a_0 = x sits exactly on the excluded endpoint
        }
        const DyadicApprox v = approx_term(n, l.precision);
        if (v.lo() > lo && v.hi() < hi) {
            out.inside.push_back(n);
        } else {
            out.uncertain.push_back(n);
        }
    }
    return out;
}

std::vector<std::uint64_t> SequenceRule::certified_terms_in(const OpenInterval& window) const {
    if (exact_kind()) {
        return terms_in(window).inside;
    }
    const auto& l = std::get<LogShift>(spec_);
    std::vector<std::uint64_t> out;
    const std::uint64_t n_begin = divergence_index(window.lo);
    const std::uint64_t n_end = divergence_index(window.hi);
    for (std::uint64_t n = n_begin; n < n_end; ++n) {
        if (n == 0 && l.x == window.hi) {
            continue;
        }
        out.push_back(n);
    }
    return out;
}

ConditionVerdict SequenceRule::check_condition2() const {
    ConditionVerdict v;
    if (std::holds_alternative<Arithmetic>(spec_)) {
        v.status = VerdictStatus::Holds;
        v.certified_all = true;
        v.note = "constant positive gaps";
        return v;
    }
    if (std::holds_alternative<LogShift>(spec_)) {
        v.status = VerdictStatus::Holds;
        v.certified_all = true;
        v.note = "gaps ln((n+2)/(n+1)) are positive and strictly decreasing";
        return v;
    }
    // Exact scan through the prefix region; beyond tail_start_ the gaps are
    // a positive constant, which keeps the chain non-increasing.
    const auto gap_at = [this](std::uint64_t n) {
        return n < tail_start_ ? exact_gap(n) : tail_gap();
    };
    if (gap_at(0) <= 0) {
        v.status = VerdictStatus::Fails;
        v.witness = 0;
        v.note = "gap at n=0 is not positive (checked under the strict reading that "
                 "includes the first gap)";
        return v;
    }
    for (std::uint64_t n = 1; n <= tail_start_; ++n) {
        const Rational g = gap_at(n);
        if (g <= 0 || g > gap_at(n - 1)) {
            v.status = VerdictStatus::Fails;
            v.witness = n;
            return v;
        }
    }
    v.status = VerdictStatus::Holds;
    v.certified_all = true;
    v.note = "prefix checked exhaustively; constant tail gap";
    return v;
}

std::optional<Rational> SequenceRule::check_condition3() const {
    const auto g = min_gap();
    if (!g) {
        return std::nullopt;
    }
    return *g / 2;
}

}  // namespace seqgauge
