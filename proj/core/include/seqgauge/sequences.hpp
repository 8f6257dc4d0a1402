/** \file
 * Finitely described sequences of reals converging to infinity, with the
 * certified metadata (divergence modulus, monotonicity index, gap envelope)
 * that makes coverage questions about them decidable.
 *
 * Four kinds are supported:
 *   arithmetic(x)          a_n = (n+1) x, x > 0 rational
 *   logshift(x, p)         a_n = x + ln(n+1), terms carried to 2^-p
 *   explicit(prefix, tail) finite rational prefix, then a_n = slope n + offset
 *   jitter(base, slots)    a_n = base_n + cw(slots(n)), cw the Calkin-Wilf
 *                          enumeration of the positive rationals
 *
 * Certified metadata means: every verdict issued through this type holds
 * for the entire infinite sequence, not merely for a scanned window.
 */
#pragma once

#include "seqgauge/dyadic.hpp"
#include "seqgauge/function_rule.hpp"
#include "seqgauge/intervals.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace seqgauge {

/// Bounds on every gap a_{n+1} - a_n with n >= m.
struct GapEnvelope {
    Rational lo;
    Rational hi;
};

enum class VerdictStatus { Holds, Fails, UnknownBeyondHorizon };

struct ConditionVerdict {
    VerdictStatus status = VerdictStatus::UnknownBeyondHorizon;
    std::optional<std::uint64_t> witness;  // Fails: first violating index
    bool certified_all = false;            // Holds for every index, by closed form
    std::string note;
};

struct TermsInWindow {
    std::vector<std::uint64_t> inside;
    /// logshift only: indices whose approximation band at the rule's own
    /// precision straddles a window endpoint.
    std::vector<std::uint64_t> uncertain;
};

class SequenceRule {
public:
    struct Arithmetic {
        Rational x;
    };
    struct LogShift {
        Rational x;
        unsigned precision = 20;
    };
    struct Explicit {
        std::vector<Rational> prefix;
        Rational slope;
        Rational offset;
    };
    struct Jitter {
        std::shared_ptr<const SequenceRule> base;  // exact kind required
        FunctionRule slots;                        // total, constant tail
    };
    using Spec = std::variant<Arithmetic, LogShift, Explicit, Jitter>;

    /// Validates the spec and derives the closed-form metadata. Throws
    /// std::invalid_argument for specs that do not converge to infinity
    /// or whose metadata cannot be certified.
    static SequenceRule make(Spec spec);

    const Spec& spec() const { return spec_; }
    std::string kind_name() const;
    bool exact_kind() const;
    unsigned precision() const;  // logshift precision; 0 for exact kinds

    /// Exact value; throws std::domain_error for logshift.
    Rational exact_term(std::uint64_t n) const;
    DyadicApprox approx_term(std::uint64_t n, unsigned precision_bits) const;
    /// Exact rational for exact kinds, rule-precision approximation otherwise.
    std::variant<Rational, DyadicApprox> term(std::uint64_t n) const;

    /// Strictly increasing from this index on.
    std::uint64_t monotone_index() const { return monotone_index_; }

    /// N(B): every term at index >= N(B) exceeds B.
    std::uint64_t divergence_index(const Rational& bound) const;

    GapEnvelope gap_envelope(std::uint64_t m) const;

    /// Exact gap a_{n+1} - a_n (exact kinds only).
    Rational exact_gap(std::uint64_t n) const;

    /// From this index on, every gap equals tail_gap() (exact kinds).
    std::uint64_t tail_start() const { return tail_start_; }
    Rational tail_gap() const;

    /// The eventual affine form: a_n = first * n + second for n >= tail_start().
    std::pair<Rational, Rational> tail_affine() const;

    /// Certified infimum of all gaps, when positive (exact kinds).
    std::optional<Rational> min_gap() const;

    /// All indices n with a_n strictly inside the window. Complete and
    /// finite by the divergence modulus. For logshift the classification
    /// is reported at the rule's precision, with straddlers set aside.
    TermsInWindow terms_in(const OpenInterval& window) const;

    /// Exact index set, refining logshift approximations as far as needed.
    std::vector<std::uint64_t> certified_terms_in(const OpenInterval& window) const;

    /// Gaps positive and non-increasing (including the n=0 gap; that gap is
    /// outside the usual statement of the condition, and the verdict says so
    /// when it is the deciding one).
    ConditionVerdict check_condition2() const;

    /// A positive r with every gap > r, when the gaps are bounded away from
    /// zero; chosen as half the certified infimum.
    std::optional<Rational> check_condition3() const;

private:
    explicit SequenceRule(Spec s) : spec_(std::move(s)) {}
    const Explicit& as_explicit() const { return std::get<Explicit>(spec_); }

    Spec spec_;
    std::uint64_t monotone_index_ = 0;
    std::uint64_t tail_start_ = 0;
    std::map<std::uint64_t, Rational> jitter_psi_;  // slot value -> cw(value)
};

/// The Calkin-Wilf enumeration of the positive rationals:
/// q_0 = 1, q_{n+1} = 1 / (2 floor(q_n) - q_n + 1). A bijection onto Q+.
Rational calkin_wilf(std::uint64_t n);

/// First `count` values of the enumeration (the recurrence is sequential,
/// so batch evaluation is linear instead of quadratic).
std::vector<Rational> calkin_wilf_first(std::uint64_t count);

}  // namespace seqgauge
