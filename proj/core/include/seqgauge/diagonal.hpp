/** \file
 * The diagonal construction: pack disjoint dyadic slots into the window
 * (k, k + 1/(f(k)+1)) above every natural k, record which slot each family
 * member first hits, pick the mex of those slot numbers, and take the union
 * of the picked slots. The result is an open set, unbounded above, that
 * every certified family member meets only finitely often — with an
 * explicit, machine-checkable certificate of that count.
 */
#pragma once

#include "seqgauge/covering.hpp"

#include <map>
#include <optional>
#include <string>

namespace seqgauge {

/// Dyadic slot packing of the windows (k, k + 1/(f(k)+1)):
/// slot(k, i) = (k + w 2^-(i+2), k + w 2^-(i+1)), w = 1/(f(k)+1).
/// Slots of one window are disjoint and fill the lower half (k, k + w/2);
/// windows of distinct k never touch since w <= 1.
class WindowScheme {
public:
    /// bound must be total.
    explicit WindowScheme(FunctionRule bound);

    const FunctionRule& bound() const { return bound_; }
    Rational width(std::uint64_t k) const;
    OpenInterval window(std::uint64_t k) const;
    OpenInterval slot(std::uint64_t k, std::uint64_t i) const;

private:
    FunctionRule bound_;
};

/// Least natural number not in the list.
std::uint64_t mex(const std::vector<std::uint64_t>& values);

struct SlotChoice {
    std::uint64_t slot = 0;    // smallest slot holding a term; 0 when none does
    bool occupied = false;     // some slot holds a term
    std::uint64_t slotted_count = 0;  // terms lying in some slot
    /// Terms inside the window but in no slot (upper half of the window or
    /// exactly on a dyadic slot endpoint). They select nothing.
    std::vector<std::uint64_t> window_only_terms;
};

SlotChoice slot_selector(const SequenceRule& rule, std::uint64_t k, const WindowScheme& scheme);

struct EvasionSet {
    FunctionRule bound;
    FunctionRule g;      // table over 0..k_max; continued by the mex rule
    std::uint64_t k_max = 0;
    std::vector<OpenInterval> chosen;  // chosen[k] = slot(k, g(k))
    std::string packing = "dyadic-v1";
};

struct FinitenessCertificate {
    std::size_t member = 0;
    std::vector<std::uint64_t> conflict_ks;  // k with g(k) = s(k); empty under mex
    std::vector<std::uint64_t> crowded_ks;   // k below the horizon with >= 2 slot-union terms
    std::uint64_t single_term_from = 0;      // windows at k >= this hold <= 1 term
    std::uint64_t term_bound = 0;            // exact count of the member's terms in the whole set
    std::uint64_t last_hit_index = 0;        // no term beyond this index ever hits (0 when none do)
};

struct EvasionResult {
    EvasionSet eset;
    std::vector<FinitenessCertificate> certificates;
};

/// Builds the evasion set for a family whose members each satisfy condition
/// (2) or condition (3). The bound defaults to the pointwise family bound
/// and must dominate every member's gauge (pointwise, or eventually with
/// listed violations). Throws std::invalid_argument naming the member and
/// the violated precondition otherwise.
EvasionResult build_evasion(const SequenceFamily& family, std::uint64_t k_max,
                            const std::optional<FunctionRule>& bound = std::nullopt);

struct VerifyMemberReport {
    std::size_t member = 0;
    std::uint64_t hit_count = 0;
    std::optional<std::uint64_t> last_hit;
    bool within_certificate = true;
};

struct VerifyReport {
    std::vector<VerifyMemberReport> members;
    bool falsification = false;
    std::uint64_t horizon = 0;
};

/// Independent re-scan: counts the terms of each member (indices up to
/// horizon) that land in a chosen interval, extending the scheme beyond
/// k_max by the same mex rule. Any count above the certificate is flagged.
VerifyReport verify_evasion(const SequenceFamily& family, const EvasionSet& eset,
                            const std::vector<FinitenessCertificate>& certificates,
                            std::uint64_t horizon);

/// Interleaved diverging pair x_0 < y_0 < x_1 < y_1 < ...; the (x_k, y_k)
/// are the test windows for the peak-hit conditions (C_m).
struct PeakWitness {
    SequenceRule xs;
    SequenceRule ys;
};

/// Certifies the interleaving for all k: exact scan through the prefixes,
/// closed form on the affine tails. Throws when it fails or cannot be
/// certified (non-exact kinds).
void validate_peaks(const PeakWitness& peaks);

struct WindowsEvasionResult {
    FunctionRule g;
    std::uint64_t k_max = 0;
    std::vector<OpenInterval> chosen;  // chosen[k] inside (x_k, y_k)
    std::string packing = "dyadic-peaks-v1";
    std::vector<FinitenessCertificate> certificates;
};

/// The same construction with the windows (x_k, y_k) of a peak witness in
/// place of (k, k + 1/(f(k)+1)). The caller supplies, per member, the
/// exception set outside which each window certifiably holds at most one
/// term; a scan over k <= k_max that refutes a supplied certificate throws.
WindowsEvasionResult build_windows_evasion(const SequenceFamily& family, const PeakWitness& peaks,
                                           const std::vector<std::vector<std::uint64_t>>& one_term_exceptions,
                                           std::uint64_t k_max);

struct PeakHitMemberReport {
    std::vector<std::uint64_t> counts;        // counts[k] = terms in (x_k, y_k)
    std::uint64_t windows_with_at_least_m = 0;
    std::uint64_t max_count = 0;
};

struct PeakHitReport {
    std::uint64_t m = 0;
    std::uint64_t k_max = 0;
    std::uint64_t horizon = 0;
    bool horizon_limited = false;  // some counts dropped indices beyond the horizon
    std::vector<PeakHitMemberReport> members;
    std::uint64_t overall_max = 0;
    /// True when no member reaches m terms in any window k <= k_max: the
    /// witness refutes condition (C_m) up to this truncation.
    bool refuted_up_to_k_max = false;
};

/// Exact per-window term counts of every member against a peak witness.
/// Verdicts are witness- and truncation-relative by design.
PeakHitReport peak_hit_counts(const SequenceFamily& family, const PeakWitness& peaks,
                              std::uint64_t m, std::uint64_t k_max, std::uint64_t horizon);

}  // namespace seqgauge
