/** \file
 * Finite-truncation combinatorics of omega^omega: eventual dominance with
 * explicit violation sets, pointwise bounds, and the diagonal construction
 * of a function differing everywhere from a finite family.
 *
 * Tables are compared pointwise and tails symbolically (constant/affine),
 * so a Holds verdict certifies all indices, not just scanned ones.
 */
#pragma once

#include "seqgauge/function_rule.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace seqgauge {

enum class DominanceStatus { Holds, Fails, UnknownBeyondHorizon };

struct DominanceVerdict {
    DominanceStatus status = DominanceStatus::UnknownBeyondHorizon;
    /// Indices with f(k) > g(k). Complete when status == Holds.
    std::vector<std::uint64_t> violations;
    /// When status == Fails: the first index of the infinite violation tail.
    std::optional<std::uint64_t> first_unbounded_violation;
};

/// f <=* g: f(k) > g(k) at only finitely many k, all enumerated.
DominanceVerdict leq_star(const FunctionRule& f, const FunctionRule& g);

struct EventuallyDifferent {
    FunctionRule g;
    std::uint64_t stabilization = 0;  // g(k) != f(k) for all k >= this (here: 0)
};

/// A g with g(k) != f(k) for every member f and every k, built as the
/// pointwise maximum plus one. Rejects members with undefined tails.
EventuallyDifferent eventually_different(const std::vector<FunctionRule>& family);

struct PointwiseBoundVerdict {
    bool pointwise = false;                    // f >= every gauge at every k
    std::vector<DominanceVerdict> per_member;  // gauge_i <=* f, with violations
    bool all_leq_star() const;
};

/// Is f an upper bound for the given gauges, pointwise everywhere? When not,
/// the per-member verdicts fall back to eventual dominance.
PointwiseBoundVerdict is_pointwise_bound(const FunctionRule& f,
                                         const std::vector<FunctionRule>& gauges);

}  // namespace seqgauge
