/** \file
 * Controlled-error approximation of irrational quantities.
 *
 * A DyadicApprox denotes an unknown real y with |y - value| <= error. The
 * error bound is always a dyadic rational (integer times a power of 1/2)
 * and is propagated outward, never understated. The only irrational the
 * library needs is the natural logarithm of a positive integer.
 */
#pragma once

#include "seqgauge/rational.hpp"

#include <cstdint>

namespace seqgauge {

struct DyadicApprox {
    Rational value;
    Rational error;  // >= 0, dyadic

    static DyadicApprox exact(Rational v) { return {std::move(v), Rational(0)}; }
    bool is_exact() const { return error == 0; }
    Rational lo() const { return value - error; }
    Rational hi() const { return value + error; }
};

DyadicApprox dyadic_add(const DyadicApprox& a, const DyadicApprox& b);
DyadicApprox dyadic_add(const DyadicApprox& a, const Rational& r);
DyadicApprox dyadic_sub(const DyadicApprox& a, const DyadicApprox& b);
DyadicApprox dyadic_neg(const DyadicApprox& a);

enum class Cmp3 { Less, Equal, Greater, Uncertain };

/// Certified three-way comparison of the unknown real against a rational.
/// Less/Equal/Greater are proofs; Uncertain means the error band straddles r.
Cmp3 dyadic_cmp(const DyadicApprox& a, const Rational& r);

/// ln(m) for integer m >= 1 with |result.value - ln m| <= error <= 2^-precision_bits.
/// The value is a dyadic rational; ln(1) comes out exact.
DyadicApprox log_nat(std::uint64_t m, unsigned precision_bits);

/// Certified comparison of ln(num/den) with r, refining precision until the
/// comparison is decided; num, den >= 1. ln(num/den) is rational only when
/// num == den, so this always terminates short of an (unreachable in
/// practice) precision cap, past which it throws std::runtime_error.
Cmp3 log_ratio_cmp(std::uint64_t num, std::uint64_t den, const Rational& r);

}  // namespace seqgauge
