/** \file
 * Exact rational arithmetic used throughout the library.
 *
 * All real quantities are carried as arbitrary-precision rationals in
 * canonical form (gcd-reduced, positive denominator); no operation ever
 * rounds. The representation is boost::multiprecision behind a small set
 * of helpers that pin down parsing, formatting and integer rounding.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace seqgauge {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Build a rational from numerator/denominator, normalizing the sign.
/// Throws std::domain_error when den == 0.
Rational make_rational(Int num, Int den);

/// Parse "p/q" or a bare integer "p". Throws std::invalid_argument on
/// malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical serialization, always with an explicit denominator: "-3/4", "5/1".
std::string format_rational(const Rational& q);

Int floor_rat(const Rational& q);
Int ceil_rat(const Rational& q);

/// 2^e as a rational; e may be negative.
Rational pow2(long e);

bool is_natural(const Rational& q);

/// Checked narrowing of a non-negative integer to uint64_t.
std::uint64_t to_u64(const Int& n);

}  // namespace seqgauge
