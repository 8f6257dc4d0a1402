#include "seqgauge/dyadic.hpp"

#include <bit>
#include <stdexcept>

namespace seqgauge {

DyadicApprox dyadic_add(const DyadicApprox& a, const DyadicApprox& b) {
    return {a.value + b.value, a.error + b.error};
}

DyadicApprox dyadic_add(const DyadicApprox& a, const Rational& r) {
    return {a.value + r, a.error};
}

DyadicApprox dyadic_sub(const DyadicApprox& a, const DyadicApprox& b) {
    return {a.value - b.value, a.error + b.error};
}

DyadicApprox dyadic_neg(const DyadicApprox& a) {
    return {-a.value, a.error};
}

Cmp3 dyadic_cmp(const DyadicApprox& a, const Rational& r) {
    if (a.value + a.error < r) {
        return Cmp3::Less;
    }
    if (a.value - a.error > r) {
        return Cmp3::Greater;
    }
    if (a.is_exact()) {
        return Cmp3::Equal;
    }
    return Cmp3::Uncertain;
}

namespace {

// 2*atanh(t) = ln((1+t)/(1-t)) as an exact partial sum with a certified
// remainder bound. Requires 0 <= t < 1.
DyadicApprox atanh2_series(const Rational& t, const Rational& max_error) {
    if (t == 0) {
        return DyadicApprox::exact(Rational(0));
    }
    const Rational t2 = t * t;
    Rational power = t;  // t^(2k+1)
    Rational sum = t;
    Rational remainder = 2 * power * t2 / (1 - t2);
    unsigned k = 1;
    while (remainder > max_error) {
        power *= t2;
        sum += power / Rational(2 * k + 1);
        remainder = 2 * power * t2 / (1 - t2);
        ++k;
    }
    return {2 * sum, remainder};
}

// Round to a multiple of 2^-bits; the introduced error is <= 2^-(bits+1).
Rational round_dyadic(const Rational& v, unsigned bits) {
    const Int scaled = floor_rat(v * pow2(static_cast<long>(bits)) + Rational(1, 2));
    return Rational(scaled) * pow2(-static_cast<long>(bits));
}

}  // namespace

DyadicApprox log_nat(std::uint64_t m, unsigned precision_bits) {
    if (m == 0) {
        throw std::domain_error("log_nat of zero");
    }
    if (m == 1) {
        return DyadicApprox::exact(Rational(0));
    }
    const unsigned p = precision_bits;
    const unsigned e = std::bit_width(m) - 1;  // 2^e <= m < 2^(e+1)

    // ln m = e*ln2 + ln(m/2^e); both series run at t < 1/3 (ln2 at t = 1/3).
    const Rational budget_each = pow2(-static_cast<long>(p + 3));
    Rational value(0);
    Rational error(0);
    if (e > 0) {
        const DyadicApprox ln2 = atanh2_series(Rational(1, 3), budget_each / e);
        value = Rational(e) * ln2.value;
        error = Rational(e) * ln2.error;
    }
    const Int pow_e = Int(1) << e;
    const Rational t = make_rational(Int(m) - pow_e, Int(m) + pow_e);
    const DyadicApprox ln_mantissa = atanh2_series(t, budget_each);
    value += ln_mantissa.value;
    error += ln_mantissa.error;

    // Snap the value onto the 2^-(p+2) grid so downstream denominators stay
    // small; the total error is then < 2^-p by the budget above.
    const Rational rounded = round_dyadic(value, p + 2);
    return {rounded, pow2(-static_cast<long>(p))};
}

Cmp3 log_ratio_cmp(std::uint64_t num, std::uint64_t den, const Rational& r) {
    if (num == 0 || den == 0) {
        throw std::domain_error("log_ratio_cmp needs positive integers");
    }
    if (num == den) {
        if (r > 0) return Cmp3::Less;
        if (r < 0) return Cmp3::Greater;
        return Cmp3::Equal;
    }
    for (unsigned p = 64; p <= 8192; p *= 2) {
        const DyadicApprox approx = dyadic_sub(log_nat(num, p), log_nat(den, p));
        const Cmp3 c = dyadic_cmp(approx, r);
        if (c != Cmp3::Uncertain) {
            return c;
        }
    }
    throw std::runtime_error("log comparison undecided at precision cap");
}

}  // namespace seqgauge
