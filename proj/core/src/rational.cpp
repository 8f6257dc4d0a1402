#include "seqgauge/rational.hpp"

#include <stdexcept>

namespace seqgauge {

Rational make_rational(Int num, Int den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(Int(std::string(text)));
        }
        Int num(std::string(text.substr(0, slash)));
        Int den(std::string(text.substr(slash + 1)));
        if (den == 0) {
            throw std::invalid_argument("zero denominator");
        }
        return make_rational(std::move(num), std::move(den));
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
}

std::string format_rational(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

Int floor_rat(const Rational& q) {
    Int n = numerator(q);
    Int d = denominator(q);
    Int t = n / d;  // truncates toward zero
    if (n < 0 && t * d != n) {
        --t;
    }
    return t;
}

Int ceil_rat(const Rational& q) {
    return -floor_rat(-q);
}

Rational pow2(long e) {
    Int p = Int(1) << static_cast<unsigned>(e < 0 ? -e : e);
    return e < 0 ? Rational(Int(1), p) : Rational(p);
}

bool is_natural(const Rational& q) {
    return q >= 0 && denominator(q) == 1;
}

std::uint64_t to_u64(const Int& n) {
    if (n < 0 || n > Int(UINT64_MAX)) {
        throw std::overflow_error("value outside uint64 range: " + n.str());
    }
    return n.convert_to<std::uint64_t>();
}

}  // namespace seqgauge
