#include "seqgauge/function_rule.hpp"

#include <limits>
#include <stdexcept>

namespace seqgauge {

FunctionRule FunctionRule::constant(std::uint64_t c, std::vector<std::uint64_t> prefix) {
    FunctionRule r;
    r.table = std::move(prefix);
    r.tail = Tail::Constant;
    r.tail_c = c;
    return r;
}

FunctionRule FunctionRule::affine(std::uint64_t a, std::uint64_t b,
                                  std::vector<std::uint64_t> prefix) {
    FunctionRule r;
    r.table = std::move(prefix);
    r.tail = Tail::Affine;
    r.tail_a = a;
    r.tail_b = b;
    return r;
}

FunctionRule FunctionRule::table_only(std::vector<std::uint64_t> values) {
    FunctionRule r;
    r.table = std::move(values);
    return r;
}

std::uint64_t FunctionRule::eval(std::uint64_t k) const {
    if (k < table.size()) {
        return table[k];
    }
    switch (tail) {
        case Tail::Constant:
            return tail_c;
        case Tail::Affine: {
            if (tail_a != 0 && k > (std::numeric_limits<std::uint64_t>::max() - tail_b) / tail_a) {
                throw std::overflow_error("affine tail overflows uint64 at k");
            }
            return tail_a * k + tail_b;
        }
        case Tail::Undefined:
            break;
    }
    throw std::domain_error("function rule undefined beyond its table");
}

std::optional<std::uint64_t> FunctionRule::try_eval(std::uint64_t k) const {
    if (k >= table.size() && tail == Tail::Undefined) {
        return std::nullopt;
    }
    return eval(k);
}

}  // namespace seqgauge
