/** \file
 * Finitely described functions omega -> omega: a finite table plus a
 * closed-form tail (constant, affine, or undefined beyond the table).
 */
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace seqgauge {

struct FunctionRule {
    enum class Tail { Undefined, Constant, Affine };

    std::vector<std::uint64_t> table;
    Tail tail = Tail::Undefined;
    std::uint64_t tail_c = 0;                  // Constant: value
    std::uint64_t tail_a = 0, tail_b = 0;      // Affine: k -> a*k + b

    static FunctionRule constant(std::uint64_t c, std::vector<std::uint64_t> prefix = {});
    static FunctionRule affine(std::uint64_t a, std::uint64_t b,
                               std::vector<std::uint64_t> prefix = {});
    static FunctionRule table_only(std::vector<std::uint64_t> values);

    bool total() const { return tail != Tail::Undefined; }
    std::uint64_t table_end() const { return table.size(); }

    /// Value at k; throws std::domain_error past an undefined tail.
    std::uint64_t eval(std::uint64_t k) const;

    /// Value at k if defined there.
    std::optional<std::uint64_t> try_eval(std::uint64_t k) const;

    bool operator==(const FunctionRule&) const = default;
};

}  // namespace seqgauge
