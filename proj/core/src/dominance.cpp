#include "seqgauge/dominance.hpp"

#include "seqgauge/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace seqgauge {

namespace {

struct AffineTail {
    Int a;
    Int b;
};

AffineTail tail_form(const FunctionRule& f) {
    if (f.tail == FunctionRule::Tail::Constant) {
        return {Int(0), Int(f.tail_c)};
    }
    return {Int(f.tail_a), Int(f.tail_b)};
}

}  // namespace

DominanceVerdict leq_star(const FunctionRule& f, const FunctionRule& g) {
    DominanceVerdict v;
    const std::uint64_t table_span = std::max(f.table_end(), g.table_end());
    for (std::uint64_t k = 0; k < table_span; ++k) {
        const auto fv = f.try_eval(k);
        const auto gv = g.try_eval(k);
        if (fv && gv && *fv > *gv) {
            v.violations.push_back(k);
        }
    }
    if (!f.total() || !g.total()) {
        v.status = DominanceStatus::UnknownBeyondHorizon;
        return v;
    }

    // Tail region: compare the closed forms f(k) = af k + bf, g(k) = ag k + bg.
    const auto [af, bf] = tail_form(f);
    const auto [ag, bg] = tail_form(g);
    const Int start(table_span);
    if (af > ag) {
        // f outgrows g: violations are infinite from some point on.
        Int first = floor_rat(Rational(bg - bf, af - ag)) + 1;
        if (first < start) {
            first = start;
        }
        v.status = DominanceStatus::Fails;
        v.first_unbounded_violation = to_u64(first);
        return v;
    }
    if (af == ag) {
        if (bf > bg) {
            v.status = DominanceStatus::Fails;
            v.first_unbounded_violation = to_u64(start);
            return v;
        }
        v.status = DominanceStatus::Holds;
        return v;
    }
    // af < ag: finitely many tail violations, up to (bf-bg)/(ag-af).
    for (Int k = start; (af - ag) * k > bg - bf; ++k) {
        v.violations.push_back(to_u64(k));
    }
    v.status = DominanceStatus::Holds;
    return v;
}

EventuallyDifferent eventually_different(const std::vector<FunctionRule>& family) {
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (!family[i].total()) {
            throw std::invalid_argument("family member " + std::to_string(i) +
                                        " has an undefined tail");
        }
    }
    if (family.empty()) {
        return {FunctionRule::constant(0), 0};
    }

    // The eventual winner is the lexicographically largest (a, b) tail; the
    // table is extended past every crossing so a single closed form remains.
    AffineTail winner = tail_form(family.front());
    for (const FunctionRule& f : family) {
        const AffineTail t = tail_form(f);
        if (t.a > winner.a || (t.a == winner.a && t.b > winner.b)) {
            winner = t;
        }
    }
    Int table_len(0);
    for (const FunctionRule& f : family) {
        table_len = std::max(table_len, Int(f.table_end()));
        const AffineTail t = tail_form(f);
        if (t.a < winner.a) {
            // winner >= f from ceil((bf - bw)/(aw - af)) on
            const Int cross = ceil_rat(Rational(t.b - winner.b, winner.a - t.a));
            table_len = std::max(table_len, cross);
        }
    }

    FunctionRule g;
    const std::uint64_t len = to_u64(table_len);
    g.table.reserve(len);
    for (std::uint64_t k = 0; k < len; ++k) {
        std::uint64_t m = 0;
        for (const FunctionRule& f : family) {
            m = std::max(m, f.eval(k));
        }
        g.table.push_back(m + 1);
    }
    if (winner.a == 0) {
        g.tail = FunctionRule::Tail::Constant;
        g.tail_c = to_u64(winner.b + 1);
    } else {
        g.tail = FunctionRule::Tail::Affine;
        g.tail_a = to_u64(winner.a);
        g.tail_b = to_u64(winner.b + 1);
    }
    return {std::move(g), 0};
}

bool PointwiseBoundVerdict::all_leq_star() const {
    return std::all_of(per_member.begin(), per_member.end(), [](const DominanceVerdict& v) {
        return v.status == DominanceStatus::Holds;
    });
}

PointwiseBoundVerdict is_pointwise_bound(const FunctionRule& f,
                                         const std::vector<FunctionRule>& gauges) {
    PointwiseBoundVerdict out;
    out.pointwise = true;
    for (const FunctionRule& gauge : gauges) {
        DominanceVerdict v = leq_star(gauge, f);
        if (v.status != DominanceStatus::Holds || !v.violations.empty()) {
            out.pointwise = false;
        }
        out.per_member.push_back(std::move(v));
    }
    return out;
}

}  // namespace seqgauge
