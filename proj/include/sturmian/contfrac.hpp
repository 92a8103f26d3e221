#pragma once

#include <map>
#include <utility>
#include <vector>

#include "sturmian/errors.hpp"
#include "sturmian/quadirr.hpp"

namespace sturmian {

// Continued-fraction expansion. Rationals have an empty period; quadratic
// irrationals have the eventually periodic form [preperiod; period-repeat].
// The period is minimal: the expansion map is deterministic on complete
// quotients, and the cycle is cut at the first revisited one.
struct CFExpansion {
    std::vector<BigInt> preperiod;
    std::vector<BigInt> period;

    bool operator==(const CFExpansion& o) const {
        return preperiod == o.preperiod && period == o.period;
    }
};

// Default budget for cf_expand: generous for small radicands, but inputs
// with large coefficients can have much longer periods (the period scales
// with the conductor, not the radicand); callers with such inputs should
// pass an explicit budget.
inline BigInt cf_default_budget(const QuadIrr& x) { return 4 * x.d() + 200; }

// Expands x into its continued fraction. max_steps <= 0 selects the
// default budget; exceeding the budget raises a domain error naming it.
inline CFExpansion cf_expand(const QuadIrr& x, BigInt max_steps = 0) {
    if (max_steps <= 0) max_steps = cf_default_budget(x);
    CFExpansion out;
    if (x.is_rational()) {
        QuadIrr y = x;
        BigInt steps = 0;
        for (;;) {
            if (steps++ >= max_steps)
                throw domain_error("continued-fraction budget of " + max_steps.str() +
                                   " steps exceeded");
            auto [a, frac] = y.floor_frac();
            out.preperiod.push_back(std::move(a));
            if (frac.is_zero()) break;
            y = frac.inverse();
        }
        return out;
    }
    std::map<QuadIrr, size_t, QuadIrr::KeyLess> seen;
    std::vector<BigInt> terms;
    QuadIrr y = x;
    BigInt steps = 0;
    for (;;) {
        auto hit = seen.find(y);
        if (hit != seen.end()) {
            size_t cut = hit->second;
            out.preperiod.assign(terms.begin(), terms.begin() + cut);
            out.period.assign(terms.begin() + cut, terms.end());
            break;
        }
        if (steps++ >= max_steps)
            throw domain_error("continued-fraction budget of " + max_steps.str() +
                               " steps exceeded");
        seen.emplace(y, terms.size());
        auto [a, frac] = y.floor_frac();
        terms.push_back(std::move(a));
        if (frac.is_zero()) throw internal_error("irrational value with terminating expansion");
        y = frac.inverse();
    }
    for (size_t i = 1; i < out.preperiod.size(); ++i)
        if (out.preperiod[i] < 1) throw internal_error("partial quotient below 1");
    for (const BigInt& a : out.period)
        if (a < 1) throw internal_error("periodic partial quotient below 1");
    return out;
}

// Number of unit (Farey) steps represented by one traversal of the
// expansion's preperiod plus period: each term with partial quotient a
// contributes a subtractive steps plus one inversion step.
inline BigInt slow_step_count(const CFExpansion& cf) {
    BigInt total = 0;
    for (const BigInt& a : cf.preperiod) total += a + 1;
    for (const BigInt& a : cf.period) total += a + 1;
    return total;
}

}  // namespace sturmian
