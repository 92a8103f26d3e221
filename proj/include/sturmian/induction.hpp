#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "sturmian/contfrac.hpp"
#include "sturmian/errors.hpp"
#include "sturmian/quadirr.hpp"
#include "sturmian/subst.hpp"
#include "sturmian/words.hpp"

namespace sturmian {

// Induction state: a slope together with the symmetry type of the word it
// currently generates. Classical (slope-only) runs reuse the type with the
// symmetry tag ignored.
struct PalState {
    QuadIrr alpha;
    Symmetry sym;

    bool operator==(const PalState& o) const { return alpha == o.alpha && sym == o.sym; }
    bool operator!=(const PalState& o) const { return !(*this == o); }

    std::string str() const {
        return "(" + alpha.str() + ", " + symmetry_name(sym) + ")";
    }
};

// The per-step substitutions. LeftDouble is 1 -> 01, 0 -> 0; RightDouble is
// 1 -> 10, 0 -> 0; Exchange swaps the letters. Cut is the classical-mode
// absorption step; it performs the same rewrite as RightDouble but is
// labeled separately in traces.
enum class StepKind { LeftDouble, RightDouble, Exchange, Cut };

inline const char* step_label(StepKind k) {
    switch (k) {
        case StepKind::LeftDouble: return "G";
        case StepKind::RightDouble: return "G~";
        case StepKind::Exchange: return "E";
        case StepKind::Cut: return "CUT";
    }
    throw internal_error("unknown step kind");
}

inline Substitution step_substitution(StepKind k) {
    switch (k) {
        case StepKind::LeftDouble: return Substitution::left_doubling();
        case StepKind::RightDouble: return Substitution::right_doubling();
        case StepKind::Exchange: return Substitution::exchange();
        case StepKind::Cut: return Substitution::right_doubling();
    }
    throw internal_error("unknown step kind");
}

struct Step {
    PalState before;
    StepKind kind;
    PalState after;

    Substitution applied() const { return step_substitution(kind); }
};

enum class InductionMode { Palindromic, Classical };

// Maximum image length phi()/psi() will materialize. Compositions over long
// cycles can have images far beyond any addressable size; their incidence
// matrices remain exact and cheap, so length-free consumers should use those.
inline constexpr unsigned long long kDefaultImageCap = 10000000ULL;

class InductionResult {
public:
    InductionResult(InductionMode mode, PalState initial, PalState cycle_start,
                    std::vector<Step> preperiod, std::vector<Step> period)
        : mode_(mode),
          initial_(std::move(initial)),
          cycle_start_(std::move(cycle_start)),
          preperiod_(std::move(preperiod)),
          period_(std::move(period)) {
        if (period_.empty()) throw internal_error("induction cycle must be nonempty");
    }

    InductionMode mode() const { return mode_; }
    const PalState& initial() const { return initial_; }
    const PalState& cycle_start() const { return cycle_start_; }
    const std::vector<Step>& preperiod() const { return preperiod_; }
    const std::vector<Step>& period() const { return period_; }

    IncidenceMatrix psi_incidence() const { return incidence_of(preperiod_); }
    IncidenceMatrix phi_incidence() const { return incidence_of(period_); }

    // Composition of the preperiod substitutions, outermost first:
    // psi(x) = S1(S2(...Sk(x))). Identity when the preperiod is empty.
    Substitution psi(unsigned long long image_cap = kDefaultImageCap) const {
        return compose_steps(preperiod_, image_cap);
    }

    // Composition of the period substitutions, outermost first. The fixed
    // word of the cycle-start state satisfies word = phi(word).
    Substitution phi(unsigned long long image_cap = kDefaultImageCap) const {
        return compose_steps(period_, image_cap);
    }

private:
    // Balanced product over steps[from, to): entry sizes double per level
    // instead of accumulating into one ever-growing factor, which keeps
    // million-step products fast.
    static IncidenceMatrix incidence_range(const std::vector<Step>& steps, size_t from,
                                           size_t to) {
        if (to - from == 0) return IncidenceMatrix::identity();
        if (to - from == 1) return incidence(steps[from].applied());
        size_t mid = from + (to - from) / 2;
        return incidence_range(steps, from, mid) * incidence_range(steps, mid, to);
    }

    static IncidenceMatrix incidence_of(const std::vector<Step>& steps) {
        return incidence_range(steps, 0, steps.size());
    }

    static Substitution compose_steps(const std::vector<Step>& steps,
                                      unsigned long long image_cap) {
        IncidenceMatrix m = incidence_of(steps);
        BigInt longest = std::max(m.image0_length(), m.image1_length());
        if (longest > BigInt(image_cap))
            throw domain_error("composed substitution images have up to " + longest.str() +
                               " letters, beyond the cap of " + std::to_string(image_cap));
        Substitution acc = Substitution::identity();
        for (const Step& s : steps) acc = compose(acc, s.applied());
        return acc;
    }

    InductionMode mode_;
    PalState initial_;
    PalState cycle_start_;
    std::vector<Step> preperiod_;
    std::vector<Step> period_;
};

namespace detail {

inline void require_valid_slope(const QuadIrr& alpha) {
    if (alpha.is_rational())
        throw domain_error("invalid state: rational slope " + alpha.str());
    if (alpha.sign() <= 0 || (alpha - QuadIrr(1)).sign() >= 0)
        throw domain_error("invalid state: slope " + alpha.str() + " outside (0, 1)");
}

}  // namespace detail

// One step of the palindromic induction. For alpha > 1/2 the letters are
// exchanged (AboutOne and AboutZero swap, AboutGap stays) and the slope
// becomes 1 - alpha. For alpha < 1/2 the slope becomes alpha / (1 - alpha)
// and the symmetry moves as AboutOne -> AboutOne under the left doubling,
// AboutZero -> AboutGap under the right doubling, AboutGap -> AboutZero
// under the left doubling.
inline Step pal_step(const PalState& state) {
    detail::require_valid_slope(state.alpha);
    static const QuadIrr one(1);
    static const QuadIrr half = QuadIrr::rational(1, 2);
    int cmp = state.alpha.compare(half);
    if (cmp == 0) throw internal_error("irrational slope equal to 1/2");
    if (cmp > 0) {
        Symmetry flipped = state.sym == Symmetry::AboutOne    ? Symmetry::AboutZero
                           : state.sym == Symmetry::AboutZero ? Symmetry::AboutOne
                                                              : Symmetry::AboutGap;
        return Step{state, StepKind::Exchange, PalState{one - state.alpha, flipped}};
    }
    QuadIrr next = state.alpha / (one - state.alpha);
    switch (state.sym) {
        case Symmetry::AboutOne:
            return Step{state, StepKind::LeftDouble, PalState{next, Symmetry::AboutOne}};
        case Symmetry::AboutZero:
            return Step{state, StepKind::RightDouble, PalState{next, Symmetry::AboutGap}};
        case Symmetry::AboutGap:
            return Step{state, StepKind::LeftDouble, PalState{next, Symmetry::AboutZero}};
    }
    throw internal_error("unknown symmetry tag");
}

// One step of classical induction on the slope alone: absorb (cut) below
// 1/2, exchange above.
inline Step rauzy_step(const PalState& state) {
    detail::require_valid_slope(state.alpha);
    static const QuadIrr one(1);
    static const QuadIrr half = QuadIrr::rational(1, 2);
    int cmp = state.alpha.compare(half);
    if (cmp == 0) throw internal_error("irrational slope equal to 1/2");
    if (cmp > 0)
        return Step{state, StepKind::Exchange, PalState{one - state.alpha, state.sym}};
    return Step{state, StepKind::Cut,
                PalState{state.alpha / (one - state.alpha), state.sym}};
}

namespace detail {

// Step budget when the caller does not pass one: ten times the number of
// unit continued-fraction steps in one preperiod-plus-period traversal,
// plus slack. The state orbit advances one unit step per induction step
// and revisits within at most three traversals, so this is generous.
inline BigInt induction_budget(const QuadIrr& alpha) {
    CFExpansion cf = cf_expand(alpha, 1000000);
    return 10 * slow_step_count(cf) + 60;
}

template <typename StepFn>
InductionResult run_induction(InductionMode mode, PalState start, BigInt max_steps,
                              StepFn step_fn) {
    require_valid_slope(start.alpha);
    if (max_steps <= 0) max_steps = induction_budget(start.alpha);
    using Key = std::tuple<BigInt, BigInt, BigInt, BigInt, int>;
    auto key_of = [mode](const PalState& s) {
        int tag = mode == InductionMode::Palindromic ? static_cast<int>(s.sym) : 0;
        return Key{s.alpha.p(), s.alpha.q(), s.alpha.d(), s.alpha.r(), tag};
    };
    std::map<Key, size_t> seen;
    std::vector<Step> steps;
    seen.emplace(key_of(start), 0);
    BigInt used = 0;
    for (;;) {
        if (used++ >= max_steps)
            throw domain_error("induction budget of " + max_steps.str() +
                               " steps exceeded before the orbit closed");
        Step s = step_fn(steps.empty() ? start : steps.back().after);
        steps.push_back(std::move(s));
        auto [it, inserted] = seen.emplace(key_of(steps.back().after), steps.size());
        if (!inserted) {
            size_t cut = it->second;
            seen.clear();
            PalState at_cut = cut == 0 ? start : steps[cut - 1].after;
            if (at_cut != steps.back().after)
                throw internal_error("cycle closure state mismatch");
            std::vector<Step> preperiod(std::make_move_iterator(steps.begin()),
                                        std::make_move_iterator(steps.begin() + cut));
            std::vector<Step> period(std::make_move_iterator(steps.begin() + cut),
                                     std::make_move_iterator(steps.end()));
            if (period.empty()) throw internal_error("orbit closed without any period step");
            return InductionResult(mode, start, std::move(at_cut), std::move(preperiod),
                                   std::move(period));
        }
    }
}

}  // namespace detail

// Runs the palindromic induction from (alpha, sym) until the exact state
// orbit revisits a state, then splits the trace into preperiod and period.
// max_steps <= 0 selects the default budget.
inline InductionResult run_palindromic_induction(const QuadIrr& alpha, Symmetry sym,
                                                 BigInt max_steps = 0) {
    return detail::run_induction(InductionMode::Palindromic, PalState{alpha, sym},
                                 std::move(max_steps), pal_step);
}

// Classical induction on the slope orbit alone.
inline InductionResult run_rauzy_induction(const QuadIrr& alpha, BigInt max_steps = 0) {
    return detail::run_induction(InductionMode::Classical,
                                 PalState{alpha, Symmetry::AboutOne}, std::move(max_steps),
                                 rauzy_step);
}

namespace detail {

// True when the window is consistent with the symmetry type: the required
// center letter for letter-centered types, and equality on every pair of
// positions that are mirrors of each other across the axis.
inline bool window_symmetric(const FiniteWord& w, Symmetry sym) {
    long long axis_twice = (sym == Symmetry::AboutGap) ? 1 : 0;  // mirror of n is axis_twice - n
    if (sym != Symmetry::AboutGap) {
        if (!w.contains(0)) return false;
        if (w.at(0) != (sym == Symmetry::AboutOne ? 1 : 0)) return false;
    } else if (!w.contains(0) && !w.contains(1)) {
        return false;
    }
    // Check pairs (n, axis_twice - n) with n strictly left of its mirror.
    const Letter* base = w.letters.data();
    long long first = std::max(w.lo(), axis_twice - w.hi());
    for (long long n = first; 2 * n < axis_twice; ++n) {
        if (base[n - w.origin] != base[axis_twice - n - w.origin]) return false;
    }
    return true;
}

inline FiniteWord trim_window(const FiniteWord& w, long long lo, long long hi) {
    long long from = std::max(w.lo(), lo);
    long long to = std::min(w.hi(), hi);
    FiniteWord out;
    if (from > to) {
        out.origin = lo;
        return out;
    }
    out.origin = from;
    out.letters.assign(w.letters.begin() + static_cast<size_t>(from - w.origin),
                       w.letters.begin() + static_cast<size_t>(to - w.origin + 1));
    return out;
}

// Extends the window across its symmetry axis (every position whose mirror
// is present gets the mirror's letter) and trims to [t_lo, t_hi], in one
// pass. When the closure adds nothing inside [t_lo, t_hi] this degenerates
// to an in-place trim with no reallocation, which is the steady state once
// the window has grown to its cap.
inline void mirror_and_trim(FiniteWord& w, Symmetry sym, long long t_lo, long long t_hi) {
    long long axis_twice = (sym == Symmetry::AboutGap) ? 1 : 0;
    long long lo = std::max(t_lo, std::min(w.lo(), axis_twice - w.hi()));
    long long hi = std::min(t_hi, std::max(w.hi(), axis_twice - w.lo()));
    if (hi < lo) {
        w.letters.clear();
        w.origin = lo;
        return;
    }
    if (lo >= w.lo() && hi <= w.hi()) {
        if (hi < w.hi()) w.letters.resize(static_cast<size_t>(hi - w.origin + 1));
        if (lo > w.lo()) {
            w.letters.erase(w.letters.begin(),
                            w.letters.begin() + static_cast<size_t>(lo - w.origin));
            w.origin = lo;
        }
        return;
    }
    FiniteWord out;
    out.origin = lo;
    out.letters.reserve(static_cast<size_t>(hi - lo + 1));
    for (long long n = lo; n <= hi; ++n)
        out.letters.push_back(w.contains(n) ? w.at(n) : w.at(axis_twice - n));
    w = std::move(out);
}

inline const Substitution& step_substitution_ref(StepKind k) {
    static const Substitution left = Substitution::left_doubling();
    static const Substitution right = Substitution::right_doubling();
    static const Substitution swap = Substitution::exchange();
    switch (k) {
        case StepKind::LeftDouble: return left;
        case StepKind::RightDouble: return right;
        case StepKind::Exchange: return swap;
        case StepKind::Cut: return right;
    }
    throw internal_error("unknown step kind");
}

// Applies one recorded step to a window of the step's after-state word,
// producing a window of the before-state word. Non-exchange images are
// anchored by the palindromic centering: the image of positions <= 0 ends
// at position 0, the image of positions >= 1 starts at position 1. The
// result is validated against the before-state symmetry, mirror-completed,
// and trimmed to [-cap, cap] (letter-centered) or [-cap, cap+1] (gap).
inline FiniteWord regrow_apply_step(const FiniteWord& w, const Step& step, long long cap) {
    FiniteWord out;
    if (step.kind == StepKind::Exchange) {
        out.origin = w.origin;
        out.letters.resize(w.letters.size());
        std::transform(w.letters.begin(), w.letters.end(), out.letters.begin(),
                       [](Letter l) { return static_cast<Letter>(1 - l); });
    } else {
        const Substitution& s = step_substitution_ref(step.kind);
        if (w.lo() > 0)
            throw internal_error("regrowth window lost its center");
        const auto& img0 = s.image(0);
        const auto& img1 = s.image(1);
        out.letters.reserve(2 * w.letters.size() + 2);
        long long left_end = std::min(w.hi(), 0LL);
        for (long long n = w.lo(); n <= left_end; ++n) {
            const auto& img = w.at(n) ? img1 : img0;
            out.letters.insert(out.letters.end(), img.begin(), img.end());
        }
        out.origin = 1 - static_cast<long long>(out.letters.size());
        for (long long n = 1; n <= w.hi(); ++n) {
            const auto& img = w.at(n) ? img1 : img0;
            out.letters.insert(out.letters.end(), img.begin(), img.end());
        }
    }
    if (!window_symmetric(out, step.before.sym))
        throw internal_error("alignment failure: image violates its symmetry type");
    long long t_hi = step.before.sym == Symmetry::AboutGap ? cap + 1 : cap;
    mirror_and_trim(out, step.before.sym, -cap, t_hi);
    return out;
}

inline FiniteWord regrow_seed(const PalState& cycle_start, int seed_radius) {
    if (seed_radius == 0) {
        FiniteWord seed;
        if (cycle_start.sym == Symmetry::AboutGap) {
            Letter pair = cycle_start.alpha > QuadIrr::rational(1, 2) ? 1 : 0;
            seed.origin = 0;
            seed.letters = {pair, pair};
        } else {
            seed.origin = 0;
            seed.letters = {cycle_start.sym == Symmetry::AboutOne ? Letter(1) : Letter(0)};
        }
        return seed;
    }
    RotationSystem sys = palindrome_system(cycle_start.alpha, cycle_start.sym);
    long long hi = cycle_start.sym == Symmetry::AboutGap ? seed_radius + 1 : seed_radius;
    return code_window(sys, -seed_radius, hi);
}

inline FiniteWord regrow_attempt(const InductionResult& result, long long radius,
                                 const FiniteWord& seed) {
    long long cap = radius + 8;
    long long need_lo = -(radius + 2);
    long long need_hi = radius + 2;
    FiniteWord w = trim_window(seed, -cap, cap + 1);
    long long max_passes = 4 * radius + 64;
    bool covered = w.lo() <= need_lo && w.hi() >= need_hi;
    for (long long pass = 0; !covered; ++pass) {
        if (pass >= max_passes)
            throw internal_error("regrowth failed to reach the requested radius");
        FiniteWord before = w;
        for (auto it = result.period().rbegin(); it != result.period().rend(); ++it)
            w = regrow_apply_step(w, *it, cap);
        long long lo = std::max(before.lo(), w.lo());
        long long hi = std::min(before.hi(), w.hi());
        for (long long n = lo; n <= hi; ++n)
            if (w.at(n) != before.at(n))
                throw internal_error("regrowth passes disagree on their overlap");
        covered = w.lo() <= need_lo && w.hi() >= need_hi;
        if (!covered && w.lo() >= before.lo() && w.hi() <= before.hi())
            throw domain_error("regrowth seed cannot grow");
    }
    for (auto it = result.preperiod().rbegin(); it != result.preperiod().rend(); ++it)
        w = regrow_apply_step(w, *it, cap);
    Symmetry original = result.initial().sym;
    long long out_hi = original == Symmetry::AboutGap ? radius + 1 : radius;
    if (w.lo() > -radius || w.hi() < out_hi)
        throw internal_error("regrowth lost coverage while applying the preperiod");
    return trim_window(w, -radius, out_hi);
}

}  // namespace detail

// Rebuilds a centered window of the original palindrome from the recorded
// steps alone: grows a small seed by repeated cycle traversals (each step
// applied individually, so composed-substitution sizes never matter), then
// applies the preperiod. The seed starts as the bare center and escalates
// to short coded windows when the bare seed cannot grow or align.
// The returned span is [-radius, radius] for letter-centered words and
// [-radius, radius+1] for gap-centered ones.
inline FiniteWord regrow_palindrome(const InductionResult& result, const PalState& cycle_start,
                                    long long radius) {
    if (result.mode() != InductionMode::Palindromic)
        throw domain_error("regrowth is defined for palindromic induction results only");
    if (radius < 0) throw domain_error("radius must be nonnegative");
    if (cycle_start != result.cycle_start())
        throw domain_error("cycle start does not match the induction result");
    std::optional<std::string> first_failure;
    for (int seed_radius : {0, 3, 6, 12, 24, 48, 96}) {
        FiniteWord seed = detail::regrow_seed(cycle_start, seed_radius);
        try {
            return detail::regrow_attempt(result, radius, seed);
        } catch (const error& e) {
            if (!first_failure) first_failure = e.what();
        }
    }
    throw internal_error("regrowth failed for every seed size; first failure: " +
                         *first_failure);
}

}  // namespace sturmian
