#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "sturmian/errors.hpp"
#include "sturmian/quadirr.hpp"

namespace sturmian {

using Letter = std::uint8_t;  // 0 or 1

// The three two-sided symmetry types: a palindrome about the letter at
// position 0 (with that letter fixed to 1 or 0), or about the gap between
// positions 0 and 1.
enum class Symmetry { AboutOne, AboutZero, AboutGap };

inline const char* symmetry_name(Symmetry s) {
    switch (s) {
        case Symmetry::AboutOne: return "one";
        case Symmetry::AboutZero: return "zero";
        case Symmetry::AboutGap: return "gap";
    }
    throw internal_error("unknown symmetry tag");
}

// A finite block of a two-sided word. Positions are absolute: the first
// letter sits at `origin`, the k-th at `origin + k`.
struct FiniteWord {
    long long origin = 0;
    std::vector<Letter> letters;

    long long lo() const { return origin; }
    long long hi() const { return origin + static_cast<long long>(letters.size()) - 1; }
    size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }

    bool contains(long long pos) const { return pos >= lo() && pos <= hi(); }

    Letter at(long long pos) const {
        if (!contains(pos)) throw internal_error("position outside the window");
        return letters[static_cast<size_t>(pos - origin)];
    }

    std::string str() const {
        std::string s;
        s.reserve(letters.size());
        for (Letter l : letters) s.push_back(l ? '1' : '0');
        return s;
    }

    bool operator==(const FiniteWord& o) const {
        return origin == o.origin && letters == o.letters;
    }
};

// Rotation by an irrational angle alpha in (0,1) with the coding arc
// [0, alpha): the letter at position n is 1 exactly when
// frac(start + n*alpha) lies in [0, alpha). The half-open arc plus exact
// arithmetic makes every letter decidable.
class RotationSystem {
public:
    RotationSystem(QuadIrr alpha, QuadIrr start)
        : alpha_(std::move(alpha)), start_(std::move(start)) {
        if (alpha_.is_rational())
            throw domain_error("invalid system: rational slope " + alpha_.str());
        if (alpha_.sign() <= 0 || (alpha_ - QuadIrr(1)).sign() >= 0)
            throw domain_error("invalid system: slope " + alpha_.str() + " outside (0, 1)");
        if (!start_.is_rational() && start_.d() != alpha_.d())
            throw domain_error("base point lies in a different quadratic field than the slope");
        start_ = start_.frac();  // fold the base point into [0, 1)
    }

    const QuadIrr& alpha() const { return alpha_; }
    const QuadIrr& start() const { return start_; }

    Letter letter_at(long long n) const {
        QuadIrr point = (start_ + QuadIrr(n) * alpha_).frac();
        return point < alpha_ ? 1 : 0;
    }

private:
    QuadIrr alpha_;
    QuadIrr start_;
};

// Letters of sys over positions lo..hi. lo > hi yields the empty word at
// origin lo. Evaluated incrementally: one exact add and compare per letter.
inline FiniteWord code_window(const RotationSystem& sys, long long lo, long long hi) {
    FiniteWord w;
    w.origin = lo;
    if (lo > hi) return w;
    w.letters.reserve(static_cast<size_t>(hi - lo + 1));
    const QuadIrr one(1);
    QuadIrr point = (sys.start() + QuadIrr(lo) * sys.alpha()).frac();
    for (long long n = lo; n <= hi; ++n) {
        w.letters.push_back(point < sys.alpha() ? 1 : 0);
        if (n < hi) {
            point = point + sys.alpha();
            if (point >= one) point = point - one;
        }
    }
    return w;
}

struct PalindromeSystems {
    RotationSystem about_one;
    RotationSystem about_zero;
    RotationSystem about_gap;
};

// The three palindromic base points for slope alpha: the midpoint of the
// coding arc (center letter 1), the midpoint of the complementary arc
// (center letter 0), and the point 1/2 whose word is symmetric about the
// gap between positions 0 and 1.
inline PalindromeSystems palindrome_systems(const QuadIrr& alpha) {
    QuadIrr half = QuadIrr::rational(1, 2);
    return PalindromeSystems{
        RotationSystem(alpha, alpha * half),
        RotationSystem(alpha, (QuadIrr(1) + alpha) * half),
        RotationSystem(alpha, half),
    };
}

inline RotationSystem palindrome_system(const QuadIrr& alpha, Symmetry sym) {
    QuadIrr half = QuadIrr::rational(1, 2);
    switch (sym) {
        case Symmetry::AboutOne: return RotationSystem(alpha, alpha * half);
        case Symmetry::AboutZero: return RotationSystem(alpha, (QuadIrr(1) + alpha) * half);
        case Symmetry::AboutGap: return RotationSystem(alpha, half);
    }
    throw internal_error("unknown symmetry tag");
}

// True when the window satisfies its symmetry identity: w(n) = w(-n) with
// the required center letter for the letter-centered types, w(n) = w(1-n)
// for the gap type. The window must have the matching shape: centered
// [-k, k] for letter types, [-k+1, k] for the gap type.
inline bool check_palindrome(const FiniteWord& w, Symmetry sym) {
    if (sym == Symmetry::AboutOne || sym == Symmetry::AboutZero) {
        if (w.size() % 2 != 1 || w.lo() != -w.hi())
            throw domain_error("mis-shaped window: letter-centered check needs span [-k, k]");
        if (w.at(0) != (sym == Symmetry::AboutOne ? 1 : 0)) return false;
        for (long long n = 1; n <= w.hi(); ++n)
            if (w.at(n) != w.at(-n)) return false;
        return true;
    }
    if (w.size() % 2 != 0 || w.empty() || w.lo() != 1 - w.hi())
        throw domain_error("mis-shaped window: gap-centered check needs span [-k+1, k]");
    for (long long n = 1; n <= w.hi(); ++n)
        if (w.at(n) != w.at(1 - n)) return false;
    return true;
}

// Number of distinct length-n factors of w. n = 0 counts the empty factor.
inline long long factor_complexity(const FiniteWord& w, long long n) {
    if (n < 0 || n > static_cast<long long>(w.size()))
        throw domain_error("factor length outside the window");
    if (n == 0) return 1;
    std::string flat = w.str();
    std::unordered_set<std::string_view> seen;
    for (size_t i = 0; i + static_cast<size_t>(n) <= flat.size(); ++i)
        seen.insert(std::string_view(flat).substr(i, static_cast<size_t>(n)));
    return static_cast<long long>(seen.size());
}

// True when all length-n factors of w have 1-counts within 1 of each other.
inline bool balance_check(const FiniteWord& w, long long n) {
    if (n < 1 || n > static_cast<long long>(w.size()))
        throw domain_error("factor length outside the window");
    long long count = 0;
    for (long long i = 0; i < n; ++i) count += w.letters[static_cast<size_t>(i)];
    long long min_count = count, max_count = count;
    for (size_t i = static_cast<size_t>(n); i < w.size(); ++i) {
        count += w.letters[i] - w.letters[i - static_cast<size_t>(n)];
        min_count = std::min(min_count, count);
        max_count = std::max(max_count, count);
    }
    return max_count - min_count <= 1;
}

}  // namespace sturmian
