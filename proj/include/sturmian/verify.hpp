#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "sturmian/errors.hpp"
#include "sturmian/quadirr.hpp"
#include "sturmian/subst.hpp"
#include "sturmian/words.hpp"

namespace sturmian {

// Working precision for the decimal oracle, in decimal digits, with an
// escalation cap for positions that land too close to a decision boundary.
struct PrecisionBudget {
    int digits = 50;
    int max_digits = 1000;
};

namespace detail {

inline void validate_budget(const PrecisionBudget& b) {
    if (b.digits < 10 || b.digits > b.max_digits || b.max_digits > 1000)
        throw domain_error("precision budget must satisfy 10 <= digits <= max_digits <= 1000");
}

inline BigInt pow10(int digits) {
    BigInt v = 1;
    for (int i = 0; i < digits; ++i) v *= 10;
    return v;
}

// floor(((P + Q sqrt(D)) / R) * scale), within 2 of the true value.
// Scaled-integer evaluation only: this path deliberately shares nothing
// with the exact-number comparisons it cross-checks.
inline BigInt scaled_value(const BigInt& P, const BigInt& Q, const BigInt& D, const BigInt& R,
                           const BigInt& scale) {
    BigInt num = P * scale;
    if (Q != 0) {
        BigInt root = isqrt(Q * Q * D * scale * scale);
        num += Q > 0 ? root : -root - 1;
    }
    return floor_div(num, R);
}

}  // namespace detail

// Letters of sys over lo..hi, derived by scaled-decimal arithmetic rather
// than exact comparisons. Each letter requires its orbit point to sit at
// least 10^(5-digits) away from the decision boundaries {0, alpha}; a
// position closer than that escalates to doubled precision, up to
// max_digits. Failure to certify any position is a precision error.
inline FiniteWord numeric_oracle_window(const RotationSystem& sys, long long lo, long long hi,
                                        const PrecisionBudget& budget = PrecisionBudget{}) {
    detail::validate_budget(budget);
    FiniteWord w;
    w.origin = lo;
    if (lo > hi) return w;
    const QuadIrr& alpha = sys.alpha();
    const QuadIrr& start = sys.start();
    BigInt D = alpha.d();
    BigInt R = start.r() * alpha.r();
    w.letters.reserve(static_cast<size_t>(hi - lo + 1));
    int digits = budget.digits;
    BigInt scale = detail::pow10(digits);
    BigInt margin = detail::pow10(5);
    BigInt alpha_scaled =
        detail::scaled_value(alpha.p(), alpha.q(), alpha.d(), alpha.r(), scale);
    for (long long n = lo; n <= hi; ++n) {
        for (;;) {
            BigInt P = start.p() * alpha.r() + n * alpha.p() * start.r();
            BigInt Q = start.q() * alpha.r() + n * alpha.q() * start.r();
            BigInt value = detail::scaled_value(P, Q, D, R, scale);
            BigInt t = value % scale;
            if (t < 0) t += scale;
            BigInt distance = std::min({t, BigInt(scale - t), big_abs(t - alpha_scaled)});
            if (distance > margin) {
                w.letters.push_back(t < alpha_scaled ? 1 : 0);
                break;
            }
            if (digits >= budget.max_digits)
                throw domain_error("precision exhausted at position " + std::to_string(n) +
                                   ": orbit point within 10^(5-" + std::to_string(digits) +
                                   ") of a coding boundary");
            digits = std::min(digits * 2, budget.max_digits);
            scale = detail::pow10(digits);
            alpha_scaled =
                detail::scaled_value(alpha.p(), alpha.q(), alpha.d(), alpha.r(), scale);
        }
    }
    return w;
}

// Checks that s maps the coded window of sys into the coded word: the image
// of the radius-R window, trimmed by one maximal image length at each edge,
// must occur at exactly one position inside the coded window of radius
// maxImageLength * R. Returns false when it occurs nowhere (the image is
// not a block of the word), raises an alignment error when the placement
// is ambiguous.
inline bool check_fixed_window(const Substitution& s, const RotationSystem& sys,
                               long long radius) {
    if (radius < 1) throw domain_error("radius must be at least 1");
    long long max_len = static_cast<long long>(s.max_image_length());
    static const long long kBaseCap = 20000000;
    if (max_len > kBaseCap / radius)
        throw domain_error("image lengths of " + std::to_string(max_len) +
                           " leave the comparison window beyond " + std::to_string(kBaseCap) +
                           " letters");
    FiniteWord w = code_window(sys, -radius, radius);
    FiniteWord image = apply(s, w);
    long long trim = max_len;
    if (static_cast<long long>(image.size()) <= 2 * trim)
        throw domain_error("window too small: the image disappears after edge trimming");
    std::string pattern = image.str().substr(static_cast<size_t>(trim),
                                             image.size() - 2 * static_cast<size_t>(trim));
    FiniteWord base = code_window(sys, -max_len * radius, max_len * radius);
    std::string text = base.str();
    auto first = std::search(text.begin(), text.end(),
                             std::boyer_moore_horspool_searcher(pattern.begin(), pattern.end()));
    if (first == text.end()) return false;
    auto second = std::search(first + 1, text.end(),
                              std::boyer_moore_horspool_searcher(pattern.begin(), pattern.end()));
    if (second != text.end())
        throw domain_error("ambiguous alignment: the trimmed image occurs more than once");
    return true;
}

}  // namespace sturmian
