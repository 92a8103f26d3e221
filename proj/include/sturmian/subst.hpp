#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <utility>
#include <vector>

#include "sturmian/errors.hpp"
#include "sturmian/quadirr.hpp"
#include "sturmian/words.hpp"

namespace sturmian {

// Letter-count matrix of a substitution: a/b count 0s/1s in the image of 0,
// c/d count 0s/1s in the image of 1. As a matrix it acts on column count
// vectors, so the matrix of a composition is the product of the matrices,
// outer times inner.
struct IncidenceMatrix {
    BigInt a, b, c, d;

    static IncidenceMatrix identity() { return {1, 0, 0, 1}; }

    IncidenceMatrix operator*(const IncidenceMatrix& y) const {
        return {a * y.a + c * y.b, b * y.a + d * y.b, a * y.c + c * y.d, b * y.c + d * y.d};
    }

    bool operator==(const IncidenceMatrix& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }

    // Image lengths implied by the counts.
    BigInt image0_length() const { return a + b; }
    BigInt image1_length() const { return c + d; }

    std::string str() const {
        return "[[" + a.str() + "," + c.str() + "],[" + b.str() + "," + d.str() + "]]";
    }
};

// A binary-alphabet morphism: letter images are nonempty words over {0,1},
// extended to words by concatenation.
class Substitution {
public:
    Substitution(std::vector<Letter> image0, std::vector<Letter> image1)
        : images_{std::move(image0), std::move(image1)} {
        for (const auto& img : images_) {
            if (img.empty()) throw domain_error("substitution images must be nonempty");
            for (Letter l : img)
                if (l > 1) throw internal_error("letters must be 0 or 1");
        }
    }

    static Substitution identity() { return Substitution({0}, {1}); }

    // 1 -> 01, 0 -> 0.
    static Substitution left_doubling() { return Substitution({0}, {0, 1}); }

    // 1 -> 10, 0 -> 0.
    static Substitution right_doubling() { return Substitution({0}, {1, 0}); }

    // 0 <-> 1.
    static Substitution exchange() { return Substitution({1}, {0}); }

    const std::vector<Letter>& image(Letter l) const {
        if (l > 1) throw internal_error("letters must be 0 or 1");
        return images_[l];
    }

    size_t max_image_length() const {
        return std::max(images_[0].size(), images_[1].size());
    }

    bool operator==(const Substitution& o) const { return images_ == o.images_; }
    bool operator!=(const Substitution& o) const { return !(*this == o); }

private:
    std::array<std::vector<Letter>, 2> images_;
};

// Image of w under s: the concatenation of letter images, left to right.
// The result carries origin 0; callers needing positioned images align
// them explicitly.
inline FiniteWord apply(const Substitution& s, const FiniteWord& w) {
    FiniteWord out;
    size_t total = 0;
    for (Letter l : w.letters) total += s.image(l).size();
    out.letters.reserve(total);
    for (Letter l : w.letters) {
        const auto& img = s.image(l);
        out.letters.insert(out.letters.end(), img.begin(), img.end());
    }
    return out;
}

// (outer o inner)(x) = outer(inner(x)).
inline Substitution compose(const Substitution& outer, const Substitution& inner) {
    FiniteWord in0;
    in0.letters = inner.image(0);
    FiniteWord in1;
    in1.letters = inner.image(1);
    return Substitution(apply(outer, in0).letters, apply(outer, in1).letters);
}

inline IncidenceMatrix incidence(const Substitution& s) {
    IncidenceMatrix m{0, 0, 0, 0};
    for (Letter l : s.image(0)) (l ? m.b : m.a) += 1;
    for (Letter l : s.image(1)) (l ? m.d : m.c) += 1;
    return m;
}

// The 1-frequency of any fixed word of a substitution with counts
// (a,b,c,d) solves (c+d-a-b) x^2 + (a+2b-d) x - b = 0. Returns the unique
// root in the open interval (0,1), exactly: rational when the discriminant
// is a perfect square, quadratic irrational otherwise.
inline QuadIrr alpha_from_incidence(const IncidenceMatrix& m) {
    if (m.a < 0 || m.b < 0 || m.c < 0 || m.d < 0)
        throw domain_error("incidence counts must be nonnegative");
    BigInt A = m.c + m.d - m.a - m.b;
    BigInt B = m.a + 2 * m.b - m.d;
    BigInt C = -m.b;
    std::vector<QuadIrr> roots;
    if (A == 0) {
        if (B != 0) roots.push_back(QuadIrr::rational(-C, B));
    } else {
        BigInt disc = B * B - 4 * A * C;
        if (disc < 0)
            throw domain_error("degenerate substitution: no real frequency");
        if (disc == 0)
            throw domain_error("degenerate substitution: double frequency root");
        BigInt sq = isqrt(disc);
        if (sq * sq == disc) {
            roots.push_back(QuadIrr::rational(-B + sq, 2 * A));
            roots.push_back(QuadIrr::rational(-B - sq, 2 * A));
        } else {
            // Canonicalize the giant form once; its conjugate is a sign
            // flip on the already-reduced field coordinates.
            QuadIrr plus(-B, 1, disc, 2 * A);
            roots.push_back(QuadIrr(plus.p(), -plus.q(), plus.d(), plus.r()));
            roots.push_back(std::move(plus));
        }
    }
    const QuadIrr zero(0), one(1);
    std::vector<QuadIrr> inside;
    for (const QuadIrr& x : roots)
        if (x > zero && x < one) inside.push_back(x);
    if (inside.empty())
        throw domain_error("degenerate substitution: no frequency in (0, 1)");
    if (inside.size() > 1)
        throw domain_error("ambiguous frequency equation: roots " + inside[0].str() + " and " +
                           inside[1].str());
    return inside[0];
}

inline QuadIrr alpha_from_substitution(const Substitution& s) {
    return alpha_from_incidence(incidence(s));
}

// Prefix of the one-sided fixed point grown from `seed`, of length at least
// min_len. If s(seed) does not extend seed on the right, the smallest power
// s^k with k <= 4 that does is used instead.
inline FiniteWord expand_one_sided(const Substitution& s, Letter seed, long long min_len) {
    Substitution power = s;
    bool found = false;
    for (int k = 1; k <= 4; ++k) {
        const auto& img = power.image(seed);
        if (img.size() >= 2 && img.front() == seed) {
            found = true;
            break;
        }
        power = compose(s, power);
    }
    if (!found)
        throw domain_error("no prolongable letter within power budget for one-sided expansion");
    FiniteWord w;
    w.letters = {seed};
    while (static_cast<long long>(w.size()) < min_len) {
        FiniteWord next = apply(power, w);
        for (size_t i = 0; i < w.size(); ++i)
            if (next.letters[i] != w.letters[i])
                throw internal_error("one-sided iterates disagree on their overlap");
        w = std::move(next);
    }
    return w;
}

// Centered window [-radius, radius+1] of the two-sided fixed point with
// left_seed fixed at position 0 and right_seed at position 1. Grows by
// applying s with the left half anchored to end at 0 and the right half to
// start at 1, checking that successive windows agree on their overlap.
inline FiniteWord expand_two_sided(const Substitution& s, Letter left_seed, Letter right_seed,
                                   long long radius) {
    if (radius < 0) throw domain_error("radius must be nonnegative");
    const auto& left_img = s.image(left_seed);
    const auto& right_img = s.image(right_seed);
    if (left_img.size() < 2 || left_img.back() != left_seed)
        throw domain_error("invalid seed: image of the left seed must end with it");
    if (right_img.size() < 2 || right_img.front() != right_seed)
        throw domain_error("invalid seed: image of the right seed must start with it");
    FiniteWord w;
    w.origin = 0;
    w.letters = {left_seed, right_seed};
    while (w.lo() > -radius || w.hi() < radius + 1) {
        FiniteWord next;
        std::vector<Letter> left_part;
        for (long long n = w.lo(); n <= 0; ++n) {
            const auto& img = s.image(w.at(n));
            left_part.insert(left_part.end(), img.begin(), img.end());
        }
        next.origin = 1 - static_cast<long long>(left_part.size());
        next.letters = std::move(left_part);
        for (long long n = 1; n <= w.hi(); ++n) {
            const auto& img = s.image(w.at(n));
            next.letters.insert(next.letters.end(), img.begin(), img.end());
        }
        for (long long n = w.lo(); n <= w.hi(); ++n)
            if (next.at(n) != w.at(n))
                throw domain_error("inconsistent seed: iterates disagree on their overlap");
        w = std::move(next);
    }
    FiniteWord out;
    out.origin = -radius;
    for (long long n = -radius; n <= radius + 1; ++n) out.letters.push_back(w.at(n));
    return out;
}

// Rules grammar: `0>image;1>image` (either rule order), whitespace ignored,
// images nonempty over {0,1}.
inline Substitution parse_rules(const std::string& text) {
    std::array<std::vector<Letter>, 2> images;
    std::array<bool, 2> have{false, false};
    size_t i = 0;
    for (int rule = 0; rule < 2; ++rule) {
        detail::skip_ws(text, i);
        if (i >= text.size() || (text[i] != '0' && text[i] != '1'))
            throw usage_error("expected rule letter at position " + std::to_string(i));
        int which = text[i] - '0';
        ++i;
        detail::skip_ws(text, i);
        if (i >= text.size() || text[i] != '>')
            throw usage_error("expected '>' at position " + std::to_string(i));
        ++i;
        detail::skip_ws(text, i);
        std::vector<Letter> img;
        while (i < text.size() && (text[i] == '0' || text[i] == '1')) {
            img.push_back(static_cast<Letter>(text[i] - '0'));
            ++i;
            detail::skip_ws(text, i);
        }
        if (img.empty())
            throw usage_error("expected nonempty binary image at position " + std::to_string(i));
        if (have[which])
            throw usage_error("duplicate rule for letter " + std::to_string(which));
        have[which] = true;
        images[which] = std::move(img);
        if (rule == 0) {
            detail::skip_ws(text, i);
            if (i >= text.size() || text[i] != ';')
                throw usage_error("expected ';' at position " + std::to_string(i));
            ++i;
        }
    }
    detail::skip_ws(text, i);
    if (i != text.size())
        throw usage_error("unexpected trailing input at position " + std::to_string(i));
    if (!have[0] || !have[1]) throw usage_error("rules must cover both letters");
    return Substitution(std::move(images[0]), std::move(images[1]));
}

inline std::string render_rules(const Substitution& s) {
    std::string out = "0>";
    for (Letter l : s.image(0)) out.push_back(l ? '1' : '0');
    out += ";1>";
    for (Letter l : s.image(1)) out.push_back(l ? '1' : '0');
    return out;
}

}  // namespace sturmian
