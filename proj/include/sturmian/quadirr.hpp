#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "sturmian/errors.hpp"

namespace sturmian {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

inline BigInt big_gcd(BigInt a, BigInt b) {
    a = big_abs(a);
    b = big_abs(b);
    while (b != 0) {
        BigInt t = a % b;
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

// Floor of the real square root. Requires x >= 0.
inline BigInt isqrt(const BigInt& x) {
    if (x < 0) throw internal_error("isqrt of negative value");
    return boost::multiprecision::sqrt(x);
}

// Floor division with the quotient rounded toward minus infinity. b > 0.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

// Splits n >= 1 as s^2 * f with f squarefree; returns (s, f).
// Trial division up to 10^6, then an exact square test on the remaining
// cofactor. A non-square cofactor above 10^18 could still hide a square
// factor, so it is rejected instead of guessed.
inline std::pair<BigInt, BigInt> squarefree_split(BigInt n) {
    if (n < 1) throw internal_error("squarefree_split needs n >= 1");
    static const BigInt kTrialBound = 1000000;
    static const BigInt kCertifiableLimit("1000000000000000000");

    // Beyond the certifiable range, first look for a split n = k^2 * f with
    // a small squarefree part f by testing quotients for squareness. This
    // succeeds no matter how k factors, which is exactly the shape of the
    // discriminants that slope recovery meets: compositions of many
    // induction steps have letter counts running to thousands of digits,
    // while the field stays the one the slope started in.
    if (n > kCertifiableLimit) {
        constexpr long long kSmallPartScan = 10000;
        static const std::vector<bool> is_squarefree = [] {
            std::vector<bool> flags(kSmallPartScan + 1, true);
            for (long long p = 2; p * p <= kSmallPartScan; ++p)
                for (long long m = p * p; m <= kSmallPartScan; m += p * p) flags[m] = false;
            return flags;
        }();
        static const auto square_residues = [](unsigned m) {
            std::vector<bool> table(m, false);
            for (unsigned i = 0; i < m; ++i) table[i * i % m] = true;
            return table;
        };
        static const std::vector<bool> kSq64 = square_residues(64);
        static const std::vector<bool> kSq63 = square_residues(63);
        static const std::vector<bool> kSq65 = square_residues(65);
        for (long long cand = 1; cand <= kSmallPartScan; ++cand) {
            if (!is_squarefree[cand] || n % cand != 0) continue;
            BigInt quotient = n / cand;
            if (!kSq64[(quotient % 64).convert_to<unsigned>()] ||
                !kSq63[(quotient % 63).convert_to<unsigned>()] ||
                !kSq65[(quotient % 65).convert_to<unsigned>()])
                continue;
            BigInt root = isqrt(quotient);
            if (root * root == quotient) return {root, BigInt(cand)};
        }
        // No small squarefree part: fall through to trial division, which
        // either reduces n into the certifiable range or rejects honestly.
    }

    BigInt s = 1;
    BigInt f = 1;
    for (BigInt i = 2; i <= kTrialBound && i * i <= n; i == 2 ? i = 3 : i += 2) {
        if (n % i != 0) continue;
        int e = 0;
        while (n % i == 0) {
            n /= i;
            ++e;
        }
        for (int k = 0; k < e / 2; ++k) s *= i;
        if (e % 2 == 1) f *= i;
    }
    if (n > 1) {
        BigInt x = isqrt(n);
        if (x * x == n) {
            s *= x;
        } else if (n <= kCertifiableLimit) {
            // No factor up to 10^6 and not a square: at most two distinct
            // prime factors, hence squarefree.
            f *= n;
        } else {
            throw domain_error("radicand " + n.str() + " too large to certify squarefree");
        }
    }
    return {s, f};
}

// Canonical exact value (p + q*sqrt(d)) / r over one quadratic field.
//
// Invariants after construction: r > 0; gcd(|p|, |q|, r) = 1; d squarefree;
// q = 0 implies d = 1. Values compare equal exactly when their four
// components coincide.
class QuadIrr {
public:
    QuadIrr() : p_(0), q_(0), d_(1), r_(1) {}

    QuadIrr(long long n) : p_(n), q_(0), d_(1), r_(1) {}  // NOLINT(runtime/explicit)

    QuadIrr(BigInt p, BigInt q, BigInt d, BigInt r)
        : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)), r_(std::move(r)) {
        if (r_ == 0) throw domain_error("invalid denominator: r = 0");
        if (d_ < 0) throw domain_error("negative radicand is not supported");
        reduce_radicand();
        normalize();
    }

    static QuadIrr rational(BigInt num, BigInt den) {
        return QuadIrr(std::move(num), 0, 1, std::move(den));
    }

    static QuadIrr sqrt_of(BigInt d) { return QuadIrr(0, 1, std::move(d), 1); }

    const BigInt& p() const { return p_; }
    const BigInt& q() const { return q_; }
    const BigInt& d() const { return d_; }
    const BigInt& r() const { return r_; }

    bool is_rational() const { return q_ == 0; }
    bool is_integer() const { return q_ == 0 && r_ == 1; }
    bool is_zero() const { return p_ == 0 && q_ == 0; }

    bool operator==(const QuadIrr& o) const {
        return p_ == o.p_ && q_ == o.q_ && d_ == o.d_ && r_ == o.r_;
    }
    bool operator!=(const QuadIrr& o) const { return !(*this == o); }

    // Exact sign: -1, 0, or +1.
    int sign() const { return sign_of(p_, q_, d_); }

    QuadIrr operator-() const { return QuadIrr(already_canonical{}, -p_, -q_, d_, r_); }

    QuadIrr operator+(const QuadIrr& o) const {
        const BigInt& dd = common_field(o);
        return QuadIrr(already_canonical{}, p_ * o.r_ + o.p_ * r_, q_ * o.r_ + o.q_ * r_, dd,
                       r_ * o.r_);
    }

    QuadIrr operator-(const QuadIrr& o) const { return *this + (-o); }

    QuadIrr operator*(const QuadIrr& o) const {
        const BigInt& dd = common_field(o);
        return QuadIrr(already_canonical{}, p_ * o.p_ + q_ * o.q_ * dd, p_ * o.q_ + q_ * o.p_, dd,
                       r_ * o.r_);
    }

    QuadIrr inverse() const {
        if (is_zero()) throw domain_error("division by zero");
        // 1 / ((p + q sqrt(d)) / r)  =  r (p - q sqrt(d)) / (p^2 - q^2 d)
        BigInt den = p_ * p_ - q_ * q_ * d_;
        if (den == 0) throw internal_error("canonical value with vanishing norm");
        return QuadIrr(already_canonical{}, r_ * p_, -r_ * q_, d_, den);
    }

    QuadIrr operator/(const QuadIrr& o) const { return *this * o.inverse(); }

    // Exact total order within one field: -1 (less), 0 (equal), +1 (greater).
    int compare(const QuadIrr& o) const { return (*this - o).sign(); }

    bool operator<(const QuadIrr& o) const { return compare(o) < 0; }
    bool operator<=(const QuadIrr& o) const { return compare(o) <= 0; }
    bool operator>(const QuadIrr& o) const { return compare(o) > 0; }
    bool operator>=(const QuadIrr& o) const { return compare(o) >= 0; }

    // Exact integer part and fractional part; frac is in [0, 1) and
    // floor + frac reproduces the value exactly.
    std::pair<BigInt, QuadIrr> floor_frac() const {
        BigInt f;
        if (q_ == 0) {
            f = floor_div(p_, r_);
        } else {
            BigInt s = isqrt(q_ * q_ * d_);
            BigInt low_num = q_ > 0 ? BigInt(p_ + s) : BigInt(p_ - s - 1);
            f = floor_div(low_num, r_);
            int guard = 0;
            while (sign_of(p_ - (f + 1) * r_, q_, d_) >= 0) {
                ++f;
                if (++guard > 3) throw internal_error("floor bracketing failed to settle");
            }
        }
        QuadIrr frac(already_canonical{}, p_ - f * r_, q_, d_, r_);
        if (frac.sign() < 0 || sign_of(frac.p_ - frac.r_, frac.q_, frac.d_) >= 0)
            throw internal_error("fractional part out of [0, 1)");
        return {std::move(f), std::move(frac)};
    }

    BigInt floor() const { return floor_frac().first; }
    QuadIrr frac() const { return floor_frac().second; }

    // Canonical rendering in the number grammar:
    //   integers as "P", rationals as "P/R",
    //   irrationals as "(P+Q*sqrt(D))/R" (sign of Q folded into the operator).
    std::string str() const {
        if (q_ == 0) {
            std::string out = p_.str();
            if (r_ != 1) out += "/" + r_.str();
            return out;
        }
        std::string out = "(" + p_.str();
        out += q_ < 0 ? "-" : "+";
        out += big_abs(q_).str() + "*sqrt(" + d_.str() + "))/" + r_.str();
        return out;
    }

    // Parses the number grammar: (P+Q*sqrt(D))/R | P/R | P, whitespace
    // ignored, optional signs on P and Q. Reports the position of the
    // first offending character.
    static QuadIrr parse(const std::string& text);

    // Strict component ordering for use as an associative-container key.
    // Unrelated to the numeric order.
    struct KeyLess {
        bool operator()(const QuadIrr& x, const QuadIrr& y) const {
            return std::tie(x.p_, x.q_, x.d_, x.r_) < std::tie(y.p_, y.q_, y.d_, y.r_);
        }
    };

private:
    struct already_canonical {};

    // Fast path for arithmetic results: the radicand is known squarefree,
    // so only sign, gcd, and q = 0 normalization are needed.
    QuadIrr(already_canonical, BigInt p, BigInt q, BigInt d, BigInt r)
        : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)), r_(std::move(r)) {
        if (r_ == 0) throw domain_error("invalid denominator: r = 0");
        normalize();
    }

    // Sign of P + Q*sqrt(D) for canonical D (squarefree, so the value is
    // zero only when P = Q = 0). Pure integer analysis.
    static int sign_of(const BigInt& P, const BigInt& Q, const BigInt& D) {
        if (Q == 0) return P == 0 ? 0 : (P > 0 ? 1 : -1);
        if (P >= 0 && Q > 0) return 1;
        if (P <= 0 && Q < 0) return -1;
        BigInt lhs = P * P;
        BigInt rhs = Q * Q * D;
        if (P > 0) {  // Q < 0: compare P against |Q| sqrt(D)
            if (lhs == rhs) throw internal_error("squarefree radicand with rational root");
            return lhs > rhs ? 1 : -1;
        }
        // P < 0, Q > 0: compare Q sqrt(D) against |P|
        if (lhs == rhs) throw internal_error("squarefree radicand with rational root");
        return rhs > lhs ? 1 : -1;
    }

    const BigInt& common_field(const QuadIrr& o) const {
        if (q_ == 0) return o.d_;
        if (o.q_ == 0) return d_;
        if (d_ != o.d_)
            throw domain_error("mixed quadratic fields: sqrt(" + d_.str() + ") vs sqrt(" +
                               o.d_.str() + ")");
        return d_;
    }

    void reduce_radicand() {
        if (q_ == 0 || d_ == 0) {
            q_ = 0;
            d_ = 1;
            return;
        }
        auto [s, f] = squarefree_split(d_);
        q_ *= s;
        d_ = f;
        if (d_ == 1) {
            p_ += q_;
            q_ = 0;
        }
    }

    void normalize() {
        if (q_ == 0) d_ = 1;
        if (r_ < 0) {
            p_ = -p_;
            q_ = -q_;
            r_ = -r_;
        }
        BigInt g = big_gcd(big_gcd(p_, q_), r_);
        if (g > 1) {
            p_ /= g;
            q_ /= g;
            r_ /= g;
        }
    }

    BigInt p_, q_, d_, r_;
};

namespace detail {

inline void skip_ws(const std::string& s, size_t& i) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
}

inline BigInt parse_int(const std::string& s, size_t& i, const char* what) {
    skip_ws(s, i);
    size_t start = i;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = s[i] == '-';
        ++i;
        skip_ws(s, i);
    }
    size_t digits_from = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i == digits_from)
        throw usage_error(std::string("expected ") + what + " at position " +
                          std::to_string(start));
    BigInt v(s.substr(digits_from, i - digits_from));
    return neg ? BigInt(-v) : v;
}

inline void expect(const std::string& s, size_t& i, const std::string& token) {
    skip_ws(s, i);
    if (s.compare(i, token.size(), token) != 0)
        throw usage_error("expected '" + token + "' at position " + std::to_string(i));
    i += token.size();
}

}  // namespace detail

inline QuadIrr QuadIrr::parse(const std::string& text) {
    size_t i = 0;
    detail::skip_ws(text, i);
    BigInt p, q = 0, d = 1, r = 1;
    if (i < text.size() && text[i] == '(') {
        ++i;
        p = detail::parse_int(text, i, "integer P");
        detail::skip_ws(text, i);
        if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
            throw usage_error("expected '+' or '-' at position " + std::to_string(i));
        bool qneg = text[i] == '-';
        ++i;
        q = detail::parse_int(text, i, "integer Q");
        if (qneg) q = -q;
        detail::expect(text, i, "*");
        detail::expect(text, i, "sqrt");
        detail::expect(text, i, "(");
        d = detail::parse_int(text, i, "integer D");
        detail::expect(text, i, ")");
        detail::expect(text, i, ")");
        detail::expect(text, i, "/");
        r = detail::parse_int(text, i, "integer R");
    } else {
        p = detail::parse_int(text, i, "integer P");
        detail::skip_ws(text, i);
        if (i < text.size() && text[i] == '/') {
            ++i;
            r = detail::parse_int(text, i, "integer R");
        }
    }
    detail::skip_ws(text, i);
    if (i != text.size())
        throw usage_error("unexpected trailing input at position " + std::to_string(i));
    return QuadIrr(std::move(p), std::move(q), std::move(d), std::move(r));
}

inline std::string to_string(const QuadIrr& x) { return x.str(); }

template <typename Stream>
Stream& operator<<(Stream& os, const QuadIrr& x) {
    os << x.str();
    return os;
}

}  // namespace sturmian
