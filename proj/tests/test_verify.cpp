#include <catch_amalgamated.hpp>

#include <sturmian/induction.hpp>
#include <sturmian/quadirr.hpp>
#include <sturmian/subst.hpp>
#include <sturmian/verify.hpp>
#include <sturmian/words.hpp>

#include "support/test_support.hpp"

using sturmian::code_window;
using sturmian::FiniteWord;
using sturmian::numeric_oracle_window;
using sturmian::QuadIrr;
using sturmian::RotationSystem;
using sturmian::Symmetry;
using testsupport::SplitMix64;

namespace {

const QuadIrr kGolden(3, -1, 5, 2);

}

TEST_CASE("the decimal oracle reproduces exact coding") {
    RotationSystem sys = sturmian::palindrome_system(kGolden, Symmetry::AboutOne);
    CHECK(numeric_oracle_window(sys, -50, 50) == code_window(sys, -50, 50));
    CHECK(numeric_oracle_window(sys, 7, 3).empty());

    SplitMix64 rng(0x0AC7E5);
    for (int i = 0; i < 10; ++i) {
        QuadIrr alpha = testsupport::sample_alpha(rng);
        QuadIrr start = alpha * QuadIrr::rational(
                            static_cast<long long>(rng.below(2001)) - 1000, 997);
        RotationSystem s(alpha, start);
        CHECK(numeric_oracle_window(s, -100, 100) == code_window(s, -100, 100));
    }
}

TEST_CASE("precision budgets are validated") {
    RotationSystem sys = sturmian::palindrome_system(kGolden, Symmetry::AboutOne);
    sturmian::PrecisionBudget bad;
    bad.digits = 5;
    CHECK_THROWS_AS(numeric_oracle_window(sys, 0, 3, bad), sturmian::domain_error);
    bad.digits = 500;
    bad.max_digits = 100;
    CHECK_THROWS_AS(numeric_oracle_window(sys, 0, 3, bad), sturmian::domain_error);
}

TEST_CASE("a substitution that fixes the word is found in its own window") {
    sturmian::Substitution fib = sturmian::parse_rules("0>00101;1>001");
    RotationSystem sys = sturmian::palindrome_system(kGolden, Symmetry::AboutOne);
    CHECK(sturmian::check_fixed_window(fib, sys, 100));
    CHECK(sturmian::check_fixed_window(sturmian::Substitution::identity(), sys, 100));

    // The doubling generates a word of a different slope: never a block here.
    CHECK_FALSE(
        sturmian::check_fixed_window(sturmian::Substitution::left_doubling(), sys, 100));
}

TEST_CASE("degenerate comparison windows raise errors") {
    RotationSystem sys = sturmian::palindrome_system(kGolden, Symmetry::AboutOne);
    CHECK_THROWS_AS(
        sturmian::check_fixed_window(sturmian::Substitution::identity(), sys, 0),
        sturmian::domain_error);

    // A run of equal letters around the center makes a one-letter pattern
    // match several places: reported as ambiguity, not as success.
    RotationSystem dense(QuadIrr(0, 1, 2, 2), QuadIrr(0, 1, 2, 4));  // alpha = start*2 = 1/sqrt(2)
    CHECK_THROWS_AS(
        sturmian::check_fixed_window(sturmian::Substitution::identity(), dense, 1),
        sturmian::domain_error);
}

TEST_CASE("induced period substitutions fix their cycle-start windows") {
    const QuadIrr slopes[] = {
        QuadIrr(-1, 1, 2, 1),   // sqrt(2) - 1
        QuadIrr(-1, 1, 3, 1),   // sqrt(3) - 1
        QuadIrr(-3, 1, 13, 2),  // (sqrt(13) - 3)/2
        QuadIrr(0, 1, 5, 5),    // 1/sqrt(5)
    };
    for (const QuadIrr& alpha : slopes) {
        for (Symmetry sym :
             {Symmetry::AboutOne, Symmetry::AboutZero, Symmetry::AboutGap}) {
            sturmian::InductionResult r = sturmian::run_palindromic_induction(alpha, sym);
            sturmian::Substitution phi = r.phi();
            REQUIRE(phi.max_image_length() <= 2000);
            RotationSystem sys = sturmian::palindrome_system(r.cycle_start().alpha,
                                                             r.cycle_start().sym);
            // Lopsided image lengths can make the trimmed image short enough
            // to repeat inside a small base window; widen until it pins down.
            bool fixed = false;
            for (long long radius : {5LL, 10LL, 20LL, 40LL}) {
                try {
                    fixed = sturmian::check_fixed_window(phi, sys, radius);
                    break;
                } catch (const sturmian::domain_error&) {
                    continue;
                }
            }
            CHECK(fixed);
        }
    }
}
