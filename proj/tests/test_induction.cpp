#include <catch_amalgamated.hpp>

#include <vector>

#include <sturmian/induction.hpp>
#include <sturmian/quadirr.hpp>
#include <sturmian/subst.hpp>
#include <sturmian/words.hpp>

#include "support/test_support.hpp"

using sturmian::code_window;
using sturmian::FiniteWord;
using sturmian::InductionResult;
using sturmian::PalState;
using sturmian::QuadIrr;
using sturmian::Step;
using sturmian::StepKind;
using sturmian::Symmetry;
using testsupport::SplitMix64;

namespace {

const QuadIrr kGolden(3, -1, 5, 2);        // (3 - sqrt(5))/2
const QuadIrr kGoldenConj(-1, 1, 5, 2);    // (sqrt(5) - 1)/2
const QuadIrr kRoot2Minus1(-1, 1, 2, 1);   // sqrt(2) - 1

std::vector<StepKind> kinds(const std::vector<Step>& steps) {
    std::vector<StepKind> out;
    for (const Step& s : steps) out.push_back(s.kind);
    return out;
}

}  // namespace

TEST_CASE("single palindromic steps") {
    Step a = sturmian::pal_step({kGolden, Symmetry::AboutOne});
    CHECK(a.kind == StepKind::LeftDouble);
    CHECK(a.after == PalState{kGoldenConj, Symmetry::AboutOne});

    Step b = sturmian::pal_step({kGoldenConj, Symmetry::AboutOne});
    CHECK(b.kind == StepKind::Exchange);
    CHECK(b.after == PalState{kGolden, Symmetry::AboutZero});

    Step c = sturmian::pal_step({kGolden, Symmetry::AboutGap});
    CHECK(c.kind == StepKind::LeftDouble);
    CHECK(c.after == PalState{kGoldenConj, Symmetry::AboutZero});

    CHECK_THROWS_AS(sturmian::pal_step({QuadIrr::rational(1, 3), Symmetry::AboutOne}),
                    sturmian::domain_error);
}

TEST_CASE("the golden slope closes its palindromic cycle in six steps") {
    InductionResult r = sturmian::run_palindromic_induction(kGolden, Symmetry::AboutOne);
    CHECK(r.preperiod().empty());
    CHECK(kinds(r.period()) ==
          std::vector<StepKind>{StepKind::LeftDouble, StepKind::Exchange,
                                StepKind::RightDouble, StepKind::Exchange,
                                StepKind::LeftDouble, StepKind::Exchange});
    CHECK(r.cycle_start() == r.initial());
    CHECK(r.phi() == sturmian::parse_rules("0>00101;1>001"));
    CHECK(r.psi() == sturmian::Substitution::identity());
    CHECK(sturmian::incidence(r.phi()) == r.phi_incidence());
}

TEST_CASE("starting past the first exchange shifts the cycle phase") {
    InductionResult r = sturmian::run_palindromic_induction(kGoldenConj, Symmetry::AboutOne);
    CHECK(r.preperiod().empty());
    REQUIRE(r.period().size() == 6);
    CHECK(r.period().front().kind == StepKind::Exchange);
    CHECK(r.cycle_start() == r.initial());
}

TEST_CASE("slope bookkeeping holds step by step") {
    SplitMix64 rng(0xB00CCA);
    const QuadIrr one(1);
    int done = 0;
    while (done < 3) {
        QuadIrr alpha = testsupport::sample_alpha(rng);
        sturmian::CFExpansion cf = sturmian::cf_expand(alpha, 1000000);
        if (sturmian::slow_step_count(cf) > 2000) continue;  // keep the unit test quick
        ++done;
        InductionResult r =
            sturmian::run_palindromic_induction(alpha, Symmetry::AboutZero);
        auto check_step = [&](const Step& s) {
            if (s.kind == StepKind::Exchange) {
                CHECK(s.before.alpha == one - s.after.alpha);
            } else {
                CHECK(s.before.alpha == s.after.alpha / (one + s.after.alpha));
            }
        };
        for (const Step& s : r.preperiod()) check_step(s);
        for (const Step& s : r.period()) check_step(s);
    }
}

TEST_CASE("budget exhaustion and invalid slopes") {
    CHECK_THROWS_AS(sturmian::run_palindromic_induction(kGolden, Symmetry::AboutOne, 3),
                    sturmian::domain_error);
    CHECK_THROWS_AS(sturmian::run_palindromic_induction(QuadIrr::rational(2, 7),
                                                        Symmetry::AboutOne),
                    sturmian::domain_error);
    CHECK_THROWS_AS(sturmian::run_rauzy_induction(QuadIrr::rational(2, 7)),
                    sturmian::domain_error);
    CHECK_THROWS_AS(sturmian::run_rauzy_induction(QuadIrr(3, 1, 5, 2)),
                    sturmian::domain_error);  // slope above 1
}

TEST_CASE("regrowth reproduces the golden palindromes") {
    InductionResult one = sturmian::run_palindromic_induction(kGolden, Symmetry::AboutOne);
    FiniteWord w5 = sturmian::regrow_palindrome(one, one.cycle_start(), 5);
    CHECK(w5.origin == -5);
    CHECK(w5.str() == "10100100101");

    FiniteWord w0 = sturmian::regrow_palindrome(one, one.cycle_start(), 0);
    CHECK(w0.origin == 0);
    CHECK(w0.str() == "1");

    InductionResult gap = sturmian::run_palindromic_induction(kGolden, Symmetry::AboutGap);
    FiniteWord g2 = sturmian::regrow_palindrome(gap, gap.cycle_start(), 2);
    CHECK(g2.origin == -2);
    CHECK(g2.str() == "010010");
}

TEST_CASE("regrowth matches direct coding on random slopes") {
    SplitMix64 rng(0x6066B1);
    int done = 0;
    while (done < 2) {
        QuadIrr alpha = testsupport::sample_alpha(rng);
        sturmian::CFExpansion cf = sturmian::cf_expand(alpha, 1000000);
        if (sturmian::slow_step_count(cf) > 2000) continue;  // keep the unit test quick
        ++done;
        for (Symmetry sym :
             {Symmetry::AboutOne, Symmetry::AboutZero, Symmetry::AboutGap}) {
            InductionResult r = sturmian::run_palindromic_induction(alpha, sym);
            FiniteWord grown = sturmian::regrow_palindrome(r, r.cycle_start(), 50);
            long long hi = sym == Symmetry::AboutGap ? 51 : 50;
            FiniteWord direct =
                code_window(sturmian::palindrome_system(alpha, sym), -50, hi);
            CHECK(grown == direct);
        }
    }
}

TEST_CASE("regrowth argument validation") {
    InductionResult r = sturmian::run_palindromic_induction(kGolden, Symmetry::AboutOne);
    CHECK_THROWS_AS(sturmian::regrow_palindrome(r, r.cycle_start(), -1),
                    sturmian::domain_error);
    PalState wrong{kGolden, Symmetry::AboutZero};
    CHECK_THROWS_AS(sturmian::regrow_palindrome(r, wrong, 5), sturmian::domain_error);
    InductionResult classical = sturmian::run_rauzy_induction(kGolden);
    CHECK_THROWS_AS(
        sturmian::regrow_palindrome(classical, classical.cycle_start(), 5),
        sturmian::domain_error);
}

TEST_CASE("classical induction at the golden slope") {
    InductionResult r = sturmian::run_rauzy_induction(kGolden);
    CHECK(r.preperiod().empty());
    CHECK(kinds(r.period()) == std::vector<StepKind>{StepKind::Cut, StepKind::Exchange});
    CHECK(r.phi() == sturmian::parse_rules("0>10;1>0"));
    CHECK(sturmian::alpha_from_substitution(r.phi()) == kGolden);
}

TEST_CASE("classical induction walks the sqrt(2) orbit exactly") {
    InductionResult r = sturmian::run_rauzy_induction(kRoot2Minus1);
    CHECK(r.preperiod().empty());
    REQUIRE(r.period().size() == 3);
    CHECK(r.period()[0].after.alpha == QuadIrr(0, 1, 2, 2));   // 1/sqrt(2)
    CHECK(r.period()[1].after.alpha == QuadIrr(2, -1, 2, 2));  // 1 - 1/sqrt(2)
    CHECK(r.period()[2].after.alpha == kRoot2Minus1);
    CHECK(kinds(r.period()) ==
          std::vector<StepKind>{StepKind::Cut, StepKind::Exchange, StepKind::Cut});
    CHECK(sturmian::alpha_from_substitution(r.phi()) == kRoot2Minus1);
}

TEST_CASE("oversized compositions refuse to materialize but keep exact counts") {
    QuadIrr alpha(161, 11, 23, 600);
    InductionResult r = sturmian::run_palindromic_induction(alpha, Symmetry::AboutOne);
    sturmian::IncidenceMatrix m = r.phi_incidence();
    CHECK(std::max(m.image0_length(), m.image1_length()) >
          sturmian::BigInt(sturmian::kDefaultImageCap));
    CHECK_THROWS_AS(r.phi(), sturmian::domain_error);
    // The trace itself still reconstructs windows without ever composing.
    FiniteWord grown = sturmian::regrow_palindrome(r, r.cycle_start(), 30);
    FiniteWord direct =
        code_window(sturmian::palindrome_system(alpha, Symmetry::AboutOne), -30, 30);
    CHECK(grown == direct);
}
