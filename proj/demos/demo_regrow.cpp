// Walks palindromic induction around its cycle for one slope, prints the
// per-step trace, then rebuilds the word from the cycle's substitutions
// alone and compares it letter for letter against direct coding.
//
//   demo_regrow ["(3-1*sqrt(5))/2"] [one|zero|gap] [radius]

#include <sturmian/sturmian.hpp>

#include <iostream>
#include <string>

int main(int argc, char** argv) {
    using namespace sturmian;
    try {
        QuadIrr alpha = QuadIrr::parse(argc > 1 ? argv[1] : "(3-1*sqrt(5))/2");
        std::string symname = argc > 2 ? argv[2] : "one";
        Symmetry sym = symname == "one"    ? Symmetry::AboutOne
                       : symname == "zero" ? Symmetry::AboutZero
                                           : Symmetry::AboutGap;
        long long radius = argc > 3 ? std::stoll(argv[3]) : 40;

        InductionResult r = run_palindromic_induction(alpha, sym);
        std::cout << "slope " << alpha.str() << ", palindrome " << symmetry_name(sym) << "\n";
        std::cout << "preperiod of " << r.preperiod().size() << " steps, period of "
                  << r.period().size() << ":\n";
        auto show = [](const char* phase, const std::vector<Step>& steps) {
            size_t i = 0;
            for (const Step& s : steps)
                std::cout << "  " << phase << " " << i++ << ": " << s.before.str() << " --"
                          << step_label(s.kind) << "--> " << s.after.str() << "\n";
        };
        show("pre", r.preperiod());
        show("per", r.period());

        std::cout << "phi incidence " << r.phi_incidence().str() << "\n";
        try {
            std::cout << "phi rules " << render_rules(r.phi()) << "\n";
        } catch (const domain_error&) {
            std::cout << "phi images too long to render; lengths "
                      << r.phi_incidence().image0_length().str() << " and "
                      << r.phi_incidence().image1_length().str() << "\n";
        }

        FiniteWord grown = regrow_palindrome(r, r.cycle_start(), radius);
        long long hi = sym == Symmetry::AboutGap ? radius + 1 : radius;
        FiniteWord coded = code_window(palindrome_system(alpha, sym), -radius, hi);
        std::cout << "regrown  " << grown.str() << "\n";
        std::cout << "coded    " << coded.str() << "\n";
        std::cout << (grown == coded ? "exact match" : "MISMATCH") << " over ["
                  << -radius << ", " << hi << "]\n";
        return grown == coded ? 0 : 1;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
