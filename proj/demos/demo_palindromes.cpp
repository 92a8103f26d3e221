// Prints the three bi-infinite palindromes of a mechanical word side by
// side. Every irrational slope in (0, 1) admits exactly three: one centered
// on a 1, one centered on a 0, and one centered on the gap between
// positions 0 and 1.
//
//   demo_palindromes ["(3-1*sqrt(5))/2"] [radius]

#include <sturmian/sturmian.hpp>

#include <iostream>
#include <string>

int main(int argc, char** argv) {
    using namespace sturmian;
    try {
        QuadIrr alpha = QuadIrr::parse(argc > 1 ? argv[1] : "(3-1*sqrt(5))/2");
        long long radius = argc > 2 ? std::stoll(argv[2]) : 30;

        PalindromeSystems ps = palindrome_systems(alpha);
        std::cout << "slope   alpha = " << alpha.str() << "\n";
        std::cout << "letters in a window of " << 2 * radius + 1 << " positions:\n\n";

        struct Row {
            const char* label;
            Symmetry sym;
            const RotationSystem* sys;
        };
        const Row rows[] = {{"about a 1 ", Symmetry::AboutOne, &ps.about_one},
                            {"about a 0 ", Symmetry::AboutZero, &ps.about_zero},
                            {"about gap ", Symmetry::AboutGap, &ps.about_gap}};
        for (const Row& row : rows) {
            long long hi = row.sym == Symmetry::AboutGap ? radius + 1 : radius;
            FiniteWord w = code_window(*row.sys, -radius, hi);
            std::string s = w.str();
            std::string marked;
            if (row.sym == Symmetry::AboutGap) {
                size_t cut = static_cast<size_t>(1 - w.origin);
                marked = s.substr(0, cut) + "][" + s.substr(cut);
            } else {
                size_t cut = static_cast<size_t>(-w.origin);
                marked = s.substr(0, cut) + "[" + s.substr(cut, 1) + "]" + s.substr(cut + 1);
            }
            std::cout << row.label << " start = " << row.sys->start().str() << "\n";
            std::cout << "  ..." << marked << "...\n";
            std::cout << "  palindromic: " << (check_palindrome(w, row.sym) ? "yes" : "no")
                      << "\n\n";
        }
        return 0;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
