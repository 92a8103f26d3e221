#pragma once

#include <exception>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sturmian/contfrac.hpp"
#include "sturmian/errors.hpp"
#include "sturmian/induction.hpp"
#include "sturmian/quadirr.hpp"
#include "sturmian/subst.hpp"
#include "sturmian/verify.hpp"
#include "sturmian/words.hpp"

namespace sturmian {

namespace cli_detail {

using nlohmann::json;

struct Options {
    std::string alpha;
    std::string start;
    std::string rules;
    std::string seeds = "1|0";
    std::string sym = "one";
    std::string mode = "palindrome";
    std::string format = "text";
    long long from = 0;
    long long to = 0;
    long long radius = 1000;
    long long max_steps = 0;
};

inline QuadIrr parse_number(const std::string& text, const char* flag) {
    try {
        return QuadIrr::parse(text);
    } catch (const usage_error& e) {
        throw usage_error(std::string(flag) + ": " + e.what());
    }
}

inline Symmetry parse_sym(const std::string& s) {
    if (s == "one") return Symmetry::AboutOne;
    if (s == "zero") return Symmetry::AboutZero;
    if (s == "gap") return Symmetry::AboutGap;
    throw usage_error("--sym must be one, zero, or gap");
}

inline bool machine(const Options& o) {
    if (o.format == "machine") return true;
    if (o.format == "text") return false;
    throw usage_error("--format must be text or machine");
}

inline json word_json(const FiniteWord& w) {
    return json{{"origin", w.origin}, {"letters", w.str()}};
}

// Human-readable centered rendering: ...left[c]right... for letter-centered
// windows, ...left][right... for gap-centered ones.
inline std::string annotate_centered(const FiniteWord& w, Symmetry sym) {
    std::string s = w.str();
    std::string out = "...";
    if (sym == Symmetry::AboutGap) {
        size_t cut = static_cast<size_t>(1 - w.origin);
        out += s.substr(0, cut) + "][" + s.substr(cut);
    } else {
        size_t cut = static_cast<size_t>(-w.origin);
        out += s.substr(0, cut) + "[" + s.substr(cut, 1) + "]" + s.substr(cut + 1);
    }
    return out + "...";
}

inline json cf_json(const CFExpansion& cf) {
    json pre = json::array();
    for (const BigInt& a : cf.preperiod) pre.push_back(a.str());
    json per = json::array();
    for (const BigInt& a : cf.period) per.push_back(a.str());
    return json{{"preperiod", pre}, {"period", per}};
}

inline std::string cf_text(const CFExpansion& cf) {
    std::string out = "preperiod=[";
    for (size_t i = 0; i < cf.preperiod.size(); ++i)
        out += (i ? "," : "") + cf.preperiod[i].str();
    out += "] period=[";
    for (size_t i = 0; i < cf.period.size(); ++i) out += (i ? "," : "") + cf.period[i].str();
    return out + "]";
}

inline json incidence_json(const IncidenceMatrix& m) {
    return json{{"a", m.a.str()}, {"b", m.b.str()}, {"c", m.c.str()}, {"d", m.d.str()}};
}

// Renders a composition if its images fit the cap, otherwise reports the
// exact image lengths instead.
inline json composition_json(const InductionResult& r, bool period_part) {
    IncidenceMatrix m = period_part ? r.phi_incidence() : r.psi_incidence();
    json out{{"incidence", incidence_json(m)},
             {"image0_length", m.image0_length().str()},
             {"image1_length", m.image1_length().str()}};
    try {
        Substitution s = period_part ? r.phi() : r.psi();
        out["rules"] = render_rules(s);
    } catch (const domain_error&) {
        out["rules"] = nullptr;
    }
    return out;
}

inline int cmd_cf(const Options& o, std::ostream& out) {
    QuadIrr alpha = parse_number(o.alpha, "--alpha");
    CFExpansion cf = cf_expand(alpha, o.max_steps);
    if (machine(o)) {
        json doc{{"command", "cf"}, {"alpha", alpha.str()}, {"expansion", cf_json(cf)}};
        out << doc.dump(2) << "\n";
    } else {
        out << "alpha = " << alpha.str() << "\n" << cf_text(cf) << "\n";
    }
    return 0;
}

inline int cmd_word(const Options& o, std::ostream& out) {
    QuadIrr alpha = parse_number(o.alpha, "--alpha");
    QuadIrr start = parse_number(o.start, "--start");
    RotationSystem sys(alpha, start);
    FiniteWord w = code_window(sys, o.from, o.to);
    if (machine(o)) {
        json doc{{"command", "word"},
                 {"alpha", alpha.str()},
                 {"start", sys.start().str()},
                 {"window", word_json(w)}};
        out << doc.dump(2) << "\n";
    } else {
        out << w.str() << "\n";
    }
    return 0;
}

inline int cmd_palindromes(const Options& o, std::ostream& out) {
    QuadIrr alpha = parse_number(o.alpha, "--alpha");
    PalindromeSystems systems = palindrome_systems(alpha);
    struct Row {
        const char* name;
        Symmetry sym;
        const RotationSystem* sys;
    };
    const Row rows[] = {{"one", Symmetry::AboutOne, &systems.about_one},
                        {"zero", Symmetry::AboutZero, &systems.about_zero},
                        {"gap", Symmetry::AboutGap, &systems.about_gap}};
    json doc{{"command", "palindromes"}, {"alpha", alpha.str()}, {"windows", json::object()}};
    for (const Row& row : rows) {
        long long hi = row.sym == Symmetry::AboutGap ? o.radius + 1 : o.radius;
        FiniteWord w = code_window(*row.sys, -o.radius, hi);
        if (machine(o)) {
            doc["windows"][row.name] = word_json(w);
            doc["windows"][row.name]["start"] = row.sys->start().str();
        } else {
            out << row.name << ": start = " << row.sys->start().str() << "\n"
                << "  " << annotate_centered(w, row.sym) << "\n";
        }
    }
    if (machine(o)) out << doc.dump(2) << "\n";
    return 0;
}

inline int cmd_induce(const Options& o, std::ostream& out) {
    QuadIrr alpha = parse_number(o.alpha, "--alpha");
    InductionResult result = [&] {
        if (o.mode == "palindrome")
            return run_palindromic_induction(alpha, parse_sym(o.sym), o.max_steps);
        if (o.mode == "rauzy") return run_rauzy_induction(alpha, o.max_steps);
        throw usage_error("--mode must be palindrome or rauzy");
    }();
    bool pal = result.mode() == InductionMode::Palindromic;
    auto state_str = [pal](const PalState& s) {
        return pal ? s.str() : s.alpha.str();
    };
    if (machine(o)) {
        json trace = json::array();
        auto add_steps = [&](const std::vector<Step>& steps, const char* phase) {
            for (const Step& s : steps) {
                json row{{"phase", phase},
                         {"before", state_str(s.before)},
                         {"applied", step_label(s.kind)},
                         {"after", state_str(s.after)}};
                trace.push_back(row);
            }
        };
        add_steps(result.preperiod(), "preperiod");
        add_steps(result.period(), "period");
        json doc{{"command", "induce"},
                 {"alpha", alpha.str()},
                 {"mode", pal ? "palindrome" : "rauzy"},
                 {"cycle_start", state_str(result.cycle_start())},
                 {"trace", trace},
                 {"psi", composition_json(result, false)},
                 {"phi", composition_json(result, true)}};
        if (pal) doc["sym"] = o.sym;
        out << doc.dump(2) << "\n";
        return 0;
    }
    auto print_steps = [&](const std::vector<Step>& steps, const char* phase) {
        size_t i = 0;
        for (const Step& s : steps) {
            out << "  [" << phase << " " << i++ << "] " << state_str(s.before) << " --"
                << step_label(s.kind) << "--> " << state_str(s.after) << "\n";
        }
    };
    out << "mode = " << (pal ? "palindrome" : "rauzy") << ", start = "
        << state_str(result.initial()) << "\n";
    out << "preperiod (" << result.preperiod().size() << " steps):\n";
    print_steps(result.preperiod(), "pre");
    out << "period (" << result.period().size() << " steps):\n";
    print_steps(result.period(), "per");
    out << "cycle start = " << state_str(result.cycle_start()) << "\n";
    auto print_comp = [&](const char* name, bool period_part) {
        IncidenceMatrix m = period_part ? result.phi_incidence() : result.psi_incidence();
        out << name << ": incidence = " << m.str();
        try {
            Substitution s = period_part ? result.phi() : result.psi();
            out << ", rules = " << render_rules(s) << "\n";
        } catch (const domain_error&) {
            out << ", images of " << m.image0_length().str() << " and "
                << m.image1_length().str() << " letters (not rendered)\n";
        }
    };
    print_comp("psi", false);
    print_comp("phi", true);
    return 0;
}

inline int cmd_fixpoint(const Options& o, std::ostream& out) {
    Substitution s = parse_rules(o.rules);
    if (o.seeds.size() != 3 || o.seeds[1] != '|' || (o.seeds[0] != '0' && o.seeds[0] != '1') ||
        (o.seeds[2] != '0' && o.seeds[2] != '1'))
        throw usage_error("--seeds must look like 1|0");
    Letter left = static_cast<Letter>(o.seeds[0] - '0');
    Letter right = static_cast<Letter>(o.seeds[2] - '0');
    FiniteWord w = expand_two_sided(s, left, right, o.radius);
    if (machine(o)) {
        json doc{{"command", "fixpoint"},
                 {"rules", render_rules(s)},
                 {"seeds", o.seeds},
                 {"window", word_json(w)}};
        out << doc.dump(2) << "\n";
    } else {
        out << w.str() << "\n";
    }
    return 0;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
    QuadIrr alpha = parse_number(o.alpha, "--alpha");
    Symmetry sym = parse_sym(o.sym);
    RotationSystem sys = palindrome_system(alpha, sym);
    long long hi = sym == Symmetry::AboutGap ? o.radius + 1 : o.radius;
    FiniteWord exact = code_window(sys, -o.radius, hi);
    FiniteWord oracle = numeric_oracle_window(sys, -o.radius, hi);
    bool oracle_agrees = exact == oracle;
    Substitution s = o.rules.empty()
                         ? run_palindromic_induction(alpha, sym, o.max_steps).phi()
                         : parse_rules(o.rules);
    bool fixed = check_fixed_window(s, sys, o.radius);
    if (machine(o)) {
        json doc{{"command", "verify"},
                 {"alpha", alpha.str()},
                 {"sym", o.sym},
                 {"radius", o.radius},
                 {"rules", render_rules(s)},
                 {"oracle_agrees", oracle_agrees},
                 {"fixed_window", fixed}};
        out << doc.dump(2) << "\n";
    } else {
        out << "oracle agreement over [" << -o.radius << ", " << hi
            << "]: " << (oracle_agrees ? "yes" : "no") << "\n";
        out << "rules " << render_rules(s) << " fix the window: " << (fixed ? "yes" : "no")
            << "\n";
    }
    return 0;
}

}  // namespace cli_detail

// Full command-line front end. Returns the process exit code: 0 success,
// 1 domain errors, 2 usage errors, 3 internal assertion failures. All
// diagnostics go to err; successful runs write only to out.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using cli_detail::Options;
    Options o;
    CLI::App app{"exact Sturmian words, palindromes, and induction"};
    app.require_subcommand(1);

    auto add_alpha = [&](CLI::App* cmd) {
        cmd->add_option("--alpha", o.alpha, "slope in the number grammar, e.g. (3-1*sqrt(5))/2")
            ->required();
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", o.format, "output format: text or machine");
    };

    CLI::App* cf = app.add_subcommand("cf", "continued-fraction expansion of the slope");
    add_alpha(cf);
    cf->add_option("--max-steps", o.max_steps, "expansion step budget (0 = default)");
    add_format(cf);

    CLI::App* word = app.add_subcommand("word", "letters of a coded rotation orbit");
    add_alpha(word);
    word->add_option("--start", o.start, "base point in the number grammar")->required();
    word->add_option("--from", o.from, "first position")->required();
    word->add_option("--to", o.to, "last position")->required();
    add_format(word);

    CLI::App* pal = app.add_subcommand("palindromes", "the three palindromic windows");
    add_alpha(pal);
    pal->add_option("--radius", o.radius, "window radius");
    add_format(pal);

    CLI::App* induce = app.add_subcommand("induce", "run induction to its exact cycle");
    add_alpha(induce);
    induce->add_option("--mode", o.mode, "palindrome or rauzy");
    induce->add_option("--sym", o.sym, "symmetry type: one, zero, or gap");
    induce->add_option("--max-steps", o.max_steps, "step budget (0 = default)");
    add_format(induce);

    CLI::App* fix = app.add_subcommand("fixpoint", "two-sided fixed point of a substitution");
    fix->add_option("--rules", o.rules, "rules like 0>00101;1>001")->required();
    fix->add_option("--seeds", o.seeds, "seed pair like 1|0");
    fix->add_option("--radius", o.radius, "window radius");
    add_format(fix);

    CLI::App* verify = app.add_subcommand("verify", "oracle and fixed-window verdicts");
    add_alpha(verify);
    verify->add_option("--sym", o.sym, "symmetry type: one, zero, or gap");
    verify->add_option("--radius", o.radius, "window radius");
    verify->add_option("--rules", o.rules, "substitution to check (default: induced phi)");
    verify->add_option("--max-steps", o.max_steps, "induction budget (0 = default)");
    add_format(verify);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (cf->parsed()) return cli_detail::cmd_cf(o, out);
        if (word->parsed()) return cli_detail::cmd_word(o, out);
        if (pal->parsed()) return cli_detail::cmd_palindromes(o, out);
        if (induce->parsed()) return cli_detail::cmd_induce(o, out);
        if (fix->parsed()) return cli_detail::cmd_fixpoint(o, out);
        if (verify->parsed()) return cli_detail::cmd_verify(o, out);
        err << "usage error: no subcommand selected\n";
        return 2;
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace sturmian
