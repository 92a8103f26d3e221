#include <catch_amalgamated.hpp>

#include <sturmian/cli.hpp>

#include <json.hpp>

#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

RunResult run(std::initializer_list<const char*> args) {
    std::vector<std::string> argv(args.begin(), args.end());
    std::ostringstream out, err;
    RunResult r;
    r.code = sturmian::run_cli(argv, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

const char* kGoldenText = "(3-1*sqrt(5))/2";

}  // namespace

TEST_CASE("induce renders the golden cycle") {
    RunResult r = run({"induce", "--alpha", kGoldenText, "--mode", "palindrome", "--sym", "one"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(contains(r.out, "preperiod (0 steps)"));
    CHECK(contains(r.out, "period (6 steps)"));
    CHECK(contains(r.out, "0>00101;1>001"));

    RunResult rz = run({"induce", "--alpha", kGoldenText, "--mode", "rauzy"});
    CHECK(rz.code == 0);
    CHECK(rz.err.empty());
    CHECK(contains(rz.out, "mode = rauzy"));
    CHECK(contains(rz.out, "0>10;1>0"));
}

TEST_CASE("cf prints both parts of the expansion") {
    RunResult r = run({"cf", "--alpha", "(0+1*sqrt(2))/1"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(contains(r.out, "preperiod=[1] period=[2]"));

    RunResult rational = run({"cf", "--alpha", "7/3", "--format", "machine"});
    CHECK(rational.code == 0);
    nlohmann::json doc = nlohmann::json::parse(rational.out);
    CHECK(doc["expansion"]["preperiod"] == nlohmann::json::array({"2", "3"}));
    CHECK(doc["expansion"]["period"].empty());
}

TEST_CASE("word prints exact coding windows") {
    RunResult r = run({"word", "--alpha", kGoldenText, "--start", "(3-1*sqrt(5))/4",
                       "--from", "-5", "--to", "5"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(r.out == "10100100101\n");

    RunResult m = run({"word", "--alpha", kGoldenText, "--start", "(3-1*sqrt(5))/4",
                       "--from", "-5", "--to", "5", "--format", "machine"});
    REQUIRE(m.code == 0);
    nlohmann::json doc = nlohmann::json::parse(m.out);
    CHECK(doc["window"]["origin"] == -5);
    CHECK(doc["window"]["letters"] == "10100100101");
    CHECK(sturmian::QuadIrr::parse(doc["start"].get<std::string>()) ==
          sturmian::QuadIrr(3, -1, 5, 4));
}

TEST_CASE("palindromes labels all three centered windows") {
    RunResult r = run({"palindromes", "--alpha", kGoldenText, "--radius", "5"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(contains(r.out, "one: start = (3-1*sqrt(5))/4"));
    CHECK(contains(r.out, "zero: start ="));
    CHECK(contains(r.out, "gap: start = 1/2"));
    CHECK(contains(r.out, "[1]"));  // letter palindromes mark their center letter
    CHECK(contains(r.out, "]["));   // the gap palindrome marks the gap
}

TEST_CASE("error reporting stays on the error stream") {
    RunResult rational = run({"word", "--alpha", "1/3", "--start", "0", "--from", "0", "--to", "4"});
    CHECK(rational.code == 1);
    CHECK(rational.out.empty());
    CHECK(contains(rational.err, "error"));

    RunResult badflag = run({"cf", "--alpha", kGoldenText, "--bogus"});
    CHECK(badflag.code == 2);
    CHECK(badflag.out.empty());
    CHECK(!badflag.err.empty());

    RunResult missing = run({"word", "--alpha", kGoldenText});
    CHECK(missing.code == 2);

    RunResult badnum = run({"cf", "--alpha", "3+sqrt(5)"});
    CHECK(badnum.code == 2);
    CHECK(contains(badnum.err, "--alpha"));

    RunResult help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.err.empty());
    CHECK(contains(help.out, "induce"));
    CHECK(contains(help.out, "verify"));
}

TEST_CASE("fixpoint validates seeds at two levels") {
    RunResult good = run({"fixpoint", "--rules", "0>00101;1>001", "--seeds", "1|0",
                          "--radius", "5"});
    REQUIRE(good.code == 0);
    CHECK(good.err.empty());
    sturmian::RotationSystem sys =
        sturmian::palindrome_system(sturmian::QuadIrr(3, -1, 5, 2), sturmian::Symmetry::AboutOne);
    CHECK(good.out == sturmian::code_window(sys, -5, 6).str() + "\n");

    RunResult grammar = run({"fixpoint", "--rules", "0>00101;1>001", "--seeds", "x|0"});
    CHECK(grammar.code == 2);

    RunResult semantic = run({"fixpoint", "--rules", "0>00101;1>001", "--seeds", "1|1"});
    CHECK(semantic.code == 1);
    CHECK(contains(semantic.err, "error"));
}

TEST_CASE("machine output from induce drives verify") {
    RunResult ind = run({"induce", "--alpha", kGoldenText, "--mode", "palindrome", "--sym",
                         "one", "--format", "machine"});
    REQUIRE(ind.code == 0);
    CHECK(ind.err.empty());
    nlohmann::json doc = nlohmann::json::parse(ind.out);

    CHECK(sturmian::QuadIrr::parse(doc["alpha"].get<std::string>()) ==
          sturmian::QuadIrr(3, -1, 5, 2));
    REQUIRE(doc["trace"].size() == 6);
    std::vector<std::string> labels;
    for (const auto& row : doc["trace"]) {
        CHECK(row["phase"] == "period");
        labels.push_back(row["applied"].get<std::string>());
    }
    CHECK(labels == std::vector<std::string>{"G", "E", "G~", "E", "G", "E"});

    std::string rules = doc["phi"]["rules"].get<std::string>();
    sturmian::Substitution phi = sturmian::parse_rules(rules);  // re-parses cleanly
    CHECK(phi.max_image_length() == 5);
    CHECK(doc["phi"]["image0_length"] == "5");
    CHECK(doc["psi"]["rules"] == "0>0;1>1");

    RunResult ver = run({"verify", "--alpha", doc["alpha"].get<std::string>().c_str(), "--sym",
                         "one", "--radius", "50", "--rules", rules.c_str(), "--format",
                         "machine"});
    REQUIRE(ver.code == 0);
    CHECK(ver.err.empty());
    nlohmann::json verdict = nlohmann::json::parse(ver.out);
    CHECK(verdict["oracle_agrees"] == true);
    CHECK(verdict["fixed_window"] == true);
}

TEST_CASE("verify induces its own rules when none are given") {
    RunResult r = run({"verify", "--alpha", kGoldenText, "--sym", "one", "--radius", "40"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(contains(r.out, "oracle agreement over [-40, 40]: yes"));
    CHECK(contains(r.out, "rules 0>00101;1>001 fix the window: yes"));
}
