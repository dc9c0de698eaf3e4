#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "pdgaps/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = pdgaps::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("prefix and theta") {
        CHECK(run({"prefix", "8"}).out == "abaaabab\n");
        CHECK(run({"theta", "2", "8"}).out == "abacacab\n");
        CHECK(run({"theta", "3", "8"}).code == pdgaps::cli::kUsage);
    }

    TEST_CASE("env") {
        const auto r = run({"env", "bab"});
        CHECK(r.code == 0);
        CHECK(r.out == "E(2,2) = ababa, mu1 = a, mu2 = a\n");
        const auto j = nlohmann::json::parse(run({"--json", "env", "aaa"}).out);
        CHECK(j["envelope"] == "abaaaba");
        CHECK(j["mu1"] == "ab");
        CHECK(j["m"] == 3);
    }

    TEST_CASE("gaps and positions") {
        CHECK(run({"gaps", "aa", "--count", "2"}).out == "p=1 (a)^-1 | p=2 babab\n");
        CHECK(run({"position", "aab", "1"}).out == "4\n");
        const auto j = nlohmann::json::parse(run({"--json", "gaps", "aab", "--count", "2"}).out);
        CHECK(j["gaps"][1]["body"] == "a");
        CHECK(j["gaps"][1]["role"] == "G2");
    }

    TEST_CASE("censuses") {
        CHECK(run({"palindromes", "3"}).out == "3\n");
        CHECK(run({"squares", "12"}).out == "7\n");
        CHECK(run({"squares", "1..3"}).out == "n_or_N,value\n1,0\n2,0\n3,1\n");
    }

    TEST_CASE("errors map to exit codes") {
        CHECK(run({"env", "bb"}).code == pdgaps::cli::kNotAFactor);
        CHECK(run({"env", "abc"}).code == pdgaps::cli::kUsage);
        CHECK(run({"prefix", "99999999999"}).code == pdgaps::cli::kBudget);
        CHECK(run({"nonsense"}).code == pdgaps::cli::kUsage);
        CHECK_FALSE(run({"env", "bb"}).err.empty());
    }

    TEST_CASE("verify") {
        auto r = run({"verify", "--max-len", "6", "--max-p", "6", "--prefix-pow", "10", "--suite", "gaps"});
        CHECK(r.code == 0);
        r = run({"verify", "--max-len", "6", "--max-p", "6", "--prefix-pow", "10", "--suite", "gap_pattern",
                 "--role-map", "G2,G1,G4"});
        CHECK(r.code == pdgaps::cli::kDivergences);
    }
}
