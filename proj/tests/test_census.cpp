#include <map>

#include "doctest.h"
#include "oracle.hpp"
#include "pdgaps/census.hpp"
#include "pdgaps/error.hpp"
#include "pdgaps/render.hpp"

using namespace pdgaps;

namespace {

// Distinct squares (or cubes) of the host, keyed by their first start, for starts <= max_start.
std::map<std::int64_t, std::vector<std::string>> brute_powers(const std::string& host, std::int64_t max_start, int k) {
    std::map<std::int64_t, std::vector<std::string>> out;
    std::set<std::string> seen;
    for (std::int64_t i = 0; i < max_start; ++i) {
        for (std::size_t r = 1; static_cast<std::size_t>(i) + k * r <= host.size(); ++r) {
            const std::string root = host.substr(static_cast<std::size_t>(i), r);
            bool ok = true;
            for (int rep = 1; rep < k && ok; ++rep) ok = host.compare(static_cast<std::size_t>(i) + rep * r, r, root) == 0;
            if (!ok) continue;
            std::string power;
            for (int rep = 0; rep < k; ++rep) power += root;
            if (seen.insert(power).second) out[i + 1].push_back(power);
        }
    }
    return out;
}

}  // namespace

TEST_SUITE("census") {
    TEST_CASE("letter counts") {
        CHECK(letter_count(ThetaId::Theta1, 'a', 5) == 3);
        CHECK(letter_count(ThetaId::Theta1, 'b', 9) == 4);
        CHECK(letter_count(ThetaId::Theta2, 'c', 0) == 0);
        CHECK_THROWS_AS(letter_count(ThetaId::Theta1, 'c', 4), InvalidArgument);
        Index previous = 0;
        for (Index p = 0; p <= 200; ++p) {
            const Index now = letter_count(ThetaId::Theta2, 'a', p);
            CHECK(now >= previous);
            previous = now;
            CHECK(letter_count(ThetaId::Theta2, 'a', p) + letter_count(ThetaId::Theta2, 'b', p) +
                      letter_count(ThetaId::Theta2, 'c', p) == p);
        }
    }

    TEST_CASE("envelope positions") {
        CHECK(position_envelope({2, 1}, 1) == 1);
        CHECK(position_envelope({2, 1}, 2) == 5);
        CHECK(position_envelope({1, 2}, 1) == 3);
        CHECK(position_envelope({1, 2}, 3) == 11);
        CHECK_THROWS_AS(position_envelope({1, 1}, 0), InvalidArgument);
        const std::string& host = oracle::host16();
        for (int m = 1; m <= 8; ++m) {
            for (int i : {1, 2}) {
                const auto s = oracle::starts(std::string(envelope_word({m, i}).str()), host);
                for (std::size_t p = 1; p <= 30 && p <= s.size(); ++p) {
                    CHECK(position_envelope({m, i}, static_cast<Index>(p)) == s[p - 1]);
                }
            }
        }
    }

    TEST_CASE("factor positions") {
        CHECK(position_of(Word{"aab"}, 1) == 4);
        CHECK(position_of(Word{"a"}, 1) == 1);
        CHECK(position_of(Word{"bab"}, 3) == 22);
        CHECK_THROWS_AS(position_of(Word{"bb"}, 1), NotAFactor);
        const auto ext = extension_of(Word{"bab"});
        CHECK(positions_of(ext, 5) == std::vector<Index>{6, 8, 22, 24, 30});
    }

    TEST_CASE("positions, gaps and G0 are mutually consistent") {
        const std::string host = oracle::doubling_prefix(2048);
        for (std::size_t len = 1; len <= 16; ++len) {
            for (const auto& f : oracle::factors(host, len)) {
                const auto ext = extension_of(Word{f});
                CHECK(gap0_of(ext).size() + 1 == position_of(ext, 1));
                for (Index p = 1; p <= 10; ++p) {
                    CHECK(position_of(ext, p + 1) - position_of(ext, p) ==
                          ext.factor.size() + gap_of(ext, p).signed_length());
                }
            }
        }
    }

    TEST_CASE("palindrome census") {
        CHECK(palindrome_census(1) == 2);
        CHECK(palindrome_census(2) == 1);
        CHECK(palindrome_census(3) == 3);
        CHECK(palindrome_census(4) == 0);
        // aabaa, ababa, baaab and babab: babab has envelope E(4,1)
        CHECK(palindromes_of_length(5) ==
              std::vector<Word>{Word{"aabaa"}, Word{"ababa"}, Word{"baaab"}, Word{"babab"}});
        CHECK(palindrome_census(5) == 4);
        CHECK_THROWS_AS(palindrome_census(0), InvalidArgument);
        CHECK_THROWS_AS(palindrome_census(kMaxCensusLength + 1), BudgetExceeded);
    }

    TEST_CASE("palindromes agree with brute force") {
        const std::string host = oracle::doubling_prefix(1 << 12);
        for (std::size_t n = 1; n <= 64; ++n) {
            std::vector<Word> brute;
            for (const auto& f : oracle::factors(host, n)) {
                if (oracle::is_palindrome(f)) brute.emplace_back(f);
            }
            CHECK_MESSAGE(palindromes_of_length(static_cast<Index>(n)) == brute, "n=" << n);
            if (n % 2 == 0 && n != 2) CHECK(brute.empty());
        }
        for (const auto& w : palindromes_of_length(33)) {
            const auto ext = extension_of(w);
            CHECK(ext.mu1.size() == ext.mu2.size());
        }
    }

    TEST_CASE("square census") {
        CHECK(square_census(1) == 0);
        CHECK(square_census(2) == 0);
        CHECK(square_census(3) == 1);
        CHECK(square_census(6) == 3);
        CHECK(square_census(12) == 7);
        CHECK(cube_census(12) == 7);
        CHECK(squares_beginning_at(3) == std::vector<Word>{Word{"aa"}});
        CHECK(squares_beginning_at(5) == std::vector<Word>{Word{"abab"}});
        CHECK(squares_beginning_at(7).empty());
        CHECK(cubes_beginning_at(3) == std::vector<Word>{Word{"aaa"}});
    }

    TEST_CASE("squares and cubes agree with brute force") {
        const std::string host = oracle::doubling_prefix(1 << 11);
        for (int k : {2, 3}) {
            const auto brute = brute_powers(host, 256, k);
            Index running = 0;
            for (Index N = 1; N <= 256; ++N) {
                std::vector<Word> expected;
                if (auto it = brute.find(N); it != brute.end()) {
                    for (const auto& s : it->second) expected.emplace_back(s);
                }
                running += static_cast<Index>(expected.size());
                CHECK((k == 2 ? square_census(N) : cube_census(N)) == running);
                CHECK((k == 2 ? squares_beginning_at(N) : cubes_beginning_at(N)) == expected);
            }
        }
    }

    TEST_CASE("census tables") {
        const auto table = square_table(1, 6);
        CHECK(table.back() == CensusPoint{6, 3});
        std::ostringstream csv;
        write_csv(csv, table);
        CHECK(csv.str() == "n_or_N,value\n1,0\n2,0\n3,1\n4,1\n5,2\n6,3\n");
        CHECK(to_json(std::span<const CensusPoint>(table))[2]["value"] == 1);
        const auto runs = palindrome_runs(21);
        REQUIRE_FALSE(runs.empty());
        CHECK(runs.front().first_length == 5);
    }
}
