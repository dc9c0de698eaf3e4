#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "pdgaps/error.hpp"
#include "pdgaps/word.hpp"

using namespace pdgaps;

namespace {

std::vector<Index> starts_of(const std::vector<Occurrence>& occ) {
    std::vector<Index> out;
    for (const auto& o : occ) out.push_back(o.position);
    return out;
}

std::string random_word(std::mt19937& rng, std::size_t len) {
    std::string s;
    for (std::size_t k = 0; k < len; ++k) s += (rng() & 1) ? 'a' : 'b';
    return s;
}

}  // namespace

TEST_SUITE("words") {
    TEST_CASE("palindromes") {
        CHECK(is_palindrome(Word{"aba"}));
        CHECK(is_palindrome(Word{}));
        CHECK_FALSE(is_palindrome(Word{"ab"}));
        CHECK(is_palindrome(Word{"abba"}));
    }

    TEST_CASE("occurrences include overlaps and are 1-based") {
        CHECK(starts_of(occurrences(Word{"aa"}, Word{"abaaabababaaabaa"})) == std::vector<Index>{3, 4, 11, 12, 15});
        CHECK(starts_of(occurrences(Word{"aba"}, Word{"aba"})) == std::vector<Index>{1});
        CHECK(occurrences(Word{"bb"}, Word{"abaaabab"}).empty());
        const auto occ = occurrences(Word{"aa"}, Word{"aaa"});
        REQUIRE(occ.size() == 2);
        CHECK(occ[1].position == 2);
        CHECK(occ[1].end() == 3);
    }

    TEST_CASE("empty pattern is rejected") {
        CHECK_THROWS_AS(occurrences(Word{}, Word{"ab"}), InvalidArgument);
    }

    TEST_CASE("factor test") {
        CHECK(is_factor(Word{"bab"}, Word{"ababa"}));
        CHECK(is_factor(Word{}, Word{"a"}));
        CHECK_FALSE(is_factor(Word{"aaa"}, Word{"ababa"}));
    }

    TEST_CASE("construction rejects foreign letters") {
        CHECK_THROWS_AS(Word{"abc"}, InvalidArgument);
        CHECK_THROWS_AS(Word{"A"}, InvalidArgument);
        CHECK(Word::parse("eps").empty());
        CHECK(to_string(Word{}) == "eps");
        CHECK(to_string(Word{"ab"}) == "ab");
    }

    TEST_CASE("slicing follows the D[i,j] convention") {
        const Word w{"abaa"};
        CHECK(w.slice(2, 3) == Word{"ba"});
        CHECK(w.slice(3, 2).empty());
        CHECK(w.slice(5, 4).empty());
        CHECK(w.at(1) == Letter::a);
        CHECK(w.last() == Letter::a);
        CHECK_THROWS_AS(w.slice(0, 2), InvalidArgument);
        CHECK_THROWS_AS(w.at(5), InvalidArgument);
    }

    TEST_CASE("length and reversal laws") {
        std::mt19937 rng(7);
        for (int trial = 0; trial < 200; ++trial) {
            const Word u{random_word(rng, rng() % 12)};
            const Word v{random_word(rng, rng() % 12)};
            CHECK((u + v).size() == u.size() + v.size());
            CHECK(u.reversed().reversed() == u);
            CHECK((u + v).reversed() == v.reversed() + u.reversed());
        }
    }

    TEST_CASE("occurrences agree with a quadratic scan") {
        std::mt19937 rng(11);
        const std::string host = oracle::doubling_prefix(700);
        for (int trial = 0; trial < 300; ++trial) {
            std::string pattern;
            if (trial % 2 == 0) {
                const std::size_t start = rng() % 600;
                pattern = host.substr(start, 1 + rng() % 20);
            } else {
                pattern = random_word(rng, 1 + rng() % 6);
            }
            CHECK(starts_of(occurrences(Word{pattern}, Word{host})) == oracle::starts(pattern, host));
        }
    }

    TEST_CASE("mirrored occurrences in palindromic hosts") {
        // i occurs => |h| - i - |p| + 2 occurs for the reversed pattern.
        const Word host{oracle::doubling_prefix(1023)};  // A_10 minus its last letter
        REQUIRE(is_palindrome(host));
        std::mt19937 rng(3);
        for (int trial = 0; trial < 100; ++trial) {
            const Index len = 1 + static_cast<Index>(rng() % 15);
            const Index start = 1 + static_cast<Index>(rng() % static_cast<unsigned>(host.size() - len));
            const Word p = host.slice(start, start + len - 1);
            const auto mirrored = starts_of(occurrences(p.reversed(), host));
            for (const auto& o : occurrences(p, host)) {
                const Index image = host.size() - o.position - p.size() + 2;
                CHECK(std::find(mirrored.begin(), mirrored.end(), image) != mirrored.end());
            }
        }
    }
}
