#include "doctest.h"
#include "oracle.hpp"
#include "pdgaps/doubling.hpp"
#include "pdgaps/envelope.hpp"
#include "pdgaps/error.hpp"

using namespace pdgaps;

TEST_SUITE("envelope") {
    TEST_CASE("envelope words") {
        CHECK(envelope_word({1, 1}) == Word{"a"});
        CHECK(envelope_word({2, 1}) == Word{"aba"});
        CHECK(envelope_word({3, 1}) == Word{"abaaaba"});
        CHECK(envelope_word({1, 2}) == Word{"aa"});
        CHECK(envelope_word({2, 2}) == Word{"ababa"});
        CHECK(envelope_word({3, 2}) == Word{"abaaabaaaba"});
        CHECK(envelope_word({4, 1}) == Word{"abaaabababaaaba"});
        for (int m = 1; m <= 12; ++m) {
            CHECK(envelope_word({m, 1}).size() == (Index{1} << m) - 1);
            CHECK(envelope_word({m, 2}).size() == 3 * (Index{1} << (m - 1)) - 1);
        }
    }

    TEST_CASE("ids are validated and rendered") {
        CHECK_THROWS_AS(EnvelopeId(0, 1), InvalidArgument);
        CHECK_THROWS_AS(EnvelopeId(1, 3), InvalidArgument);
        CHECK(to_string(EnvelopeId{3, 1}) == "E(3,1)");
        CHECK_THROWS_AS(envelope_word({31, 1}), BudgetExceeded);
    }

    TEST_CASE("envelope order") {
        CHECK(env_less({1, 2}, {2, 1}));
        CHECK(env_less({1, 1}, {1, 2}));
        CHECK_FALSE(env_less({2, 1}, {1, 2}));
        CHECK_FALSE(env_less({2, 2}, {2, 2}));
    }

    TEST_CASE("membership") {
        CHECK(is_factor_of_sequence(Word{"aaa"}));
        CHECK_FALSE(is_factor_of_sequence(Word{"bb"}));
        CHECK(is_factor_of_sequence(Word{"a"}));
        CHECK_FALSE(is_factor_of_sequence(Word{"aaaa"}));
        CHECK_FALSE(is_factor_of_sequence(Word{"babab" "babab"}));
    }

    TEST_CASE("envelope of a factor") {
        CHECK(env_of(Word{"bab"}) == EnvelopeId{2, 2});
        CHECK(env_of(Word{"aaa"}) == EnvelopeId{3, 1});
        CHECK(env_of(Word{"aab"}) == EnvelopeId{3, 1});
        CHECK(env_of(Word{"a"}) == EnvelopeId{1, 1});
        CHECK(env_of(Word{"b"}) == EnvelopeId{2, 1});
        CHECK_THROWS_AS(env_of(Word{"bb"}), NotAFactor);
        CHECK_THROWS_AS(env_of(Word{}), InvalidArgument);
    }

    TEST_CASE("envelope extensions") {
        auto ext = extension_of(Word{"bab"});
        CHECK(ext.mu1 == Word{"a"});
        CHECK(ext.mu2 == Word{"a"});
        ext = extension_of(Word{"aaa"});
        CHECK(ext.mu1 == Word{"ab"});
        CHECK(ext.mu2 == Word{"ba"});
        ext = extension_of(Word{"a"});
        CHECK(ext.mu1.empty());
        CHECK(ext.mu2.empty());
        ext = extension_of(Word{"aab"});
        CHECK(ext.mu1 == Word{"aba"});
        CHECK(ext.mu2 == Word{"a"});
    }

    TEST_CASE("every short factor sits uniquely in its envelope") {
        const std::string host = oracle::doubling_prefix(1 << 12);
        for (std::size_t len = 1; len <= 24; ++len) {
            for (const auto& f : oracle::factors(host, len)) {
                const auto ext = extension_of(Word{f});
                const std::string env = std::string(envelope_word(ext.env).str());
                CHECK(oracle::starts(f, env).size() == 1);
                CHECK(ext.mu1 + ext.factor + ext.mu2 == envelope_word(ext.env));
                // minimality: no earlier envelope contains f
                for (int m = 1; m <= ext.env.m(); ++m) {
                    for (int i : {1, 2}) {
                        const EnvelopeId id{m, i};
                        if (env_less(id, ext.env)) CHECK(oracle::starts(f, std::string(envelope_word(id).str())).empty());
                    }
                }
            }
        }
    }

    TEST_CASE("envelope words are their own envelopes") {
        for (int m = 1; m <= 12; ++m) {
            for (int i : {1, 2}) {
                const EnvelopeId id{m, i};
                CHECK(env_of(envelope_word(id)) == id);
            }
        }
    }

    TEST_CASE("envelope recursions") {
        for (int m = 1; m <= 12; ++m) {
            const Word d{delta(m)};
            const Word e1 = envelope_word({m, 1});
            for (int i : {1, 2}) {
                CHECK(envelope_word({m + 1, i}) == substitute(envelope_word({m, i})) + Word{"a"});
                CHECK(is_palindrome(envelope_word({m, i})));
            }
            CHECK(envelope_word({m + 1, 1}) == e1 + d + e1);
            CHECK(envelope_word({m + 1, 2}) == e1 + d + e1 + d + e1);
        }
    }

    TEST_CASE("nested envelope positions") {
        for (int m = 1; m <= 10; ++m) {
            const std::int64_t h = std::int64_t{1} << (m - 1);
            auto E = [](int mm, int i) { return std::string(envelope_word({mm, i}).str()); };
            CHECK(oracle::starts(E(m, 1), E(m + 1, 1)) == std::vector<std::int64_t>{1, 2 * h + 1});
            CHECK(oracle::starts(E(m, 1), E(m, 2)) == std::vector<std::int64_t>{1, h + 1});
            CHECK(oracle::starts(E(m, 2), E(m + 2, 1)) == std::vector<std::int64_t>{2 * h + 1, 3 * h + 1});
            CHECK(oracle::starts(E(m, 2), E(m + 2, 2)) ==
                  std::vector<std::int64_t>{2 * h + 1, 3 * h + 1, 6 * h + 1, 7 * h + 1});
            CHECK(oracle::starts(E(m, 2), E(m + 1, 1)).empty());
            CHECK(oracle::starts(E(m, 2), E(m + 1, 2)).empty());
        }
    }
}
