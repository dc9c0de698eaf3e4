#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pdgaps/gaps.hpp"
#include "pdgaps/word.hpp"

namespace pdgaps {

enum class Claim { gap, position, theta_pattern, census, uniqueness, membership, structure };

// Independently runnable groups of checks.
enum class Suite {
    golden,       // fixed values quoted from the literature
    doubling,     // block identities, palindromic blocks, block positions
    envelope,     // envelope recursions, palindromes, nested positions, minimality
    gap_pattern,  // oracle gaps follow the gap sequence under the role map
    gaps,         // closed-form gaps, relation predicates, sign and run laws
    positions,    // closed-form occurrence starts and G_0
    uniqueness,   // single occurrence in the envelope, aligned occurrence indices
    powers,       // no fourth powers
    census,       // squares, cubes and palindromes against brute force
    membership,   // factor-set stabilization and the membership window
};

std::string to_string(Claim claim);
std::string to_string(Suite suite);
Suite parse_suite(std::string_view name);
std::vector<Suite> all_suites();

struct SweepConfig {
    Index max_factor_len = 64;
    Index max_gap_index = 50;
    int prefix_exponent = 16;  // oracle host is prefix(2^prefix_exponent)
    bool seed_examples = true;  // include the golden suite when `suites` is empty

    int max_identity_exponent = 14;
    int census_prefix_exponent = 14;
    Index max_census_N = 4096;
    Index max_palindrome_len = 256;

    RoleMap role_map = kDefaultRoleMap;
    std::vector<Suite> suites;  // empty: every suite
    unsigned threads = 1;       // 0: hardware concurrency
    double time_budget_seconds = 0;  // 0: unlimited
};

struct Divergence {
    Claim claim;
    std::string witness;
    std::string expected;
    std::string actual;

    friend bool operator==(const Divergence&, const Divergence&) = default;
    friend auto operator<=>(const Divergence&, const Divergence&) = default;
};

struct SweepReport {
    std::vector<Divergence> divergences;  // sorted
    bool complete = true;
    Index factors_checked = 0;
    Index pairs_checked = 0;
    Index pairs_skipped = 0;
    Index checks_run = 0;  // individual comparisons performed  // successor occurrence not inside the host
    std::vector<std::string> notes;

    bool passed() const { return complete && divergences.empty(); }
};

// Occurrences of w in prefix(2^cfg.prefix_exponent), by direct scan.
std::vector<Occurrence> oracle_occurrences(const Word& w, const SweepConfig& cfg = {});

// Smallest k with 2^k >= length such that the length-`length` factors of
// prefix(2^k) and prefix(2^(k+1)) coincide.
int stabilize(Index length);

SweepReport sweep(const SweepConfig& cfg = {});

}  // namespace pdgaps
