#pragma once

#include <vector>

#include "pdgaps/envelope.hpp"
#include "pdgaps/gaps.hpp"
#include "pdgaps/word.hpp"

namespace pdgaps {

// Number of `letter` in the first p letters of the chosen gap sequence.
// Throws InvalidArgument when the letter is outside that sequence's alphabet.
Index letter_count(ThetaId theta, char letter, Index p);

// Start of the p-th occurrence of E(m,i) in the sequence (1-based), from the
// gap-sequence letter counts.
Index position_envelope(const EnvelopeId& id, Index p);

// Start of the p-th occurrence of an arbitrary factor: the envelope's p-th
// occurrence shifted by |mu1|.
Index position_of(const Word& w, Index p);
Index position_of(const EnvelopeExtension& ext, Index p);

// Starts of occurrences 1..count, computed in a single pass.
std::vector<Index> positions_of(const EnvelopeExtension& ext, Index count);

inline constexpr Index kMaxCensusLength = Index{1} << 20;

// Distinct palindromic factors of length n, found as centred windows of envelope
// words whose own envelope is that envelope word.
std::vector<Word> palindromes_of_length(Index n);
Index palindrome_census(Index n);

// Distinct squares (resp. cubes) whose first letter lies in D[1, N].
Index square_census(Index N);
Index cube_census(Index N);

// Squares (resp. cubes) whose first occurrence starts exactly at pos; at most one.
std::vector<Word> squares_beginning_at(Index pos);
std::vector<Word> cubes_beginning_at(Index pos);

struct CensusPoint {
    Index n_or_N;
    Index value;
    friend bool operator==(const CensusPoint&, const CensusPoint&) = default;
};

std::vector<CensusPoint> palindrome_table(Index first, Index last);
std::vector<CensusPoint> square_table(Index first, Index last);

// Maximal runs of odd lengths sharing the same palindrome count, for lengths >= 5.
struct PalindromeRun {
    Index first_length;
    Index last_length;
    Index count;
};

std::vector<PalindromeRun> palindrome_runs(Index max_length);

}  // namespace pdgaps
