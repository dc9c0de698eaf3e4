#pragma once

#include "pdgaps/word.hpp"

namespace pdgaps {

enum class BlockKind { A, B };

inline constexpr int kMaxBlockExponent = 30;
inline constexpr int kMaxCachedExponent = 24;
inline constexpr Index kMaxPrefixLength = Index{1} << kMaxBlockExponent;

// sigma(a) = ab, sigma(b) = aa, applied letter-wise.
Word substitute(const Word& w);

// A_m = sigma^m(a) or B_m = sigma^m(b); length 2^m.
Word block(BlockKind kind, int m, int max_exponent = kMaxBlockExponent);

// Last letter of A_m: a for even m, b for odd m.
Letter delta(int m);

// First n letters of the fixed point starting with a.
Word prefix(Index n);

// prefix(2^k) = A_k for k <= kMaxCachedExponent, built once and shared. Thread-safe;
// the reference stays valid for the life of the program.
const Word& cached_prefix(int k);

// n-th letter of the fixed point (1-based) without materializing a prefix.
Letter letter_at(Index i);

// D[first, last] read through letter_at; suitable for bodies far out in the sequence.
Word sequence_slice(Index first, Index last);

}  // namespace pdgaps
