#pragma once

#include <compare>
#include <string>

#include "pdgaps/word.hpp"

namespace pdgaps {

// Names the envelope word E(m,i), m >= 1, i in {1,2}:
//   E(m,1) = A_m with its last letter removed        (length 2^m - 1)
//   E(m,2) = A_{m-1} A_m with its last letter removed (length 3*2^(m-1) - 1)
// The defaulted ordering is the envelope order: by m, then by i.
class EnvelopeId {
public:
    EnvelopeId(int m, int i);

    int m() const { return m_; }
    int i() const { return i_; }

    friend bool operator==(const EnvelopeId&, const EnvelopeId&) = default;
    friend std::strong_ordering operator<=>(const EnvelopeId&, const EnvelopeId&) = default;

private:
    int m_;
    int i_;
};

// Strict envelope order.
bool env_less(const EnvelopeId& x, const EnvelopeId& y);

Index envelope_length(const EnvelopeId& id);
Word envelope_word(const EnvelopeId& id);

// "E(m,i)"
std::string to_string(const EnvelopeId& id);

// Membership in the language of the sequence: every factor of length n appears in
// the first 16n+16 letters.
bool is_factor_of_sequence(const Word& w);

// The least envelope (in envelope order) containing w. Throws NotAFactor.
EnvelopeId env_of(const Word& w);

// envelope_word(env) == mu1 + factor + mu2, with factor occurring exactly once.
struct EnvelopeExtension {
    EnvelopeId env;
    Word mu1;
    Word mu2;
    Word factor;
};

EnvelopeExtension extension_of(const Word& w);

}  // namespace pdgaps
