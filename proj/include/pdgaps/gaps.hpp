#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "pdgaps/envelope.hpp"
#include "pdgaps/word.hpp"

namespace pdgaps {

enum class GapKind { adjacent, separated, overlapped };

// The word between two consecutive occurrences. An overlapped gap stands for the
// formal inverse of `body`, the region shared by both occurrences.
class Gap {
public:
    static Gap adjacent() { return Gap{GapKind::adjacent, Word{}}; }
    static Gap separated(Word body);
    static Gap overlapped(Word body);

    GapKind kind() const { return kind_; }
    const Word& body() const { return body_; }
    Index signed_length() const;

    friend bool operator==(const Gap&, const Gap&) = default;

private:
    Gap(GapKind kind, Word body) : kind_(kind), body_(std::move(body)) {}

    GapKind kind_;
    Word body_;
};

std::string to_string(GapKind kind);
GapKind parse_gap_kind(std::string_view text);

// "eps", "babab" or "(a)^-1".
std::string to_string(const Gap& gap);
Gap parse_gap(std::string_view text);

enum class GapRole { G1, G2, G4 };
enum class FactorClass { T1, T2, T3, T4 };
enum class ThetaId { Theta1, Theta2 };

std::string to_string(GapRole role);
std::string to_string(FactorClass cls);
std::string to_string(ThetaId id);

// Role assigned to each gap-sequence letter a, b, c.
using RoleMap = std::array<GapRole, 3>;
inline constexpr RoleMap kDefaultRoleMap{GapRole::G1, GapRole::G2, GapRole::G4};

GapRole role_of(char theta_letter, const RoleMap& map = kDefaultRoleMap);

inline constexpr Index kMaxGapIndex = Index{1} << 26;

// Gap between two occurrences of w inside `host` (1-based positions).
Gap gap_between(std::string_view host, const Word& w, const Occurrence& first, const Occurrence& next);
// Same, with the period-doubling sequence as host.
Gap gap_between(const Word& w, const Occurrence& first, const Occurrence& next);

// Closed forms for the gaps of envelope words:
//   E(m,1): G1 = delta_m,              G2 = (E(m-1,1))^-1 (adjacent for m = 1)
//   E(m,2): G1 = (E(m,1))^-1, G2 = delta_m B_{m+1},  G4 = delta_m
Gap envelope_gap(const EnvelopeId& id, GapRole role);

// Prefix of the sequence before the first occurrence: eps for i = 1, A_m for i = 2.
Word envelope_gap0(const EnvelopeId& id);

// First n letters of phi_1(D) (phi_1: a -> a, b -> bb) or phi_2(D) (a -> ab, b -> acac).
std::string theta_prefix(ThetaId id, Index n);
char theta_letter(ThetaId id, Index p);
ThetaId theta_of(const EnvelopeId& id);

FactorClass classify(const Word& w);
FactorClass classify(const EnvelopeExtension& ext);

Gap gap_of(const Word& w, Index p);
Gap gap_of(const EnvelopeExtension& ext, Index p);

Word gap0_of(const Word& w);
Word gap0_of(const EnvelopeExtension& ext);

struct RoledGap {
    GapRole role;
    Gap gap;
    friend bool operator==(const RoledGap&, const RoledGap&) = default;
};

std::vector<RoledGap> gap_sequence(const Word& w, Index n);
std::vector<RoledGap> gap_sequence(const EnvelopeExtension& ext, Index n);

// Kind of the p-th gap predicted from the factor class and the gap-sequence letter
// alone, without locating any occurrence.
GapKind relation_at(const Word& w, Index p);
GapKind relation_at(const EnvelopeExtension& ext, Index p);

}  // namespace pdgaps
