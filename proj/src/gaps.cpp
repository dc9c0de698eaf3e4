#include "pdgaps/gaps.hpp"

#include "pdgaps/census.hpp"
#include "pdgaps/doubling.hpp"
#include "pdgaps/error.hpp"

namespace pdgaps {

namespace {

void check_gap_index(Index p) {
    if (p < 1) throw InvalidArgument("gap index must be >= 1");
    if (p > kMaxGapIndex) {
        throw BudgetExceeded("gap index " + std::to_string(p) + " exceeds limit " + std::to_string(kMaxGapIndex));
    }
}

// Builds the gap from two start positions; `read(first, last)` yields host letters.
template <typename Reader>
Gap gap_from_positions(Index length, Index first_start, Index next_start, Reader read) {
    const Index end = first_start + length - 1;
    if (next_start == end + 1) return Gap::adjacent();
    if (next_start > end + 1) return Gap::separated(read(end + 1, next_start - 1));
    return Gap::overlapped(read(next_start, end));
}

void check_pair(const Word& w, const Occurrence& first, const Occurrence& next) {
    if (first.length != w.size() || next.length != w.size()) {
        throw InvalidArgument("occurrence length does not match the word");
    }
    if (first.position < 1 || next.position <= first.position) {
        throw InvalidArgument("occurrences must be given in increasing order");
    }
}

}  // namespace

Gap Gap::separated(Word body) {
    if (body.empty()) throw InvalidArgument("a separated gap has a nonempty body");
    return Gap{GapKind::separated, std::move(body)};
}

Gap Gap::overlapped(Word body) {
    if (body.empty()) throw InvalidArgument("an overlapped gap has a nonempty body");
    return Gap{GapKind::overlapped, std::move(body)};
}

Index Gap::signed_length() const { return kind_ == GapKind::overlapped ? -body_.size() : body_.size(); }

std::string to_string(GapKind kind) {
    switch (kind) {
        case GapKind::adjacent: return "adjacent";
        case GapKind::separated: return "separated";
        case GapKind::overlapped: return "overlapped";
    }
    return "?";
}

GapKind parse_gap_kind(std::string_view text) {
    if (text == "adjacent") return GapKind::adjacent;
    if (text == "separated") return GapKind::separated;
    if (text == "overlapped") return GapKind::overlapped;
    throw InvalidArgument("unknown gap kind '" + std::string(text) + "'");
}

std::string to_string(const Gap& gap) {
    switch (gap.kind()) {
        case GapKind::adjacent: return "eps";
        case GapKind::separated: return std::string(gap.body().str());
        case GapKind::overlapped: return "(" + std::string(gap.body().str()) + ")^-1";
    }
    return "?";
}

Gap parse_gap(std::string_view text) {
    if (text == "eps") return Gap::adjacent();
    constexpr std::string_view suffix = ")^-1";
    if (text.size() > suffix.size() + 1 && text.front() == '(' && text.ends_with(suffix)) {
        return Gap::overlapped(Word{text.substr(1, text.size() - 1 - suffix.size())});
    }
    return Gap::separated(Word{text});
}

std::string to_string(GapRole role) {
    switch (role) {
        case GapRole::G1: return "G1";
        case GapRole::G2: return "G2";
        case GapRole::G4: return "G4";
    }
    return "?";
}

std::string to_string(FactorClass cls) { return "T" + std::to_string(static_cast<int>(cls) + 1); }

std::string to_string(ThetaId id) { return id == ThetaId::Theta1 ? "theta1" : "theta2"; }

GapRole role_of(char theta_letter, const RoleMap& map) {
    switch (theta_letter) {
        case 'a': return map[0];
        case 'b': return map[1];
        case 'c': return map[2];
        default: throw InvalidArgument(std::string("not a gap-sequence letter: ") + theta_letter);
    }
}

Gap gap_between(std::string_view host, const Word& w, const Occurrence& first, const Occurrence& next) {
    check_pair(w, first, next);
    if (next.end() > static_cast<Index>(host.size())) throw InvalidArgument("occurrence lies outside the host");
    for (const auto& occ : {first, next}) {
        if (host.substr(static_cast<std::size_t>(occ.position - 1), static_cast<std::size_t>(w.size())) != w.str()) {
            throw InvalidArgument("no occurrence of " + to_string(w) + " at position " + std::to_string(occ.position));
        }
    }
    return gap_from_positions(w.size(), first.position, next.position, [&](Index a, Index b) {
        return Word{host.substr(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - a + 1))};
    });
}

Gap gap_between(const Word& w, const Occurrence& first, const Occurrence& next) {
    check_pair(w, first, next);
    for (const auto& occ : {first, next}) {
        if (sequence_slice(occ.position, occ.end()) != w) {
            throw InvalidArgument("no occurrence of " + to_string(w) + " at position " + std::to_string(occ.position));
        }
    }
    return gap_from_positions(w.size(), first.position, next.position, sequence_slice);
}

Gap envelope_gap(const EnvelopeId& id, GapRole role) {
    const int m = id.m();
    if (id.i() == 1) {
        switch (role) {
            case GapRole::G1: return Gap::separated(Word{delta(m)});
            case GapRole::G2: {
                // delta_{m-1} A_{m-1}^-1 reduces to the inverse of A_{m-1} minus its last letter.
                Word body = block(BlockKind::A, m - 1).without_last();
                return body.empty() ? Gap::adjacent() : Gap::overlapped(std::move(body));
            }
            case GapRole::G4: break;
        }
        throw InvalidArgument("envelope " + to_string(id) + " has no gap role G4");
    }
    switch (role) {
        case GapRole::G1: return Gap::overlapped(block(BlockKind::A, m).without_last());
        case GapRole::G2: return Gap::separated(Word{delta(m)} + block(BlockKind::B, m + 1));
        case GapRole::G4: return Gap::separated(Word{delta(m)});
    }
    throw InvalidArgument("unknown gap role");
}

Word envelope_gap0(const EnvelopeId& id) {
    return id.i() == 1 ? Word{} : block(BlockKind::A, id.m());
}

std::string theta_prefix(ThetaId id, Index n) {
    if (n < 0) throw InvalidArgument("gap-sequence prefix length must be nonnegative");
    if (n > kMaxPrefixLength) throw BudgetExceeded("gap-sequence prefix length exceeds limit");
    std::string out;
    out.reserve(static_cast<std::size_t>(n + 4));
    for (Index i = 1; static_cast<Index>(out.size()) < n; ++i) {
        const bool is_a = letter_at(i) == Letter::a;
        if (id == ThetaId::Theta1) {
            out += is_a ? "a" : "bb";
        } else {
            out += is_a ? "ab" : "acac";
        }
    }
    out.resize(static_cast<std::size_t>(n));
    return out;
}

char theta_letter(ThetaId id, Index p) {
    if (p < 1) throw InvalidArgument("gap-sequence positions start at 1");
    return theta_prefix(id, p).back();
}

ThetaId theta_of(const EnvelopeId& id) { return id.i() == 1 ? ThetaId::Theta1 : ThetaId::Theta2; }

FactorClass classify(const EnvelopeExtension& ext) {
    if (ext.env.i() == 2) return FactorClass::T4;
    const Index half = Index{1} << (ext.env.m() - 1);
    if (ext.factor.size() < half) return FactorClass::T1;
    if (ext.factor.size() == half) return FactorClass::T2;
    return FactorClass::T3;
}

FactorClass classify(const Word& w) { return classify(extension_of(w)); }

namespace {

// Gap read from the two starts; its signed length must agree with
// |mu2| + |G_role(Env)| + |mu1| from the closed form.
Gap checked_gap(const EnvelopeExtension& ext, Index p, Index here, Index next, GapRole role) {
    Gap gap = gap_from_positions(ext.factor.size(), here, next, sequence_slice);
    const Index expected = ext.mu1.size() + ext.mu2.size() + envelope_gap(ext.env, role).signed_length();
    if (gap.signed_length() != expected) {
        throw InternalError("gap " + std::to_string(p) + " of " + to_string(ext.factor) + " has signed length " +
                            std::to_string(gap.signed_length()) + ", closed form gives " + std::to_string(expected));
    }
    return gap;
}

}  // namespace

Gap gap_of(const EnvelopeExtension& ext, Index p) {
    check_gap_index(p);
    const GapRole role = role_of(theta_letter(theta_of(ext.env), p));
    return checked_gap(ext, p, position_of(ext, p), position_of(ext, p + 1), role);
}

Gap gap_of(const Word& w, Index p) { return gap_of(extension_of(w), p); }

Word gap0_of(const EnvelopeExtension& ext) { return envelope_gap0(ext.env) + ext.mu1; }

Word gap0_of(const Word& w) { return gap0_of(extension_of(w)); }

std::vector<RoledGap> gap_sequence(const EnvelopeExtension& ext, Index n) {
    if (n < 0) throw InvalidArgument("gap count must be nonnegative");
    if (n == 0) return {};
    check_gap_index(n);
    const std::string theta = theta_prefix(theta_of(ext.env), n);
    const std::vector<Index> starts = positions_of(ext, n + 1);
    std::vector<RoledGap> out;
    out.reserve(static_cast<std::size_t>(n));
    for (Index p = 1; p <= n; ++p) {
        const auto k = static_cast<std::size_t>(p - 1);
        const GapRole role = role_of(theta[k]);
        out.push_back({role, checked_gap(ext, p, starts[k], starts[k + 1], role)});
    }
    return out;
}

std::vector<RoledGap> gap_sequence(const Word& w, Index n) { return gap_sequence(extension_of(w), n); }

GapKind relation_at(const EnvelopeExtension& ext, Index p) {
    check_gap_index(p);
    const char letter = theta_letter(theta_of(ext.env), p);
    switch (classify(ext)) {
        case FactorClass::T1: return GapKind::separated;
        case FactorClass::T2: return letter == 'b' ? GapKind::adjacent : GapKind::separated;
        case FactorClass::T3: return letter == 'b' ? GapKind::overlapped : GapKind::separated;
        case FactorClass::T4: return letter == 'a' ? GapKind::overlapped : GapKind::separated;
    }
    throw InternalError("unknown factor class");
}

GapKind relation_at(const Word& w, Index p) { return relation_at(extension_of(w), p); }

}  // namespace pdgaps
