#include "pdgaps/envelope.hpp"

#include "pdgaps/doubling.hpp"
#include "pdgaps/error.hpp"

namespace pdgaps {

namespace {

Index membership_window(Index n) { return 16 * n + 16; }

int ceil_log2(Index n) {
    int k = 0;
    while ((Index{1} << k) < n) ++k;
    return k;
}

}  // namespace

EnvelopeId::EnvelopeId(int m, int i) : m_(m), i_(i) {
    if (m < 1) throw InvalidArgument("envelope index m must be >= 1, got " + std::to_string(m));
    if (i != 1 && i != 2) throw InvalidArgument("envelope index i must be 1 or 2, got " + std::to_string(i));
}

bool env_less(const EnvelopeId& x, const EnvelopeId& y) { return x < y; }

Index envelope_length(const EnvelopeId& id) {
    const Index half = Index{1} << (id.m() - 1);
    return id.i() == 1 ? 2 * half - 1 : 3 * half - 1;
}

Word envelope_word(const EnvelopeId& id) {
    if (id.m() > kMaxBlockExponent) {
        throw BudgetExceeded("envelope exponent " + std::to_string(id.m()) + " exceeds limit " +
                             std::to_string(kMaxBlockExponent));
    }
    if (id.i() == 1) return block(BlockKind::A, id.m()).without_last();
    return (block(BlockKind::A, id.m() - 1) + block(BlockKind::A, id.m())).without_last();
}

std::string to_string(const EnvelopeId& id) {
    return "E(" + std::to_string(id.m()) + "," + std::to_string(id.i()) + ")";
}

bool is_factor_of_sequence(const Word& w) {
    if (w.empty()) return true;
    const Index window = membership_window(w.size());
    const int k = ceil_log2(window);
    if (k > kMaxCachedExponent) {
        throw BudgetExceeded("membership test for a word of length " + std::to_string(w.size()) +
                             " needs a prefix beyond the cache limit");
    }
    return cached_prefix(k).str().substr(0, static_cast<std::size_t>(window)).find(w.str()) !=
           std::string_view::npos;
}

EnvelopeId env_of(const Word& w) {
    if (w.empty()) throw InvalidArgument("the empty word has no envelope");
    if (!is_factor_of_sequence(w)) throw NotAFactor(to_string(w));
    // prefix(2^k) with 2^k > window is A_k, and E(k,1) = A_k minus one letter covers
    // the whole membership window, so the scan always terminates by m = bound.
    const int bound = ceil_log2(membership_window(w.size()) + 1);
    for (int m = 1; m <= bound; ++m) {
        for (int i : {1, 2}) {
            const EnvelopeId id{m, i};
            if (envelope_length(id) < w.size()) continue;
            if (is_factor(w, envelope_word(id))) return id;
        }
    }
    throw InternalError("no envelope found for factor " + to_string(w));
}

EnvelopeExtension extension_of(const Word& w) {
    const EnvelopeId id = env_of(w);
    const Word host = envelope_word(id);
    const auto occ = occurrences(w, host);
    if (occ.size() != 1) {
        throw InternalError(to_string(w) + " occurs " + std::to_string(occ.size()) + " times in " +
                            to_string(id) + "; the envelope extension is not unique");
    }
    const Index start = occ.front().position;
    return EnvelopeExtension{id, host.slice(1, start - 1), host.slice(start + w.size(), host.size()), w};
}

}  // namespace pdgaps
