#include "pdgaps/census.hpp"

#include <set>
#include <string>

#include "pdgaps/doubling.hpp"
#include "pdgaps/error.hpp"

namespace pdgaps {

namespace {

bool in_alphabet(ThetaId theta, char letter) {
    return letter == 'a' || letter == 'b' || (theta == ThetaId::Theta2 && letter == 'c');
}

void check_position_budget(const EnvelopeId& id, Index p) {
    if (p < 1) throw InvalidArgument("occurrence index must be >= 1");
    if (p > kMaxGapIndex + 1) {
        throw BudgetExceeded("occurrence index " + std::to_string(p) + " exceeds limit");
    }
    if (id.m() > kMaxBlockExponent) throw BudgetExceeded("envelope exponent exceeds limit");
}

// Start of occurrence p+1 given how many of the first p gap letters were a and b.
//   i = 1: p*2^m - N1(b,p)*2^(m-1) + 1
//   i = 2: (3p+2)*2^(m-1) - N2(a,p)*2^m + N2(b,p)*2^(m+1) + 1
Index next_start(const EnvelopeId& id, Index p, Index count_a, Index count_b) {
    const Index half = Index{1} << (id.m() - 1);
    if (id.i() == 1) return p * 2 * half - count_b * half + 1;
    return (3 * p + 2) * half - count_a * 2 * half + count_b * 4 * half + 1;
}

Index ceil_log2(Index n) {
    Index k = 0;
    while ((Index{1} << k) < n) ++k;
    return k;
}

// Admissible |mu1| for a palindrome centred in E(m,i).
bool centre_offset_allowed(const EnvelopeId& id, Index mu) {
    const int m = id.m();
    if (id.i() == 2) return mu < (Index{1} << (m - 1));
    if (m == 1) return mu == 0;
    if (m == 2) return mu <= 1;
    return mu < 3 * (Index{1} << (m - 3));
}

void check_census_length(Index n) {
    if (n < 1) throw InvalidArgument("census argument must be >= 1");
    if (n > kMaxCensusLength) throw BudgetExceeded("census argument " + std::to_string(n) + " exceeds limit");
}

// For pos in [2^m + 1, 3*2^(m-1)], the root of length 2^(m-1) sitting at offset
// pos - 2^m - 1 inside E(m,1).
std::vector<Word> powers_beginning_at(Index pos, int exponent) {
    if (pos < 1) throw InvalidArgument("positions start at 1");
    for (int m = 1; (Index{1} << m) < pos; ++m) {
        const Index lo = (Index{1} << m) + 1;
        const Index hi = 3 * (Index{1} << (m - 1));
        if (pos < lo || pos > hi) continue;
        const Index mu = pos - lo;
        const Word root = envelope_word(EnvelopeId{m, 1}).slice(mu + 1, mu + (Index{1} << (m - 1)));
        Word power;
        for (int k = 0; k < exponent; ++k) power = power + root;
        return {power};
    }
    return {};
}

}  // namespace

Index letter_count(ThetaId theta, char letter, Index p) {
    if (!in_alphabet(theta, letter)) {
        throw InvalidArgument(std::string("letter '") + letter + "' is not in the alphabet of " + to_string(theta));
    }
    if (p < 0) throw InvalidArgument("count prefix length must be nonnegative");
    const std::string prefix = theta_prefix(theta, p);
    Index count = 0;
    for (char c : prefix) count += (c == letter);
    return count;
}

Index position_envelope(const EnvelopeId& id, Index p) {
    check_position_budget(id, p);
    const ThetaId theta = theta_of(id);
    return next_start(id, p - 1, letter_count(theta, 'a', p - 1), letter_count(theta, 'b', p - 1));
}

Index position_of(const EnvelopeExtension& ext, Index p) { return position_envelope(ext.env, p) + ext.mu1.size(); }

Index position_of(const Word& w, Index p) { return position_of(extension_of(w), p); }

std::vector<Index> positions_of(const EnvelopeExtension& ext, Index count) {
    if (count < 0) throw InvalidArgument("occurrence count must be nonnegative");
    if (count == 0) return {};
    check_position_budget(ext.env, count);
    const std::string theta = theta_prefix(theta_of(ext.env), count - 1);
    std::vector<Index> out;
    out.reserve(static_cast<std::size_t>(count));
    Index count_a = 0;
    Index count_b = 0;
    for (Index p = 0; p < count; ++p) {
        if (p > 0) {
            const char c = theta[static_cast<std::size_t>(p - 1)];
            count_a += (c == 'a');
            count_b += (c == 'b');
        }
        out.push_back(next_start(ext.env, p, count_a, count_b) + ext.mu1.size());
    }
    return out;
}

std::vector<Word> palindromes_of_length(Index n) {
    check_census_length(n);
    std::set<Word> found;
    const Index max_m = ceil_log2(16 * n + 17);
    for (int m = 1; m <= max_m; ++m) {
        for (int i : {1, 2}) {
            const EnvelopeId id{m, i};
            const Index len = envelope_length(id);
            if (len < n || (len - n) % 2 != 0) continue;
            const Index mu = (len - n) / 2;
            if (!centre_offset_allowed(id, mu)) continue;
            Word candidate = envelope_word(id).slice(mu + 1, mu + n);
            if (env_of(candidate) == id) found.insert(std::move(candidate));
        }
    }
    return {found.begin(), found.end()};
}

Index palindrome_census(Index n) { return static_cast<Index>(palindromes_of_length(n).size()); }

Index square_census(Index N) {
    if (N < 1) throw InvalidArgument("census argument must be >= 1");
    // c(N+1) - c(N) = 1 exactly for 2^m <= N < 3*2^(m-1), m >= 1, with c(1) = 0.
    // Summed over N' < N this counts the integers of [2^m, 3*2^(m-1) - 1] below N.
    Index total = 0;
    for (int m = 1; (Index{1} << m) < N; ++m) {
        const Index lo = Index{1} << m;
        const Index hi = std::min<Index>(3 * (Index{1} << (m - 1)) - 1, N - 1);
        if (hi >= lo) total += hi - lo + 1;
    }
    return total;
}

Index cube_census(Index N) { return square_census(N); }

std::vector<Word> squares_beginning_at(Index pos) { return powers_beginning_at(pos, 2); }

std::vector<Word> cubes_beginning_at(Index pos) { return powers_beginning_at(pos, 3); }

std::vector<CensusPoint> palindrome_table(Index first, Index last) {
    std::vector<CensusPoint> out;
    for (Index n = first; n <= last; ++n) out.push_back({n, palindrome_census(n)});
    return out;
}

std::vector<CensusPoint> square_table(Index first, Index last) {
    std::vector<CensusPoint> out;
    for (Index n = first; n <= last; ++n) out.push_back({n, square_census(n)});
    return out;
}

std::vector<PalindromeRun> palindrome_runs(Index max_length) {
    std::vector<PalindromeRun> runs;
    for (Index n = 5; n <= max_length; n += 2) {
        const Index count = palindrome_census(n);
        if (!runs.empty() && runs.back().count == count) {
            runs.back().last_length = n;
        } else {
            runs.push_back({n, n, count});
        }
    }
    return runs;
}

}  // namespace pdgaps
