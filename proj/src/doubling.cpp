#include "pdgaps/doubling.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <string>

#include "pdgaps/error.hpp"

namespace pdgaps {

Word substitute(const Word& w) {
    std::string out;
    out.reserve(static_cast<std::size_t>(2 * w.size()));
    for (char c : w.str()) out += (c == 'a') ? "ab" : "aa";
    return make_word_unchecked(std::move(out));
}

Word block(BlockKind kind, int m, int max_exponent) {
    if (m < 0) throw InvalidArgument("block exponent must be nonnegative");
    if (m > max_exponent) {
        throw BudgetExceeded("block exponent " + std::to_string(m) + " exceeds limit " +
                             std::to_string(max_exponent));
    }
    if (kind == BlockKind::A && m <= kMaxCachedExponent) return cached_prefix(m);
    Word w{kind == BlockKind::A ? Letter::a : Letter::b};
    for (int k = 0; k < m; ++k) w = substitute(w);
    return w;
}

Letter delta(int m) {
    if (m < 0) throw InvalidArgument("delta index must be nonnegative");
    return (m % 2 == 0) ? Letter::a : Letter::b;
}

Word prefix(Index n) {
    if (n < 0) throw InvalidArgument("prefix length must be nonnegative");
    if (n > kMaxPrefixLength) {
        throw BudgetExceeded("prefix length " + std::to_string(n) + " exceeds limit " +
                             std::to_string(kMaxPrefixLength));
    }
    if (n == 0) return Word{};
    int k = 0;
    while ((Index{1} << k) < n) ++k;
    if (k <= kMaxCachedExponent) return n == (Index{1} << k) ? cached_prefix(k) : cached_prefix(k).slice(1, n);
    return block(BlockKind::A, k).slice(1, n);
}

const Word& cached_prefix(int k) {
    constexpr int kMaxCached = kMaxCachedExponent;
    if (k < 0 || k > kMaxCached) {
        throw BudgetExceeded("cached prefix exponent " + std::to_string(k) + " outside [0," +
                             std::to_string(kMaxCached) + "]");
    }
    static std::array<std::once_flag, kMaxCached + 1> flags;
    static std::array<std::unique_ptr<const Word>, kMaxCached + 1> cache;
    std::call_once(flags[static_cast<std::size_t>(k)], [k] {
        cache[static_cast<std::size_t>(k)] =
            std::make_unique<const Word>(k == 0 ? Word{Letter::a} : substitute(cached_prefix(k - 1)));
    });
    return *cache[static_cast<std::size_t>(k)];
}

Letter letter_at(Index i) {
    if (i < 1) throw InvalidArgument("sequence positions start at 1");
    // Position i of sigma(w) comes from position ceil(i/2) of w. Odd positions are
    // the first letter of an image (always a); even positions flip the parent letter.
    int flips = 0;
    while (i % 2 == 0) {
        ++flips;
        i /= 2;
    }
    return (flips % 2 == 0) ? Letter::a : Letter::b;
}

Word sequence_slice(Index first, Index last) {
    if (first < 1 || last < first - 1) throw InvalidArgument("invalid sequence slice");
    std::string out;
    out.reserve(static_cast<std::size_t>(last - first + 1));
    for (Index i = first; i <= last; ++i) out += to_char(letter_at(i));
    return make_word_unchecked(std::move(out));
}

}  // namespace pdgaps
