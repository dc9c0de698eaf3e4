#include "pdgaps/word.hpp"

#include <algorithm>
#include <functional>

#include "pdgaps/error.hpp"

namespace pdgaps {

namespace {

bool valid_letters(std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return c == 'a' || c == 'b'; });
}

}  // namespace

Word::Word(std::string_view letters) : letters_(letters) {
    if (!valid_letters(letters_)) {
        throw InvalidArgument("word must consist of letters a and b only: '" + letters_ + "'");
    }
}

Word Word::parse(std::string_view text) {
    if (text == "eps") return Word{};
    return Word{text};
}

Word make_word_unchecked(std::string letters) { return Word{Word::Trusted{}, std::move(letters)}; }

Letter Word::at(Index pos) const {
    if (pos < 1 || pos > size()) {
        throw InvalidArgument("position " + std::to_string(pos) + " outside word of length " +
                              std::to_string(size()));
    }
    return static_cast<Letter>(letters_[static_cast<std::size_t>(pos - 1)]);
}

Letter Word::last() const { return at(size()); }

Word Word::slice(Index first, Index last) const {
    if (last == first - 1 && first >= 1 && first <= size() + 1) return Word{};
    if (first < 1 || last > size() || last < first) {
        throw InvalidArgument("slice [" + std::to_string(first) + "," + std::to_string(last) +
                              "] outside word of length " + std::to_string(size()));
    }
    return Word{Trusted{}, letters_.substr(static_cast<std::size_t>(first - 1),
                                           static_cast<std::size_t>(last - first + 1))};
}

Word Word::without_last() const {
    if (empty()) throw InvalidArgument("cannot drop the last letter of the empty word");
    return slice(1, size() - 1);
}

Word Word::reversed() const { return Word{Trusted{}, std::string(letters_.rbegin(), letters_.rend())}; }

Word operator+(const Word& lhs, const Word& rhs) { return Word{Word::Trusted{}, lhs.letters_ + rhs.letters_}; }

std::string to_string(const Word& w) { return w.empty() ? std::string("eps") : std::string(w.str()); }

bool is_palindrome(const Word& w) {
    auto s = w.str();
    return std::equal(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(s.size() / 2), s.rbegin());
}

std::vector<Occurrence> occurrences(const Word& pattern, std::string_view host) {
    if (pattern.empty()) throw InvalidArgument("occurrence search needs a nonempty pattern");
    std::vector<Occurrence> out;
    const auto needle = pattern.str();
    const std::boyer_moore_horspool_searcher searcher(needle.begin(), needle.end());
    auto it = host.begin();
    while (true) {
        auto [first, last] = searcher(it, host.end());
        if (first == host.end()) break;
        out.push_back({static_cast<Index>(first - host.begin()) + 1, pattern.size()});
        it = first + 1;
    }
    return out;
}

std::vector<Occurrence> occurrences(const Word& pattern, const Word& host) {
    return occurrences(pattern, host.str());
}

bool is_factor(const Word& pattern, const Word& host) {
    return host.str().find(pattern.str()) != std::string_view::npos;
}

}  // namespace pdgaps
