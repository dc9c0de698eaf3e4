#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pdgaps {

using Index = std::int64_t;

enum class Letter : char { a = 'a', b = 'b' };

constexpr char to_char(Letter l) { return static_cast<char>(l); }
constexpr Letter flip(Letter l) { return l == Letter::a ? Letter::b : Letter::a; }

// Finite word over {a,b}. Immutable value type; positions are 1-based.
class Word {
public:
    Word() = default;

    // Throws InvalidArgument on any character other than 'a' or 'b'.
    explicit Word(std::string_view letters);
    explicit Word(Letter l) : letters_(1, to_char(l)) {}

    // Accepts the text rendering: letters, or "eps" for the empty word.
    static Word parse(std::string_view text);

    Index size() const { return static_cast<Index>(letters_.size()); }
    bool empty() const { return letters_.empty(); }

    Letter at(Index pos) const;  // 1-based
    Letter last() const;

    // this[first, last], 1-based and inclusive; [i, i-1] is the empty word.
    Word slice(Index first, Index last) const;
    Word without_last() const;
    Word reversed() const;

    std::string_view str() const { return letters_; }

    friend Word operator+(const Word& lhs, const Word& rhs);
    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word&, const Word&) = default;

private:
    struct Trusted {};
    Word(Trusted, std::string letters) : letters_(std::move(letters)) {}
    friend Word make_word_unchecked(std::string letters);

    std::string letters_;
};

// For internal producers that only ever emit 'a'/'b'.
Word make_word_unchecked(std::string letters);

struct Occurrence {
    Index position = 1;  // 1-based start
    Index length = 1;

    Index end() const { return position + length - 1; }
    friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

// "eps" for the empty word, otherwise the bare letters.
std::string to_string(const Word& w);

bool is_palindrome(const Word& w);

// All (possibly overlapping) occurrences of `pattern` in `host`, ascending.
// Throws InvalidArgument for an empty pattern.
std::vector<Occurrence> occurrences(const Word& pattern, const Word& host);
std::vector<Occurrence> occurrences(const Word& pattern, std::string_view host);

bool is_factor(const Word& pattern, const Word& host);

}  // namespace pdgaps
