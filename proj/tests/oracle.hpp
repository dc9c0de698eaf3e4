#pragma once

// Brute-force reference computations for tests. Deliberately independent of the
// library: the sequence is regenerated from the substitution rule and every
// search is a plain quadratic scan.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace oracle {

inline std::string doubling_prefix(std::size_t n) {
    std::string w = "a";
    while (w.size() < n) {
        std::string next;
        for (char c : w) next += (c == 'a') ? "ab" : "aa";
        w = std::move(next);
    }
    w.resize(n);
    return w;
}

inline const std::string& host16() {
    static const std::string h = doubling_prefix(std::size_t{1} << 16);
    return h;
}

// 1-based starts of every occurrence, by comparing at each offset.
inline std::vector<std::int64_t> starts(const std::string& pattern, const std::string& host) {
    std::vector<std::int64_t> out;
    if (pattern.empty() || pattern.size() > host.size()) return out;
    for (std::size_t i = 0; i + pattern.size() <= host.size(); ++i) {
        bool match = true;
        for (std::size_t k = 0; k < pattern.size() && match; ++k) match = host[i + k] == pattern[k];
        if (match) out.push_back(static_cast<std::int64_t>(i) + 1);
    }
    return out;
}

// Rendering of the gap between occurrences starting at a and b (1-based).
inline std::string gap_text(const std::string& host, std::size_t len, std::int64_t a, std::int64_t b) {
    const std::int64_t end = a + static_cast<std::int64_t>(len) - 1;
    if (b == end + 1) return "eps";
    if (b > end + 1) return host.substr(static_cast<std::size_t>(end), static_cast<std::size_t>(b - 1 - end));
    return "(" + host.substr(static_cast<std::size_t>(b - 1), static_cast<std::size_t>(end - b + 1)) + ")^-1";
}

inline std::int64_t gap_signed_length(std::size_t len, std::int64_t a, std::int64_t b) {
    return b - a - static_cast<std::int64_t>(len);
}

inline std::set<std::string> factors(const std::string& host, std::size_t len) {
    std::set<std::string> out;
    for (std::size_t i = 0; i + len <= host.size(); ++i) out.insert(host.substr(i, len));
    return out;
}

inline bool is_palindrome(const std::string& s) { return std::string(s.rbegin(), s.rend()) == s; }

}  // namespace oracle
