#include "pdgaps/verify.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <map>
#include <set>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "pdgaps/census.hpp"
#include "pdgaps/doubling.hpp"
#include "pdgaps/envelope.hpp"
#include "pdgaps/error.hpp"

namespace pdgaps {

namespace {

using Clock = std::chrono::steady_clock;

std::string show(const Word& w) { return to_string(w); }
std::string show(const Gap& g) { return to_string(g); }
std::string show(const EnvelopeId& id) { return to_string(id); }
std::string show(GapKind k) { return to_string(k); }
std::string show(Index v) { return std::to_string(v); }
std::string show(int v) { return std::to_string(v); }
std::string show(const std::string& s) { return s; }

template <typename T>
std::string show(const std::vector<T>& items) {
    std::string out = "[";
    for (std::size_t k = 0; k < items.size(); ++k) out += (k ? "," : "") + show(items[k]);
    return out + "]";
}

class Collector {
public:
    void add(Claim claim, std::string witness, std::string expected, std::string actual) {
        items.push_back({claim, std::move(witness), std::move(expected), std::move(actual)});
    }

    template <typename T, typename U>
    void expect_eq(Claim claim, const std::string& witness, const T& expected, const U& actual) {
        ++checks;
        if (!(expected == actual)) add(claim, witness, show(expected), show(actual));
    }

    void expect(Claim claim, const std::string& witness, bool ok, const std::string& what) {
        ++checks;
        if (!ok) add(claim, witness, what, "violated");
    }

    std::vector<Divergence> items;
    Index checks = 0;
};

class Deadline {
public:
    explicit Deadline(double seconds)
        : active_(seconds > 0),
          end_(Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds))) {}

    bool expired() const { return active_ && Clock::now() > end_; }

private:
    bool active_;
    Clock::time_point end_;
};

// First `limit` starts (1-based) of needle in host.
std::vector<Index> scan_starts(std::string_view host, std::string_view needle, std::size_t limit) {
    std::vector<Index> out;
    for (auto pos = host.find(needle); pos != std::string_view::npos && out.size() < limit;
         pos = host.find(needle, pos + 1)) {
        out.push_back(static_cast<Index>(pos) + 1);
    }
    return out;
}

std::vector<Index> all_starts(const Word& needle, const Word& host) {
    return scan_starts(host.str(), needle.str(), static_cast<std::size_t>(-1));
}

std::unordered_set<std::string_view> factor_set(std::string_view host, Index length) {
    std::unordered_set<std::string_view> out;
    const auto n = static_cast<std::size_t>(length);
    for (std::size_t i = 0; i + n <= host.size(); ++i) out.insert(host.substr(i, n));
    return out;
}

std::string mw(const std::string& what, int m) { return what + " m=" + std::to_string(m); }

// ---------------------------------------------------------------------------

void check_golden(Collector& out) {
    constexpr Claim c = Claim::theta_pattern;
    out.expect_eq(c, "theta1 prefix",
                  std::string("abbaaabbabbabbaaabbaaabbaaabbabbabbaaabbabbabbaaabbabbabbaaabbaaabbaaa"),
                  theta_prefix(ThetaId::Theta1, 70));
    out.expect_eq(c, "theta2 prefix",
                  std::string("abacacabababacacabacacabacacabababacacabababacacabababacacabacacabacac"),
                  theta_prefix(ThetaId::Theta2, 70));
    out.expect_eq(Claim::gap, "G1(aa)", Gap::overlapped(Word{"a"}), gap_of(Word{"aa"}, 1));
    out.expect_eq(Claim::gap, "G2(aa)", Gap::separated(Word{"babab"}), gap_of(Word{"aa"}, 2));
    // The literature lists G2(aab) as the empty gap; the sequence itself has "a".
    out.expect_eq(Claim::gap, "G2(aab)", Gap::separated(Word{"a"}), gap_of(Word{"aab"}, 2));
    out.expect_eq(Claim::uniqueness, "Env(bab)", EnvelopeId{2, 2}, env_of(Word{"bab"}));
    out.expect_eq(Claim::uniqueness, "Env(aaa)", EnvelopeId{3, 1}, env_of(Word{"aaa"}));
    out.expect_eq(Claim::position, "N1(a,5)", Index{3}, letter_count(ThetaId::Theta1, 'a', 5));
    out.expect_eq(Claim::position, "N1(b,9)", Index{4}, letter_count(ThetaId::Theta1, 'b', 9));
    out.expect_eq(Claim::census, "P(1..3)", std::vector<Index>{2, 1, 3},
                  std::vector<Index>{palindrome_census(1), palindrome_census(2), palindrome_census(3)});
    const std::vector<std::string> envs{"a", "aa", "aba", "ababa", "abaaaba", "abaaabaaaba"};
    for (int m = 1; m <= 3; ++m) {
        for (int i : {1, 2}) {
            out.expect_eq(Claim::structure, "word " + to_string(EnvelopeId{m, i}),
                          Word{envs[static_cast<std::size_t>(2 * (m - 1) + i - 1)]}, envelope_word(EnvelopeId{m, i}));
        }
    }
}

void check_doubling(const SweepConfig& cfg, Collector& out) {
    constexpr Claim c = Claim::structure;
    for (int m = 0; m <= cfg.max_identity_exponent; ++m) {
        const Word a = block(BlockKind::A, m);
        const Word b = block(BlockKind::B, m);
        out.expect_eq(c, mw("A_m, B_m agree up to the last letter", m), a.without_last(), b.without_last());
        out.expect_eq(c, mw("last letter of A_m", m), to_char(delta(m)), to_char(a.last()));
        if (m >= 1) out.expect_eq(c, mw("last letter of B_m", m), to_char(delta(m - 1)), to_char(b.last()));
        out.expect(c, mw("A_m minus last letter", m), is_palindrome(a.without_last()), "palindrome");
        if (m < 1) continue;
        const Index half = Index{1} << (m - 1);
        const Word b_prev = block(BlockKind::B, m - 1);
        const Word b_next = block(BlockKind::B, m + 1);
        out.expect_eq(c, mw("A_m in A_m B_m A_m", m), std::vector<Index>{1, 4 * half + 1}, all_starts(a, a + b + a));
        out.expect_eq(c, mw("A_m in A_m A_m", m), std::vector<Index>{1, 2 * half + 1}, all_starts(a, a + a));
        out.expect_eq(c, mw("B_m in B_m B_m-1 B_m+1 B_m", m), std::vector<Index>{1, 7 * half + 1},
                      all_starts(b, b + b_prev + b_next + b));
        out.expect_eq(c, mw("B_m in B_m B_m-1 B_m", m), std::vector<Index>{1, 3 * half + 1},
                      all_starts(b, b + b_prev + b));
    }

    const int k = std::min(cfg.prefix_exponent, 16);
    const Word& host = cached_prefix(k);
    for (Index i = 1; i <= host.size(); ++i) {
        if (letter_at(i) != host.at(i)) {
            out.add(c, "letter_at(" + std::to_string(i) + ")", std::string(1, to_char(host.at(i))),
                    std::string(1, to_char(letter_at(i))));
            break;
        }
    }
    for (Index n : {Index{0}, Index{1}, Index{3}, Index{5}, Index{7}, Index{100}, Index{1000}, host.size() / 2}) {
        out.expect_eq(c, "substitute(prefix(" + std::to_string(n) + "))", prefix(2 * n), substitute(prefix(n)));
    }
}

void check_envelope(const SweepConfig& cfg, Collector& out) {
    constexpr Claim c = Claim::structure;
    const int top = cfg.max_identity_exponent;
    std::map<std::pair<int, int>, Word> words;
    for (int m = 1; m <= top; ++m) {
        for (int i : {1, 2}) words[{m, i}] = envelope_word(EnvelopeId{m, i});
    }
    auto E = [&](int m, int i) -> const Word& { return words.at({m, i}); };

    for (int m = 1; m <= top; ++m) {
        const Index half = Index{1} << (m - 1);
        const Word d{delta(m)};
        for (int i : {1, 2}) {
            const EnvelopeId id{m, i};
            out.expect_eq(c, "length " + to_string(id), envelope_length(id), E(m, i).size());
            out.expect(c, to_string(id), is_palindrome(E(m, i)), "palindrome");
            if (m + 1 <= top) {
                out.expect_eq(c, to_string(EnvelopeId{m + 1, i}) + " = sigma(E)a", substitute(E(m, i)) + Word{"a"},
                              E(m + 1, i));
            }
            // Each envelope word is its own envelope, occupying it entirely.
            const auto ext = extension_of(E(m, i));
            out.expect_eq(Claim::uniqueness, "Env(" + to_string(id) + ")", id, ext.env);
        }
        if (m + 1 <= top) {
            out.expect_eq(c, mw("E(m+1,1) = E d E", m), E(m, 1) + d + E(m, 1), E(m + 1, 1));
            out.expect_eq(c, mw("E(m+1,2) = E d E d E", m), E(m, 1) + d + E(m, 1) + d + E(m, 1), E(m + 1, 2));
            out.expect_eq(c, mw("E(m,1) in E(m+1,1)", m), std::vector<Index>{1, 2 * half + 1},
                          all_starts(E(m, 1), E(m + 1, 1)));
            for (int i : {1, 2}) out.expect(c, mw("E(m,2) in E(m+1," + show(i) + ")", m), !is_factor(E(m, 2), E(m + 1, i)), "absent");
        }
        out.expect_eq(c, mw("E(m,1) in E(m,2)", m), std::vector<Index>{1, half + 1}, all_starts(E(m, 1), E(m, 2)));
        if (m + 2 <= top) {
            out.expect_eq(c, mw("E(m,2) in E(m+2,1)", m), std::vector<Index>{2 * half + 1, 3 * half + 1},
                          all_starts(E(m, 2), E(m + 2, 1)));
            out.expect_eq(c, mw("E(m,2) in E(m+2,2)", m),
                          std::vector<Index>{2 * half + 1, 3 * half + 1, 6 * half + 1, 7 * half + 1},
                          all_starts(E(m, 2), E(m + 2, 2)));
        }
        for (int later = m; later <= top; ++later) {
            for (int i : {1, 2}) {
                out.expect(c, mw("E(m,1) in E(" + show(later) + "," + show(i) + ")", m), is_factor(E(m, 1), E(later, i)),
                           "present");
                if (later + 2 <= top) {
                    out.expect(c, mw("E(m,2) in E(" + show(later + 2) + "," + show(i) + ")", m),
                               is_factor(E(m, 2), E(later + 2, i)), "present");
                }
            }
        }
    }
}

void check_membership(const SweepConfig& cfg, Collector& out) {
    constexpr Claim c = Claim::membership;
    const Word& host = cached_prefix(cfg.prefix_exponent);
    for (Index len = 1; len <= cfg.max_factor_len; ++len) {
        const std::string witness = "length " + std::to_string(len);
        const int k = stabilize(len);
        out.expect(c, witness, (Index{1} << k) <= 16 * len + 16,
                   "stabilizes within 16n+16 letters (k=" + std::to_string(k) + ")");
        const auto reference = factor_set(host.str(), len);
        if (k <= cfg.prefix_exponent) {
            out.expect_eq(c, witness + " stabilized factor count", static_cast<Index>(reference.size()),
                          static_cast<Index>(factor_set(cached_prefix(k).str(), len).size()));
        }
        for (auto f : reference) {
            if (!is_factor_of_sequence(Word{f})) out.add(c, "word " + std::string(f), "factor", "rejected");
        }
        if (len < 2) continue;
        for (auto f : factor_set(host.str(), len - 1)) {
            for (char x : {'a', 'b'}) {
                const std::string u = std::string(f) + x;
                if (!reference.contains(u) && is_factor_of_sequence(Word{u})) out.add(c, "word " + u, "non-factor", "accepted");
            }
        }
    }
}

void check_powers(const SweepConfig& cfg, Collector& out) {
    const std::string_view s = cached_prefix(cfg.census_prefix_exponent).str();
    const auto n = static_cast<Index>(s.size());
    for (Index r = 1; r <= cfg.max_factor_len && 4 * r <= n; ++r) {
        Index run = 0;
        for (Index j = 0; j + r < n; ++j) {
            run = (s[static_cast<std::size_t>(j)] == s[static_cast<std::size_t>(j + r)]) ? run + 1 : 0;
            if (run >= 3 * r) {
                const Index start = j - 3 * r + 2;
                out.add(Claim::structure, "root " + std::string(s.substr(static_cast<std::size_t>(start - 1), static_cast<std::size_t>(r))) +
                        " at " + std::to_string(start), "no fourth power", "fourth power");
                break;
            }
        }
    }
}

// Brute-force first-occurrence starts of distinct k-th powers beginning in host[1, max_start].
std::map<Index, std::vector<std::string>> brute_powers(std::string_view s, Index max_start, int exponent) {
    const auto n = static_cast<Index>(s.size());
    std::map<Index, std::vector<std::string>> by_start;
    std::vector<Index> run(static_cast<std::size_t>(n + 1));
    for (Index r = 1; exponent * r <= n; ++r) {
        const Index top = std::min(n - r - 1, max_start - 1 + (exponent - 1) * r);
        run[static_cast<std::size_t>(top + 1)] = 0;
        for (Index j = top; j >= 0; --j) {
            const auto u = static_cast<std::size_t>(j);
            run[u] = (s[u] == s[u + static_cast<std::size_t>(r)]) ? run[u + 1] + 1 : 0;
        }
        std::unordered_set<std::string_view> seen;
        for (Index i = 0; i < max_start && i + exponent * r <= n; ++i) {
            if (run[static_cast<std::size_t>(i)] < (exponent - 1) * r) continue;
            const auto word = s.substr(static_cast<std::size_t>(i), static_cast<std::size_t>(exponent * r));
            if (seen.insert(word).second) by_start[i + 1].emplace_back(word);
        }
    }
    return by_start;
}

void check_census(const SweepConfig& cfg, Collector& out) {
    constexpr Claim c = Claim::census;
    const std::string_view s = cached_prefix(cfg.census_prefix_exponent).str();
    const Index max_n = std::min<Index>(cfg.max_census_N, static_cast<Index>(s.size()) / 4);

    for (int exponent : {2, 3}) {
        const auto by_start = brute_powers(s, max_n, exponent);
        const std::string label = exponent == 2 ? "squares" : "cubes";
        Index running = 0;
        for (Index N = 1; N <= max_n; ++N) {
            std::vector<Word> brute;
            if (auto it = by_start.find(N); it != by_start.end()) {
                for (const auto& w : it->second) brute.emplace_back(w);
            }
            running += static_cast<Index>(brute.size());
            const Index formula = exponent == 2 ? square_census(N) : cube_census(N);
            out.expect_eq(c, label + " c(" + std::to_string(N) + ")", running, formula);
            std::sort(brute.begin(), brute.end());
            out.expect_eq(c, label + " beginning at " + std::to_string(N), brute,
                          exponent == 2 ? squares_beginning_at(N) : cubes_beginning_at(N));
        }
    }

    const Index max_len = cfg.max_palindrome_len;
    std::vector<std::set<std::string_view>> found(static_cast<std::size_t>(max_len + 1));
    const auto n = static_cast<Index>(s.size());
    for (Index centre = 0; centre < 2 * n - 1; ++centre) {
        Index lo = centre / 2;
        Index hi = lo + centre % 2;
        while (lo >= 0 && hi < n && s[static_cast<std::size_t>(lo)] == s[static_cast<std::size_t>(hi)] && hi - lo + 1 <= max_len) {
            found[static_cast<std::size_t>(hi - lo + 1)].insert(s.substr(static_cast<std::size_t>(lo), static_cast<std::size_t>(hi - lo + 1)));
            --lo;
            ++hi;
        }
    }
    for (Index len = 1; len <= max_len; ++len) {
        std::vector<Word> brute;
        for (auto w : found[static_cast<std::size_t>(len)]) brute.emplace_back(w);
        out.expect_eq(c, "palindromes of length " + std::to_string(len), brute, palindromes_of_length(len));
        if (len % 2 == 0 && len != 2) out.expect_eq(c, "P(" + std::to_string(len) + ")", Index{0}, palindrome_census(len));
    }
}

// ---------------------------------------------------------------------------

struct FactorCase {
    Word word;
    std::vector<Index> starts;  // first max_gap_index + 1 oracle starts
};

struct FactorSuites {
    bool gap_pattern = false;
    bool gaps = false;
    bool positions = false;
    bool uniqueness = false;
    bool any() const { return gap_pattern || gaps || positions || uniqueness; }
};

struct WorkerResult {
    Collector out;
    Index factors = 0;
    Index pairs = 0;
    Index skipped = 0;
    bool complete = true;
    std::vector<std::string> notes;
};

std::vector<FactorCase> factor_cases(std::string_view host, Index length, std::size_t keep) {
    std::unordered_map<std::string_view, std::size_t> index;
    std::vector<FactorCase> cases;
    const auto n = static_cast<std::size_t>(length);
    for (std::size_t i = 0; i + n <= host.size(); ++i) {
        const auto f = host.substr(i, n);
        auto [it, fresh] = index.try_emplace(f, cases.size());
        if (fresh) cases.push_back({Word{f}, {}});
        auto& starts = cases[it->second].starts;
        if (starts.size() < keep) starts.push_back(static_cast<Index>(i) + 1);
    }
    return cases;
}

class FactorChecker {
public:
    FactorChecker(const SweepConfig& cfg, FactorSuites suites, std::string_view host, WorkerResult& result)
        : cfg_(cfg), suites_(suites), host_(host), result_(result) {}

    void check(const FactorCase& fc) {
        const std::string name = to_string(fc.word);
        EnvelopeExtension ext = [&] {
            try {
                return extension_of(fc.word);
            } catch (const InternalError& e) {
                result_.out.add(Claim::uniqueness, "w=" + name, "unique envelope extension", e.what());
                throw;
            }
        }();
        ++result_.factors;

        const auto oracle = static_cast<Index>(fc.starts.size());
        const Index pairs = std::min(cfg_.max_gap_index, oracle - 1);
        result_.pairs += std::max<Index>(pairs, 0);
        if (pairs < cfg_.max_gap_index) {
            result_.skipped += cfg_.max_gap_index - std::max<Index>(pairs, 0);
            result_.notes.push_back("w=" + name + ": only " + std::to_string(oracle) +
                                    " occurrences inside the host; gaps beyond p=" + std::to_string(pairs) + " skipped");
        }

        std::vector<Gap> observed;
        for (Index p = 1; p <= pairs; ++p) {
            observed.push_back(gap_between(host_, fc.word, {fc.starts[static_cast<std::size_t>(p - 1)], fc.word.size()},
                                           {fc.starts[static_cast<std::size_t>(p)], fc.word.size()}));
        }

        if (suites_.gap_pattern) check_pattern(ext, observed);
        if (suites_.gaps) check_gaps(ext, observed);
        if (suites_.positions) check_positions(ext, fc);
        if (suites_.uniqueness) check_uniqueness(ext, fc);
    }

private:
    std::string at(const EnvelopeExtension& ext, Index p) const {
        return "w=" + to_string(ext.factor) + " p=" + std::to_string(p);
    }

    void check_pattern(const EnvelopeExtension& ext, const std::vector<Gap>& observed) {
        auto& out = result_.out;
        const std::string theta = theta_prefix(theta_of(ext.env), static_cast<Index>(observed.size()));
        std::map<GapRole, Gap> by_role;
        for (std::size_t k = 0; k < observed.size(); ++k) {
            const Index p = static_cast<Index>(k) + 1;
            const GapRole role = role_of(theta[k], cfg_.role_map);
            try {
                const Index expected =
                    ext.mu1.size() + ext.mu2.size() + envelope_gap(ext.env, role).signed_length();
                out.expect_eq(Claim::theta_pattern, at(ext, p) + " signed length (" + to_string(role) + ")", expected,
                              observed[k].signed_length());
            } catch (const InvalidArgument& e) {
                out.add(Claim::theta_pattern, at(ext, p), "role valid for " + to_string(ext.env), e.what());
            }
            auto [it, fresh] = by_role.try_emplace(role, observed[k]);
            if (!fresh) out.expect_eq(Claim::theta_pattern, at(ext, p) + " repeats " + to_string(role), it->second, observed[k]);
        }
        std::set<std::string> distinct;
        for (const auto& g : observed) distinct.insert(to_string(g));
        const std::size_t expected_count = ext.env.i() == 1 ? 2 : 3;
        const std::size_t needed = ext.env.i() == 1 ? 2 : 4;
        if (observed.size() >= needed) {
            out.expect_eq(Claim::theta_pattern, "w=" + to_string(ext.factor) + " distinct gaps",
                          static_cast<Index>(expected_count), static_cast<Index>(distinct.size()));
        }
        if (ext.env.i() == 2 && observed.size() >= 3) {
            out.expect_eq(Claim::theta_pattern, "w=" + to_string(ext.factor) + " G3 = G1", observed[0], observed[2]);
        }
    }

    void check_gaps(const EnvelopeExtension& ext, const std::vector<Gap>& observed) {
        auto& out = result_.out;
        const auto n = static_cast<Index>(observed.size());
        std::vector<RoledGap> closed;
        try {
            closed = gap_sequence(ext, n);
        } catch (const InternalError& e) {
            out.add(Claim::gap, "w=" + to_string(ext.factor), "closed-form gap sequence", e.what());
            return;
        }
        const FactorClass cls = classify(ext);
        const Index half = Index{1} << (ext.env.m() - 1);
        Index overlapped_run = 0;
        Index separated_run = 0;
        Index adjacent_run = 0;
        for (Index p = 1; p <= n; ++p) {
            const auto& g = observed[static_cast<std::size_t>(p - 1)];
            const auto& rg = closed[static_cast<std::size_t>(p - 1)];
            out.expect_eq(Claim::gap, at(ext, p), g, rg.gap);
            out.expect_eq(Claim::gap, at(ext, p) + " relation", g.kind(), relation_at(ext, p));
            if (g.kind() == GapKind::overlapped) {
                const auto& body = g.body();
                const bool border = body.size() <= ext.factor.size() &&
                                    ext.factor.slice(1, body.size()) == body &&
                                    ext.factor.slice(ext.factor.size() - body.size() + 1, ext.factor.size()) == body;
                out.expect(Claim::gap, at(ext, p), border, "overlap is a border of w");
            }
            const Index len = g.signed_length();
            if (ext.env.i() == 1) {
                if (rg.role == GapRole::G1) out.expect(Claim::gap, at(ext, p), len > 0, "G1 > 0");
                if (rg.role == GapRole::G2) {
                    const Index size = ext.factor.size();
                    const bool ok = size < half ? len > 0 : (size == half ? len == 0 : len < 0);
                    out.expect(Claim::gap, at(ext, p), ok, "sign of G2 follows |w| against 2^(m-1)");
                }
            } else {
                const bool ok = rg.role == GapRole::G1 ? len < 0 : len > 0;
                out.expect(Claim::gap, at(ext, p), ok, "G1 < 0, G2 > 0, G4 > 0");
            }
            overlapped_run = g.kind() == GapKind::overlapped ? overlapped_run + 1 : 0;
            separated_run = g.kind() == GapKind::separated ? separated_run + 1 : 0;
            adjacent_run = g.kind() == GapKind::adjacent ? adjacent_run + 1 : 0;
            out.expect(Claim::gap, at(ext, p), overlapped_run < 3, "no three consecutive overlaps");
            out.expect(Claim::gap, at(ext, p), adjacent_run < 3, "no three consecutive adjacencies");
            if (separated_run >= 4) out.expect(Claim::gap, at(ext, p), cls == FactorClass::T1, "four separations only in T1");
        }
        if (ext.env.i() == 2) out.expect(Claim::gap, "w=" + to_string(ext.factor), !gap0_of(ext).empty(), "G0 > 0");
    }

    void check_positions(const EnvelopeExtension& ext, const FactorCase& fc) {
        auto& out = result_.out;
        const auto closed = positions_of(ext, static_cast<Index>(fc.starts.size()));
        for (std::size_t k = 0; k < fc.starts.size(); ++k) {
            out.expect_eq(Claim::position, at(ext, static_cast<Index>(k) + 1), fc.starts[k], closed[k]);
        }
        if (fc.starts.empty()) return;
        const Word g0 = gap0_of(ext);
        out.expect_eq(Claim::position, "w=" + to_string(ext.factor) + " G0", Word{host_.substr(0, static_cast<std::size_t>(fc.starts[0] - 1))}, g0);
        out.expect_eq(Claim::position, "w=" + to_string(ext.factor) + " |G0|+1", fc.starts[0], g0.size() + 1);
    }

    void check_uniqueness(const EnvelopeExtension& ext, const FactorCase& fc) {
        auto& out = result_.out;
        const Word env_word = envelope_word(ext.env);
        out.expect_eq(Claim::uniqueness, "w=" + to_string(ext.factor) + " occurrences in " + to_string(ext.env), Index{1},
                      static_cast<Index>(occurrences(ext.factor, env_word).size()));
        out.expect_eq(Claim::uniqueness, "w=" + to_string(ext.factor) + " extension", env_word, ext.mu1 + ext.factor + ext.mu2);
        auto it = env_starts_.find(ext.env);
        if (it == env_starts_.end()) {
            it = env_starts_.emplace(ext.env, scan_starts(host_, env_word.str(), static_cast<std::size_t>(cfg_.max_gap_index) + 1)).first;
        }
        const auto& env = it->second;
        const std::size_t common = std::min(env.size(), fc.starts.size());
        for (std::size_t k = 0; k < common; ++k) {
            out.expect_eq(Claim::uniqueness, at(ext, static_cast<Index>(k) + 1) + " offset in " + to_string(ext.env) + "_p",
                          env[k] + ext.mu1.size(), fc.starts[k]);
        }
    }

    const SweepConfig& cfg_;
    FactorSuites suites_;
    std::string_view host_;
    WorkerResult& result_;
    std::map<EnvelopeId, std::vector<Index>> env_starts_;
};

WorkerResult run_factor_worker(const SweepConfig& cfg, FactorSuites suites, std::vector<Index> lengths,
                               const Deadline& deadline) {
    WorkerResult result;
    const std::string_view host = cached_prefix(cfg.prefix_exponent).str();
    FactorChecker checker(cfg, suites, host, result);
    for (Index len : lengths) {
        if (deadline.expired()) {
            result.complete = false;
            result.notes.push_back("time budget exhausted before length " + std::to_string(len));
            break;
        }
        for (const auto& fc : factor_cases(host, len, static_cast<std::size_t>(cfg.max_gap_index) + 1)) {
            try {
                checker.check(fc);
            } catch (const BudgetExceeded& e) {
                result.complete = false;
                result.notes.push_back("w=" + to_string(fc.word) + ": " + e.what());
            } catch (const InternalError&) {
                // already recorded as a divergence
            }
        }
    }
    return result;
}

void validate(const SweepConfig& cfg) {
    if (cfg.max_factor_len < 1 || cfg.max_gap_index < 1) throw InvalidArgument("sweep bounds must be positive");
    if (cfg.prefix_exponent < 1 || cfg.prefix_exponent > kMaxCachedExponent) {
        throw BudgetExceeded("prefix exponent must lie in [1," + std::to_string(kMaxCachedExponent) + "]");
    }
    if (cfg.census_prefix_exponent < 2 || cfg.census_prefix_exponent > kMaxCachedExponent) {
        throw BudgetExceeded("census prefix exponent must lie in [2," + std::to_string(kMaxCachedExponent) + "]");
    }
    if (cfg.max_identity_exponent < 1 || cfg.max_identity_exponent > 20) {
        throw BudgetExceeded("identity exponent must lie in [1,20]");
    }
}

}  // namespace

std::string to_string(Claim claim) {
    switch (claim) {
        case Claim::gap: return "gap";
        case Claim::position: return "position";
        case Claim::theta_pattern: return "theta_pattern";
        case Claim::census: return "census";
        case Claim::uniqueness: return "uniqueness";
        case Claim::membership: return "membership";
        case Claim::structure: return "structure";
    }
    return "?";
}

namespace {
constexpr std::pair<Suite, std::string_view> kSuiteNames[] = {
    {Suite::golden, "golden"},         {Suite::doubling, "doubling"},     {Suite::envelope, "envelope"},
    {Suite::gap_pattern, "gap_pattern"}, {Suite::gaps, "gaps"},         {Suite::positions, "positions"},
    {Suite::uniqueness, "uniqueness"}, {Suite::powers, "powers"},         {Suite::census, "census"},
    {Suite::membership, "membership"},
};
}  // namespace

std::string to_string(Suite suite) {
    for (const auto& [s, name] : kSuiteNames) {
        if (s == suite) return std::string(name);
    }
    return "?";
}

Suite parse_suite(std::string_view name) {
    for (const auto& [s, n] : kSuiteNames) {
        if (n == name) return s;
    }
    throw InvalidArgument("unknown suite '" + std::string(name) + "'");
}

std::vector<Suite> all_suites() {
    std::vector<Suite> out;
    for (const auto& entry : kSuiteNames) out.push_back(entry.first);
    return out;
}

std::vector<Occurrence> oracle_occurrences(const Word& w, const SweepConfig& cfg) {
    if (w.empty()) throw InvalidArgument("oracle needs a nonempty word");
    std::vector<Occurrence> out;
    for (Index start : scan_starts(cached_prefix(cfg.prefix_exponent).str(), w.str(), static_cast<std::size_t>(-1))) {
        out.push_back({start, w.size()});
    }
    return out;
}

int stabilize(Index length) {
    if (length < 1) throw InvalidArgument("factor length must be >= 1");
    int k = 0;
    while ((Index{1} << k) < length) ++k;
    for (; k < kMaxCachedExponent; ++k) {
        if (factor_set(cached_prefix(k).str(), length) == factor_set(cached_prefix(k + 1).str(), length)) return k;
    }
    throw BudgetExceeded("factor set of length " + std::to_string(length) + " did not stabilize");
}

SweepReport sweep(const SweepConfig& cfg) {
    validate(cfg);
    const std::vector<Suite> chosen = cfg.suites.empty() ? all_suites() : cfg.suites;
    auto wanted = [&](Suite s) { return std::find(chosen.begin(), chosen.end(), s) != chosen.end(); };
    const Deadline deadline(cfg.time_budget_seconds);

    SweepReport report;
    Collector out;
    auto guarded = [&](Suite s, auto&& body) {
        if (!wanted(s)) return;
        if (deadline.expired()) {
            report.complete = false;
            report.notes.push_back("time budget exhausted before suite " + to_string(s));
            return;
        }
        try {
            body();
        } catch (const BudgetExceeded& e) {
            report.complete = false;
            report.notes.push_back(to_string(s) + ": " + e.what());
        } catch (const InternalError& e) {
            out.add(Claim::structure, "suite " + to_string(s), "no internal error", e.what());
        }
    };

    // seed_examples only matters when no explicit suite list is given.
    if (cfg.seed_examples || !cfg.suites.empty()) guarded(Suite::golden, [&] { check_golden(out); });
    guarded(Suite::doubling, [&] { check_doubling(cfg, out); });
    guarded(Suite::envelope, [&] { check_envelope(cfg, out); });
    guarded(Suite::membership, [&] { check_membership(cfg, out); });
    guarded(Suite::powers, [&] { check_powers(cfg, out); });
    guarded(Suite::census, [&] { check_census(cfg, out); });

    FactorSuites fs{wanted(Suite::gap_pattern), wanted(Suite::gaps), wanted(Suite::positions), wanted(Suite::uniqueness)};
    if (fs.any()) {
        unsigned threads = cfg.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : cfg.threads;
        threads = static_cast<unsigned>(std::min<Index>(threads, cfg.max_factor_len));
        std::vector<std::vector<Index>> buckets(threads);
        // Longer factors cost more; deal lengths from the top so buckets stay balanced.
        for (Index len = cfg.max_factor_len, k = 0; len >= 1; --len, ++k) {
            buckets[static_cast<std::size_t>(k % threads)].push_back(len);
        }
        std::vector<std::future<WorkerResult>> jobs;
        for (auto& bucket : buckets) {
            jobs.push_back(std::async(threads == 1 ? std::launch::deferred : std::launch::async, run_factor_worker,
                                      std::cref(cfg), fs, std::move(bucket), std::cref(deadline)));
        }
        for (auto& job : jobs) {
            WorkerResult r = job.get();
            out.items.insert(out.items.end(), r.out.items.begin(), r.out.items.end());
            out.checks += r.out.checks;
            report.factors_checked += r.factors;
            report.pairs_checked += r.pairs;
            report.pairs_skipped += r.skipped;
            report.complete = report.complete && r.complete;
            report.notes.insert(report.notes.end(), r.notes.begin(), r.notes.end());
        }
    }

    report.checks_run = out.checks;
    report.divergences = std::move(out.items);
    std::sort(report.divergences.begin(), report.divergences.end());
    std::sort(report.notes.begin(), report.notes.end());
    return report;
}

}  // namespace pdgaps
