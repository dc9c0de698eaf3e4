#include "pdgaps/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <optional>

#include "pdgaps/census.hpp"
#include "pdgaps/doubling.hpp"
#include "pdgaps/error.hpp"
#include "pdgaps/gaps.hpp"
#include "pdgaps/render.hpp"
#include "pdgaps/verify.hpp"

namespace pdgaps::cli {

namespace {

struct Range {
    Index first;
    Index last;
    bool is_range;
};

Index parse_index(std::string_view text) {
    Index value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw InvalidArgument("not an integer: '" + std::string(text) + "'");
    }
    return value;
}

// "n" or "a..b"
Range parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const Index n = parse_index(text);
        return {n, n, false};
    }
    const Range r{parse_index(std::string_view(text).substr(0, dots)), parse_index(std::string_view(text).substr(dots + 2)), true};
    if (r.first < 1 || r.last < r.first) throw InvalidArgument("range must satisfy 1 <= first <= last");
    return r;
}

RoleMap parse_role_map(const std::string& text) {
    RoleMap map{};
    std::size_t k = 0;
    std::string_view rest = text;
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const auto item = rest.substr(0, comma);
        if (k >= map.size()) throw InvalidArgument("role map takes three entries");
        if (item == "G1") map[k] = GapRole::G1;
        else if (item == "G2") map[k] = GapRole::G2;
        else if (item == "G4") map[k] = GapRole::G4;
        else throw InvalidArgument("unknown gap role '" + std::string(item) + "'");
        ++k;
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    if (k != map.size()) throw InvalidArgument("role map takes three entries");
    return map;
}

void emit_census(std::ostream& out, bool as_json, const Range& range, Index (*single)(Index),
                 std::vector<CensusPoint> (*table)(Index, Index)) {
    if (!range.is_range) {
        const Index value = single(range.first);
        if (as_json) {
            out << json{{"n_or_N", range.first}, {"value", value}}.dump() << '\n';
        } else {
            out << value << '\n';
        }
        return;
    }
    const auto points = table(range.first, range.last);
    if (as_json) {
        out << to_json(points).dump() << '\n';
    } else {
        write_csv(out, points);
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Envelope words, gap sequences and censuses of the period-doubling sequence", "pdgaps"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Emit JSON instead of text");

    Index n = 0;
    auto* prefix_cmd = app.add_subcommand("prefix", "First n letters of the sequence");
    prefix_cmd->add_option("n", n, "Prefix length")->required();

    std::string word_text;
    auto* env_cmd = app.add_subcommand("env", "Envelope word and extension of a factor");
    env_cmd->add_option("word", word_text, "Factor over {a,b}")->required();

    Index count = 5;
    auto* gaps_cmd = app.add_subcommand("gaps", "First gaps of a factor");
    gaps_cmd->add_option("word", word_text, "Factor over {a,b}")->required();
    gaps_cmd->add_option("--count", count, "Number of gaps")->capture_default_str();

    Index p = 1;
    auto* position_cmd = app.add_subcommand("position", "Start of the p-th occurrence of a factor");
    position_cmd->add_option("word", word_text, "Factor over {a,b}")->required();
    position_cmd->add_option("p", p, "Occurrence index (1-based)")->required();

    int theta_id = 1;
    auto* theta_cmd = app.add_subcommand("theta", "Prefix of gap sequence 1 or 2");
    theta_cmd->add_option("id", theta_id, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
    theta_cmd->add_option("n", n, "Prefix length")->required();

    std::string range_text;
    bool runs = false;
    auto* pal_cmd = app.add_subcommand("palindromes", "Number of palindromic factors of length n (or a range a..b as CSV)");
    pal_cmd->add_option("n", range_text, "Length or range")->required();
    pal_cmd->add_flag("--runs", runs, "Print the derived table of constant runs over odd lengths 5..n");

    auto* sq_cmd = app.add_subcommand("squares", "Distinct squares beginning in D[1,N] (or a range a..b as CSV)");
    sq_cmd->add_option("N", range_text, "Bound or range")->required();

    SweepConfig cfg;
    std::vector<std::string> suites;
    std::string role_map;
    auto* verify_cmd = app.add_subcommand("verify", "Differential sweep of closed forms against the brute-force oracle");
    verify_cmd->add_option("--max-len", cfg.max_factor_len, "Longest factor checked")->capture_default_str();
    verify_cmd->add_option("--max-p", cfg.max_gap_index, "Largest gap index checked")->capture_default_str();
    verify_cmd->add_option("--prefix-pow", cfg.prefix_exponent, "Oracle host is prefix(2^k)")->capture_default_str();
    verify_cmd->add_option("--identity-pow", cfg.max_identity_exponent, "Largest m for structural identities")
        ->capture_default_str();
    verify_cmd->add_option("--census-pow", cfg.census_prefix_exponent, "Census host is prefix(2^k)")->capture_default_str();
    verify_cmd->add_option("--census-max", cfg.max_census_N, "Largest N for square/cube censuses")->capture_default_str();
    verify_cmd->add_option("--palindrome-max", cfg.max_palindrome_len, "Longest palindrome length checked")
        ->capture_default_str();
    verify_cmd->add_option("--suite", suites, "Run only these suites (repeatable)");
    verify_cmd->add_option("--threads", cfg.threads, "Worker threads, 0 for all cores")->capture_default_str();
    verify_cmd->add_option("--time-budget", cfg.time_budget_seconds, "Seconds before the sweep stops, 0 for none");
    verify_cmd->add_option("--role-map", role_map, "Roles for letters a,b,c, e.g. G1,G2,G4 (fault injection)");
    bool no_golden = false;
    verify_cmd->add_flag("--no-golden", no_golden, "Skip the golden examples");

    std::vector<const char*> argv{"pdgaps"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*prefix_cmd) {
            const Word w = prefix(n);
            if (as_json) {
                out << json{{"n", n}, {"word", to_json(w)}}.dump() << '\n';
            } else {
                out << to_string(w) << '\n';
            }
        } else if (*env_cmd) {
            const auto ext = extension_of(Word{word_text});
            if (as_json) {
                out << to_json(ext).dump() << '\n';
            } else {
                out << to_string(ext.env) << " = " << to_string(ext.mu1 + ext.factor + ext.mu2) << ", mu1 = "
                    << to_string(ext.mu1) << ", mu2 = " << to_string(ext.mu2) << '\n';
            }
        } else if (*gaps_cmd) {
            const auto ext = extension_of(Word{word_text});
            const auto seq = gap_sequence(ext, count);
            if (as_json) {
                json gaps = json::array();
                for (std::size_t k = 0; k < seq.size(); ++k) {
                    json g = to_json(seq[k].gap);
                    g["p"] = k + 1;
                    g["role"] = to_string(seq[k].role);
                    gaps.push_back(std::move(g));
                }
                out << json{{"word", to_json(ext.factor)}, {"env", to_string(ext.env)}, {"gaps", gaps}}.dump() << '\n';
            } else {
                for (std::size_t k = 0; k < seq.size(); ++k) {
                    out << (k ? " | " : "") << "p=" << k + 1 << ' ' << to_string(seq[k].gap);
                }
                out << '\n';
            }
        } else if (*position_cmd) {
            const Index pos = position_of(Word{word_text}, p);
            if (as_json) {
                out << json{{"word", word_text}, {"p", p}, {"position", pos}}.dump() << '\n';
            } else {
                out << pos << '\n';
            }
        } else if (*theta_cmd) {
            const std::string t = theta_prefix(theta_id == 1 ? ThetaId::Theta1 : ThetaId::Theta2, n);
            if (as_json) {
                out << json{{"theta", theta_id}, {"n", n}, {"prefix", t}}.dump() << '\n';
            } else {
                out << (t.empty() ? "eps" : t) << '\n';
            }
        } else if (*pal_cmd) {
            const Range range = parse_range(range_text);
            if (runs) {
                json table = json::array();
                if (!as_json) out << "first_length,last_length,count\n";
                for (const auto& r : palindrome_runs(range.last)) {
                    if (as_json) {
                        table.push_back({{"first_length", r.first_length}, {"last_length", r.last_length}, {"count", r.count}});
                    } else {
                        out << r.first_length << ',' << r.last_length << ',' << r.count << '\n';
                    }
                }
                if (as_json) out << json{{"derived", true}, {"runs", table}}.dump() << '\n';
            } else {
                emit_census(out, as_json, range, palindrome_census, palindrome_table);
            }
        } else if (*sq_cmd) {
            emit_census(out, as_json, parse_range(range_text), square_census, square_table);
        } else if (*verify_cmd) {
            for (const auto& s : suites) cfg.suites.push_back(parse_suite(s));
            if (!role_map.empty()) cfg.role_map = parse_role_map(role_map);
            cfg.seed_examples = !no_golden;
            const SweepReport report = sweep(cfg);
            for (const auto& d : report.divergences) out << to_json(d).dump() << '\n';
            if (as_json) {
                out << to_json(report).dump() << '\n';
            } else {
                if (!report.complete) {
                    for (const auto& note : report.notes) err << "note: " << note << '\n';
                    out << "incomplete sweep\n";
                }
                out << report.divergences.size() << " divergences\n";
            }
            if (!report.divergences.empty()) return kDivergences;
            if (!report.complete) return kBudget;
        }
    } catch (const NotAFactor& e) {
        err << "error: " << e.what() << '\n';
        return kNotAFactor;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kBudget;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kOk;
}

}  // namespace pdgaps::cli
