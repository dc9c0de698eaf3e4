#include "pdgaps/render.hpp"

#include "pdgaps/error.hpp"

namespace pdgaps {

json to_json(const Word& w) { return to_string(w); }

Word word_from_json(const json& j) { return Word::parse(j.get<std::string>()); }

json to_json(const Gap& g) {
    return json{{"kind", to_string(g.kind())},
                {"body", to_json(g.body())},
                {"signed_length", g.signed_length()},
                {"text", to_string(g)}};
}

Gap gap_from_json(const json& j) {
    const GapKind kind = parse_gap_kind(j.at("kind").get<std::string>());
    Word body = word_from_json(j.at("body"));
    if (kind == GapKind::adjacent && !body.empty()) throw InvalidArgument("adjacent gap with a body");
    const Gap gap = kind == GapKind::adjacent    ? Gap::adjacent()
                    : kind == GapKind::separated ? Gap::separated(std::move(body))
                                                 : Gap::overlapped(std::move(body));
    if (j.contains("signed_length") && j.at("signed_length").get<Index>() != gap.signed_length()) {
        throw InvalidArgument("gap signed_length does not match its body");
    }
    return gap;
}

json to_json(const EnvelopeExtension& ext) {
    return json{{"factor", to_json(ext.factor)},
                {"env", to_string(ext.env)},
                {"m", ext.env.m()},
                {"i", ext.env.i()},
                {"envelope", to_json(ext.mu1 + ext.factor + ext.mu2)},
                {"mu1", to_json(ext.mu1)},
                {"mu2", to_json(ext.mu2)},
                {"class", to_string(classify(ext))}};
}

json to_json(const Divergence& d) {
    return json{{"claim", to_string(d.claim)}, {"witness", d.witness}, {"expected", d.expected}, {"actual", d.actual}};
}

json to_json(const SweepReport& report) {
    return json{{"divergences", report.divergences.size()},
                {"complete", report.complete},
                {"factors_checked", report.factors_checked},
                {"pairs_checked", report.pairs_checked},
                {"pairs_skipped", report.pairs_skipped},
                {"checks_run", report.checks_run}};
}

json to_json(std::span<const CensusPoint> points) {
    json out = json::array();
    for (const auto& p : points) out.push_back({{"n_or_N", p.n_or_N}, {"value", p.value}});
    return out;
}

void write_csv(std::ostream& os, std::span<const CensusPoint> points) {
    os << "n_or_N,value\n";
    for (const auto& p : points) os << p.n_or_N << ',' << p.value << '\n';
}

}  // namespace pdgaps
