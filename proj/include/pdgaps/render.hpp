#pragma once

#include <ostream>
#include <span>

#include "json.hpp"
#include "pdgaps/census.hpp"
#include "pdgaps/envelope.hpp"
#include "pdgaps/gaps.hpp"
#include "pdgaps/verify.hpp"

namespace pdgaps {

using nlohmann::json;

json to_json(const Word& w);
Word word_from_json(const json& j);

// {"kind", "body", "signed_length", "text"}
json to_json(const Gap& g);
Gap gap_from_json(const json& j);

json to_json(const EnvelopeExtension& ext);
json to_json(const Divergence& d);
json to_json(const SweepReport& report);  // summary only, without the divergence list
json to_json(std::span<const CensusPoint> points);

// "n_or_N,value" header then one row per point.
void write_csv(std::ostream& os, std::span<const CensusPoint> points);

}  // namespace pdgaps
