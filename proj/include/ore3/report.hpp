#pragma once

#include "ore3/absorbing.hpp"
#include "ore3/extremal.hpp"
#include "ore3/lemma_lab.hpp"
#include "ore3/matching.hpp"

#include "json.hpp"

#include <optional>
#include <string>

namespace ore3 {

using Json = nlohmann::ordered_json;

Json to_json(const MatchingCertificate& m);
Json to_json(const SweepResult& s);
Json to_json(const CounterexampleReport& r);
Json to_json(const LemmaVerdict& v);
Json to_json(const FamilyReport& f);
Json to_json(const AbsorbResult& r);

/// Sweep table with the fixed column order x,y,sigma2,two_f1,f2,is_max.
/// A missing sigma2 is written as an empty field.
std::string sweep_csv(const SweepResult& s);

/// Envelope shared by every subcommand's JSON output.
Json run_report(const std::string& subcommand, Json parameters, double wall_time_s, std::optional<std::uint64_t> seed,
                Json result);

} // namespace ore3
