#include "ore3/report.hpp"

#include <sstream>

namespace ore3 {

namespace {

Json triples(const std::vector<Triple>& ts)
{
    Json out = Json::array();
    for (const auto& t : ts)
        out.push_back({t[0], t[1], t[2]});
    return out;
}

} // namespace

Json to_json(const MatchingCertificate& m)
{
    return Json{{"size", m.size}, {"perfect", m.perfect}, {"edges", triples(m.edges)}, {"covered", m.covered}};
}

Json to_json(const SweepResult& s)
{
    Json rows = Json::array();
    for (const auto& r : s.rows)
        rows.push_back({{"x", r.x},
                        {"y", r.y},
                        {"sigma2", r.sigma2 ? Json(*r.sigma2) : Json(nullptr)},
                        {"two_f1", r.two_f1},
                        {"f2", r.f2},
                        {"is_max", r.is_max},
                        {"from_construction", r.from_construction}});
    Json argmax = Json::array();
    for (const auto& [x, y] : s.argmax)
        argmax.push_back({x, y});
    return Json{{"n", s.n}, {"max", s.max}, {"argmax", argmax}, {"rows", rows}};
}

Json to_json(const CounterexampleReport& r)
{
    return Json{{"n", r.n},
                {"x", r.x},
                {"y", r.y},
                {"sigma2", r.sigma2},
                {"threshold", r.threshold},
                {"closed_form", r.closed_form},
                {"isolated_vertices", r.isolated},
                {"max_matching", r.max_matching},
                {"matching_method", r.matching_method},
                {"structural_bound", r.structural_bound},
                {"matching_witness", triples(r.matching_witness)},
                {"independence_number", r.independence_number},
                {"independent_witness", r.independent_witness},
                {"conditions",
                 {{"degree_sum_exceeds_threshold", r.degree_sum_exceeds},
                  {"no_perfect_matching", r.no_perfect_matching},
                  {"not_subgraph_of_h2", r.not_in_h2}}},
                {"all_hold", r.all_hold()}};
}

Json to_json(const LemmaVerdict& v)
{
    Json classes = Json::array();
    for (const auto& c : v.classes)
        classes.push_back(
            {{"name", c.name}, {"edges", c.edges}, {"labeled", c.labeled}, {"representative", c.representative}});
    Json out{{"id", v.id},
             {"universe", v.universe},
             {"mode", to_string(v.mode)},
             {"universe_size", v.universe_size},
             {"hypothesis_count", v.hypothesis_count},
             {"bound", v.bound},
             {"max_lhs", v.max_lhs},
             {"holds", v.holds()},
             {"witnesses", v.witnesses},
             {"counterexamples", v.counterexamples},
             {"classes", classes}};
    if (v.mode == SearchMode::randomized) {
        out["samples"] = v.samples;
        out["seed"] = v.seed;
    }
    return out;
}

Json to_json(const FamilyReport& f)
{
    Json sets = Json::array();
    for (const auto& s : f.family.sets) {
        Json tags = Json::array();
        for (const auto& a : s.tags)
            tags.push_back({a[0], a[1], a[2]});
        sets.push_back({{"vertices", s.vertices}, {"tags", tags}, {"matching", triples(s.matching)}});
    }
    Json coverage = Json::array();
    for (const auto& row : f.coverage)
        coverage.push_back({{"a", {row.a[0], row.a[1], row.a[2]}}, {"absorbers", row.absorbers}});
    return Json{{"k", f.family.k},
                {"sets", sets},
                {"matching", triples(f.family.matching)},
                {"coverage", coverage},
                {"coverage_fraction", f.coverage_fraction},
                {"min_count", f.min_count},
                {"target", f.target},
                {"best_restart", f.best_restart},
                {"split",
                 {{"low", f.split.low.size()},
                  {"high", f.split.high.size()},
                  {"threshold", f.split.threshold},
                  {"sigma2_hypothesis", f.split.sigma2_hypothesis},
                  {"low_pair_in_edge", f.split.low_pair_in_edge}}}};
}

Json to_json(const AbsorbResult& r)
{
    Json routing = Json::array();
    for (const auto& s : r.routing)
        routing.push_back({{"part", {s.part[0], s.part[1], s.part[2]}}, {"absorber", s.absorber}});
    return Json{{"partitions_tried", r.partitions_tried}, {"routing", routing}, {"matching", to_json(r.matching)}};
}

std::string sweep_csv(const SweepResult& s)
{
    std::ostringstream os;
    os << "x,y,sigma2,two_f1,f2,is_max\n";
    for (const auto& r : s.rows) {
        os << r.x << ',' << r.y << ',';
        if (r.sigma2)
            os << *r.sigma2;
        os << ',' << r.two_f1 << ',' << r.f2 << ',' << (r.is_max ? 1 : 0) << '\n';
    }
    return os.str();
}

Json run_report(const std::string& subcommand, Json parameters, double wall_time_s, std::optional<std::uint64_t> seed,
                Json result)
{
    return Json{{"subcommand", subcommand},
                {"version", ORE3_VERSION},
                {"parameters", std::move(parameters)},
                {"seed", seed ? Json(*seed) : Json(nullptr)},
                {"wall_time_s", wall_time_s},
                {"result", std::move(result)}};
}

} // namespace ore3
