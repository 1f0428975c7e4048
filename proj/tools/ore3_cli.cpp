// ore3: command-line front end.
//
// Exit codes: 0 success / true, 1 valid but negative result, 2 usage or input error.

#include "ore3/absorbing.hpp"
#include "ore3/constructions.hpp"
#include "ore3/edge_list.hpp"
#include "ore3/extremal.hpp"
#include "ore3/lemma_lab.hpp"
#include "ore3/matching.hpp"
#include "ore3/report.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>

using namespace ore3;

namespace {

constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

Hypergraph3 load(const std::string& path)
{
    if (path == "-")
        return read_edge_list(std::cin);
    return read_edge_list_file(path);
}

void emit_json(const std::string& path, const Json& j)
{
    if (path == "-") {
        std::cout << j.dump(2) << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw UsageError("cannot write " + path);
    out << j.dump(2) << '\n';
}

class Stopwatch
{
public:
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string triple_text(const Triple& t)
{
    return std::to_string(t[0]) + ' ' + std::to_string(t[1]) + ' ' + std::to_string(t[2]);
}

// --- construct -----------------------------------------------------------------

struct ConstructArgs
{
    std::string family;
    std::size_t n = 0, x = 0, y = 0, s = 0, ell = 0;
    double p = 0.5;
    std::uint64_t seed = kDefaultSeed;
    std::string out = "-";
};

int run_construct(const ConstructArgs& a)
{
    Hypergraph3 g;
    std::vector<std::string> comments;
    if (a.family == "h12" || a.family == "h-ell") {
        const auto inst = a.family == "h12" ? h12(a.n, a.x, a.y) : h_ell(a.n, a.s, a.ell);
        comments.push_back(inst.tag());
        for (const auto& line : inst.partition.annotations())
            comments.push_back(line);
        g = inst.graph;
    } else if (a.family == "random") {
        std::mt19937_64 rng(a.seed);
        g = random_hypergraph(a.n, a.p, rng);
        comments.push_back("random n=" + std::to_string(a.n) + " p=" + std::to_string(a.p) +
                           " seed=" + std::to_string(a.seed));
    } else {
        throw UsageError("unknown family '" + a.family + "' (h12, h-ell, random)");
    }
    if (a.out == "-") {
        write_edge_list(std::cout, g, comments);
    } else {
        std::ofstream out(a.out);
        if (!out)
            throw UsageError("cannot write " + a.out);
        write_edge_list(out, g, comments);
    }
    return 0;
}

// --- stats / match -----------------------------------------------------------------

int run_stats(const std::string& path, const std::string& json)
{
    const Stopwatch clock;
    const auto g = load(path);
    const auto s = sigma2(g);
    const auto alpha = independence_number(g);
    if (!json.empty()) {
        Json r{{"n", g.order()},
               {"m", g.edge_count()},
               {"delta1", g.order() ? Json(min_degree(g)) : Json(nullptr)},
               {"sigma2", s ? Json(*s) : Json(nullptr)},
               {"alpha", alpha.size},
               {"independent_witness", alpha.witness}};
        emit_json(json, run_report("stats", {{"graph", path}}, clock.seconds(), std::nullopt, r));
        return 0;
    }
    std::cout << "n " << g.order() << '\n' << "m " << g.edge_count() << '\n';
    std::cout << "delta1 " << (g.order() ? std::to_string(min_degree(g)) : "none") << '\n';
    std::cout << "sigma2 " << (s ? std::to_string(*s) : "none") << '\n';
    std::cout << "alpha " << alpha.size << '\n';
    return 0;
}

int run_match(const std::string& path, bool perfect, const std::string& json)
{
    const Stopwatch clock;
    const auto g = load(path);
    std::optional<MatchingCertificate> m;
    if (perfect) {
        if (g.order() % 3 != 0)
            throw UsageError("perfect matching needs n divisible by 3");
        m = has_perfect_matching(g);
    } else {
        m = max_matching(g);
    }
    if (!json.empty()) {
        Json r{{"mode", perfect ? "perfect" : "max"}, {"found", m.has_value()}};
        if (m)
            r["matching"] = to_json(*m);
        emit_json(json, run_report("match", {{"graph", path}, {"perfect", perfect}}, clock.seconds(), std::nullopt, r));
    } else if (m) {
        std::cout << "size " << m->size << '\n' << "perfect " << (m->perfect ? "true" : "false") << '\n';
        for (const auto& e : m->edges)
            std::cout << "M: " << triple_text(e) << '\n';
    } else {
        std::cout << "no perfect matching\n";
    }
    if (perfect)
        return m ? 0 : 1;
    return 0;
}

// --- sweep / certify -----------------------------------------------------------------

int run_sweep(std::size_t n, bool csv, unsigned threads, const std::string& json)
{
    const Stopwatch clock;
    SweepOptions opt;
    opt.threads = threads;
    const auto s = sweep_max_sigma2(n, opt);
    if (csv)
        std::cout << sweep_csv(s);
    if (!json.empty()) {
        auto r = to_json(s);
        r["closed_form"] = closed_form_max(std::int64_t(n));
        emit_json(json, run_report("sweep", {{"n", n}, {"threads", threads}}, clock.seconds(), std::nullopt, r));
    }
    if (!csv && json.empty()) {
        std::cout << "n " << n << "\nmax " << s.max << "\nclosed_form " << closed_form_max(std::int64_t(n))
                  << "\nargmax";
        for (const auto& [x, y] : s.argmax)
            std::cout << " (" << x << ',' << y << ')';
        std::cout << '\n';
    }
    return 0;
}

int run_certify(std::size_t n, unsigned threads, const std::string& json)
{
    const Stopwatch clock;
    CertifyOptions opt;
    opt.sweep.threads = threads;
    const auto r = certify_counterexample(n, opt);
    if (!json.empty()) {
        emit_json(json, run_report("certify", {{"n", n}}, clock.seconds(), std::nullopt, to_json(r)));
    } else {
        std::cout << "n " << r.n << "  (x, y) = (" << r.x << ", " << r.y << ")\n"
                  << "sigma2 " << r.sigma2 << "  threshold " << r.threshold << "  closed_form " << r.closed_form
                  << '\n'
                  << "max_matching " << r.max_matching << " (" << r.matching_method << ")  perfect would need "
                  << n / 3 << '\n'
                  << "independence_number " << r.independence_number << "  needed for embedding " << n / 3 + 1
                  << '\n'
                  << "sigma2 > threshold: " << (r.degree_sum_exceeds ? "yes" : "no") << '\n'
                  << "no perfect matching: " << (r.no_perfect_matching ? "yes" : "no") << '\n'
                  << "not a subgraph of the half-size construction: " << (r.not_in_h2 ? "yes" : "no") << '\n';
    }
    return r.all_hold() ? 0 : 1;
}

// --- verify-lemma -----------------------------------------------------------------

struct LemmaArgs
{
    std::string id;
    bool exhaustive = false;
    std::uint64_t samples = 0;
    std::uint64_t seed = kDefaultSeed;
    std::size_t n = 0, s = 2, a = 2, b = 1;
    unsigned restarts = 100;
    unsigned threads = 1;
    std::string json;
};

int run_verify_lemma(LemmaArgs a)
{
    const Stopwatch clock;
    LemmaOptions opt;
    opt.seed = a.seed;
    opt.threads = a.threads;
    opt.restarts = a.restarts;
    if (a.exhaustive && a.samples)
        throw UsageError("--exhaustive and --samples are mutually exclusive");

    auto choose_mode = [&](bool feasible) {
        if (a.samples) {
            opt.exhaustive = false;
            opt.samples = a.samples;
        } else {
            opt.exhaustive = a.exhaustive || feasible;
        }
    };

    Json params{{"id", a.id}};
    LemmaVerdict v;
    if (a.id == "bipartite-fact") {
        v = verify_bipartite_fact();
    } else if (a.id == "kpartite-16") {
        v = verify_kpartite_nopm_bound(opt);
    } else if (a.id == "weighted-20") {
        v = verify_weighted_degree_bound(opt);
    } else if (a.id == "aharoni-howard") {
        if (a.n == 0)
            a.n = 2;
        choose_mode(a.n <= 2);
        params["n"] = a.n;
        params["s"] = a.s;
        v = verify_aharoni_howard(a.n, a.s, opt);
    } else if (a.id == "intersect-6n" || a.id == "intersect-3n") {
        const bool six = a.id == "intersect-6n";
        if (a.n == 0)
            a.n = six ? 4 : 5;
        choose_mode(a.n <= 5);
        params["n"] = a.n;
        v = six ? verify_intersecting_bound_6n(a.n, opt) : verify_intersecting_bound_3n(a.n, opt);
    } else if (a.id == "ab-6a" || a.id == "ab-8a") {
        choose_mode(a.a + a.b <= 5);
        params["a"] = a.a;
        params["b"] = a.b;
        v = a.id == "ab-6a" ? verify_ab_bound_6a(a.a, a.b, opt) : verify_ab_bound_8a(a.a, a.b, opt);
    } else {
        throw UsageError("unknown lemma id '" + a.id + "'");
    }
    params["mode"] = to_string(v.mode);
    params["threads"] = a.threads;

    const bool randomized = v.mode == SearchMode::randomized;
    if (!a.json.empty()) {
        emit_json(a.json, run_report("verify-lemma", params, clock.seconds(),
                                     randomized ? std::optional(a.seed) : std::nullopt, to_json(v)));
    } else {
        std::cout << "lemma " << v.id << '\n'
                  << "mode " << to_string(v.mode) << '\n'
                  << "universe " << v.universe_size << '\n'
                  << "hypothesis " << v.hypothesis_count << '\n'
                  << "bound " << v.bound << '\n'
                  << "max " << v.max_lhs << '\n'
                  << "counterexamples " << v.counterexamples.size() << '\n';
        for (const auto& c : v.classes)
            std::cout << "class " << c.name << " edges " << c.edges << " labeled " << c.labeled << " : "
                      << c.representative << '\n';
    }
    for (const auto& c : v.counterexamples)
        std::cerr << "counterexample:\n" << c << '\n';
    return v.holds() ? 0 : 1;
}

// --- absorb -----------------------------------------------------------------

struct AbsorbArgs
{
    std::string graph;
    std::size_t samples = 20, target = 2, leftover = 6, budget = 200;
    unsigned restarts = 5;
    std::uint64_t seed = kDefaultSeed;
    std::string json;
};

int run_absorb(const AbsorbArgs& a)
{
    const Stopwatch clock;
    const auto g = load(a.graph);
    std::mt19937_64 rng(a.seed);
    FamilyOptions fo;
    fo.budget = a.budget;
    fo.restarts = a.restarts;
    fo.reserve = a.leftover;
    const auto fam = build_family(g, a.samples, a.target, rng, fo);
    validate_family(g, fam.family);

    Json demo{{"requested", a.leftover}};
    bool absorbed = false;
    const auto used = fam.family.vertices();
    std::vector<Vertex> free;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!std::binary_search(used.begin(), used.end(), v))
            free.push_back(v);
    if (free.size() >= a.leftover) {
        std::vector<Vertex> vprime;
        std::sample(free.begin(), free.end(), std::back_inserter(vprime), a.leftover, rng);
        demo["leftover"] = vprime;
        try {
            const auto res = absorb(g, fam.family, vprime, rng);
            demo["outcome"] = "success";
            demo["transcript"] = to_json(res);
            absorbed = true;
        } catch (const AbsorbError& e) {
            demo["outcome"] = to_string(e.kind());
            demo["error"] = e.what();
        }
    } else {
        demo["outcome"] = "skipped";
        demo["error"] = "not enough vertices outside the family";
    }

    if (!a.json.empty()) {
        Json r{{"family", to_json(fam)}, {"absorb_demo", demo}};
        Json params{{"graph", a.graph},       {"samples", a.samples}, {"target", a.target},
                    {"leftover", a.leftover}, {"budget", a.budget},   {"restarts", a.restarts}};
        emit_json(a.json, run_report("absorb", params, clock.seconds(), a.seed, r));
    } else {
        std::cout << "absorbers " << fam.family.sets.size() << '\n'
                  << "coverage " << fam.coverage_fraction << " (min " << fam.min_count << ", target " << fam.target
                  << ")\n"
                  << "absorb " << demo["outcome"].get<std::string>() << '\n';
    }
    return absorbed && fam.coverage_fraction == 1.0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"ore3: degree-sum perfect-matching toolkit for 3-uniform hypergraphs"};
    app.set_version_flag("--version", std::string(ORE3_VERSION));
    app.require_subcommand(1);

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "Write an extremal or random 3-graph as an edge list");
    construct->add_option("family", ca.family, "h12 | h-ell | random")->required();
    construct->add_option("--n", ca.n, "Order")->required();
    construct->add_option("--x", ca.x, "h12: size of R");
    construct->add_option("--y", ca.y, "h12: offset of T");
    construct->add_option("--s", ca.s, "h-ell: forbidden matching size");
    construct->add_option("--ell", ca.ell, "h-ell: 1, 2 or 3");
    construct->add_option("--p", ca.p, "random: edge probability");
    construct->add_option("--seed", ca.seed, "random: seed");
    construct->add_option("--out", ca.out, "Output file (- for stdout)");

    std::string stats_path, stats_json;
    auto* stats = app.add_subcommand("stats", "Print n, m, minimum degree, sigma2, independence number");
    stats->add_option("file", stats_path, "Edge-list file (- for stdin)")->required();
    stats->add_option("--json", stats_json, "Write JSON report (- for stdout)");

    std::string match_path, match_json;
    bool match_perfect = false, match_max = false;
    auto* match = app.add_subcommand("match", "Perfect or maximum matching");
    match->add_option("file", match_path, "Edge-list file (- for stdin)")->required();
    auto* fp = match->add_flag("--perfect", match_perfect, "Decide perfect matching (exit 1 if none)");
    auto* fm = match->add_flag("--max", match_max, "Maximum matching");
    fp->excludes(fm);
    match->add_option("--json", match_json, "Write JSON report (- for stdout)");

    std::size_t sweep_n = 0;
    bool sweep_csv_flag = false;
    unsigned sweep_threads = 1;
    std::string sweep_json;
    auto* sweep = app.add_subcommand("sweep", "Degree-sum sweep over the (x, y) grid");
    sweep->add_option("--n", sweep_n, "Order (multiple of 3, at least 9)")->required();
    sweep->add_flag("--csv", sweep_csv_flag, "Print the grid as CSV");
    sweep->add_option("--threads", sweep_threads, "Worker threads");
    sweep->add_option("--json", sweep_json, "Write JSON report (- for stdout)");

    std::size_t cert_n = 0;
    unsigned cert_threads = 1;
    std::string cert_json;
    auto* certify = app.add_subcommand("certify", "Certify the counterexample construction at order n");
    certify->add_option("--n", cert_n, "Order (multiple of 3, at least 9)")->required();
    certify->add_option("--threads", cert_threads, "Worker threads");
    certify->add_option("--json", cert_json, "Write JSON report (- for stdout)");

    LemmaArgs la;
    auto* lemma = app.add_subcommand("verify-lemma", "Verify a finite lemma exhaustively or by random search");
    lemma->add_option("--id", la.id,
                      "bipartite-fact | kpartite-16 | weighted-20 | aharoni-howard | intersect-6n | intersect-3n | "
                      "ab-6a | ab-8a")
        ->required();
    lemma->add_flag("--exhaustive", la.exhaustive, "Force exhaustive mode");
    lemma->add_option("--samples", la.samples, "Randomized mode with this many samples");
    lemma->add_option("--seed", la.seed, "Seed for randomized mode");
    lemma->add_option("--restarts", la.restarts, "Hill-climbing restarts");
    lemma->add_option("--n", la.n, "Order / grid side");
    lemma->add_option("--s", la.s, "aharoni-howard: forbidden number of disjoint cells");
    lemma->add_option("--a", la.a, "ab lemmas: |A|");
    lemma->add_option("--b", la.b, "ab lemmas: |B|");
    lemma->add_option("--threads", la.threads, "Worker threads");
    lemma->add_option("--json", la.json, "Write JSON report (- for stdout)");

    AbsorbArgs aa;
    auto* absorb_cmd = app.add_subcommand("absorb", "Build an absorbing family and absorb a random leftover");
    absorb_cmd->add_option("--graph", aa.graph, "Edge-list file (- for stdin)")->required();
    absorb_cmd->add_option("--samples", aa.samples, "Sampled 3-sets");
    absorb_cmd->add_option("--target", aa.target, "Absorbers wanted per sampled 3-set");
    absorb_cmd->add_option("--leftover", aa.leftover, "Size of the absorbed leftover");
    absorb_cmd->add_option("--budget", aa.budget, "Candidate budget per search");
    absorb_cmd->add_option("--restarts", aa.restarts, "Greedy restarts");
    absorb_cmd->add_option("--seed", aa.seed, "Seed");
    absorb_cmd->add_option("--json", aa.json, "Write JSON report (- for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (construct->parsed())
            return run_construct(ca);
        if (stats->parsed())
            return run_stats(stats_path, stats_json);
        if (match->parsed()) {
            if (!match_perfect && !match_max)
                throw UsageError("match needs --perfect or --max");
            return run_match(match_path, match_perfect, match_json);
        }
        if (sweep->parsed())
            return run_sweep(sweep_n, sweep_csv_flag, sweep_threads, sweep_json);
        if (certify->parsed())
            return run_certify(cert_n, cert_threads, cert_json);
        if (lemma->parsed())
            return run_verify_lemma(la);
        if (absorb_cmd->parsed())
            return run_absorb(aa);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const GraphError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
