#pragma once

#include "ore3/hypergraph.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ore3 {

enum class SearchMode { exhaustive, randomized };

struct LemmaOptions
{
    bool exhaustive = true;
    std::uint64_t samples = 1'000'000;  // randomized mode
    std::uint64_t seed = 0xC0FFEE;
    unsigned restarts = 100;            // hill-climbing restarts (randomized mode)
    unsigned threads = 1;
};

/// An isomorphism class found during a classification run.
struct NamedClass
{
    std::string name;
    std::size_t edges = 0;
    std::size_t labeled = 0;     // labeled graphs in the class
    std::string representative;  // canonical representative, "a-b" pairs
};

/// Outcome of one lemma verification run. Witnesses and counterexamples are
/// rendered in edge-list style text.
struct LemmaVerdict
{
    std::string id;
    std::string universe;
    SearchMode mode = SearchMode::exhaustive;
    std::uint64_t universe_size = 0;      // configurations enumerated or drawn
    std::uint64_t hypothesis_count = 0;   // of those, satisfying the hypotheses
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::int64_t bound = 0;
    std::int64_t max_lhs = 0;
    std::vector<std::string> witnesses;
    std::vector<std::string> counterexamples;
    std::vector<NamedClass> classes;

    bool holds() const { return counterexamples.empty(); }
};

// --- balanced bipartite graphs on 3+3 vertices ------------------------------
// Bit 3*i + j encodes the edge (left i, right j).

bool bipartite33_has_pm(std::uint16_t mask);
/// Minimum mask over all 3!*3!*2 relabelings (row/column permutations, side swap).
std::uint16_t bipartite33_canonical(std::uint16_t mask);
/// "B_" + lexicographically smaller sorted side-degree sequence, e.g. "B_033".
std::string bipartite33_class_name(std::uint16_t mask);

/// Every 3+3 bipartite graph: 7+ edges force a perfect matching; 6-edge non-PM
/// graphs form one class; 5-edge non-PM graphs form exactly two.
LemmaVerdict verify_bipartite_fact();

// --- 3-balanced 3-partite 3-graphs with designated vertices v^1, v^2, v^3 ------
// Part t holds local vertices u_1 (0), u_2 (1), v (2); vertex id 3t + local.
// A cell (i,j,k) is the edge {i, 3+j, 6+k}. Cells with two or more v's are excluded.

/// The 20 allowed cells, in the bit order used by the enumerations.
std::vector<std::array<std::uint8_t, 3>> kpartite_allowed_cells();

/// No-PM graphs have at most 16 edges.
LemmaVerdict verify_kpartite_nopm_bound(const LemmaOptions& opt = {});
/// No-PM graphs satisfy 2 d(v^3) + d(u_1^3) + d(u_2^3) <= 20.
LemmaVerdict verify_weighted_degree_bound(const LemmaOptions& opt = {});

// --- n-balanced 3-partite families -------------------------------------------

/// Families of cells in [n]^3 without s pairwise disjoint cells have at most
/// (s-1) n^2 cells. Exhaustive for n <= 2, randomized for n = 3.
LemmaVerdict verify_aharoni_howard(std::size_t n, std::size_t s, const LemmaOptions& opt = {});

// --- three 2-graphs on a shared vertex set -----------------------------------

/// Three 2-graphs on vertices 0..vertices-1; for the block lemmas A = 0..a-1
/// (u_1 = 0, u_2 = 1) and B = a..a+b-1 (v_1 = a).
struct TriGraphConfig
{
    std::size_t vertices = 0;
    std::array<std::vector<std::pair<Vertex, Vertex>>, 3> graphs;
    std::size_t a = 0, b = 0;
};

// Plain edge-list predicates, kept separate from the bitmask enumerations so that
// reported witnesses are re-checked by an independent implementation.

/// Every edge of G1 meets every edge of G2 and of G3.
bool hypothesis_g1_meets_all(const TriGraphConfig& c);
/// Every edge of G_i meets every edge of G_j for all i != j.
bool hypothesis_pairwise_meeting(const TriGraphConfig& c);
/// Block hypotheses: B isolated in G1; every G2/G3 edge touches A; G1 edges meet every
/// G2/G3 edge with a B vertex; G2 edges with a B vertex meet such G3 edges.
bool hypothesis_blocks(const TriGraphConfig& c);
/// sum_i sum_{v in A} deg_{G_i}(v)
std::int64_t degree_sum(const TriGraphConfig& c, std::span<const Vertex> set);
/// sum_i (deg(u_1) + deg(u_2) + v_weight * deg(v_1))
std::int64_t block_degree_sum(const TriGraphConfig& c, int v_weight);

/// Bound 6(n-1) under G1-meets-all; exhaustive for n <= 5, randomized otherwise.
LemmaVerdict verify_intersecting_bound_6n(std::size_t n, const LemmaOptions& opt = {});
/// Bound 3(n+1) under pairwise meeting; exhaustive for n <= 5, randomized otherwise.
LemmaVerdict verify_intersecting_bound_3n(std::size_t n, const LemmaOptions& opt = {});
/// Bound max{6a+2, 5a+2b+2}; exhaustive for a+b <= 5, randomized up to (6,6).
LemmaVerdict verify_ab_bound_6a(std::size_t a, std::size_t b, const LemmaOptions& opt = {});
/// Bound max{8a+2, 6a+2b+4} with v_1 weighted twice.
LemmaVerdict verify_ab_bound_8a(std::size_t a, std::size_t b, const LemmaOptions& opt = {});

std::string to_string(SearchMode m);

} // namespace ore3
