#pragma once

#include "ore3/hypergraph.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ore3 {

/// A validated matching of a host hypergraph.
struct MatchingCertificate
{
    std::vector<Triple> edges;    // canonical order
    std::size_t size = 0;
    std::vector<Vertex> covered;  // sorted
    bool perfect = false;         // covered == every vertex of the host
};

/// Re-validates `edges` against `host` (membership, pairwise disjointness) and
/// builds the certificate. Throws std::logic_error if either check fails.
MatchingCertificate make_certificate(const Hypergraph3& host, std::vector<Triple> edges);

/// Orders at or below this size take the subset-DP path.
inline constexpr std::size_t kSubsetDpLimit = 24;

/// Perfect matching or a definitive "none". Subset DP for n <= kSubsetDpLimit,
/// branch-and-bound beyond. Throws GraphError when n is not divisible by 3.
std::optional<MatchingCertificate> has_perfect_matching(const Hypergraph3& h);

/// Maximum matching by branch-and-bound: branch on the uncovered vertex of minimum
/// positive degree, prune with min(floor(live/3), 3*greedy), memoize on states
/// canonicalized under twin-vertex symmetry.
MatchingCertificate max_matching(const Hypergraph3& h);

/// Maximum matching by memoized subset DP over remaining-vertex sets.
/// Throws std::invalid_argument when n > kSubsetDpLimit.
MatchingCertificate max_matching_dp(const Hypergraph3& h);

/// Perfect-matching decision by subset DP; n <= kSubsetDpLimit, n divisible by 3.
std::optional<MatchingCertificate> perfect_matching_dp(const Hypergraph3& h);

/// Vertex classes under transpositions that are automorphisms of h (twins).
/// Returns a class id per vertex, ids numbered by first appearance.
std::vector<std::uint32_t> twin_classes(const Hypergraph3& h);

// --- small structured instances -------------------------------------------

/// Cell (i,j,k) of a 3-partite 3-graph with parts of size p: the edge
/// {V1[i], V2[j], V3[k]}.
using Cell = std::array<std::uint8_t, 3>;

/// Perfect matching in a p-balanced 3-partite 3-graph by enumerating all p!*p!
/// permutation pairs. p <= 4.
bool has_pm_3partite(std::span<const Cell> cells, std::size_t p);

/// Perfect matching of a bipartite link graph with sides A, B (|A| = |B|), by
/// augmenting paths. Throws GraphError if a pair does not cross A x B or the sides
/// are unbalanced or overlap.
bool bipartite_pm(const LinkGraph& g, std::span<const Vertex> a, std::span<const Vertex> b);

struct RainbowEdge
{
    std::size_t graph;  // index into the input list
    Vertex a, b;
};

/// `want` pairwise-disjoint edges taken from `want` distinct graphs (one per graph),
/// or nullopt if none exists. Exhaustive backtracking.
std::optional<std::vector<RainbowEdge>> rainbow_matching(std::span<const LinkGraph> graphs, std::size_t want);

} // namespace ore3
