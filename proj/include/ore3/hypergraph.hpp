#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ore3 {

using Vertex = std::uint32_t;
using Count = std::uint64_t;

/// A vertex triple. Inside a Hypergraph3 triples are always strictly increasing.
using Triple = std::array<Vertex, 3>;

/// Thrown for malformed graph input: bad vertex ids, repeated vertices, overlapping
/// vertex sets passed to link queries.
class GraphError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// 3-uniform hypergraph on vertices 0..n-1.
///
/// Edges are stored once, sorted lexicographically, together with a per-vertex
/// incidence index (CSR) and a dense codegree table. The object is immutable after
/// build(), so every query is safe to run concurrently.
class Hypergraph3
{
public:
    Hypergraph3() = default;

    /// Canonicalizes and deduplicates `triples`. Throws GraphError on vertices >= n
    /// or repeated vertices within a triple.
    static Hypergraph3 build(std::size_t n, std::span<const Triple> triples);

    static Hypergraph3 build(std::size_t n, std::initializer_list<Triple> triples)
    {
        return build(n, std::span<const Triple>(triples.begin(), triples.size()));
    }

    std::size_t order() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Triple>& edges() const { return edges_; }

    /// Ids (indices into edges()) of the edges containing v, ascending.
    std::span<const std::uint32_t> incident(Vertex v) const;

    Count degree(Vertex v) const;
    Count codegree(Vertex u, Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const { return codegree(u, v) > 0; }

    bool has_edge(Triple t) const;

    /// Sub-hypergraph induced on `vertices`; vertex vertices[i] becomes i.
    Hypergraph3 induced(std::span<const Vertex> vertices) const;

private:
    void check_vertex(Vertex v) const;

    std::size_t n_ = 0;
    std::vector<Triple> edges_;
    std::vector<std::uint32_t> inc_offset_;
    std::vector<std::uint32_t> inc_edges_;
    std::vector<std::uint32_t> codeg_;
};

/// Sorts a triple and validates it against vertex count n.
Triple canonical_triple(Triple t, std::size_t n);

Count degree(const Hypergraph3& h, Vertex v);
Count codegree(const Hypergraph3& h, Vertex u, Vertex v);
bool are_adjacent(const Hypergraph3& h, Vertex u, Vertex v);

/// Minimum degree over all vertices (delta_1); 0 for the empty vertex set.
Count min_degree(const Hypergraph3& h);

/// min deg(u)+deg(v) over adjacent pairs; nullopt when no pair is adjacent.
std::optional<Count> sigma2(const Hypergraph3& h);

std::vector<Vertex> isolated_vertices(const Hypergraph3& h);

/// 2-graph on a declared vertex universe.
struct LinkGraph
{
    std::vector<Vertex> universe;                  // sorted
    std::vector<std::pair<Vertex, Vertex>> pairs;  // each pair (a<b), sorted, inside universe

    /// Validates and normalizes; throws GraphError on loops, duplicates or pairs
    /// leaving the universe.
    static LinkGraph make(std::vector<Vertex> universe, std::vector<std::pair<Vertex, Vertex>> pairs);

    std::size_t edge_count() const { return pairs.size(); }
    bool contains(Vertex a, Vertex b) const;
    std::size_t degree(Vertex v) const;
};

/// L_v(A): pairs {a,b} inside A with {a,b,v} an edge. Requires v not in A.
LinkGraph link(const Hypergraph3& h, Vertex v, std::span<const Vertex> a);

/// L_v(A,B): pairs a in A, b in B with {a,b,v} an edge. Requires A, B, {v} pairwise
/// disjoint.
LinkGraph link_bipartite(const Hypergraph3& h, Vertex v, std::span<const Vertex> a,
                         std::span<const Vertex> b);

struct IndependenceResult
{
    std::size_t size = 0;
    std::vector<Vertex> witness;  // sorted, pairwise non-adjacent
};

/// Exact independence number of the adjacency 2-graph (no two vertices of the set
/// share an edge), with a witness.
IndependenceResult independence_number(const Hypergraph3& h);

struct H2Embedding
{
    bool embeds = false;
    /// When embeds: the n/3+1 vertices placed on the small side, each edge meets it
    /// at most once. Otherwise a maximum independent set (too small).
    std::vector<Vertex> small_side;
};

/// Whether h is (on the same vertex set) a subgraph of H^2_{n,n/3}. Throws
/// GraphError when n is not divisible by 3.
H2Embedding is_subgraph_of_h2(const Hypergraph3& h);

/// True iff every edge of h meets `s` in at most one vertex.
bool meets_every_edge_at_most_once(const Hypergraph3& h, std::span<const Vertex> s);

} // namespace ore3
