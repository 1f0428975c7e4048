#include "ore3/hypergraph.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace ore3 {

Triple canonical_triple(Triple t, std::size_t n)
{
    std::sort(t.begin(), t.end());
    if (t[2] >= n)
        throw GraphError("vertex " + std::to_string(t[2]) + " out of range for n=" + std::to_string(n));
    if (t[0] == t[1] || t[1] == t[2])
        throw GraphError("triple repeats vertex " + std::to_string(t[1]));
    return t;
}

Hypergraph3 Hypergraph3::build(std::size_t n, std::span<const Triple> triples)
{
    if (n > std::numeric_limits<Vertex>::max())
        throw GraphError("vertex count too large");

    Hypergraph3 h;
    h.n_ = n;
    h.edges_.reserve(triples.size());
    for (const auto& t : triples)
        h.edges_.push_back(canonical_triple(t, n));
    std::sort(h.edges_.begin(), h.edges_.end());
    h.edges_.erase(std::unique(h.edges_.begin(), h.edges_.end()), h.edges_.end());

    h.inc_offset_.assign(n + 1, 0);
    for (const auto& e : h.edges_)
        for (auto v : e)
            ++h.inc_offset_[v + 1];
    for (std::size_t v = 0; v < n; ++v)
        h.inc_offset_[v + 1] += h.inc_offset_[v];
    h.inc_edges_.resize(h.inc_offset_[n]);
    std::vector<std::uint32_t> fill(h.inc_offset_.begin(), h.inc_offset_.end() - 1);
    for (std::uint32_t id = 0; id < h.edges_.size(); ++id)
        for (auto v : h.edges_[id])
            h.inc_edges_[fill[v]++] = id;

    h.codeg_.assign(n * n, 0);
    for (const auto& e : h.edges_) {
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                ++h.codeg_[e[i] * n + e[j]];
                ++h.codeg_[e[j] * n + e[i]];
            }
    }
    return h;
}

void Hypergraph3::check_vertex(Vertex v) const
{
    if (v >= n_)
        throw GraphError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
}

std::span<const std::uint32_t> Hypergraph3::incident(Vertex v) const
{
    check_vertex(v);
    return {inc_edges_.data() + inc_offset_[v], inc_edges_.data() + inc_offset_[v + 1]};
}

Count Hypergraph3::degree(Vertex v) const
{
    check_vertex(v);
    return inc_offset_[v + 1] - inc_offset_[v];
}

Count Hypergraph3::codegree(Vertex u, Vertex v) const
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw GraphError("codegree needs two distinct vertices");
    return codeg_[u * n_ + v];
}

bool Hypergraph3::has_edge(Triple t) const
{
    std::sort(t.begin(), t.end());
    return std::binary_search(edges_.begin(), edges_.end(), t);
}

Hypergraph3 Hypergraph3::induced(std::span<const Vertex> vertices) const
{
    constexpr Vertex absent = std::numeric_limits<Vertex>::max();
    std::vector<Vertex> relabel(n_, absent);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        check_vertex(vertices[i]);
        if (relabel[vertices[i]] != absent)
            throw GraphError("induced: repeated vertex");
        relabel[vertices[i]] = static_cast<Vertex>(i);
    }

    std::vector<Triple> kept;
    // Enumerating triples inside the subset is cheaper than scanning all edges
    // when the subset is small relative to the edge set.
    const std::size_t k = vertices.size();
    const std::size_t subset_triples = k < 3 ? 0 : k * (k - 1) * (k - 2) / 6;
    if (subset_triples * 16 < edges_.size()) {
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = a + 1; b < k; ++b) {
                if (codeg_[vertices[a] * n_ + vertices[b]] == 0)
                    continue;
                for (std::size_t c = b + 1; c < k; ++c)
                    if (has_edge({vertices[a], vertices[b], vertices[c]}))
                        kept.push_back({Vertex(a), Vertex(b), Vertex(c)});
            }
    } else {
        for (const auto& e : edges_) {
            if (relabel[e[0]] == absent || relabel[e[1]] == absent || relabel[e[2]] == absent)
                continue;
            kept.push_back({relabel[e[0]], relabel[e[1]], relabel[e[2]]});
        }
    }
    return build(k, kept);
}

Count degree(const Hypergraph3& h, Vertex v) { return h.degree(v); }
Count codegree(const Hypergraph3& h, Vertex u, Vertex v) { return h.codegree(u, v); }

bool are_adjacent(const Hypergraph3& h, Vertex u, Vertex v)
{
    if (u == v)
        throw GraphError("adjacency needs two distinct vertices");
    return h.adjacent(u, v);
}

Count min_degree(const Hypergraph3& h)
{
    if (h.order() == 0)
        return 0;
    Count best = std::numeric_limits<Count>::max();
    for (Vertex v = 0; v < h.order(); ++v)
        best = std::min(best, h.degree(v));
    return best;
}

std::optional<Count> sigma2(const Hypergraph3& h)
{
    std::optional<Count> best;
    const auto n = static_cast<Vertex>(h.order());
    for (Vertex u = 0; u < n; ++u) {
        const Count du = h.degree(u);
        for (Vertex v = u + 1; v < n; ++v) {
            if (!h.adjacent(u, v))
                continue;
            const Count s = du + h.degree(v);
            if (!best || s < *best)
                best = s;
        }
    }
    return best;
}

std::vector<Vertex> isolated_vertices(const Hypergraph3& h)
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < h.order(); ++v)
        if (h.degree(v) == 0)
            out.push_back(v);
    return out;
}

LinkGraph LinkGraph::make(std::vector<Vertex> universe, std::vector<std::pair<Vertex, Vertex>> pairs)
{
    std::sort(universe.begin(), universe.end());
    if (std::adjacent_find(universe.begin(), universe.end()) != universe.end())
        throw GraphError("link universe repeats a vertex");
    for (auto& p : pairs) {
        if (p.first == p.second)
            throw GraphError("link pair is a loop");
        if (p.first > p.second)
            std::swap(p.first, p.second);
        if (!std::binary_search(universe.begin(), universe.end(), p.first) ||
            !std::binary_search(universe.begin(), universe.end(), p.second))
            throw GraphError("link pair leaves the universe");
    }
    std::sort(pairs.begin(), pairs.end());
    if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end())
        throw GraphError("duplicate link pair");
    return LinkGraph{std::move(universe), std::move(pairs)};
}

bool LinkGraph::contains(Vertex a, Vertex b) const
{
    if (a > b)
        std::swap(a, b);
    return std::binary_search(pairs.begin(), pairs.end(), std::pair{a, b});
}

std::size_t LinkGraph::degree(Vertex v) const
{
    return static_cast<std::size_t>(std::count_if(pairs.begin(), pairs.end(),
                                                  [v](const auto& p) { return p.first == v || p.second == v; }));
}

namespace {

std::vector<char> membership(const Hypergraph3& h, std::span<const Vertex> s, const char* what)
{
    std::vector<char> in(h.order(), 0);
    for (auto v : s) {
        if (v >= h.order())
            throw GraphError(std::string(what) + ": vertex out of range");
        if (in[v])
            throw GraphError(std::string(what) + ": repeated vertex");
        in[v] = 1;
    }
    return in;
}

} // namespace

LinkGraph link(const Hypergraph3& h, Vertex v, std::span<const Vertex> a)
{
    auto in_a = membership(h, a, "link");
    if (v >= h.order())
        throw GraphError("link: vertex out of range");
    if (in_a[v])
        throw GraphError("link: v must not lie in A");

    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (auto id : h.incident(v)) {
        const auto& e = h.edges()[id];
        Vertex other[2];
        int k = 0;
        for (auto w : e)
            if (w != v)
                other[k++] = w;
        if (in_a[other[0]] && in_a[other[1]])
            pairs.emplace_back(other[0], other[1]);
    }
    return LinkGraph::make({a.begin(), a.end()}, std::move(pairs));
}

LinkGraph link_bipartite(const Hypergraph3& h, Vertex v, std::span<const Vertex> a, std::span<const Vertex> b)
{
    auto in_a = membership(h, a, "link_bipartite");
    auto in_b = membership(h, b, "link_bipartite");
    if (v >= h.order())
        throw GraphError("link_bipartite: vertex out of range");
    for (auto w : b)
        if (in_a[w])
            throw GraphError("link_bipartite: A and B overlap");
    if (in_a[v] || in_b[v])
        throw GraphError("link_bipartite: v must lie outside A and B");

    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (auto id : h.incident(v)) {
        const auto& e = h.edges()[id];
        Vertex other[2];
        int k = 0;
        for (auto w : e)
            if (w != v)
                other[k++] = w;
        if ((in_a[other[0]] && in_b[other[1]]) || (in_b[other[0]] && in_a[other[1]]))
            pairs.emplace_back(other[0], other[1]);
    }
    std::vector<Vertex> universe(a.begin(), a.end());
    universe.insert(universe.end(), b.begin(), b.end());
    return LinkGraph::make(std::move(universe), std::move(pairs));
}

bool meets_every_edge_at_most_once(const Hypergraph3& h, std::span<const Vertex> s)
{
    std::vector<char> in(h.order(), 0);
    for (auto v : s)
        in[v] = 1;
    for (const auto& e : h.edges())
        if (in[e[0]] + in[e[1]] + in[e[2]] > 1)
            return false;
    return true;
}

H2Embedding is_subgraph_of_h2(const Hypergraph3& h)
{
    if (h.order() % 3 != 0)
        throw GraphError("is_subgraph_of_h2 needs n divisible by 3");
    const std::size_t need = h.order() / 3 + 1;
    auto alpha = independence_number(h);
    H2Embedding out;
    out.embeds = alpha.size >= need;
    out.small_side = std::move(alpha.witness);
    if (out.embeds)
        out.small_side.resize(need);
    return out;
}

} // namespace ore3
