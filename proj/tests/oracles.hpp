#pragma once

// Brute-force reference implementations. They share no code with the library and
// work on plain triple lists.

#include "ore3/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using ore3::Triple;
using ore3::Vertex;

inline std::vector<std::uint64_t> degrees(std::size_t n, const std::vector<Triple>& edges)
{
    std::vector<std::uint64_t> d(n, 0);
    for (const auto& e : edges)
        for (auto v : e)
            ++d[v];
    return d;
}

inline bool contains(const Triple& e, Vertex v) { return e[0] == v || e[1] == v || e[2] == v; }

inline std::uint64_t codegree(const std::vector<Triple>& edges, Vertex u, Vertex v)
{
    return std::count_if(edges.begin(), edges.end(), [&](const Triple& e) { return contains(e, u) && contains(e, v); });
}

inline std::optional<std::uint64_t> sigma2(std::size_t n, const std::vector<Triple>& edges)
{
    const auto d = degrees(n, edges);
    std::optional<std::uint64_t> best;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (codegree(edges, u, v) > 0 && (!best || d[u] + d[v] < *best))
                best = d[u] + d[v];
    return best;
}

/// Largest vertex set with no two vertices in a common edge, by all subsets (n <= 20).
inline std::size_t independence(std::size_t n, const std::vector<Triple>& edges)
{
    std::vector<std::uint32_t> edge_masks;
    for (const auto& e : edges)
        edge_masks.push_back((1u << e[0]) | (1u << e[1]) | (1u << e[2]));
    std::size_t best = 0;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        bool ok = true;
        for (auto m : edge_masks)
            if (std::popcount(s & m) >= 2) {
                ok = false;
                break;
            }
        if (ok)
            best = std::max<std::size_t>(best, std::popcount(s));
    }
    return best;
}

/// Enumerates every matching (edges in increasing index order) and returns the largest size.
inline std::size_t max_matching(const std::vector<Triple>& edges)
{
    std::size_t best = 0;
    std::vector<char> used(64, 0);
    auto rec = [&](auto&& self, std::size_t from, std::size_t size) -> void {
        best = std::max(best, size);
        for (std::size_t i = from; i < edges.size(); ++i) {
            const auto& e = edges[i];
            if (used[e[0]] || used[e[1]] || used[e[2]])
                continue;
            used[e[0]] = used[e[1]] = used[e[2]] = 1;
            self(self, i + 1, size + 1);
            used[e[0]] = used[e[1]] = used[e[2]] = 0;
        }
    };
    rec(rec, 0, 0);
    return best;
}

/// Each triple of 0..n-1 kept independently with probability p.
inline std::vector<Triple> random_triples(std::size_t n, double p, std::mt19937_64& rng)
{
    std::vector<Triple> out;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c)
                if (u(rng) < p)
                    out.push_back({a, b, c});
    return out;
}

} // namespace oracle
