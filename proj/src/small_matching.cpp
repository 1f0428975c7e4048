#include "ore3/matching.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ore3 {

bool has_pm_3partite(std::span<const Cell> cells, std::size_t p)
{
    if (p > 4)
        throw std::invalid_argument("has_pm_3partite: part size above 4");
    if (p == 0)
        return true;
    std::vector<char> present(p * p * p, 0);
    for (const auto& c : cells) {
        if (c[0] >= p || c[1] >= p || c[2] >= p)
            throw std::invalid_argument("has_pm_3partite: cell outside the grid");
        present[(c[0] * p + c[1]) * p + c[2]] = 1;
    }

    std::vector<std::size_t> sigma(p), tau(p);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        std::iota(tau.begin(), tau.end(), 0);
        do {
            bool ok = true;
            for (std::size_t i = 0; i < p && ok; ++i)
                ok = present[(i * p + sigma[i]) * p + tau[i]];
            if (ok)
                return true;
        } while (std::next_permutation(tau.begin(), tau.end()));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return false;
}

bool bipartite_pm(const LinkGraph& g, std::span<const Vertex> a, std::span<const Vertex> b)
{
    if (a.size() != b.size())
        throw GraphError("bipartite_pm: sides differ in size");
    auto index_in = [](std::span<const Vertex> side, Vertex v) -> long {
        auto it = std::find(side.begin(), side.end(), v);
        return it == side.end() ? -1 : static_cast<long>(it - side.begin());
    };
    for (auto v : a)
        if (index_in(b, v) >= 0)
            throw GraphError("bipartite_pm: sides overlap");

    const std::size_t k = a.size();
    std::vector<std::vector<std::size_t>> adj(k);
    for (auto [u, w] : g.pairs) {
        long ua = index_in(a, u), wb = index_in(b, w);
        if (ua < 0 || wb < 0) {
            ua = index_in(a, w);
            wb = index_in(b, u);
        }
        if (ua < 0 || wb < 0)
            throw GraphError("bipartite_pm: pair does not cross the bipartition");
        adj[ua].push_back(static_cast<std::size_t>(wb));
    }

    // Kuhn's augmenting paths.
    constexpr auto none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> match_b(k, none);
    std::vector<char> seen;
    auto augment = [&](auto&& self, std::size_t u) -> bool {
        for (auto w : adj[u]) {
            if (seen[w])
                continue;
            seen[w] = 1;
            if (match_b[w] == none || self(self, match_b[w])) {
                match_b[w] = u;
                return true;
            }
        }
        return false;
    };
    for (std::size_t u = 0; u < k; ++u) {
        seen.assign(k, 0);
        if (!augment(augment, u))
            return false;
    }
    return true;
}

std::optional<std::vector<RainbowEdge>> rainbow_matching(std::span<const LinkGraph> graphs, std::size_t want)
{
    if (want > graphs.size())
        throw std::invalid_argument("rainbow_matching: want exceeds number of graphs");

    std::vector<RainbowEdge> chosen;
    std::vector<Vertex> used;
    auto free = [&](Vertex v) { return std::find(used.begin(), used.end(), v) == used.end(); };

    auto search = [&](auto&& self, std::size_t i) -> bool {
        if (chosen.size() == want)
            return true;
        if (graphs.size() - i < want - chosen.size())
            return false;
        for (auto [a, b] : graphs[i].pairs) {
            if (!free(a) || !free(b))
                continue;
            chosen.push_back({i, a, b});
            used.push_back(a);
            used.push_back(b);
            if (self(self, i + 1))
                return true;
            used.resize(used.size() - 2);
            chosen.pop_back();
        }
        return self(self, i + 1);
    };
    if (!search(search, 0))
        return std::nullopt;
    return chosen;
}

} // namespace ore3
