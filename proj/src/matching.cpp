#include "ore3/matching.hpp"

#include "ore3/bitset.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace ore3 {

MatchingCertificate make_certificate(const Hypergraph3& host, std::vector<Triple> edges)
{
    std::vector<char> used(host.order(), 0);
    for (auto& e : edges) {
        std::sort(e.begin(), e.end());
        if (!host.has_edge(e))
            throw std::logic_error("matching certificate: edge not in host");
        for (auto v : e) {
            if (used[v])
                throw std::logic_error("matching certificate: edges intersect");
            used[v] = 1;
        }
    }
    std::sort(edges.begin(), edges.end());

    MatchingCertificate c;
    c.size = edges.size();
    c.edges = std::move(edges);
    for (Vertex v = 0; v < host.order(); ++v)
        if (used[v])
            c.covered.push_back(v);
    c.perfect = c.covered.size() == host.order();
    return c;
}

std::vector<std::uint32_t> twin_classes(const Hypergraph3& h)
{
    const auto n = static_cast<Vertex>(h.order());
    constexpr auto unset = ~std::uint32_t{0};
    std::vector<std::uint32_t> cls(n, unset);
    std::vector<Vertex> reps;

    auto swaps_are_automorphic = [&](Vertex r, Vertex v) {
        if (h.degree(r) != h.degree(v))
            return false;
        // Same degree: edges through v but not r map injectively onto edges through r
        // but not v, so one direction suffices.
        for (auto id : h.incident(v)) {
            Triple e = h.edges()[id];
            if (e[0] == r || e[1] == r || e[2] == r)
                continue;
            for (auto& w : e)
                if (w == v)
                    w = r;
            if (!h.has_edge(e))
                return false;
        }
        return true;
    };

    for (Vertex v = 0; v < n; ++v) {
        for (std::size_t k = 0; k < reps.size(); ++k)
            if (swaps_are_automorphic(reps[k], v)) {
                cls[v] = static_cast<std::uint32_t>(k);
                break;
            }
        if (cls[v] == unset) {
            cls[v] = static_cast<std::uint32_t>(reps.size());
            reps.push_back(v);
        }
    }
    return cls;
}

namespace {

struct WordsHash
{
    std::size_t operator()(const std::vector<std::uint64_t>& w) const noexcept
    {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (auto x : w)
            h = (h ^ std::hash<std::uint64_t>{}(x)) * 0x100000001b3ull;
        return h;
    }
};

/// Branch-and-bound maximum matching with memo on twin-canonical states.
class MatchingSearch
{
public:
    explicit MatchingSearch(const Hypergraph3& h) : h_(h), n_(h.order())
    {
        cls_ = twin_classes(h);
        std::uint32_t classes = 0;
        for (auto c : cls_)
            classes = std::max(classes, c + 1);
        members_.resize(classes);
        for (Vertex v = 0; v < n_; ++v)
            members_[cls_[v]].push_back(v);
    }

    std::vector<Triple> solve_all()
    {
        Bitset all(n_);
        for (std::size_t v = 0; v < n_; ++v)
            all.set(v);
        std::vector<Triple> out;
        reconstruct(all, out);
        return out;
    }

private:
    std::vector<std::uint64_t> key(const Bitset& s) const
    {
        Bitset canon(n_);
        for (const auto& m : members_) {
            std::size_t c = 0;
            for (auto v : m)
                c += s.test(v);
            for (std::size_t i = 0; i < c; ++i)
                canon.set(m[i]);
        }
        return canon.words();
    }

    bool inside(const Bitset& s, const Triple& e) const { return s.test(e[0]) && s.test(e[1]) && s.test(e[2]); }

    struct Node
    {
        std::size_t live = 0;      // remaining vertices with positive live degree
        std::size_t greedy = 0;    // size of a greedy maximal matching
        Vertex branch = 0;         // min positive live degree vertex
    };

    Node inspect(const Bitset& s) const
    {
        std::vector<std::uint32_t> deg(n_, 0);
        Bitset used(n_);
        Node node;
        for (const auto& e : h_.edges()) {
            if (!inside(s, e))
                continue;
            ++deg[e[0]];
            ++deg[e[1]];
            ++deg[e[2]];
            if (!used.test(e[0]) && !used.test(e[1]) && !used.test(e[2])) {
                used.set(e[0]);
                used.set(e[1]);
                used.set(e[2]);
                ++node.greedy;
            }
        }
        std::uint32_t best = ~std::uint32_t{0};
        for (Vertex v = 0; v < n_; ++v)
            if (deg[v] > 0) {
                ++node.live;
                if (deg[v] < best) {
                    best = deg[v];
                    node.branch = v;
                }
            }
        return node;
    }

    // Edges through v inside s, one per twin-class signature of the other two
    // endpoints: the remaining subproblems of equal signature are isomorphic.
    std::vector<Triple> options(const Bitset& s, Vertex v) const
    {
        std::vector<Triple> out;
        std::vector<std::pair<std::uint32_t, std::uint32_t>> seen;
        for (auto id : h_.incident(v)) {
            const auto& e = h_.edges()[id];
            if (!inside(s, e))
                continue;
            std::uint32_t sig[2];
            int k = 0;
            for (auto w : e)
                if (w != v)
                    sig[k++] = cls_[w];
            std::pair p{std::min(sig[0], sig[1]), std::max(sig[0], sig[1])};
            if (std::find(seen.begin(), seen.end(), p) != seen.end())
                continue;
            seen.push_back(p);
            out.push_back(e);
        }
        return out;
    }

    static Bitset without(Bitset s, const Triple& e)
    {
        s.reset(e[0]);
        s.reset(e[1]);
        s.reset(e[2]);
        return s;
    }

    std::size_t solve(const Bitset& s)
    {
        auto k = key(s);
        if (auto it = memo_.find(k); it != memo_.end())
            return it->second;

        const Node node = inspect(s);
        std::size_t best = node.greedy;
        const std::size_t ub = std::min(node.live / 3, 3 * node.greedy);
        if (best < ub) {
            for (const auto& e : options(s, node.branch)) {
                best = std::max(best, 1 + solve(without(s, e)));
                if (best == ub)
                    break;
            }
            if (best < ub) {
                Bitset skip = s;
                skip.reset(node.branch);
                best = std::max(best, solve(skip));
            }
        }
        memo_.emplace(std::move(k), best);
        return best;
    }

    void reconstruct(Bitset s, std::vector<Triple>& out)
    {
        while (true) {
            const std::size_t target = solve(s);
            if (target == 0)
                return;
            const Node node = inspect(s);
            bool took = false;
            for (auto id : h_.incident(node.branch)) {
                const auto& e = h_.edges()[id];
                if (!inside(s, e))
                    continue;
                Bitset rest = without(s, e);
                if (1 + solve(rest) == target) {
                    out.push_back(e);
                    s = std::move(rest);
                    took = true;
                    break;
                }
            }
            if (!took)
                s.reset(node.branch);
        }
    }

    const Hypergraph3& h_;
    std::size_t n_;
    std::vector<std::uint32_t> cls_;
    std::vector<std::vector<Vertex>> members_;
    std::unordered_map<std::vector<std::uint64_t>, std::size_t, WordsHash> memo_;
};

/// Edges as bitmasks grouped by their lowest vertex.
std::vector<std::vector<std::uint32_t>> masks_by_min_vertex(const Hypergraph3& h)
{
    std::vector<std::vector<std::uint32_t>> by_min(h.order());
    for (const auto& e : h.edges())
        by_min[e[0]].push_back((1u << e[0]) | (1u << e[1]) | (1u << e[2]));
    return by_min;
}

Triple triple_of(std::uint32_t mask)
{
    Triple t{};
    int k = 0;
    for (Vertex v = 0; mask; ++v, mask >>= 1)
        if (mask & 1u)
            t[k++] = v;
    return t;
}

} // namespace

MatchingCertificate max_matching(const Hypergraph3& h)
{
    MatchingSearch search(h);
    return make_certificate(h, search.solve_all());
}

MatchingCertificate max_matching_dp(const Hypergraph3& h)
{
    const std::size_t n = h.order();
    if (n > kSubsetDpLimit)
        throw std::invalid_argument("max_matching_dp: n exceeds subset DP limit");
    const auto by_min = masks_by_min_vertex(h);
    // value[remaining] = max matching inside `remaining`; -1 = unknown.
    std::vector<std::int8_t> value(std::size_t{1} << n, -1);

    std::function<int(std::uint32_t)> f = [&](std::uint32_t rem) -> int {
        if (rem == 0)
            return 0;
        auto& slot = value[rem];
        if (slot >= 0)
            return slot;
        const int v = std::countr_zero(rem);
        int best = f(rem & ~(1u << v));
        for (auto m : by_min[v])
            if ((m & rem) == m)
                best = std::max(best, 1 + f(rem & ~m));
        slot = static_cast<std::int8_t>(best);
        return best;
    };

    std::uint32_t rem = n == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
    std::vector<Triple> edges;
    while (rem) {
        const int target = f(rem);
        const int v = std::countr_zero(rem);
        bool took = false;
        for (auto m : by_min[v])
            if ((m & rem) == m && 1 + f(rem & ~m) == target) {
                edges.push_back(triple_of(m));
                rem &= ~m;
                took = true;
                break;
            }
        if (!took)
            rem &= ~(1u << v);
    }
    return make_certificate(h, std::move(edges));
}

std::optional<MatchingCertificate> perfect_matching_dp(const Hypergraph3& h)
{
    const std::size_t n = h.order();
    if (n % 3 != 0)
        throw GraphError("perfect matching needs n divisible by 3");
    if (n > kSubsetDpLimit)
        throw std::invalid_argument("perfect_matching_dp: n exceeds subset DP limit");
    if (n == 0)
        return make_certificate(h, {});

    const auto by_min = masks_by_min_vertex(h);
    // Remaining-vertex sets already shown to have no perfect matching.
    std::vector<std::uint64_t> dead(((std::size_t{1} << n) + 63) / 64, 0);
    std::vector<std::uint32_t> stack;

    std::function<bool(std::uint32_t)> cover = [&](std::uint32_t rem) -> bool {
        if (rem == 0)
            return true;
        if ((dead[rem >> 6] >> (rem & 63)) & 1u)
            return false;
        const int v = std::countr_zero(rem);
        for (auto m : by_min[v]) {
            if ((m & rem) != m)
                continue;
            stack.push_back(m);
            if (cover(rem & ~m))
                return true;
            stack.pop_back();
        }
        dead[rem >> 6] |= std::uint64_t{1} << (rem & 63);
        return false;
    };

    const auto all = static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
    if (!cover(all))
        return std::nullopt;
    std::vector<Triple> edges;
    for (auto m : stack)
        edges.push_back(triple_of(m));
    return make_certificate(h, std::move(edges));
}

std::optional<MatchingCertificate> has_perfect_matching(const Hypergraph3& h)
{
    if (h.order() % 3 != 0)
        throw GraphError("perfect matching needs n divisible by 3");
    if (h.order() <= kSubsetDpLimit)
        return perfect_matching_dp(h);
    // Cheap refutation: an isolated vertex rules out a perfect matching.
    for (Vertex v = 0; v < h.order(); ++v)
        if (h.degree(v) == 0)
            return std::nullopt;
    auto m = max_matching(h);
    if (!m.perfect)
        return std::nullopt;
    return m;
}

} // namespace ore3
