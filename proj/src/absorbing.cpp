#include "ore3/absorbing.hpp"

#include "ore3/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>

namespace ore3 {

namespace {

std::vector<Vertex> sorted_copy(std::span<const Vertex> vs)
{
    std::vector<Vertex> out(vs.begin(), vs.end());
    std::sort(out.begin(), out.end());
    return out;
}

/// Perfect matching of H[vs] in host labels, or nullopt.
std::optional<std::vector<Triple>> pm_on(const Hypergraph3& h, std::span<const Vertex> vs)
{
    const auto sub = h.induced(vs);
    const auto pm = perfect_matching_dp(sub);
    if (!pm)
        return std::nullopt;
    std::vector<Triple> out;
    for (const auto& e : pm->edges)
        out.push_back(canonical_triple({vs[e[0]], vs[e[1]], vs[e[2]]}, h.order()));
    return out;
}

std::vector<Vertex> join(std::span<const Vertex> a, std::span<const Vertex> b)
{
    std::vector<Vertex> out(a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

bool disjoint_sorted(const std::vector<Vertex>& a, const std::vector<Vertex>& b)
{
    std::vector<Vertex> both;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
    return both.empty();
}

std::size_t pick(std::mt19937_64& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

} // namespace

DegreeSplit degree_split(const Hypergraph3& h, double epsilon)
{
    if (!(epsilon > 0 && epsilon < 0.5))
        throw std::invalid_argument("degree_split: epsilon must lie in (0, 1/2)");
    const auto n = static_cast<std::int64_t>(h.order());
    DegreeSplit out;
    out.threshold = (0.5 + epsilon) * static_cast<double>(binom2(n));
    std::vector<char> low(h.order(), 0);
    for (Vertex v = 0; v < h.order(); ++v) {
        if (static_cast<double>(h.degree(v)) <= out.threshold) {
            out.low.push_back(v);
            low[v] = 1;
        } else {
            out.high.push_back(v);
        }
    }
    const auto s = sigma2(h);
    out.sigma2_hypothesis = s && static_cast<double>(*s) > (1 + 2 * epsilon) * static_cast<double>(binom2(n));
    for (const auto& e : h.edges())
        if (low[e[0]] + low[e[1]] + low[e[2]] >= 2) {
            out.low_pair_in_edge = true;
            break;
        }
    return out;
}

bool is_absorbing_set(const Hypergraph3& h, std::span<const Vertex> a, std::span<const Vertex> t)
{
    if (a.size() != 3 || t.size() != 18)
        throw GraphError("is_absorbing_set: need |A| = 3 and |T| = 18");
    const auto all = sorted_copy(join(a, t));
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw GraphError("is_absorbing_set: A and T must be disjoint sets of distinct vertices");
    if (all.back() >= h.order())
        throw GraphError("is_absorbing_set: vertex out of range");
    return pm_on(h, t) && pm_on(h, join(a, t));
}

namespace {

class AbsorberBuilder
{
public:
    AbsorberBuilder(const Hypergraph3& h, std::span<const Vertex> a, const AbsorberSearchOptions& opt)
        : h_(h), a_(a.begin(), a.end()), high_(h.order(), 0), blocked_(h.order(), 0)
    {
        const auto split = degree_split(h, opt.epsilon);
        for (auto v : split.high)
            high_[v] = 1;
        for (auto v : a_)
            blocked_[v] = 1;
        for (auto v : opt.forbidden)
            if (v < h.order())
                blocked_[v] = 1;
        for (Vertex v = 0; v < h.order(); ++v)
            if (!blocked_[v]) {
                free_.push_back(v);
                if (high_[v])
                    pool_.push_back(v);
            }
        small_high_ = pool_.size() < 6;
        if (small_high_)
            pool_ = free_;
    }

    bool small_high_side() const { return small_high_; }

    /// One guided candidate, or nullopt when some step finds nothing.
    std::optional<std::vector<Vertex>> guided(std::mt19937_64& rng) const
    {
        std::vector<char> used = blocked_;
        std::array<Vertex, 10> u{};  // u[1..9]
        for (int i = 0; i < 3; ++i)
            u[1 + i] = a_[i];

        for (int i = 0; i < 3; ++i) {
            auto c = draw(pool_, used, rng);
            if (!c)
                return std::nullopt;
            u[4 + i] = *c;
            used[*c] = 1;
        }
        auto e = high_edge(used, rng);
        if (!e)
            return std::nullopt;
        for (int i = 0; i < 3; ++i) {
            u[7 + i] = (*e)[i];
            used[(*e)[i]] = 1;
        }

        std::vector<Vertex> t(u.begin() + 4, u.end());
        constexpr std::array<std::pair<int, int>, 6> links{{{1, 4}, {2, 5}, {3, 6}, {4, 7}, {5, 8}, {6, 9}}};
        for (const auto& [x, y] : links) {
            auto b = linking_pair(u[x], u[y], used, rng);
            if (!b)
                return std::nullopt;
            used[b->first] = used[b->second] = 1;
            t.push_back(b->first);
            t.push_back(b->second);
        }
        std::sort(t.begin(), t.end());
        return t;
    }

    std::optional<std::vector<Vertex>> blind(std::mt19937_64& rng) const
    {
        if (free_.size() < 18)
            return std::nullopt;
        std::vector<Vertex> t;
        std::sample(free_.begin(), free_.end(), std::back_inserter(t), 18, rng);
        std::sort(t.begin(), t.end());
        return t;
    }

private:
    static constexpr int kTries = 64;

    std::optional<Vertex> draw(const std::vector<Vertex>& from, const std::vector<char>& used,
                               std::mt19937_64& rng) const
    {
        if (from.empty())
            return std::nullopt;
        for (int i = 0; i < kTries; ++i) {
            const auto v = from[pick(rng, from.size())];
            if (!used[v])
                return v;
        }
        return std::nullopt;
    }

    std::optional<Triple> high_edge(const std::vector<char>& used, std::mt19937_64& rng) const
    {
        const auto& edges = h_.edges();
        if (edges.empty())
            return std::nullopt;
        for (int i = 0; i < kTries * 4; ++i) {
            const auto& e = edges[pick(rng, edges.size())];
            bool ok = true;
            for (auto v : e)
                ok = ok && !used[v] && (small_high_ || high_[v]);
            if (ok)
                return e;
        }
        return std::nullopt;
    }

    std::optional<std::pair<Vertex, Vertex>> linking_pair(Vertex x, Vertex y, const std::vector<char>& used,
                                                          std::mt19937_64& rng) const
    {
        const auto inc = h_.incident(x);
        if (inc.empty())
            return std::nullopt;
        for (int i = 0; i < kTries; ++i) {
            const auto& e = h_.edges()[inc[pick(rng, inc.size())]];
            Vertex p = 0, q = 0;
            int k = 0;
            for (auto v : e)
                if (v != x)
                    (k++ == 0 ? p : q) = v;
            if (used[p] || used[q] || p == y || q == y)
                continue;
            if (h_.has_edge({p, q, y}))
                return std::pair{p, q};
        }
        return std::nullopt;
    }

    const Hypergraph3& h_;
    std::vector<Vertex> a_;
    std::vector<char> high_;
    std::vector<char> blocked_;
    std::vector<Vertex> free_;
    std::vector<Vertex> pool_;
    bool small_high_ = false;
};

void check_triple(const Hypergraph3& h, std::span<const Vertex> a)
{
    if (a.size() != 3)
        throw GraphError("absorber search: |A| must be 3");
    for (auto v : a)
        if (v >= h.order())
            throw GraphError("absorber search: vertex out of range");
    if (a[0] == a[1] || a[0] == a[2] || a[1] == a[2])
        throw GraphError("absorber search: A must have three distinct vertices");
}

} // namespace

AbsorberSearch find_absorbers(const Hypergraph3& h, std::span<const Vertex> a, std::size_t budget,
                              std::mt19937_64& rng, const AbsorberSearchOptions& opt)
{
    check_triple(h, a);
    const std::size_t want = opt.want == 0 ? budget : opt.want;
    const AbsorberBuilder builder(h, a, opt);

    AbsorberSearch out;
    out.small_high_side = builder.small_high_side();
    std::set<std::vector<Vertex>> seen;
    for (std::size_t i = 0; i < budget && out.sets.size() < want; ++i) {
        ++out.attempts;
        std::optional<std::vector<Vertex>> t;
        if (opt.guided) {
            t = builder.guided(rng);
            if (t)
                ++out.guided_built;
        }
        if (!t)
            t = builder.blind(rng);
        if (!t)
            continue;
        if (!is_absorbing_set(h, a, *t))
            continue;
        ++out.verified;
        if (seen.insert(*t).second)
            out.sets.push_back(std::move(*t));
    }
    return out;
}

std::vector<Vertex> AbsorberFamily::vertices() const
{
    std::vector<Vertex> out;
    for (const auto& s : sets)
        out.insert(out.end(), s.vertices.begin(), s.vertices.end());
    std::sort(out.begin(), out.end());
    return out;
}

FamilyReport build_family(const Hypergraph3& h, std::size_t sample_count, std::size_t per_a_target,
                          std::mt19937_64& rng, const FamilyOptions& opt)
{
    const std::size_t n = h.order();
    FamilyReport best;
    best.split = degree_split(h, opt.epsilon);
    best.target = per_a_target;
    const std::size_t room = n >= opt.reserve ? (n - opt.reserve) / 18 : 0;
    const std::size_t limit = opt.max_sets == 0 ? room : std::min(opt.max_sets, room);

    auto score = [](const FamilyReport& r) { return std::pair(r.coverage_fraction, r.min_count); };
    bool have_best = false;
    for (unsigned restart = 0; restart < std::max(1u, opt.restarts); ++restart) {
        FamilyReport cur;
        cur.split = best.split;
        cur.target = per_a_target;
        cur.best_restart = restart;

        std::vector<Vertex> used;
        std::size_t failures = 0;
        while (cur.family.sets.size() < limit && failures <= 2 * limit + 2) {
            std::vector<Vertex> free;
            for (Vertex v = 0; v < n; ++v)
                if (!std::binary_search(used.begin(), used.end(), v))
                    free.push_back(v);
            if (free.size() < 21)
                break;
            VertexTriple probe{};
            std::sample(free.begin(), free.end(), probe.begin(), 3, rng);
            AbsorberSearchOptions so;
            so.epsilon = opt.epsilon;
            so.forbidden = used;
            so.want = 1;
            const auto found = find_absorbers(h, probe, opt.budget, rng, so);
            if (found.sets.empty()) {
                ++failures;
                continue;
            }
            AbsorberSet set;
            set.vertices = found.sets.front();
            set.matching = *pm_on(h, set.vertices);
            used.insert(used.end(), set.vertices.begin(), set.vertices.end());
            std::sort(used.begin(), used.end());
            cur.family.sets.push_back(std::move(set));
        }

        std::vector<Vertex> leftover;
        for (Vertex v = 0; v < n; ++v)
            if (!std::binary_search(used.begin(), used.end(), v))
                leftover.push_back(v);
        std::vector<VertexTriple> samples;
        const auto l = static_cast<std::int64_t>(leftover.size());
        if (l >= 3 && static_cast<std::uint64_t>(binom3(l)) <= sample_count) {
            for (std::size_t i = 0; i < leftover.size(); ++i)
                for (std::size_t j = i + 1; j < leftover.size(); ++j)
                    for (std::size_t k = j + 1; k < leftover.size(); ++k)
                        samples.push_back({leftover[i], leftover[j], leftover[k]});
        } else if (l >= 3) {
            std::set<VertexTriple> seen;
            while (samples.size() < sample_count) {
                VertexTriple a{};
                std::sample(leftover.begin(), leftover.end(), a.begin(), 3, rng);
                if (seen.insert(a).second)
                    samples.push_back(a);
            }
        }

        std::size_t covered = 0;
        for (const auto& a : samples) {
            std::size_t count = 0;
            for (auto& set : cur.family.sets)
                if (pm_on(h, join(a, set.vertices))) {
                    set.tags.push_back(a);
                    ++count;
                }
            cur.coverage.push_back({a, count});
            covered += count >= per_a_target;
        }
        cur.min_count = 0;
        if (!cur.coverage.empty()) {
            cur.min_count = cur.coverage.front().absorbers;
            for (const auto& row : cur.coverage)
                cur.min_count = std::min(cur.min_count, row.absorbers);
        }
        cur.coverage_fraction = samples.empty() ? 0.0 : static_cast<double>(covered) / samples.size();
        for (const auto& set : cur.family.sets)
            cur.family.matching.insert(cur.family.matching.end(), set.matching.begin(), set.matching.end());
        std::sort(cur.family.matching.begin(), cur.family.matching.end());

        if (!have_best || score(cur) > score(best)) {
            best = std::move(cur);
            have_best = true;
        }
        if (best.coverage_fraction == 1.0)
            break;
    }
    return best;
}

void validate_family(const Hypergraph3& h, const AbsorberFamily& family)
{
    const auto verts = family.vertices();
    if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
        throw std::logic_error("absorber family: sets are not pairwise disjoint");
    for (const auto& s : family.sets) {
        if (s.vertices.size() != 18)
            throw std::logic_error("absorber family: set of wrong size");
        // Independent route: branch-and-bound maximum matching.
        if (!max_matching(h.induced(s.vertices)).perfect)
            throw std::logic_error("absorber family: H[T] has no perfect matching");
        for (const auto& a : s.tags)
            if (!max_matching(h.induced(join(a, s.vertices))).perfect)
                throw std::logic_error("absorber family: tagged 3-set is not absorbed");
    }
    const auto cert = make_certificate(h, family.matching);
    if (cert.covered != verts)
        throw std::logic_error("absorber family: matching does not cover exactly the family vertices");
}

std::string to_string(AbsorbError::Kind kind)
{
    switch (kind) {
    case AbsorbError::Kind::divisibility:
        return "divisibility";
    case AbsorbError::Kind::overlap:
        return "overlap";
    case AbsorbError::Kind::insufficient:
        return "insufficient";
    case AbsorbError::Kind::routing:
        return "routing";
    }
    return "unknown";
}

namespace {

void all_partitions(std::vector<Vertex> rest, std::vector<VertexTriple>& cur,
                    std::vector<std::vector<VertexTriple>>& out)
{
    if (rest.empty()) {
        out.push_back(cur);
        return;
    }
    const Vertex first = rest.front();
    for (std::size_t i = 1; i < rest.size(); ++i)
        for (std::size_t j = i + 1; j < rest.size(); ++j) {
            std::vector<Vertex> next;
            for (std::size_t k = 1; k < rest.size(); ++k)
                if (k != i && k != j)
                    next.push_back(rest[k]);
            cur.push_back({first, rest[i], rest[j]});
            all_partitions(std::move(next), cur, out);
            cur.pop_back();
        }
}

} // namespace

AbsorbResult absorb(const Hypergraph3& h, const AbsorberFamily& family, std::span<const Vertex> leftover,
                    std::mt19937_64& rng, const AbsorbOptions& opt)
{
    const auto vprime = sorted_copy(leftover);
    if (vprime.size() % 3 != 0)
        throw AbsorbError(AbsorbError::Kind::divisibility, "absorb: |V'| must be divisible by 3");
    for (auto v : vprime)
        if (v >= h.order())
            throw GraphError("absorb: vertex out of range");
    const auto fam_vertices = family.vertices();
    if (std::adjacent_find(vprime.begin(), vprime.end()) != vprime.end() || !disjoint_sorted(vprime, fam_vertices))
        throw AbsorbError(AbsorbError::Kind::overlap, "absorb: V' repeats a vertex or meets the family");
    const std::size_t parts = vprime.size() / 3;
    if (parts > family.sets.size())
        throw AbsorbError(AbsorbError::Kind::insufficient, "absorb: more 3-sets than absorbers");

    std::vector<std::vector<VertexTriple>> partitions;
    if (vprime.size() <= 9) {
        std::vector<VertexTriple> cur;
        all_partitions(vprime, cur, partitions);
    } else {
        std::set<std::vector<VertexTriple>> seen;
        for (std::size_t i = 0; i < opt.max_partitions; ++i) {
            auto order = vprime;
            std::shuffle(order.begin(), order.end(), rng);
            std::vector<VertexTriple> p;
            for (std::size_t k = 0; k < parts; ++k) {
                VertexTriple t{order[3 * k], order[3 * k + 1], order[3 * k + 2]};
                std::sort(t.begin(), t.end());
                p.push_back(t);
            }
            std::sort(p.begin(), p.end());
            if (seen.insert(p).second)
                partitions.push_back(std::move(p));
        }
    }

    // (part, absorber) -> perfect matching of H[part u T], cached across partitions.
    std::map<std::pair<VertexTriple, std::size_t>, std::optional<std::vector<Triple>>> cache;
    auto compatible = [&](const VertexTriple& part, std::size_t j) -> const std::optional<std::vector<Triple>>& {
        auto key = std::pair(part, j);
        auto it = cache.find(key);
        if (it == cache.end())
            it = cache.emplace(key, pm_on(h, join(part, family.sets[j].vertices))).first;
        return it->second;
    };

    AbsorbResult result;
    const std::size_t m = family.sets.size();
    for (const auto& partition : partitions) {
        ++result.partitions_tried;
        std::vector<std::ptrdiff_t> owner(m, -1);  // absorber -> part
        std::function<bool(std::size_t, std::vector<char>&)> augment = [&](std::size_t p, std::vector<char>& seen) {
            for (std::size_t j = 0; j < m; ++j) {
                if (seen[j] || !compatible(partition[p], j))
                    continue;
                seen[j] = 1;
                if (owner[j] < 0 || augment(static_cast<std::size_t>(owner[j]), seen)) {
                    owner[j] = static_cast<std::ptrdiff_t>(p);
                    return true;
                }
            }
            return false;
        };
        bool ok = true;
        for (std::size_t p = 0; p < partition.size() && ok; ++p) {
            std::vector<char> seen(m, 0);
            ok = augment(p, seen);
        }
        if (!ok)
            continue;

        std::vector<Triple> edges;
        for (std::size_t j = 0; j < m; ++j) {
            if (owner[j] < 0) {
                edges.insert(edges.end(), family.sets[j].matching.begin(), family.sets[j].matching.end());
                continue;
            }
            const auto& part = partition[static_cast<std::size_t>(owner[j])];
            const auto& pm = *compatible(part, j);
            edges.insert(edges.end(), pm.begin(), pm.end());
            result.routing.push_back({part, j});
        }
        result.matching = make_certificate(h, std::move(edges));
        std::vector<Vertex> expect = fam_vertices;
        expect.insert(expect.end(), vprime.begin(), vprime.end());
        std::sort(expect.begin(), expect.end());
        if (result.matching.covered != expect)
            throw std::logic_error("absorb: result does not cover exactly V(M) and V'");
        std::sort(result.routing.begin(), result.routing.end(),
                  [](const AbsorbStep& x, const AbsorbStep& y) { return x.part < y.part; });
        return result;
    }
    throw AbsorbError(AbsorbError::Kind::routing,
                      "absorb: no partition of V' could be routed through distinct absorbers");
}

} // namespace ore3
