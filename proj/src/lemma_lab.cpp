#include "ore3/lemma_lab.hpp"

#include "ore3/matching.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ore3 {

std::string to_string(SearchMode m) { return m == SearchMode::exhaustive ? "exhaustive" : "randomized"; }

namespace {

constexpr std::array<std::array<int, 3>, 6> kPerms3{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
constexpr std::size_t kMaxRecorded = 10;

// Bernoulli(q) subset of `domain`.
std::uint64_t random_submask(std::mt19937_64& rng, std::uint64_t domain, double q)
{
    std::uint64_t out = 0;
    for (std::uint64_t m = domain; m; m &= m - 1)
        if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < q)
            out |= m & (~m + 1);
    return out;
}

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t block_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index)
{
    return detail::splitmix64(detail::splitmix64(seed ^ (stream * 0x9e3779b97f4a7c15ull)) + index);
}

} // namespace

// ---------------------------------------------------------------------------
// Bipartite 3+3 graphs

bool bipartite33_has_pm(std::uint16_t mask)
{
    for (const auto& p : kPerms3) {
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i)
            ok = (mask >> (3 * i + p[i])) & 1u;
        if (ok)
            return true;
    }
    return false;
}

std::uint16_t bipartite33_canonical(std::uint16_t mask)
{
    std::uint16_t best = 0x1ff;
    for (const auto& rows : kPerms3)
        for (const auto& cols : kPerms3)
            for (int transpose = 0; transpose < 2; ++transpose) {
                std::uint16_t m = 0;
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j)
                        if ((mask >> (3 * i + j)) & 1u)
                            m |= transpose ? std::uint16_t(1u << (3 * cols[j] + rows[i]))
                                           : std::uint16_t(1u << (3 * rows[i] + cols[j]));
                best = std::min(best, m);
            }
    return best;
}

std::string bipartite33_class_name(std::uint16_t mask)
{
    std::array<int, 3> left{}, right{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if ((mask >> (3 * i + j)) & 1u) {
                ++left[i];
                ++right[j];
            }
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    const auto& side = std::min(left, right);
    return "B_" + std::to_string(side[0]) + std::to_string(side[1]) + std::to_string(side[2]);
}

namespace {

std::string bipartite33_text(std::uint16_t mask)
{
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if ((mask >> (3 * i + j)) & 1u) {
                os << (first ? "" : " ") << i << '-' << 3 + j;
                first = false;
            }
    return os.str();
}

} // namespace

LemmaVerdict verify_bipartite_fact()
{
    LemmaVerdict v;
    v.id = "bipartite-fact";
    v.universe = "all bipartite graphs on 3+3 labeled vertices";
    v.mode = SearchMode::exhaustive;
    v.bound = 6;  // largest edge count of a graph without perfect matching

    std::map<std::uint16_t, NamedClass> classes;  // keyed by canonical mask
    for (std::uint32_t m = 0; m < 512; ++m) {
        ++v.universe_size;
        const auto mask = static_cast<std::uint16_t>(m);
        if (bipartite33_has_pm(mask))
            continue;
        ++v.hypothesis_count;
        const auto e = static_cast<std::int64_t>(std::popcount(m));
        v.max_lhs = std::max(v.max_lhs, e);
        if (e >= 7 && v.counterexamples.size() < kMaxRecorded)
            v.counterexamples.push_back(std::to_string(e) + " edges, no perfect matching: " + bipartite33_text(mask));
        if (e == 5 || e == 6) {
            const auto canon = bipartite33_canonical(mask);
            auto& c = classes[canon];
            if (c.labeled == 0) {
                c.name = bipartite33_class_name(canon);
                c.edges = static_cast<std::size_t>(e);
                c.representative = bipartite33_text(canon);
            }
            ++c.labeled;
        }
    }

    std::size_t six = 0, five = 0;
    for (const auto& [canon, c] : classes) {
        (c.edges == 6 ? six : five) += 1;
        v.classes.push_back(c);
        v.witnesses.push_back(c.name + ": " + c.representative);
    }
    std::sort(v.classes.begin(), v.classes.end(), [](const auto& x, const auto& y) {
        return std::pair(x.edges, x.name) < std::pair(y.edges, y.name);
    });
    if (six != 1)
        v.counterexamples.push_back("6-edge graphs without perfect matching form " + std::to_string(six) +
                                    " classes, expected 1");
    if (five != 2)
        v.counterexamples.push_back("5-edge graphs without perfect matching form " + std::to_string(five) +
                                    " classes, expected 2");
    return v;
}

// ---------------------------------------------------------------------------
// 3-balanced 3-partite 3-graphs with designated vertices

std::vector<std::array<std::uint8_t, 3>> kpartite_allowed_cells()
{
    std::vector<std::array<std::uint8_t, 3>> out;
    for (std::uint8_t i = 0; i < 3; ++i)
        for (std::uint8_t j = 0; j < 3; ++j)
            for (std::uint8_t k = 0; k < 3; ++k)
                if ((i == 2) + (j == 2) + (k == 2) <= 1)
                    out.push_back({i, j, k});
    return out;
}

namespace {

std::string kpartite_text(const std::vector<Cell>& cells)
{
    std::ostringstream os;
    os << "9 " << cells.size();
    for (const auto& c : cells)
        os << '\n' << int(c[0]) << ' ' << 3 + int(c[1]) << ' ' << 6 + int(c[2]);
    return os.str();
}

std::vector<Cell> kpartite_cells_of(std::uint32_t mask, const std::vector<Cell>& allowed)
{
    std::vector<Cell> out;
    for (std::size_t b = 0; b < allowed.size(); ++b)
        if ((mask >> b) & 1u)
            out.push_back(allowed[b]);
    return out;
}

// Double-entry recheck of a no-PM witness from its cell list.
std::int64_t kpartite_recheck(const std::vector<Cell>& cells, bool weighted)
{
    for (const auto& c : cells)
        if ((c[0] == 2) + (c[1] == 2) + (c[2] == 2) > 1)
            throw std::logic_error("kpartite witness contains two designated vertices");
    if (has_pm_3partite(cells, 3))
        throw std::logic_error("kpartite witness has a perfect matching");
    if (!weighted)
        return static_cast<std::int64_t>(cells.size());
    std::int64_t d[3] = {0, 0, 0};
    for (const auto& c : cells)
        ++d[c[2]];
    return 2 * d[2] + d[0] + d[1];
}

LemmaVerdict kpartite_run(bool weighted, const LemmaOptions& opt)
{
    const auto allowed = kpartite_allowed_cells();
    const std::size_t cells = allowed.size();  // 20

    std::vector<std::uint32_t> pms;
    for (const auto& s : kPerms3)
        for (const auto& t : kPerms3) {
            std::uint32_t m = 0;
            bool ok = true;
            for (int i = 0; i < 3 && ok; ++i) {
                const Cell c{std::uint8_t(i), std::uint8_t(s[i]), std::uint8_t(t[i])};
                auto it = std::find(allowed.begin(), allowed.end(), c);
                ok = it != allowed.end();
                if (ok)
                    m |= 1u << (it - allowed.begin());
            }
            if (ok)
                pms.push_back(m);
        }

    std::uint32_t by_third[3] = {0, 0, 0};
    for (std::size_t b = 0; b < cells; ++b)
        by_third[allowed[b][2]] |= 1u << b;

    const std::int64_t bound = weighted ? 20 : 16;
    auto lhs = [&](std::uint32_t m) -> std::int64_t {
        if (!weighted)
            return std::popcount(m);
        return 2 * std::popcount(m & by_third[2]) + std::popcount(m & by_third[0]) + std::popcount(m & by_third[1]);
    };

    struct Part
    {
        std::uint64_t seen = 0, hyp = 0;
        std::int64_t max = -1;
        std::uint32_t witness = 0;
        std::vector<std::uint32_t> bad;
    };
    constexpr std::size_t block_bits = 14;
    const std::size_t blocks = std::size_t{1} << (cells - block_bits);
    std::vector<Part> parts(blocks);
    detail::parallel_blocks(blocks, opt.threads, [&](std::size_t blk) {
        auto& p = parts[blk];
        const std::uint32_t lo = static_cast<std::uint32_t>(blk << block_bits);
        for (std::uint32_t m = lo; m < lo + (1u << block_bits); ++m) {
            ++p.seen;
            bool pm = false;
            for (auto c : pms)
                if ((m & c) == c) {
                    pm = true;
                    break;
                }
            if (pm)
                continue;
            ++p.hyp;
            const auto val = lhs(m);
            if (val > p.max) {
                p.max = val;
                p.witness = m;
            }
            if (val > bound && p.bad.size() < kMaxRecorded)
                p.bad.push_back(m);
        }
    });

    LemmaVerdict v;
    v.id = weighted ? "weighted-20" : "kpartite-16";
    v.universe = "all subsets of the 20 allowed cells of the 3x3x3 grid";
    v.mode = SearchMode::exhaustive;
    v.bound = bound;
    v.max_lhs = -1;
    std::uint32_t witness = 0;
    for (const auto& p : parts) {
        v.universe_size += p.seen;
        v.hypothesis_count += p.hyp;
        if (p.max > v.max_lhs) {
            v.max_lhs = p.max;
            witness = p.witness;
        }
        for (auto m : p.bad)
            if (v.counterexamples.size() < kMaxRecorded)
                v.counterexamples.push_back(kpartite_text(kpartite_cells_of(m, allowed)));
    }
    if (v.universe_size != (std::uint64_t{1} << cells))
        throw std::logic_error("kpartite enumeration did not cover the universe");

    const auto wcells = kpartite_cells_of(witness, allowed);
    if (kpartite_recheck(wcells, weighted) != v.max_lhs)
        throw std::logic_error("kpartite witness recheck disagrees");
    v.witnesses.push_back(kpartite_text(wcells));
    return v;
}

} // namespace

LemmaVerdict verify_kpartite_nopm_bound(const LemmaOptions& opt) { return kpartite_run(false, opt); }
LemmaVerdict verify_weighted_degree_bound(const LemmaOptions& opt) { return kpartite_run(true, opt); }

// ---------------------------------------------------------------------------
// Aharoni-Howard: n-balanced 3-partite families without s disjoint cells

namespace {

struct CellFamily
{
    std::size_t n;
    std::vector<std::uint32_t> conflict;  // cells sharing a coordinate, including itself

    explicit CellFamily(std::size_t n_) : n(n_), conflict(n_ * n_ * n_, 0)
    {
        for (std::size_t c = 0; c < conflict.size(); ++c)
            for (std::size_t d = 0; d < conflict.size(); ++d) {
                const auto a = coords(c), b = coords(d);
                if (a[0] == b[0] || a[1] == b[1] || a[2] == b[2])
                    conflict[c] |= 1u << d;
            }
    }

    std::array<std::size_t, 3> coords(std::size_t c) const { return {c / (n * n), (c / n) % n, c % n}; }

    bool has_disjoint(std::uint32_t mask, std::size_t s) const
    {
        if (s == 0)
            return true;
        if (static_cast<std::size_t>(std::popcount(mask)) < s)
            return false;
        const auto c = static_cast<std::size_t>(std::countr_zero(mask));
        return has_disjoint(mask & ~conflict[c], s - 1) || has_disjoint(mask & ~(1u << c), s);
    }

    std::string text(std::uint32_t mask) const
    {
        std::ostringstream os;
        os << 3 * n << ' ' << std::popcount(mask);
        for (std::size_t c = 0; c < conflict.size(); ++c)
            if ((mask >> c) & 1u) {
                const auto a = coords(c);
                os << '\n' << a[0] << ' ' << n + a[1] << ' ' << 2 * n + a[2];
            }
        return os.str();
    }

    // Independent recheck via the hypergraph matching solver.
    std::size_t recheck_matching(std::uint32_t mask) const
    {
        std::vector<Triple> edges;
        for (std::size_t c = 0; c < conflict.size(); ++c)
            if ((mask >> c) & 1u) {
                const auto a = coords(c);
                edges.push_back({Vertex(a[0]), Vertex(n + a[1]), Vertex(2 * n + a[2])});
            }
        return max_matching(Hypergraph3::build(3 * n, edges)).size;
    }
};

} // namespace

LemmaVerdict verify_aharoni_howard(std::size_t n, std::size_t s, const LemmaOptions& opt)
{
    if (n < 1 || n > 3)
        throw std::invalid_argument("aharoni-howard: n must be 1, 2 or 3");
    if (s < 1)
        throw std::invalid_argument("aharoni-howard: s must be positive");
    if (opt.exhaustive && n > 2)
        throw std::invalid_argument("aharoni-howard: exhaustive mode needs n <= 2");

    const CellFamily fam(n);
    const std::size_t cells = n * n * n;
    const std::uint32_t full = cells == 32 ? ~0u : (1u << cells) - 1;

    LemmaVerdict v;
    v.id = "aharoni-howard";
    v.bound = static_cast<std::int64_t>((s - 1) * n * n);
    v.max_lhs = -1;
    v.seed = opt.seed;
    std::uint32_t witness = 0;

    auto consider = [&](std::uint32_t m) {
        if (fam.has_disjoint(m, s))
            return;
        ++v.hypothesis_count;
        const std::int64_t size = std::popcount(m);
        if (size > v.max_lhs) {
            v.max_lhs = size;
            witness = m;
        }
        if (size > v.bound && v.counterexamples.size() < kMaxRecorded)
            v.counterexamples.push_back(fam.text(m));
    };

    if (opt.exhaustive) {
        v.mode = SearchMode::exhaustive;
        v.universe = "all families of cells of the " + std::to_string(n) + "x" + std::to_string(n) + "x" +
                     std::to_string(n) + " grid";
        for (std::uint64_t m = 0; m <= full; ++m) {
            ++v.universe_size;
            consider(static_cast<std::uint32_t>(m));
        }
        if (v.universe_size != (std::uint64_t{1} << cells))
            throw std::logic_error("aharoni-howard enumeration did not cover the universe");
    } else {
        v.mode = SearchMode::randomized;
        v.samples = opt.samples;
        v.universe = "random families of cells of the 3x3x3 grid plus greedy/swap hill climbing";
        std::mt19937_64 rng(block_seed(opt.seed, 1, 0));
        for (std::uint64_t i = 0; i < opt.samples; ++i) {
            ++v.universe_size;
            const double q = unit(rng);
            consider(static_cast<std::uint32_t>(random_submask(rng, full, q * q)));
        }
        for (unsigned r = 0; r < opt.restarts; ++r) {
            std::mt19937_64 climb(block_seed(opt.seed, 2, r));
            std::vector<std::size_t> order(cells);
            for (std::size_t i = 0; i < cells; ++i)
                order[i] = i;
            auto saturate = [&](std::uint32_t m) {
                std::shuffle(order.begin(), order.end(), climb);
                for (auto c : order)
                    if (!((m >> c) & 1u) && !fam.has_disjoint(m | (1u << c), s))
                        m |= 1u << c;
                return m;
            };
            std::uint32_t cur = saturate(0);
            ++v.universe_size;
            consider(cur);
            for (int step = 0; step < 200; ++step) {
                std::uint32_t next = cur;
                const int drop = 1 + static_cast<int>(climb() % 2);
                for (int d = 0; d < drop && next; ++d) {
                    auto pick = climb() % static_cast<std::uint64_t>(std::popcount(next));
                    std::uint32_t t = next;
                    while (pick--)
                        t &= t - 1;
                    next &= ~(t & (~t + 1));
                }
                next = saturate(next);
                ++v.universe_size;
                consider(next);
                if (std::popcount(next) >= std::popcount(cur))
                    cur = next;
            }
        }
    }

    if (v.max_lhs >= 0) {
        if (fam.recheck_matching(witness) >= s)
            throw std::logic_error("aharoni-howard witness recheck found s disjoint edges");
        v.witnesses.push_back(fam.text(witness));
    }
    return v;
}

// ---------------------------------------------------------------------------
// Three 2-graphs on a shared vertex set

namespace {

bool meets(std::pair<Vertex, Vertex> e, std::pair<Vertex, Vertex> f)
{
    return e.first == f.first || e.first == f.second || e.second == f.first || e.second == f.second;
}

bool all_meet(const std::vector<std::pair<Vertex, Vertex>>& g, const std::vector<std::pair<Vertex, Vertex>>& h)
{
    for (const auto& e : g)
        for (const auto& f : h)
            if (!meets(e, f))
                return false;
    return true;
}

std::int64_t deg(const std::vector<std::pair<Vertex, Vertex>>& g, Vertex v)
{
    return std::count_if(g.begin(), g.end(), [v](const auto& e) { return e.first == v || e.second == v; });
}

} // namespace

bool hypothesis_g1_meets_all(const TriGraphConfig& c)
{
    return all_meet(c.graphs[0], c.graphs[1]) && all_meet(c.graphs[0], c.graphs[2]);
}

bool hypothesis_pairwise_meeting(const TriGraphConfig& c)
{
    return hypothesis_g1_meets_all(c) && all_meet(c.graphs[1], c.graphs[2]);
}

bool hypothesis_blocks(const TriGraphConfig& c)
{
    auto in_a = [&](Vertex v) { return v < c.a; };
    for (const auto& e : c.graphs[0])
        if (!in_a(e.first) || !in_a(e.second))
            return false;
    std::array<std::vector<std::pair<Vertex, Vertex>>, 3> touching_b;
    for (int i = 1; i < 3; ++i)
        for (const auto& e : c.graphs[i]) {
            if (!in_a(e.first) && !in_a(e.second))
                return false;
            if (!in_a(e.first) || !in_a(e.second))
                touching_b[i].push_back(e);
        }
    return all_meet(c.graphs[0], touching_b[1]) && all_meet(c.graphs[0], touching_b[2]) &&
           all_meet(touching_b[1], touching_b[2]);
}

std::int64_t degree_sum(const TriGraphConfig& c, std::span<const Vertex> set)
{
    std::int64_t total = 0;
    for (const auto& g : c.graphs)
        for (auto v : set)
            total += deg(g, v);
    return total;
}

std::int64_t block_degree_sum(const TriGraphConfig& c, int v_weight)
{
    const auto v1 = static_cast<Vertex>(c.a);
    std::int64_t total = 0;
    for (const auto& g : c.graphs)
        total += deg(g, 0) + deg(g, 1) + v_weight * deg(g, v1);
    return total;
}

namespace {

enum class TriKind { g1_meets_all, pairwise, blocks };

using Masks = std::array<std::uint64_t, 3>;

/// Bitmask engine for the three-graph lemmas. Edges are indexed so that each
/// graph's domain is a prefix of the bit range.
class TriLemma
{
public:
    TriLemma(TriKind kind, std::size_t vertices, std::size_t a, int v_weight) : kind_(kind), a_(a), weight_(v_weight)
    {
        vertices_ = vertices;
        if (kind == TriKind::blocks) {
            for (Vertex i = 0; i < a; ++i)
                for (Vertex j = i + 1; j < a; ++j)
                    edges_.emplace_back(i, j);
            aa_bits_ = edges_.size();
            for (Vertex i = 0; i < a; ++i)
                for (Vertex j = static_cast<Vertex>(a); j < vertices; ++j)
                    edges_.emplace_back(i, j);
        } else {
            for (Vertex i = 0; i < vertices; ++i)
                for (Vertex j = i + 1; j < vertices; ++j)
                    edges_.emplace_back(i, j);
            aa_bits_ = edges_.size();
        }
        if (edges_.size() > 63)
            throw std::invalid_argument("three-graph lemma: edge universe too large");
        const std::uint64_t all = (std::uint64_t{1} << edges_.size()) - 1;
        aa_ = (std::uint64_t{1} << aa_bits_) - 1;
        ab_ = all & ~aa_;
        dom_ = {kind == TriKind::blocks ? aa_ : all, all, all};

        inc_.assign(vertices, 0);
        disj_.assign(edges_.size(), 0);
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            inc_[edges_[e].first] |= std::uint64_t{1} << e;
            inc_[edges_[e].second] |= std::uint64_t{1} << e;
            for (std::size_t f = 0; f < edges_.size(); ++f)
                if (!meets(edges_[e], edges_[f]))
                    disj_[e] |= std::uint64_t{1} << f;
        }
    }

    const Masks& domain() const { return dom_; }
    std::size_t domain_bits(int i) const { return static_cast<std::size_t>(std::popcount(dom_[i])); }

    /// Edges meeting every edge of g.
    std::uint64_t meeting_all(std::uint64_t g) const
    {
        std::uint64_t ok = ~std::uint64_t{0};
        for (; g; g &= g - 1)
            ok &= ~disj_[std::countr_zero(g)];
        return ok;
    }

    /// Constraint on g2 given g1 (the part of the hypothesis involving only G1, G2).
    bool prefix_ok(std::uint64_t g1, std::uint64_t g2) const
    {
        const std::uint64_t constrained = kind_ == TriKind::blocks ? ab_ : ~std::uint64_t{0};
        return (g2 & constrained & ~meeting_all(g1)) == 0;
    }

    /// Edges G3 may use given g1, g2 (restricted to the constrained part).
    std::uint64_t g3_allowed(std::uint64_t g1, std::uint64_t g2) const
    {
        switch (kind_) {
        case TriKind::g1_meets_all:
            return meeting_all(g1);
        case TriKind::pairwise:
            return meeting_all(g1) & meeting_all(g2);
        case TriKind::blocks:
            return aa_ | (meeting_all(g1) & meeting_all(g2 & ab_));
        }
        return 0;
    }

    bool hypothesis(const Masks& g) const
    {
        return (g[0] & ~dom_[0]) == 0 && prefix_ok(g[0], g[1]) && (g[2] & ~g3_allowed(g[0], g[1])) == 0;
    }

    std::int64_t lhs(const Masks& g, std::array<Vertex, 3>* top = nullptr) const
    {
        if (kind_ == TriKind::blocks) {
            std::int64_t total = 0;
            for (auto m : g)
                total += std::popcount(m & inc_[0]) + std::popcount(m & inc_[1]) +
                         weight_ * std::popcount(m & inc_[a_]);
            return total;
        }
        // Best 3-set: the three largest total degrees.
        std::array<std::pair<std::int64_t, Vertex>, 3> best{{{-1, 0}, {-1, 0}, {-1, 0}}};
        for (Vertex v = 0; v < vertices_; ++v) {
            std::int64_t d = std::popcount(g[0] & inc_[v]) + std::popcount(g[1] & inc_[v]) +
                             std::popcount(g[2] & inc_[v]);
            std::pair<std::int64_t, Vertex> cand{d, v};
            for (auto& slot : best)
                if (cand.first > slot.first)
                    std::swap(cand, slot);
        }
        if (top)
            *top = {best[0].second, best[1].second, best[2].second};
        return best[0].first + best[1].first + best[2].first;
    }

    TriGraphConfig config(const Masks& g) const
    {
        TriGraphConfig c;
        c.vertices = vertices_;
        if (kind_ == TriKind::blocks) {
            c.a = a_;
            c.b = vertices_ - a_;
        }
        for (int i = 0; i < 3; ++i)
            for (std::uint64_t m = g[i]; m; m &= m - 1)
                c.graphs[i].push_back(edges_[std::countr_zero(m)]);
        return c;
    }

    std::string text(const Masks& g) const
    {
        std::ostringstream os;
        os << vertices_ << ' ' << std::popcount(g[0]) + std::popcount(g[1]) + std::popcount(g[2]);
        for (int i = 0; i < 3; ++i)
            for (std::uint64_t m = g[i]; m; m &= m - 1) {
                const auto& e = edges_[std::countr_zero(m)];
                os << "\nG" << i + 1 << ' ' << e.first << ' ' << e.second;
            }
        return os.str();
    }

    /// Recomputes hypothesis and LHS through the plain edge-list predicates.
    std::int64_t recheck(const Masks& g) const
    {
        const auto c = config(g);
        bool ok = false;
        switch (kind_) {
        case TriKind::g1_meets_all:
            ok = hypothesis_g1_meets_all(c);
            break;
        case TriKind::pairwise:
            ok = hypothesis_pairwise_meeting(c);
            break;
        case TriKind::blocks:
            ok = hypothesis_blocks(c);
            break;
        }
        if (!ok)
            throw std::logic_error("three-graph witness fails the hypothesis recheck");
        if (kind_ == TriKind::blocks)
            return block_degree_sum(c, weight_);
        std::int64_t best = 0;
        for (Vertex x = 0; x < vertices_; ++x)
            for (Vertex y = x + 1; y < vertices_; ++y)
                for (Vertex z = y + 1; z < vertices_; ++z) {
                    const std::array<Vertex, 3> set{x, y, z};
                    best = std::max(best, degree_sum(c, set));
                }
        return best;
    }

    /// Random configuration built to satisfy the hypothesis.
    Masks sample(std::mt19937_64& rng) const
    {
        Masks g{};
        const double q1 = unit(rng), q2 = unit(rng), q3 = unit(rng);
        g[0] = random_submask(rng, dom_[0], q1 * q1 * 0.6);
        const std::uint64_t constrained = kind_ == TriKind::blocks ? ab_ : dom_[1];
        g[1] = random_submask(rng, (dom_[1] & ~constrained) | (constrained & meeting_all(g[0])), q2);
        g[2] = random_submask(rng, dom_[2] & g3_allowed(g[0], g[1]), q3);
        return g;
    }

private:
    TriKind kind_;
    std::size_t vertices_ = 0;
    std::size_t a_;
    int weight_;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::size_t aa_bits_ = 0;
    std::uint64_t aa_ = 0, ab_ = 0;
    Masks dom_{};
    std::vector<std::uint64_t> inc_;
    std::vector<std::uint64_t> disj_;
};

struct TriPart
{
    std::uint64_t seen = 0, hyp = 0;
    std::int64_t max = -1;
    Masks witness{};
    std::vector<Masks> bad;

    void consider(const TriLemma& t, const Masks& g, std::int64_t bound)
    {
        if (!t.hypothesis(g))
            return;
        ++hyp;
        const auto val = t.lhs(g);
        if (val > max) {
            max = val;
            witness = g;
        }
        if (val > bound && bad.size() < kMaxRecorded)
            bad.push_back(g);
    }
};

LemmaVerdict tri_run(const TriLemma& t, std::string id, std::string universe, std::int64_t bound,
                     const LemmaOptions& opt)
{
    std::vector<TriPart> parts;
    LemmaVerdict v;
    v.id = std::move(id);
    v.universe = std::move(universe);
    v.bound = bound;
    v.seed = opt.seed;

    if (opt.exhaustive) {
        v.mode = SearchMode::exhaustive;
        const std::uint64_t n1 = std::uint64_t{1} << t.domain_bits(0);
        const std::uint64_t n2 = std::uint64_t{1} << t.domain_bits(1);
        const std::uint64_t n3 = std::uint64_t{1} << t.domain_bits(2);
        parts.resize(n1);
        // Domains are bit prefixes, so subsets are plain integer ranges.
        detail::parallel_blocks(n1, opt.threads, [&](std::size_t i) {
            auto& p = parts[i];
            const std::uint64_t g1 = i;
            for (std::uint64_t g2 = 0; g2 < n2; ++g2) {
                if (!t.prefix_ok(g1, g2)) {
                    p.seen += n3;  // every completion violates the hypothesis
                    continue;
                }
                for (std::uint64_t g3 = 0; g3 < n3; ++g3) {
                    ++p.seen;
                    p.consider(t, {g1, g2, g3}, bound);
                }
            }
        });
        std::uint64_t expected = n1 * n2 * n3;
        std::uint64_t seen = 0;
        for (const auto& p : parts)
            seen += p.seen;
        if (seen != expected)
            throw std::logic_error("three-graph enumeration did not cover the universe");
    } else {
        v.mode = SearchMode::randomized;
        v.samples = opt.samples;
        constexpr std::uint64_t block = 1 << 16;
        const std::uint64_t sample_blocks = (opt.samples + block - 1) / block;
        parts.resize(sample_blocks + opt.restarts);
        detail::parallel_blocks(parts.size(), opt.threads, [&](std::size_t i) {
            auto& p = parts[i];
            if (i < sample_blocks) {
                std::mt19937_64 rng(block_seed(opt.seed, 3, i));
                const std::uint64_t count = std::min(block, opt.samples - i * block);
                for (std::uint64_t k = 0; k < count; ++k) {
                    ++p.seen;
                    p.consider(t, t.sample(rng), bound);
                }
                return;
            }
            // Hill climbing: single-edge flips, accept when the hypothesis holds and the
            // objective does not drop.
            std::mt19937_64 rng(block_seed(opt.seed, 4, i - sample_blocks));
            Masks cur = t.sample(rng);
            ++p.seen;
            p.consider(t, cur, bound);
            std::int64_t cur_val = t.lhs(cur);
            for (int step = 0; step < 2000; ++step) {
                Masks next = cur;
                const int gi = static_cast<int>(rng() % 3);
                const auto bits = t.domain_bits(gi);
                if (bits == 0)
                    continue;
                next[gi] ^= std::uint64_t{1} << (rng() % bits);
                ++p.seen;
                if (!t.hypothesis(next))
                    continue;
                p.consider(t, next, bound);
                const auto val = t.lhs(next);
                if (val >= cur_val) {
                    cur = next;
                    cur_val = val;
                }
            }
        });
    }

    v.max_lhs = -1;
    Masks witness{};
    for (const auto& p : parts) {
        v.universe_size += p.seen;
        v.hypothesis_count += p.hyp;
        if (p.max > v.max_lhs) {
            v.max_lhs = p.max;
            witness = p.witness;
        }
        for (const auto& g : p.bad)
            if (v.counterexamples.size() < kMaxRecorded)
                v.counterexamples.push_back(t.text(g));
    }
    if (v.max_lhs >= 0) {
        if (t.recheck(witness) != v.max_lhs)
            throw std::logic_error("three-graph witness objective recheck disagrees");
        v.witnesses.push_back(t.text(witness));
    }
    return v;
}

} // namespace

LemmaVerdict verify_intersecting_bound_6n(std::size_t n, const LemmaOptions& opt)
{
    if (n < 4 || n > 11)
        throw std::invalid_argument("intersect-6n: n must be between 4 and 11");
    if (opt.exhaustive && n > 5)
        throw std::invalid_argument("intersect-6n: exhaustive mode needs n <= 5");
    const TriLemma t(TriKind::g1_meets_all, n, 0, 1);
    return tri_run(t, "intersect-6n", "triples of graphs on " + std::to_string(n) + " vertices",
                   6 * (std::int64_t(n) - 1), opt);
}

LemmaVerdict verify_intersecting_bound_3n(std::size_t n, const LemmaOptions& opt)
{
    if (n < 5 || n > 11)
        throw std::invalid_argument("intersect-3n: n must be between 5 and 11");
    if (opt.exhaustive && n > 5)
        throw std::invalid_argument("intersect-3n: exhaustive mode needs n <= 5");
    const TriLemma t(TriKind::pairwise, n, 0, 1);
    return tri_run(t, "intersect-3n", "triples of graphs on " + std::to_string(n) + " vertices",
                   3 * (std::int64_t(n) + 1), opt);
}

namespace {

LemmaVerdict ab_run(std::size_t a, std::size_t b, int weight, const LemmaOptions& opt)
{
    if (a < 2 || b < 1 || a > 6 || b > 6)
        throw std::invalid_argument("ab lemma: need 2 <= a <= 6 and 1 <= b <= 6");
    if (opt.exhaustive && a + b > 5)
        throw std::invalid_argument("ab lemma: exhaustive mode needs a + b <= 5");
    const auto A = static_cast<std::int64_t>(a), B = static_cast<std::int64_t>(b);
    const std::int64_t bound =
        weight == 1 ? std::max(6 * A + 2, 5 * A + 2 * B + 2) : std::max(8 * A + 2, 6 * A + 2 * B + 4);
    const TriLemma t(TriKind::blocks, a + b, a, weight);
    return tri_run(t, weight == 1 ? "ab-6a" : "ab-8a",
                   "G1 inside A, G2/G3 edges touching A; a=" + std::to_string(a) + ", b=" + std::to_string(b), bound,
                   opt);
}

} // namespace

LemmaVerdict verify_ab_bound_6a(std::size_t a, std::size_t b, const LemmaOptions& opt) { return ab_run(a, b, 1, opt); }
LemmaVerdict verify_ab_bound_8a(std::size_t a, std::size_t b, const LemmaOptions& opt) { return ab_run(a, b, 2, opt); }

} // namespace ore3
