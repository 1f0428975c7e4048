#include "doctest.h"
#include "oracles.hpp"

#include "ore3/constructions.hpp"
#include "ore3/lemma_lab.hpp"
#include "ore3/matching.hpp"

#include <bit>
#include <numeric>
#include <set>
#include <sstream>

using namespace ore3;

namespace {

Hypergraph3 complete(std::size_t n)
{
    std::vector<Triple> t;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c)
                t.push_back({a, b, c});
    return Hypergraph3::build(n, t);
}

void check_certificate(const Hypergraph3& h, const MatchingCertificate& m)
{
    std::vector<char> seen(h.order(), 0);
    for (const auto& e : m.edges) {
        CHECK(h.has_edge(e));
        for (auto v : e) {
            CHECK_FALSE(seen[v]);
            seen[v] = 1;
        }
    }
    CHECK(m.size == m.edges.size());
    CHECK(m.covered.size() == 3 * m.size);
    CHECK(m.perfect == (3 * m.size == h.order()));
}

} // namespace

TEST_CASE("perfect matching examples")
{
    const auto k6 = has_perfect_matching(complete(6));
    REQUIRE(k6.has_value());
    CHECK(k6->size == 2);
    CHECK(k6->perfect);
    CHECK_FALSE(has_perfect_matching(h12(15, 3, 1).graph).has_value());
    CHECK_FALSE(has_perfect_matching(h_ell(9, 3, 2).graph).has_value());
    CHECK_THROWS_AS(has_perfect_matching(complete(7)), GraphError);
    CHECK(has_perfect_matching(Hypergraph3::build(0, {})).has_value());
}

TEST_CASE("perfect matching beyond the subset-DP limit")
{
    CHECK_FALSE(has_perfect_matching(h12(27, 5, 3).graph).has_value());
    const auto m = has_perfect_matching(complete(27));
    REQUIRE(m.has_value());
    check_certificate(complete(27), *m);

    // Two disjoint copies of K_12^(3) plus an isolated triple of vertices.
    std::vector<Triple> t;
    for (Vertex base : {0u, 12u})
        for (Vertex a = 0; a < 12; ++a)
            for (Vertex b = a + 1; b < 12; ++b)
                for (Vertex c = b + 1; c < 12; ++c)
                    t.push_back({base + a, base + b, base + c});
    CHECK_FALSE(has_perfect_matching(Hypergraph3::build(27, t)).has_value());
    t.push_back({24, 25, 26});
    CHECK(has_perfect_matching(Hypergraph3::build(27, t)).has_value());
}

TEST_CASE("maximum matching examples")
{
    CHECK(max_matching(h12(15, 3, 1).graph).size == 4);
    CHECK(max_matching(Hypergraph3::build(9, {})).size == 0);
    CHECK(max_matching(complete(7)).size == 2);
    CHECK(max_matching_dp(complete(7)).size == 2);
    CHECK_THROWS_AS(max_matching_dp(complete(25)), std::invalid_argument);
}

TEST_CASE("DP, branch-and-bound and naive enumeration agree")
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 6 + 3 * (trial % 3);
        const double p = 0.03 + 0.02 * (trial % 10);
        const auto t = oracle::random_triples(n, p, rng);
        const auto h = Hypergraph3::build(n, t);
        const auto bb = max_matching(h);
        const auto dp = max_matching_dp(h);
        const auto naive = oracle::max_matching(t);
        CHECK(bb.size == naive);
        CHECK(dp.size == naive);
        check_certificate(h, bb);
        check_certificate(h, dp);
        CHECK(perfect_matching_dp(h).has_value() == (3 * naive == n));
    }
}

TEST_CASE("adding edges never shrinks the maximum matching")
{
    std::mt19937_64 rng(22);
    for (int chain = 0; chain < 10; ++chain) {
        const std::size_t n = 9 + chain % 4;
        std::vector<Triple> t;
        std::size_t last = 0;
        for (int step = 0; step < 25; ++step) {
            std::vector<Vertex> v(n);
            std::iota(v.begin(), v.end(), 0);
            std::shuffle(v.begin(), v.end(), rng);
            t.push_back({v[0], v[1], v[2]});
            const auto size = max_matching(Hypergraph3::build(n, t)).size;
            CHECK(size >= last);
            last = size;
        }
    }
}

TEST_CASE("3-partite checker agrees with the flattened graph")
{
    CHECK(has_pm_3partite(std::vector<Cell>{}, 3) == false);
    std::vector<Cell> all;
    for (std::uint8_t i = 0; i < 3; ++i)
        for (std::uint8_t j = 0; j < 3; ++j)
            for (std::uint8_t k = 0; k < 3; ++k)
                all.push_back({i, j, k});
    CHECK(has_pm_3partite(all, 3));
    CHECK_THROWS_AS(has_pm_3partite(all, 5), std::invalid_argument);

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t p = 1 + trial % 3;
        std::vector<Cell> cells;
        std::vector<Triple> flat;
        for (std::uint8_t i = 0; i < p; ++i)
            for (std::uint8_t j = 0; j < p; ++j)
                for (std::uint8_t k = 0; k < p; ++k)
                    if (rng() % 3 == 0) {
                        cells.push_back({i, j, k});
                        flat.push_back({Vertex(i), Vertex(p + j), Vertex(2 * p + k)});
                    }
        const auto h = Hypergraph3::build(3 * p, flat);
        CHECK(has_pm_3partite(cells, p) == has_perfect_matching(h).has_value());
    }
}

TEST_CASE("the 16-edge no-PM witness has no perfect matching")
{
    const auto v = verify_kpartite_nopm_bound();
    REQUIRE(v.witnesses.size() == 1);
    std::istringstream in(v.witnesses[0]);
    std::size_t n = 0, m = 0;
    in >> n >> m;
    CHECK(m == 16);
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < m; ++i) {
        unsigned a, b, c;
        in >> a >> b >> c;
        cells.push_back({std::uint8_t(a), std::uint8_t(b - 3), std::uint8_t(c - 6)});
    }
    CHECK_FALSE(has_pm_3partite(cells, 3));
}

TEST_CASE("bipartite perfect matching")
{
    const std::vector<Vertex> a{0, 1, 2}, b{3, 4, 5};
    std::vector<std::pair<Vertex, Vertex>> full;
    for (auto u : a)
        for (auto w : b)
            full.push_back({u, w});
    const std::vector<Vertex> uni{0, 1, 2, 3, 4, 5};
    CHECK(bipartite_pm(LinkGraph::make(uni, full), a, b));
    // B_033: left vertex 0 isolated, vertices 1 and 2 joined to all of B.
    const auto b033 = LinkGraph::make(uni, {{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    CHECK_FALSE(bipartite_pm(b033, a, b));

    // Every 7-edge graph has a perfect matching.
    for (std::uint32_t mask = 0; mask < 512; ++mask) {
        if (std::popcount(mask) != 7)
            continue;
        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (int i = 0; i < 9; ++i)
            if ((mask >> i) & 1u)
                pairs.push_back({Vertex(i / 3), Vertex(3 + i % 3)});
        CHECK(bipartite_pm(LinkGraph::make(uni, pairs), a, b));
    }

    const std::vector<Vertex> short_side{3, 4};
    CHECK_THROWS_AS(bipartite_pm(b033, a, short_side), GraphError);
    CHECK_THROWS_AS(bipartite_pm(LinkGraph::make(uni, {{0, 1}}), a, b), GraphError);
}

TEST_CASE("rainbow matchings")
{
    const std::vector<Vertex> uni{0, 1, 2, 3};
    const std::vector<LinkGraph> same{LinkGraph::make(uni, {{0, 1}}), LinkGraph::make(uni, {{0, 1}})};
    CHECK_FALSE(rainbow_matching(same, 2).has_value());
    const std::vector<LinkGraph> apart{LinkGraph::make(uni, {{0, 1}}), LinkGraph::make(uni, {{2, 3}})};
    const auto r = rainbow_matching(apart, 2);
    REQUIRE(r.has_value());
    CHECK((*r)[0].a == 0);
    CHECK((*r)[1].a == 2);
    CHECK_THROWS_AS(rainbow_matching(apart, 3), std::invalid_argument);
}

TEST_CASE("two 4-edge links on the 3x3 bipartite universe always have a rainbow 2-matching")
{
    const std::vector<Vertex> uni{0, 1, 2, 3, 4, 5};
    std::vector<LinkGraph> four;
    for (std::uint32_t mask = 0; mask < 512; ++mask) {
        if (std::popcount(mask) != 4)
            continue;
        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (int i = 0; i < 9; ++i)
            if ((mask >> i) & 1u)
                pairs.push_back({Vertex(i / 3), Vertex(3 + i % 3)});
        four.push_back(LinkGraph::make(uni, pairs));
    }
    REQUIRE(four.size() == 126);
    std::size_t failures = 0;
    for (const auto& g : four)
        for (const auto& h : four) {
            const std::vector<LinkGraph> pair{g, h};
            failures += !rainbow_matching(pair, 2).has_value();
        }
    CHECK(failures == 0);
}

TEST_CASE("certificates reject invalid matchings")
{
    const auto h = Hypergraph3::build(6, {{0, 1, 2}, {1, 2, 3}, {3, 4, 5}});
    CHECK_THROWS_AS(make_certificate(h, {{0, 1, 2}, {1, 2, 3}}), std::logic_error);
    CHECK_THROWS_AS(make_certificate(h, {{0, 1, 3}}), std::logic_error);
    const auto ok = make_certificate(h, {{3, 5, 4}, {2, 0, 1}});
    CHECK(ok.perfect);
    CHECK(ok.edges.front() == Triple{0, 1, 2});
}

TEST_CASE("twin classes")
{
    const auto inst = h12(15, 3, 1);
    const auto cls = twin_classes(inst.graph);
    std::set<std::uint32_t> distinct(cls.begin(), cls.end());
    CHECK(distinct.size() == 3);
    CHECK(cls[0] == cls[2]);
    CHECK(cls[0] != cls[3]);
    const auto path = Hypergraph3::build(5, {{0, 1, 2}, {2, 3, 4}});
    const auto pc = twin_classes(path);
    CHECK(pc[0] == pc[1]);
    CHECK(pc[3] == pc[4]);
    CHECK(pc[0] != pc[2]);
}
