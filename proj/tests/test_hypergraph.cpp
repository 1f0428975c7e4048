#include "doctest.h"
#include "oracles.hpp"

#include "ore3/constructions.hpp"
#include "ore3/edge_list.hpp"
#include "ore3/hypergraph.hpp"

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

} // namespace

TEST_CASE("build canonicalizes and validates")
{
    CHECK(Hypergraph3::build(3, {{0, 1, 2}}).edge_count() == 1);
    const auto h = Hypergraph3::build(4, {{2, 1, 0}, {0, 1, 2}});
    REQUIRE(h.edge_count() == 1);
    CHECK(h.edges()[0] == Triple{0, 1, 2});
    CHECK_THROWS_AS(Hypergraph3::build(4, {{0, 1, 5}}), GraphError);
    CHECK_THROWS_AS(Hypergraph3::build(4, {{0, 1, 1}}), GraphError);

    const auto g = Hypergraph3::build(6, {{5, 3, 4}, {2, 0, 1}, {0, 4, 1}});
    CHECK(std::is_sorted(g.edges().begin(), g.edges().end()));
}

TEST_CASE("degree and codegree")
{
    CHECK(degree(complete(4), 0) == 3);
    const auto k5 = complete(5);
    for (Vertex u = 0; u < 5; ++u)
        for (Vertex v = u + 1; v < 5; ++v)
            CHECK(codegree(k5, u, v) == 3);

    const auto single = Hypergraph3::build(5, {{0, 1, 2}});
    CHECK(codegree(single, 0, 1) == 1);
    CHECK(codegree(single, 0, 3) == 0);
    CHECK_THROWS_AS(codegree(single, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(degree(single, 7), GraphError);

    const auto inst = h12(15, 3, 1);
    CHECK(degree(inst.graph, inst.partition.block("R").first) == 21);
    CHECK(degree(inst.graph, inst.partition.block("T").first) == 73);

    const auto h2 = h_ell(12, 4, 2);
    const auto& s = h2.partition.block("S");
    for (Vertex u = s.first; u < s.first + s.size; ++u)
        for (Vertex v = u + 1; v < s.first + s.size; ++v)
            CHECK(codegree(h2.graph, u, v) == 0);
}

TEST_CASE("adjacency")
{
    const auto single = Hypergraph3::build(4, {{0, 1, 2}});
    CHECK(are_adjacent(single, 0, 1));
    CHECK_FALSE(are_adjacent(single, 0, 3));
    CHECK_THROWS(are_adjacent(single, 1, 1));

    const auto inst = h12(15, 3, 1);
    const auto& r = inst.partition.block("R");
    const auto& s = inst.partition.block("S");
    for (Vertex u = r.first; u < r.first + r.size; ++u)
        for (Vertex v = s.first; v < s.first + s.size; ++v)
            CHECK_FALSE(are_adjacent(inst.graph, u, v));
}

TEST_CASE("sigma2 and isolated vertices")
{
    CHECK_FALSE(sigma2(Hypergraph3::build(5, {})).has_value());
    CHECK(sigma2(h_ell(12, 4, 2).graph) == 66u);
    CHECK(sigma2(h12(15, 3, 1).graph) == 94u);

    CHECK(isolated_vertices(Hypergraph3::build(3, {})) == std::vector<Vertex>{0, 1, 2});
    CHECK(isolated_vertices(h12(15, 3, 1).graph).empty());
    CHECK(isolated_vertices(Hypergraph3::build(5, {{0, 1, 2}})) == std::vector<Vertex>{3, 4});
}

TEST_CASE("links")
{
    const auto single = Hypergraph3::build(4, {{0, 1, 2}});
    const std::vector<Vertex> a{1, 2, 3};
    const auto l = link(single, 0, a);
    REQUIRE(l.pairs.size() == 1);
    CHECK(l.pairs[0] == std::pair<Vertex, Vertex>{1, 2});

    const std::vector<Vertex> one{1}, two{2};
    const auto lb = link_bipartite(single, 0, one, two);
    REQUIRE(lb.pairs.size() == 1);
    CHECK(lb.contains(1, 2));

    const auto h2 = h_ell(12, 4, 2);
    const auto& t = h2.partition.block("T");
    std::vector<Vertex> rest;
    for (Vertex v = t.first + 1; v < t.first + t.size; ++v)
        rest.push_back(v);
    const auto lt = link(h2.graph, t.first, rest);
    CHECK(rest.size() == 6);
    CHECK(lt.edge_count() == 15);

    const std::vector<Vertex> with_v{0, 1};
    CHECK_THROWS_AS(link(single, 0, with_v), GraphError);
    const std::vector<Vertex> b_overlap{1, 2};
    CHECK_THROWS_AS(link_bipartite(single, 0, one, b_overlap), GraphError);
    CHECK_THROWS_AS(LinkGraph::make({0, 1}, {{0, 2}}), GraphError);
    CHECK_THROWS_AS(LinkGraph::make({0, 1}, {{1, 1}}), GraphError);
}

TEST_CASE("independence number examples")
{
    CHECK(independence_number(Hypergraph3::build(6, {})).size == 6);
    CHECK(independence_number(h12(15, 3, 1).graph).size == 4);
    CHECK(independence_number(h_ell(15, 5, 2).graph).size == 6);
}

TEST_CASE("independence number agrees with the all-subsets oracle for n <= 7")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n = 1 + trial % 7;
        const double p = (trial % 5 + 1) * 0.15;
        const auto t = oracle::random_triples(n, p, rng);
        const auto h = Hypergraph3::build(n, t);
        const auto r = independence_number(h);
        CHECK(r.size == oracle::independence(n, t));
        CHECK(r.witness.size() == r.size);
        CHECK(meets_every_edge_at_most_once(h, r.witness));
    }
}

TEST_CASE("independence number on mid-size random graphs")
{
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 10 + trial % 7;
        const auto t = oracle::random_triples(n, 0.05 + 0.01 * (trial % 6), rng);
        CHECK(independence_number(Hypergraph3::build(n, t)).size == oracle::independence(n, t));
    }
}

TEST_CASE("embedding into the half-size construction")
{
    const auto h2 = h_ell(15, 5, 2);
    const auto e = is_subgraph_of_h2(h2.graph);
    CHECK(e.embeds);
    CHECK(e.small_side.size() == 6);
    CHECK(meets_every_edge_at_most_once(h2.graph, e.small_side));

    CHECK_FALSE(is_subgraph_of_h2(h12(15, 3, 1).graph).embeds);
    const auto empty = is_subgraph_of_h2(Hypergraph3::build(15, {}));
    CHECK(empty.embeds);
    CHECK(empty.small_side.size() == 6);
    CHECK_THROWS_AS(is_subgraph_of_h2(Hypergraph3::build(7, {})), GraphError);
}

TEST_CASE("degree identities on random graphs")
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 3 + trial % 10;
        const auto t = oracle::random_triples(n, 0.3, rng);
        const auto h = Hypergraph3::build(n, t);
        const auto d = oracle::degrees(n, t);
        Count total = 0;
        for (Vertex v = 0; v < n; ++v) {
            CHECK(h.degree(v) == d[v]);
            total += h.degree(v);
            Count co = 0;
            for (Vertex u = 0; u < n; ++u)
                if (u != v) {
                    CHECK(h.codegree(u, v) == oracle::codegree(t, u, v));
                    co += h.codegree(u, v);
                }
            CHECK(co == 2 * h.degree(v));
        }
        CHECK(total == 3 * h.edge_count());
        CHECK(sigma2(h) == oracle::sigma2(n, t));
    }
}

TEST_CASE("sigma2 does not drop when an edge is added inside the adjacency relation")
{
    std::mt19937_64 rng(14);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 6 + trial % 6;
        auto t = oracle::random_triples(n, 0.35, rng);
        const auto h = Hypergraph3::build(n, t);
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b)
                for (Vertex c = b + 1; c < n; ++c) {
                    if (h.has_edge({a, b, c}) || !h.adjacent(a, b) || !h.adjacent(a, c) || !h.adjacent(b, c))
                        continue;
                    auto more = t;
                    more.push_back({a, b, c});
                    const auto g = Hypergraph3::build(n, more);
                    CHECK(*sigma2(g) >= *sigma2(h));
                    ++checked;
                    goto next;
                }
    next:;
    }
    CHECK(checked > 50);
}

TEST_CASE("induced subgraph relabels in the given order")
{
    const auto h = Hypergraph3::build(6, {{0, 1, 2}, {3, 4, 5}, {1, 3, 5}});
    const std::vector<Vertex> keep{5, 3, 1};
    const auto g = h.induced(keep);
    CHECK(g.order() == 3);
    REQUIRE(g.edge_count() == 1);
    CHECK(g.edges()[0] == Triple{0, 1, 2});
}

TEST_CASE("edge-list format")
{
    std::istringstream in("# comment\n\n4 2\n3 1 0\n# inside\n1 2 3\n");
    const auto h = read_edge_list(in);
    CHECK(h.order() == 4);
    CHECK(h.edge_count() == 2);

    std::ostringstream out;
    write_edge_list(out, h, {"hello"});
    CHECK(out.str() == "# hello\n4 2\n0 1 3\n1 2 3\n");

    std::istringstream again(out.str());
    CHECK(read_edge_list(again).edges() == h.edges());

    for (const char* bad : {"", "4\n", "4 2\n0 1 2\n", "4 1\n0 1 9\n", "4 1\n0 1 1\n", "4 1\n0 1 2 3\n",
                            "4 1\n0 1 2\n0 1 3\n", "x y\n", "4 1\n0 1\n"}) {
        std::istringstream s(bad);
        CHECK_THROWS_AS(read_edge_list(s), GraphError);
    }
}
