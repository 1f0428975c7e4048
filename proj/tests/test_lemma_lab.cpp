#include "doctest.h"

#include "ore3/lemma_lab.hpp"

#include <bit>

using namespace ore3;

namespace {

// Relabels a 3+3 mask by a row permutation, a column permutation and an optional swap.
std::uint16_t relabel(std::uint16_t mask, const int* rows, const int* cols, bool swap)
{
    std::uint16_t out = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if ((mask >> (3 * i + j)) & 1u) {
                int r = rows[i], c = cols[j];
                if (swap)
                    std::swap(r, c);
                out |= std::uint16_t(1u << (3 * r + c));
            }
    return out;
}

LemmaOptions randomized(std::uint64_t samples, std::uint64_t seed = 7)
{
    LemmaOptions o;
    o.exhaustive = false;
    o.samples = samples;
    o.seed = seed;
    o.restarts = 5;
    return o;
}

} // namespace

TEST_CASE("bipartite 3+3 class names and canonical forms")
{
    CHECK(bipartite33_class_name(0b111'111'000) == "B_033");
    CHECK(bipartite33_has_pm(0b100'010'001));
    CHECK_FALSE(bipartite33_has_pm(0b111'111'000));

    const int id[3] = {0, 1, 2}, rot[3] = {1, 2, 0}, sw[3] = {2, 1, 0};
    for (std::uint16_t m = 0; m < 512; m += 7) {
        const auto c = bipartite33_canonical(m);
        CHECK(c <= m);
        CHECK(bipartite33_canonical(relabel(m, rot, id, false)) == c);
        CHECK(bipartite33_canonical(relabel(m, id, sw, true)) == c);
        CHECK(std::popcount(c) == std::popcount(m));
        CHECK(bipartite33_has_pm(c) == bipartite33_has_pm(m));
    }
}

TEST_CASE("bipartite fact")
{
    const auto v = verify_bipartite_fact();
    CHECK(v.holds());
    CHECK(v.universe_size == 512);
    REQUIRE(v.classes.size() == 3);
    CHECK(v.classes[0].name == "B_023");
    CHECK(v.classes[0].labeled == 36);
    CHECK(v.classes[1].name == "B_113");
    CHECK(v.classes[1].labeled == 9);
    CHECK(v.classes[2].name == "B_033");
    CHECK(v.classes[2].edges == 6);
    CHECK(v.classes[2].labeled == 6);
}

TEST_CASE("3-partite no-PM bounds")
{
    CHECK(kpartite_allowed_cells().size() == 20);
    const auto a = verify_kpartite_nopm_bound();
    CHECK(a.holds());
    CHECK(a.universe_size == (1u << 20));
    CHECK(a.max_lhs == 16);
    CHECK(a.bound == 16);

    const auto w = verify_weighted_degree_bound();
    CHECK(w.holds());
    CHECK(w.max_lhs == 20);
    CHECK(w.hypothesis_count == a.hypothesis_count);

    LemmaOptions par;
    par.threads = 4;
    const auto b = verify_kpartite_nopm_bound(par);
    CHECK(b.hypothesis_count == a.hypothesis_count);
    CHECK(b.witnesses == a.witnesses);
}

TEST_CASE("disjoint cells in small 3-partite families")
{
    const auto v = verify_aharoni_howard(2, 2);
    CHECK(v.holds());
    CHECK(v.universe_size == 256);
    CHECK(v.max_lhs == 4);
    CHECK(v.bound == 4);
    CHECK_FALSE(v.witnesses.empty());

    const auto one = verify_aharoni_howard(2, 1);
    CHECK(one.max_lhs == 0);
    CHECK(verify_aharoni_howard(1, 2).max_lhs == 1);
    CHECK(verify_aharoni_howard(2, 3).holds());

    CHECK_THROWS_AS(verify_aharoni_howard(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(verify_aharoni_howard(4, 2, randomized(10)), std::invalid_argument);

    const auto r = verify_aharoni_howard(3, 2, randomized(20000));
    CHECK(r.holds());
    CHECK(r.mode == SearchMode::randomized);
    CHECK(r.max_lhs <= 9);
}

TEST_CASE("plain hypothesis predicates")
{
    TriGraphConfig c;
    c.vertices = 4;
    c.graphs[0] = {{0, 1}};
    c.graphs[1] = {{0, 2}};
    c.graphs[2] = {{1, 3}};
    CHECK(hypothesis_g1_meets_all(c));
    CHECK_FALSE(hypothesis_pairwise_meeting(c));
    c.graphs[2] = {{1, 2}};
    CHECK(hypothesis_pairwise_meeting(c));
    c.graphs[2].push_back({2, 3});
    CHECK_FALSE(hypothesis_g1_meets_all(c));

    const std::vector<Vertex> set{0, 1, 2};
    CHECK(degree_sum(c, set) == 2 + 2 + 3);

    TriGraphConfig b;
    b.vertices = 4;
    b.a = 2;
    b.b = 2;
    b.graphs[0] = {{0, 1}};
    b.graphs[1] = {{0, 2}};
    b.graphs[2] = {{1, 2}};
    CHECK(hypothesis_blocks(b));
    CHECK(block_degree_sum(b, 1) == 2 + 2 + 1 + 1);
    CHECK(block_degree_sum(b, 2) == 2 + 2 + 2 + 2);
    b.graphs[0].push_back({2, 3});
    CHECK_FALSE(hypothesis_blocks(b));
}

TEST_CASE("intersecting triples of 2-graphs, exhaustive")
{
    const auto v = verify_intersecting_bound_6n(4);
    CHECK(v.holds());
    CHECK(v.universe_size == (1u << 18));
    CHECK(v.bound == 18);
    CHECK(v.max_lhs == 18);

    const auto p = verify_intersecting_bound_3n(5);
    CHECK(p.holds());
    CHECK(p.bound == 18);

    LemmaOptions par;
    par.threads = 3;
    const auto q = verify_intersecting_bound_6n(4, par);
    CHECK(q.hypothesis_count == v.hypothesis_count);
    CHECK(q.witnesses == v.witnesses);

    CHECK_THROWS_AS(verify_intersecting_bound_6n(3), std::invalid_argument);
    CHECK_THROWS_AS(verify_intersecting_bound_6n(6), std::invalid_argument);
    CHECK_THROWS_AS(verify_intersecting_bound_3n(4), std::invalid_argument);
}

TEST_CASE("randomized search at n = 6 stays under the bound")
{
    const auto v = verify_intersecting_bound_6n(6, randomized(20000, 3));
    CHECK(v.holds());
    CHECK(v.max_lhs <= 30);
    CHECK(v.max_lhs >= 21);
}

TEST_CASE("randomized runs are reproducible and thread independent")
{
    auto o = randomized(50000, 99);
    const auto a = verify_intersecting_bound_6n(7, o);
    const auto b = verify_intersecting_bound_6n(7, o);
    o.threads = 4;
    const auto c = verify_intersecting_bound_6n(7, o);
    CHECK(a.max_lhs == b.max_lhs);
    CHECK(a.hypothesis_count == b.hypothesis_count);
    CHECK(a.witnesses == b.witnesses);
    CHECK(a.max_lhs == c.max_lhs);
    CHECK(a.hypothesis_count == c.hypothesis_count);
    CHECK(a.samples == 50000);
    CHECK(a.seed == 99);
}

TEST_CASE("block lemmas")
{
    const auto v = verify_ab_bound_6a(2, 1);
    CHECK(v.holds());
    CHECK(v.universe_size == 128);
    CHECK(v.bound == 14);

    const auto w = verify_ab_bound_8a(2, 1);
    CHECK(w.holds());
    CHECK(w.bound == 18);

    CHECK(verify_ab_bound_6a(3, 2).holds());
    CHECK(verify_ab_bound_8a(2, 3).holds());
    CHECK(verify_ab_bound_6a(5, 4, randomized(20000)).holds());
    CHECK(verify_ab_bound_8a(4, 4, randomized(20000)).holds());

    CHECK(verify_ab_bound_6a(2, 4, randomized(100)).bound == 20);  // 5a + 2b + 2 dominates
    CHECK(verify_ab_bound_8a(2, 5, randomized(100)).bound == 26);  // 6a + 2b + 4 dominates

    CHECK_THROWS_AS(verify_ab_bound_6a(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(verify_ab_bound_6a(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(verify_ab_bound_6a(7, 1, randomized(10)), std::invalid_argument);
    CHECK_THROWS_AS(verify_ab_bound_8a(4, 4), std::invalid_argument);
}
