#pragma once

#include "ore3/hypergraph.hpp"
#include "ore3/matching.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ore3 {

using VertexTriple = std::array<Vertex, 3>;

/// Threshold split of the vertex set by degree: `low` holds vertices of degree at
/// most (1/2 + epsilon) * C(n, 2), `high` the rest.
struct DegreeSplit
{
    std::vector<Vertex> low;
    std::vector<Vertex> high;
    double threshold = 0;
    bool sigma2_hypothesis = false;  // sigma2 > (1 + 2 epsilon) * C(n, 2)
    bool low_pair_in_edge = false;   // some edge holds two low vertices
};

/// Throws std::invalid_argument unless 0 < epsilon < 1/2.
DegreeSplit degree_split(const Hypergraph3& h, double epsilon);

/// True iff both H[T] and H[A u T] have perfect matchings. Exact (subset DP).
/// Throws GraphError unless |A| = 3, |T| = 18, A and T disjoint, vertices distinct.
bool is_absorbing_set(const Hypergraph3& h, std::span<const Vertex> a, std::span<const Vertex> t);

struct AbsorberSearchOptions
{
    double epsilon = 0.05;
    bool guided = true;               // false: uniform random 18-sets only
    std::vector<Vertex> forbidden;    // vertices no candidate may use
    std::size_t want = 0;             // stop after this many sets; 0 = budget
};

struct AbsorberSearch
{
    std::vector<std::vector<Vertex>> sets;  // sorted, distinct, each verified
    std::size_t attempts = 0;               // candidates tried
    std::size_t guided_built = 0;           // candidates from the guided construction
    std::size_t verified = 0;               // candidates passing the exact check
    bool small_high_side = false;           // fewer than 6 usable high-degree vertices
};

/// Up to `budget` candidate 18-sets for A. Guided candidates pick a high-degree
/// neighbour u_{3+i} for each u_i in A, an edge {u7,u8,u9} on high-degree vertices and
/// linking pairs B_1..B_6 with B_i + u_i and B_i + u_{3+i} both edges for the pairs
/// (u1,u4), (u2,u5), (u3,u6), (u4,u7), (u5,u8), (u6,u9); when a step fails the attempt
/// falls back to a uniform random 18-set. Every returned set passes is_absorbing_set.
AbsorberSearch find_absorbers(const Hypergraph3& h, std::span<const Vertex> a, std::size_t budget,
                              std::mt19937_64& rng, const AbsorberSearchOptions& opt = {});

struct AbsorberSet
{
    std::vector<Vertex> vertices;     // sorted, 18 vertices
    std::vector<VertexTriple> tags;   // 3-sets A verified to be absorbed
    std::vector<Triple> matching;     // perfect matching of H[T]
};

struct AbsorberFamily
{
    std::size_t k = 3;
    std::vector<AbsorberSet> sets;    // pairwise disjoint
    std::vector<Triple> matching;     // union of the per-set matchings

    std::vector<Vertex> vertices() const;  // sorted union of the sets
};

struct CoverageRow
{
    VertexTriple a{};
    std::size_t absorbers = 0;  // disjoint family sets absorbing A
};

struct FamilyOptions
{
    std::size_t budget = 200;     // find_absorbers budget per greedy step
    double epsilon = 0.05;
    unsigned restarts = 5;
    std::size_t reserve = 6;      // vertices kept outside the family
    std::size_t max_sets = 0;     // 0: as many as fit next to the reserve
};

struct FamilyReport
{
    AbsorberFamily family;
    std::vector<CoverageRow> coverage;  // one row per sampled A
    double coverage_fraction = 0;       // rows with absorbers >= target
    std::size_t min_count = 0;
    std::size_t target = 0;
    unsigned best_restart = 0;
    DegreeSplit split;
};

/// Greedy disjoint family: repeatedly draws a probe 3-set from the unused vertices and
/// adds one absorber for it, disjoint from the family, until `max_sets` sets exist or
/// no room is left beside the reserve. Coverage is then measured on `sample_count`
/// 3-sets drawn from the leftover vertices (all of them when there are at most that
/// many): a row is covered when at least `per_a_target` family sets absorb it. Runs
/// `restarts` times and keeps the best (coverage fraction, minimum count).
FamilyReport build_family(const Hypergraph3& h, std::size_t sample_count, std::size_t per_a_target,
                          std::mt19937_64& rng, const FamilyOptions& opt = {});

/// Re-checks every set: H[T] has a perfect matching and each tag is absorbed.
/// Also checks disjointness and the family matching. Throws std::logic_error.
void validate_family(const Hypergraph3& h, const AbsorberFamily& family);

class AbsorbError : public std::runtime_error
{
public:
    enum class Kind { divisibility, overlap, insufficient, routing };
    AbsorbError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

std::string to_string(AbsorbError::Kind kind);

struct AbsorbStep
{
    VertexTriple part{};
    std::size_t absorber = 0;  // index into family.sets
};

struct AbsorbResult
{
    MatchingCertificate matching;   // covers exactly V(M) u V'
    std::vector<AbsorbStep> routing;
    std::size_t partitions_tried = 0;
};

struct AbsorbOptions
{
    std::size_t max_partitions = 200;  // random partitions tried when |V'| > 9
};

/// Matching on exactly V(M) u V': partitions V' into 3-sets, routes each to a distinct
/// absorber whose H[A u T] has a perfect matching, and keeps M elsewhere. All
/// partitions are tried when |V'| <= 9.
AbsorbResult absorb(const Hypergraph3& h, const AbsorberFamily& family, std::span<const Vertex> leftover,
                    std::mt19937_64& rng, const AbsorbOptions& opt = {});

} // namespace ore3
