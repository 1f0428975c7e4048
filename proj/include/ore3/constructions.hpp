#pragma once

#include "ore3/hypergraph.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace ore3 {

/// A named block of consecutive vertices [first, first+size).
struct Block
{
    std::string name;
    Vertex first = 0;
    std::size_t size = 0;

    bool contains(Vertex v) const { return v >= first && v < first + size; }
};

/// Disjoint blocks covering 0..n-1 in order.
struct PartitionSpec
{
    std::vector<Block> blocks;

    const Block& block(const std::string& name) const;
    /// "# block R: 0..2" style annotation lines (without the leading "# ").
    std::vector<std::string> annotations() const;
};

enum class Family { h_ell, h12 };

struct FamilyInstance
{
    Hypergraph3 graph;
    PartitionSpec partition;
    Family family;
    std::size_t n = 0;
    // h_ell: s, ell.  h12: x, y.
    std::size_t s = 0, ell = 0, x = 0, y = 0;

    std::string tag() const;
};

/// H^ell_{n,s}: blocks S (n - s*ell + 1) then T (s*ell - 1); all triples meeting T in at
/// least ell vertices. Throws std::invalid_argument on parameters out of range.
FamilyInstance h_ell(std::size_t n, std::size_t s, std::size_t ell);

/// H^{1,2}_{n,x,y}: blocks R (x), S (n-3x-y), T (2x+y). Edges: R+TT, S+TT, T+SS, TTT.
FamilyInstance h12(std::size_t n, std::size_t x, std::size_t y);

/// Largest matching size in H^ell_{n,s}: s-1.
std::size_t max_matching_bound_h_ell(std::size_t n, std::size_t s, std::size_t ell);

/// Closed forms for sigma_2 of H^1, H^2, H^3 at (n, s).
std::int64_t sigma2_formula_h_ell(std::size_t n, std::size_t s, std::size_t ell);

/// Block degrees of H^{1,2}_{n,x,y} from binomial counts.
struct H12BlockDegrees
{
    std::int64_t r, s, t;
};
H12BlockDegrees h12_block_degrees(std::size_t n, std::size_t x, std::size_t y);

/// Quadratic upper envelopes in x of deg(S) and deg(R)+deg(T) at y = n/3 - x - 1.
/// Evaluated exactly; n must be divisible by 3.
std::int64_t two_f1(std::int64_t n, std::int64_t x);
std::int64_t f2(std::int64_t n, std::int64_t x);

/// Binomial random 3-graph: each triple independently with probability p.
Hypergraph3 random_hypergraph(std::size_t n, double p, std::mt19937_64& rng);

std::int64_t binom2(std::int64_t a);
std::int64_t binom3(std::int64_t a);

} // namespace ore3
