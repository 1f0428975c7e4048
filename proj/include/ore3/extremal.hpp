#pragma once

#include "ore3/hypergraph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ore3 {

/// One grid point (x, y) of the H^{1,2}_{n,x,y} degree-sum sweep.
struct SweepRow
{
    std::size_t x = 0, y = 0;
    std::optional<std::int64_t> sigma2;  // nullopt when the graph has no adjacent pair
    std::int64_t two_f1 = 0, f2 = 0;     // envelopes in x (independent of y)
    bool is_max = false;
    bool from_construction = false;      // sigma2 computed on the built graph
};

struct SweepResult
{
    std::size_t n = 0;
    std::int64_t max = 0;
    std::vector<std::pair<std::size_t, std::size_t>> argmax;  // lexicographic
    std::vector<SweepRow> rows;                               // x-major, y ascending
};

struct SweepOptions
{
    unsigned threads = 1;
    /// Orders up to this value build every grid graph; larger orders evaluate sigma2
    /// on the block quotient and spot-check the argmax by construction.
    std::size_t construction_limit = 60;
    /// Largest order at which the argmax spot check is still built.
    std::size_t spot_check_limit = 150;
};

/// Max of sigma2(H^{1,2}_{n,x,y}) over x, y >= 0, x + y <= n/3 - 1.
/// Throws std::invalid_argument unless n is divisible by 3 and n >= 9.
SweepResult sweep_max_sigma2(std::size_t n, const SweepOptions& opt = {});

/// sigma2 of H^{1,2}_{n,x,y} from block sizes alone: block degrees and block-pair
/// adjacency of the four edge types. Used beyond the construction limit.
std::optional<std::int64_t> h12_sigma2_by_blocks(std::size_t n, std::size_t x, std::size_t y);

/// Five-case closed form for the sweep maximum, evaluated exactly. Throws
/// std::invalid_argument for n not divisible by 3 and std::logic_error if the
/// evaluation is not integral.
std::int64_t closed_form_max(std::int64_t n);

struct CandidatePoint
{
    std::int64_t x = 0;
    std::string formula;  // "2f1" or "f2"
    std::int64_t value = 0;
    bool feasible = false; // 0 <= x <= n/3 - 1
};

/// The four candidate evaluations 2f1(0), f2(1), f2(floor((n+1)/5)), 2f1(ceil((n+2)/5)).
std::vector<CandidatePoint> candidate_points(std::int64_t n);

/// Optimum of max a+b+c+d s.t. a <= x, 2a+2b+c+3d <= |T|, b+2c <= |S| over the
/// nonnegative integers: the largest matching of H^{1,2}_{n,x,y} by edge-type counts.
std::size_t max_matching_structural_bound(std::size_t n, std::size_t x, std::size_t y);

/// 2 * (C(n-1,2) - C(2n/3,2)).
std::int64_t counterexample_threshold(std::int64_t n);

struct CounterexampleReport
{
    std::size_t n = 0, x = 0, y = 0;
    std::int64_t sigma2 = 0;
    std::int64_t threshold = 0;
    std::int64_t closed_form = 0;
    std::size_t isolated = 0;
    std::size_t max_matching = 0;
    std::string matching_method;  // "exact" or "structural"
    std::size_t structural_bound = 0;
    std::vector<Triple> matching_witness;  // empty for the structural method
    std::size_t independence_number = 0;
    std::vector<Vertex> independent_witness;
    bool degree_sum_exceeds = false;    // sigma2 > threshold
    bool no_perfect_matching = false;   // max matching < n/3
    bool not_in_h2 = false;             // independence number < n/3 + 1

    bool all_hold() const { return degree_sum_exceeds && no_perfect_matching && not_in_h2; }
};

struct CertifyOptions
{
    std::size_t exact_matching_limit = 33;
    SweepOptions sweep;
};

/// Builds the sweep-optimal H^{1,2}_{n,x,y} and evaluates all three conditions from
/// witnesses. Throws std::invalid_argument on infeasible n, std::logic_error when the
/// construction disagrees with the closed forms.
CounterexampleReport certify_counterexample(std::size_t n, const CertifyOptions& opt = {});

} // namespace ore3
