#include "ore3/extremal.hpp"

#include "ore3/constructions.hpp"
#include "ore3/matching.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace ore3 {

std::optional<std::int64_t> h12_sigma2_by_blocks(std::size_t n, std::size_t x, std::size_t y)
{
    if (n < 3 * x + 3 * y + 3)
        throw std::invalid_argument("h12_sigma2_by_blocks: need n >= 3x + 3y + 3");
    const std::array<std::int64_t, 3> size{std::int64_t(x), std::int64_t(n - 3 * x - y), std::int64_t(2 * x + y)};
    // Edge types as (R, S, T) counts.
    constexpr std::array<std::array<int, 3>, 4> types{{{1, 0, 2}, {0, 1, 2}, {0, 2, 1}, {0, 0, 3}}};

    auto realizable = [&](const std::array<int, 3>& t) {
        for (int b = 0; b < 3; ++b)
            if (t[b] > size[b])
                return false;
        return true;
    };
    auto choose = [](std::int64_t a, int k) -> std::int64_t {
        if (k == 0)
            return 1;
        if (k == 1)
            return a;
        return binom2(a);
    };

    std::array<std::int64_t, 3> deg{0, 0, 0};
    for (int b = 0; b < 3; ++b)
        for (const auto& t : types) {
            if (!realizable(t) || t[b] == 0)
                continue;
            std::int64_t through = 1;
            for (int c = 0; c < 3; ++c)
                through *= choose(size[c] - (c == b), t[c] - (c == b));
            deg[b] += through;
        }

    std::optional<std::int64_t> best;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            if (size[i] == 0 || size[j] == 0 || (i == j && size[i] < 2))
                continue;
            bool adj = false;
            for (const auto& t : types)
                if (realizable(t) && (i == j ? t[i] >= 2 : (t[i] >= 1 && t[j] >= 1)))
                    adj = true;
            if (!adj)
                continue;
            const std::int64_t s = deg[i] + deg[j];
            if (!best || s < *best)
                best = s;
        }
    return best;
}

SweepResult sweep_max_sigma2(std::size_t n, const SweepOptions& opt)
{
    if (n % 3 != 0 || n < 9)
        throw std::invalid_argument("sweep_max_sigma2: n must be divisible by 3 and at least 9");
    const std::size_t cap = n / 3 - 1;

    SweepResult out;
    out.n = n;
    for (std::size_t x = 0; x <= cap; ++x)
        for (std::size_t y = 0; x + y <= cap; ++y) {
            SweepRow row;
            row.x = x;
            row.y = y;
            row.two_f1 = two_f1(std::int64_t(n), std::int64_t(x));
            row.f2 = f2(std::int64_t(n), std::int64_t(x));
            out.rows.push_back(row);
        }

    const bool build = n <= opt.construction_limit;
    detail::parallel_blocks(out.rows.size(), opt.threads, [&](std::size_t i) {
        auto& row = out.rows[i];
        if (build) {
            const auto inst = h12(n, row.x, row.y);
            auto s = sigma2(inst.graph);
            if (s)
                row.sigma2 = static_cast<std::int64_t>(*s);
            row.from_construction = true;
        } else {
            row.sigma2 = h12_sigma2_by_blocks(n, row.x, row.y);
        }
    });

    bool any = false;
    for (const auto& row : out.rows)
        if (row.sigma2 && (!any || *row.sigma2 > out.max)) {
            out.max = *row.sigma2;
            any = true;
        }
    if (!any)
        throw std::logic_error("sweep_max_sigma2: no grid point has an adjacent pair");
    for (auto& row : out.rows)
        if (row.sigma2 && *row.sigma2 == out.max) {
            row.is_max = true;
            out.argmax.emplace_back(row.x, row.y);
        }

    if (!build && n <= opt.spot_check_limit) {
        const auto [x, y] = out.argmax.front();
        const auto s = sigma2(h12(n, x, y).graph);
        if (!s || static_cast<std::int64_t>(*s) != out.max)
            throw std::logic_error("sweep_max_sigma2: block evaluation disagrees with construction");
        for (auto& row : out.rows)
            if (row.x == x && row.y == y)
                row.from_construction = true;
    }
    return out;
}

std::int64_t closed_form_max(std::int64_t n)
{
    if (n % 3 != 0 || n < 0)
        throw std::invalid_argument("closed_form_max: n must be a nonnegative multiple of 3");
    // 225 * value = 128 n^2 - lin * n + cst
    constexpr std::array<std::array<std::int64_t, 2>, 5> table{{
        {540, 450},  // 12/5,    2
        {561, 558},  // 187/75,  62/25
        {552, 342},  // 184/75,  38/25
        {528, 432},  // 176/75,  48/25
        {519, 378},  // 173/75,  42/25
    }};
    const auto& c = table[static_cast<std::size_t>(n % 5)];
    const std::int64_t num = 128 * n * n - c[0] * n + c[1];
    if (num % 225 != 0)
        throw std::logic_error("closed_form_max: non-integral value");
    return num / 225;
}

std::vector<CandidatePoint> candidate_points(std::int64_t n)
{
    if (n % 3 != 0)
        throw std::invalid_argument("candidate_points: n must be divisible by 3");
    const std::int64_t cap = n / 3 - 1;
    auto make = [&](std::int64_t x, bool doubled_f1) {
        CandidatePoint p;
        p.x = x;
        p.formula = doubled_f1 ? "2f1" : "f2";
        p.value = doubled_f1 ? two_f1(n, x) : f2(n, x);
        p.feasible = x >= 0 && x <= cap;
        return p;
    };
    return {make(0, true), make(1, false), make((n + 1) / 5, false), make((n + 2 + 4) / 5, true)};
}

std::size_t max_matching_structural_bound(std::size_t n, std::size_t x, std::size_t y)
{
    if (n < 3 * x + 3 * y + 3)
        throw std::invalid_argument("max_matching_structural_bound: need n >= 3x + 3y + 3");
    const std::size_t t = 2 * x + y, s = n - 3 * x - y;
    std::size_t best = 0;
    for (std::size_t a = 0; a <= x && 2 * a <= t; ++a)
        for (std::size_t b = 0; b <= s && 2 * a + 2 * b <= t; ++b)
            for (std::size_t c = 0; b + 2 * c <= s && 2 * a + 2 * b + c <= t; ++c) {
                const std::size_t d = (t - 2 * a - 2 * b - c) / 3;
                best = std::max(best, a + b + c + d);
            }
    return best;
}

std::int64_t counterexample_threshold(std::int64_t n)
{
    if (n % 3 != 0)
        throw std::invalid_argument("counterexample_threshold: n must be divisible by 3");
    return 2 * (binom2(n - 1) - binom2(2 * n / 3));
}

CounterexampleReport certify_counterexample(std::size_t n, const CertifyOptions& opt)
{
    const auto sweep = sweep_max_sigma2(n, opt.sweep);
    CounterexampleReport r;
    r.n = n;
    std::tie(r.x, r.y) = sweep.argmax.front();

    const auto inst = h12(n, r.x, r.y);
    const auto& g = inst.graph;
    const auto s = sigma2(g);
    if (!s)
        throw std::logic_error("certify: chosen graph has no adjacent pair");
    r.sigma2 = static_cast<std::int64_t>(*s);
    r.threshold = counterexample_threshold(std::int64_t(n));
    r.closed_form = closed_form_max(std::int64_t(n));
    if (r.sigma2 != r.closed_form)
        throw std::logic_error("certify: constructed sigma2 disagrees with the closed form");
    r.isolated = isolated_vertices(g).size();

    r.structural_bound = max_matching_structural_bound(n, r.x, r.y);
    if (n <= opt.exact_matching_limit) {
        const auto m = max_matching(g);
        r.max_matching = m.size;
        r.matching_method = "exact";
        r.matching_witness = m.edges;
        if (m.size != r.structural_bound)
            throw std::logic_error("certify: exact matching disagrees with the structural bound");
    } else {
        r.max_matching = r.structural_bound;
        r.matching_method = "structural";
    }

    auto alpha = independence_number(g);
    if (!meets_every_edge_at_most_once(g, alpha.witness))
        throw std::logic_error("certify: independence witness is not independent");
    r.independence_number = alpha.size;
    r.independent_witness = std::move(alpha.witness);

    r.degree_sum_exceeds = r.sigma2 > r.threshold;
    r.no_perfect_matching = r.max_matching < n / 3;
    r.not_in_h2 = r.independence_number < n / 3 + 1;
    return r;
}

} // namespace ore3
