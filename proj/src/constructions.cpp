#include "ore3/constructions.hpp"

#include <stdexcept>

namespace ore3 {

std::int64_t binom2(std::int64_t a) { return a < 2 ? 0 : a * (a - 1) / 2; }
std::int64_t binom3(std::int64_t a) { return a < 3 ? 0 : a * (a - 1) * (a - 2) / 6; }

const Block& PartitionSpec::block(const std::string& name) const
{
    for (const auto& b : blocks)
        if (b.name == name)
            return b;
    throw std::out_of_range("no block named " + name);
}

std::vector<std::string> PartitionSpec::annotations() const
{
    std::vector<std::string> out;
    for (const auto& b : blocks) {
        if (b.size == 0)
            out.push_back("block " + b.name + ": empty");
        else
            out.push_back("block " + b.name + ": " + std::to_string(b.first) + ".." +
                          std::to_string(b.first + b.size - 1));
    }
    return out;
}

std::string FamilyInstance::tag() const
{
    if (family == Family::h_ell)
        return "H^" + std::to_string(ell) + "_{" + std::to_string(n) + "," + std::to_string(s) + "}";
    return "H^{1,2}_{" + std::to_string(n) + "," + std::to_string(x) + "," + std::to_string(y) + "}";
}

namespace {

// Builds all triples whose block-membership counts satisfy `keep`.
template <class Keep>
Hypergraph3 from_block_rule(std::size_t n, const PartitionSpec& p, Keep keep)
{
    std::vector<int> block_of(n);
    for (std::size_t b = 0; b < p.blocks.size(); ++b)
        for (std::size_t i = 0; i < p.blocks[b].size; ++i)
            block_of[p.blocks[b].first + i] = static_cast<int>(b);

    std::vector<Triple> edges;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c) {
                int cnt[3] = {0, 0, 0};
                ++cnt[block_of[a]];
                ++cnt[block_of[b]];
                ++cnt[block_of[c]];
                if (keep(cnt))
                    edges.push_back({a, b, c});
            }
    return Hypergraph3::build(n, edges);
}

} // namespace

FamilyInstance h_ell(std::size_t n, std::size_t s, std::size_t ell)
{
    if (ell < 1 || ell > 3)
        throw std::invalid_argument("h_ell: ell must be 1, 2 or 3");
    if (n < 3)
        throw std::invalid_argument("h_ell: n must be at least 3");
    if (s < 1 || s * ell - 1 > n)
        throw std::invalid_argument("h_ell: need 1 <= s and s*ell-1 <= n");

    const std::size_t t = s * ell - 1;
    FamilyInstance out;
    out.family = Family::h_ell;
    out.n = n;
    out.s = s;
    out.ell = ell;
    out.partition.blocks = {{"S", 0, n - t}, {"T", Vertex(n - t), t}};
    out.graph = from_block_rule(n, out.partition, [ell](const int* cnt) { return cnt[1] >= int(ell); });
    return out;
}

FamilyInstance h12(std::size_t n, std::size_t x, std::size_t y)
{
    if (n < 3 * x + 3 * y + 3)
        throw std::invalid_argument("h12: need n >= 3x + 3y + 3");

    const std::size_t r = x, t = 2 * x + y, s = n - 3 * x - y;
    FamilyInstance out;
    out.family = Family::h12;
    out.n = n;
    out.x = x;
    out.y = y;
    out.partition.blocks = {{"R", 0, r}, {"S", Vertex(r), s}, {"T", Vertex(r + s), t}};
    // cnt = {R, S, T}
    out.graph = from_block_rule(n, out.partition, [](const int* cnt) {
        return (cnt[0] == 1 && cnt[2] == 2) || (cnt[1] == 1 && cnt[2] == 2) || (cnt[2] == 1 && cnt[1] == 2) ||
               cnt[2] == 3;
    });
    return out;
}

std::size_t max_matching_bound_h_ell(std::size_t n, std::size_t s, std::size_t ell)
{
    if (ell < 1 || ell > 3 || n < 3 || s < 1 || s * ell - 1 > n)
        throw std::invalid_argument("max_matching_bound_h_ell: parameters out of range");
    return s - 1;
}

std::int64_t sigma2_formula_h_ell(std::size_t n_, std::size_t s_, std::size_t ell)
{
    const auto n = static_cast<std::int64_t>(n_), s = static_cast<std::int64_t>(s_);
    switch (ell) {
    case 1:
        return 2 * (binom2(n - 1) - binom2(n - s));
    case 2:
        return (2 * s - 2) * (n - 1);
    case 3:
        return 2 * binom2(3 * s - 2);
    default:
        throw std::invalid_argument("sigma2_formula_h_ell: ell must be 1, 2 or 3");
    }
}

H12BlockDegrees h12_block_degrees(std::size_t n_, std::size_t x_, std::size_t y_)
{
    const auto n = static_cast<std::int64_t>(n_), x = static_cast<std::int64_t>(x_), y = static_cast<std::int64_t>(y_);
    const std::int64_t t = 2 * x + y, s = n - 3 * x - y;
    H12BlockDegrees d;
    d.r = binom2(t);
    d.s = binom2(t) + t * (s - 1);
    d.t = (t - 1) * x + binom2(t - 1) + (t - 1) * s + binom2(s);
    return d;
}

namespace {

std::int64_t exact_ninth(std::int64_t num, const char* what)
{
    if (num % 9 != 0)
        throw std::logic_error(std::string(what) + ": non-integral value");
    return num / 9;
}

void require_div3(std::int64_t n)
{
    if (n % 3 != 0)
        throw std::invalid_argument("n must be divisible by 3");
}

} // namespace

// 2 f1(x) = 2 * (-(3/2)x^2 + (n/3 + 1/2)x + (5/18)n^2 - (7/6)n + 1), scaled by 9.
std::int64_t two_f1(std::int64_t n, std::int64_t x)
{
    require_div3(n);
    return exact_ninth(-27 * x * x + (6 * n + 9) * x + 5 * n * n - 21 * n + 18, "two_f1");
}

// f2(x) = 2x^2 - (n/3 + 2)x + (5/9)n^2 - 2n + 2, scaled by 9.
std::int64_t f2(std::int64_t n, std::int64_t x)
{
    require_div3(n);
    return exact_ninth(18 * x * x - (3 * n + 18) * x + 5 * n * n - 18 * n + 18, "f2");
}

Hypergraph3 random_hypergraph(std::size_t n, double p, std::mt19937_64& rng)
{
    if (!(p >= 0 && p <= 1))
        throw std::invalid_argument("random_hypergraph: p must lie in [0, 1]");
    std::bernoulli_distribution coin(p);
    std::vector<Triple> edges;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c)
                if (coin(rng))
                    edges.push_back({a, b, c});
    return Hypergraph3::build(n, edges);
}

} // namespace ore3
