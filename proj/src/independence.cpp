// Maximum independent set of the adjacency 2-graph, solved as maximum clique in the
// complement with a greedy-colouring bound (bitset MCQ style).

#include "ore3/bitset.hpp"
#include "ore3/hypergraph.hpp"

#include <algorithm>
#include <numeric>

namespace ore3 {
namespace {

class CliqueSearch
{
public:
    explicit CliqueSearch(std::vector<Bitset> nbr) : nbr_(std::move(nbr)), n_(nbr_.size()) {}

    std::vector<Vertex> run()
    {
        Bitset all(n_);
        for (std::size_t v = 0; v < n_; ++v)
            all.set(v);
        std::vector<Vertex> current;
        expand(current, all);
        return best_;
    }

private:
    // Greedy sequential colouring of P. order[i] gets colour bound[i]; bounds are
    // non-decreasing, so scanning from the back visits the largest bounds first.
    void colour(const Bitset& p, std::vector<Vertex>& order, std::vector<std::size_t>& bound) const
    {
        Bitset uncoloured = p;
        std::size_t colour = 0;
        while (!uncoloured.none()) {
            ++colour;
            Bitset q = uncoloured;
            for (auto v = q.first(); v < n_; v = q.next(v)) {
                uncoloured.reset(v);
                q.subtract(nbr_[v]);
                order.push_back(static_cast<Vertex>(v));
                bound.push_back(colour);
            }
        }
    }

    void expand(std::vector<Vertex>& current, Bitset p)
    {
        std::vector<Vertex> order;
        std::vector<std::size_t> bound;
        order.reserve(p.count());
        colour(p, order, bound);
        for (std::size_t i = order.size(); i-- > 0;) {
            if (current.size() + bound[i] <= best_.size())
                return;
            const Vertex v = order[i];
            current.push_back(v);
            Bitset next = p & nbr_[v];
            if (next.none()) {
                if (current.size() > best_.size())
                    best_ = current;
            } else {
                expand(current, std::move(next));
            }
            current.pop_back();
            p.reset(v);
        }
    }

    std::vector<Bitset> nbr_;
    std::size_t n_;
    std::vector<Vertex> best_;
};

} // namespace

IndependenceResult independence_number(const Hypergraph3& h)
{
    const std::size_t n = h.order();
    if (n == 0)
        return {};

    // Relabel so that vertices with few non-neighbours come first; the colouring
    // then tends to produce tighter bounds early.
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::vector<std::size_t> nonadj(n, 0);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v && !h.adjacent(u, v))
                ++nonadj[u];
    std::stable_sort(perm.begin(), perm.end(), [&](Vertex a, Vertex b) { return nonadj[a] > nonadj[b]; });

    std::vector<Bitset> comp(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && !h.adjacent(perm[i], perm[j]))
                comp[i].set(j);

    auto clique = CliqueSearch(std::move(comp)).run();
    IndependenceResult out;
    out.size = clique.size();
    for (auto i : clique)
        out.witness.push_back(perm[i]);
    std::sort(out.witness.begin(), out.witness.end());
    return out;
}

} // namespace ore3
