#ifndef VMINOR_TESTS_SUPPORT_HPP
#define VMINOR_TESTS_SUPPORT_HPP

#include <vminor/census.hpp>
#include <vminor/graph.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace vminor::testing
{

inline auto random_graph(int n, double p, std::mt19937_64 & rng) -> Graph
{
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                g.add_edge(u, v);
    return g;
}

inline auto random_connected_graph(int n, double p, std::mt19937_64 & rng) -> Graph
{
    for (;;) {
        auto g = random_graph(n, p, rng);
        if (is_connected(g))
            return g;
    }
}

inline auto relabel(const Graph & g, const std::vector<int> & perm) -> Graph
{
    Graph out(g.order());
    for (auto [u, v] : g.edges())
        out.add_edge(perm[u], perm[v]);
    return out;
}

inline auto random_permutation(int n, std::mt19937_64 & rng) -> std::vector<int>
{
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

/// The census is expensive enough to share between test cases.
inline auto census8() -> const std::vector<std::vector<Graph>> &
{
    static const auto c = graph_census(8);
    return c;
}

inline auto connected_census8() -> const std::vector<std::vector<Graph>> &
{
    static const auto c = [] {
        auto all = census8();
        for (auto & level : all)
            std::erase_if(level, [](const Graph & g) { return ! is_connected(g); });
        return all;
    }();
    return c;
}

} // namespace vminor::testing

#endif
