#include <vminor/census.hpp>
#include <vminor/error.hpp>

#include <algorithm>
#include <unordered_set>

namespace vminor
{

auto graph_census(int max_order) -> std::vector<std::vector<Graph>>
{
    if (max_order < 0 || max_order > 10)
        throw Error(ErrorKind::size_limit_exceeded, "census supports orders 0..10");

    std::vector<std::vector<Graph>> out(max_order + 1);
    out[0].emplace_back(0);
    for (int n = 1; n <= max_order; ++n) {
        std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
        for (const auto & parent : out[n - 1]) {
            Graph child(n);
            for (auto [u, v] : parent.edges())
                child.add_edge(u, v);
            for (VertexSet::word_type s = 0; s < (VertexSet::word_type{1} << (n - 1)); ++s) {
                child.set_neighbors(n - 1, VertexSet(s));
                seen.insert(canonical(child));
            }
        }
        std::vector<CanonicalForm> forms(seen.begin(), seen.end());
        std::sort(forms.begin(), forms.end());
        out[n].reserve(forms.size());
        for (auto & f : forms)
            out[n].push_back(graph_of(f));
    }
    return out;
}

auto connected_census(int max_order) -> std::vector<std::vector<Graph>>
{
    auto all = graph_census(max_order);
    for (auto & level : all)
        std::erase_if(level, [](const Graph & g) { return ! is_connected(g); });
    return all;
}

} // namespace vminor
