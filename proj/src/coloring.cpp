#include <vminor/coloring.hpp>
#include <vminor/error.hpp>

#include <set>

namespace vminor
{

auto verify_coloring_on(const Graph & g, const Coloring & c, VertexSet s) -> ColoringCheck
{
    if (static_cast<int>(c.size()) != g.order())
        throw Error(ErrorKind::partial_coloring,
                "coloring has " + std::to_string(c.size()) + " entries for " + std::to_string(g.order()) + " vertices");
    for (int v : s)
        if (c[v] <= 0)
            throw Error(ErrorKind::partial_coloring, "vertex " + std::to_string(v) + " has no color");
    for (int u : s)
        for (int v : g.neighbors(u) & s)
            if (u < v && c[u] == c[v])
                return {false, Edge{u, v}};
    return {};
}

auto verify_coloring(const Graph & g, const Coloring & c) -> ColoringCheck
{
    return verify_coloring_on(g, c, g.vertices());
}

auto count_colors(const Coloring & c) -> int
{
    std::set<int> used;
    for (int x : c)
        if (x > 0)
            used.insert(x);
    return static_cast<int>(used.size());
}

} // namespace vminor
