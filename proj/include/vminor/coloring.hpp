#ifndef VMINOR_COLORING_HPP
#define VMINOR_COLORING_HPP

#include <vminor/graph.hpp>

#include <optional>
#include <vector>

namespace vminor
{

/// color[v] >= 1 for colored vertices; 0 marks "not colored".
using Coloring = std::vector<int>;

struct ColoringCheck
{
    bool ok = true;
    std::optional<Edge> violation;
};

/// ok iff no edge is monochromatic. Throws partial-coloring when some vertex
/// has no color (or the vector has the wrong length).
auto verify_coloring(const Graph & g, const Coloring & c) -> ColoringCheck;

/// Same check restricted to the vertices of s; vertices outside s are ignored.
auto verify_coloring_on(const Graph & g, const Coloring & c, VertexSet s) -> ColoringCheck;

auto count_colors(const Coloring & c) -> int;

} // namespace vminor

#endif
