#ifndef VMINOR_COLOR_JOIN_HPP
#define VMINOR_COLOR_JOIN_HPP

#include <vminor/coloring.hpp>
#include <vminor/decompose.hpp>
#include <vminor/oracles.hpp>

#include <functional>
#include <string>

namespace vminor
{

/// node_colorer colors a whole graph; nbr_colorer(g, w) colors the vertices of
/// N(w) (other entries are ignored). Both return colors >= 1.
struct ColoringOracles
{
    std::string name;
    std::function<Coloring(const Graph &)> node_colorer;
    std::function<Coloring(const Graph &, int)> nbr_colorer;
};

auto exact_oracles(const OracleBudget & budget = {}) -> ColoringOracles;
auto dsatur_oracles() -> ColoringOracles;

/// Pair coloring (alpha, beta) of the composed graph minus v; alpha in 0..c1,
/// beta in 1..c2. Entries at v are 0.
struct ProductColoring
{
    std::vector<int> alpha;
    std::vector<int> beta;
    VertexSet domain;
    int c1 = 0;
    int c2 = 0;

    auto composite_colors() const -> int;
};

/// True iff no edge inside the domain has equal (alpha, beta) on both ends.
auto product_is_proper(const Graph & g, const ProductColoring & c) -> bool;

/// Colors compose(t) minus v (v indexes the composed graph). beta_v colors
/// N(v) and is kept there with alpha = 0. Throws precondition-violation and
/// improper-coloring (an oracle answer failed verification).
auto join_color(const CompositionTree & t, int v, const Coloring & beta_v, const ColoringOracles & oracles)
    -> ProductColoring;

struct BoundColoring
{
    /// Proper coloring of the input with colors 1..colors_used.
    Coloring coloring;
    int colors_used = 0;
    int c1 = 0;
    int c2 = 0;
    /// (c1 + 1) * c2
    int bound = 0;
};

/// Decomposes g, colors g minus vertex 0 with join_color, and gives vertex 0
/// alpha = 1. Disconnected graphs are colored per component; graphs with
/// fewer than three vertices directly by the node oracle.
auto chi_bound_color(const Graph & g, const ColoringOracles & oracles) -> BoundColoring;

} // namespace vminor

#endif
