#ifndef VMINOR_GRAPH_HPP
#define VMINOR_GRAPH_HPP

#include <vminor/vertex_set.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vminor
{

using Edge = std::pair<int, int>;

/// Simple undirected graph on the dense vertex set 0..order()-1, stored as one
/// adjacency bit row per vertex. Vertex names used for reporting live in an
/// optional side table; equality ignores them.
class Graph
{
public:
    Graph() = default;
    explicit Graph(int order);
    Graph(int order, std::initializer_list<Edge> edges);
    Graph(int order, const std::vector<Edge> & edges);

    auto order() const -> int { return _order; }
    auto size() const -> int;
    auto vertices() const -> VertexSet { return VertexSet::range(_order); }

    auto adjacent(int u, int v) const -> bool { return _rows[u].contains(v); }
    auto neighbors(int v) const -> VertexSet { return _rows[v]; }
    auto degree(int v) const -> int { return _rows[v].size(); }
    /// N(X) = (union of N(x) for x in X) minus X.
    auto neighbors(VertexSet xs) const -> VertexSet;
    auto edges() const -> std::vector<Edge>;

    auto add_edge(int u, int v) -> void;
    auto remove_edge(int u, int v) -> void;
    auto toggle_edge(int u, int v) -> void;
    /// Toggles every pair inside s.
    auto complement_within(VertexSet s) -> void;
    /// Replaces the neighbourhood of v; symmetric rows are kept in sync.
    auto set_neighbors(int v, VertexSet nbrs) -> void;

    auto has_labels() const -> bool { return ! _labels.empty(); }
    /// The external name of v: the side-table entry, or the decimal index.
    auto label(int v) const -> std::string;
    auto labels() const -> std::vector<std::string>;
    auto set_labels(std::vector<std::string> labels) -> void;
    auto clear_labels() -> void { _labels.clear(); }
    auto find_label(std::string_view name) const -> std::optional<int>;

    auto operator==(const Graph & other) const -> bool
    {
        return _order == other._order && _rows == other._rows;
    }

private:
    auto check_vertex(int v) const -> void;

    int _order = 0;
    std::vector<VertexSet> _rows;
    std::vector<std::string> _labels;
};

auto is_connected(const Graph & g) -> bool;

/// Result of taking an induced subgraph: the new graph on 0..|S|-1 together
/// with the original vertex of each new vertex (ascending).
struct InducedSubgraph
{
    Graph graph;
    std::vector<int> origin;
};

auto induced(const Graph & g, VertexSet s) -> InducedSubgraph;
auto induced(const Graph & g, const std::vector<int> & ordered) -> InducedSubgraph;

auto complement(const Graph & g) -> Graph;

/// Connected components, listed by ascending smallest vertex.
auto components(const Graph & g) -> std::vector<VertexSet>;
/// Components of g[s], same ordering.
auto components(const Graph & g, VertexSet s) -> std::vector<VertexSet>;

/// G1's vertices keep their indices, G2's are shifted by |V(G1)|.
auto disjoint_union(const Graph & g1, const Graph & g2) -> Graph;

/// Vertices of G1 other than v keep their relative order, followed by G2's.
auto substitute(const Graph & g1, int v, const Graph & g2) -> Graph;

/// 1-join of (g1, v1) and (g2, v2): vertices of g1 minus v1 first, then g2
/// minus v2, each in original order. Both parts need at least three vertices.
auto one_join(const Graph & g1, int v1, const Graph & g2, int v2) -> Graph;

/// Removes a single vertex; remaining vertices keep relative order.
auto delete_vertex(const Graph & g, int v) -> Graph;

} // namespace vminor

#endif
