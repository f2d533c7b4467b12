#ifndef VMINOR_DECOMPOSE_HPP
#define VMINOR_DECOMPOSE_HPP

#include <vminor/graph.hpp>

#include <json.hpp>

#include <optional>
#include <vector>

namespace vminor
{

/// A split (A, B) of a connected graph: both sides have at least two vertices
/// and the edges between them are exactly coreA x coreB.
struct SplitWitness
{
    VertexSet side_a, side_b;
    VertexSet core_a, core_b;

    auto operator==(const SplitWitness &) const -> bool = default;
};

/// Least-size side first, then lexicographically least side. Graphs on fewer
/// than four vertices have no split. Throws disconnected-input.
auto find_split(const Graph & g) -> std::optional<SplitWitness>;

/// Throws disconnected-input.
auto is_prime(const Graph & g) -> bool;

/// Throws invalid-witness naming the failed condition.
auto check_split(const Graph & g, const SplitWitness & w) -> void;

struct JoinParts
{
    /// g[side_a] followed by the marker (the last vertex) adjacent to core_a.
    Graph g1;
    int v1 = 0;
    Graph g2;
    int v2 = 0;
    /// Host vertex of each non-marker vertex of g1 / g2.
    std::vector<int> origin1, origin2;
};

/// Inverse of one_join along a split; one_join(g1, v1, g2, v2) reproduces g
/// exactly (vertices of side_a, then side_b). Throws invalid-witness.
auto split_to_join(const Graph & g, const SplitWitness & w) -> JoinParts;

struct TreeNode
{
    /// phi(t); its labels are the host labels, markers are named "m<k>".
    Graph graph;
    /// Global id of each vertex: host vertices keep their index, markers are
    /// numbered from the host order upwards.
    std::vector<int> ids;
};

struct TreeEdge
{
    int a = 0, b = 0;
    /// Global ids of the marker pair psi(ab), marker_a in node a.
    int marker_a = 0, marker_b = 0;
};

struct CompositionTree
{
    std::vector<TreeNode> nodes;
    std::vector<TreeEdge> edges;
};

/// Every node is prime or has three vertices. Throws disconnected-input and
/// too-small (fewer than three vertices).
auto decompose_tree(const Graph & g) -> CompositionTree;

/// Throws invariant-violation naming the failed clause.
auto validate_tree(const CompositionTree & t) -> void;

/// Contracts tree edges by 1-joins in the given order (default: listed
/// order). The result lists the non-marker vertices in ascending global id and
/// carries their labels.
auto compose(const CompositionTree & t, const std::vector<int> & edge_order = {}) -> Graph;

/// Global ids of the vertices of compose(t), ascending.
auto host_ids(const CompositionTree & t) -> std::vector<int>;

/// {nodes: [{id, graph6, labels, ids}], edges: [{a, b, marker_a, marker_b}]},
/// markers named by label.
auto to_json(const CompositionTree & t) -> nlohmann::json;
/// Accepts the same schema; "ids" is optional (then assigned in node order).
/// Throws malformed-input or invariant-violation.
auto tree_from_json(const nlohmann::json & j) -> CompositionTree;

} // namespace vminor

#endif
