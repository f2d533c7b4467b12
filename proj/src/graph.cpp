#include <vminor/error.hpp>
#include <vminor/graph.hpp>

#include <algorithm>

namespace vminor
{

auto lex_less(VertexSet a, VertexSet b) -> bool
{
    auto ia = a.begin(), ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib)
        if (*ia != *ib)
            return *ia < *ib;
    return ia == a.end() && ib != b.end();
}

Graph::Graph(int order) :
    _order(order)
{
    if (order < 0 || order > max_vertices)
        throw Error(ErrorKind::size_limit_exceeded,
                "graph order " + std::to_string(order) + " outside 0.." + std::to_string(max_vertices));
    _rows.resize(order);
}

Graph::Graph(int order, std::initializer_list<Edge> edges) :
    Graph(order)
{
    for (auto [u, v] : edges)
        add_edge(u, v);
}

Graph::Graph(int order, const std::vector<Edge> & edges) :
    Graph(order)
{
    for (auto [u, v] : edges)
        add_edge(u, v);
}

auto Graph::size() const -> int
{
    int twice = 0;
    for (auto r : _rows)
        twice += r.size();
    return twice / 2;
}

auto Graph::neighbors(VertexSet xs) const -> VertexSet
{
    VertexSet out;
    for (int x : xs)
        out |= _rows[x];
    return out - xs;
}

auto Graph::edges() const -> std::vector<Edge>
{
    std::vector<Edge> out;
    for (int u = 0; u < _order; ++u)
        for (int v : _rows[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

auto Graph::check_vertex(int v) const -> void
{
    if (v < 0 || v >= _order)
        throw Error(ErrorKind::out_of_range,
                "vertex " + std::to_string(v) + " not in a graph of order " + std::to_string(_order));
}

auto Graph::add_edge(int u, int v) -> void
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw Error(ErrorKind::invalid_parameter, "loop at vertex " + std::to_string(u));
    _rows[u].insert(v);
    _rows[v].insert(u);
}

auto Graph::remove_edge(int u, int v) -> void
{
    check_vertex(u);
    check_vertex(v);
    _rows[u].erase(v);
    _rows[v].erase(u);
}

auto Graph::toggle_edge(int u, int v) -> void
{
    if (adjacent(u, v))
        remove_edge(u, v);
    else
        add_edge(u, v);
}

auto Graph::complement_within(VertexSet s) -> void
{
    if (! s.is_subset_of(vertices()))
        throw Error(ErrorKind::out_of_range, "vertex set exceeds the graph");
    for (int x : s)
        _rows[x] ^= s.without(x);
}

auto Graph::set_neighbors(int v, VertexSet nbrs) -> void
{
    check_vertex(v);
    nbrs &= vertices();
    nbrs.erase(v);
    for (int x : _rows[v] - nbrs)
        _rows[x].erase(v);
    for (int x : nbrs)
        _rows[x].insert(v);
    _rows[v] = nbrs;
}

auto Graph::label(int v) const -> std::string
{
    check_vertex(v);
    return _labels.empty() ? std::to_string(v) : _labels[v];
}

auto Graph::labels() const -> std::vector<std::string>
{
    std::vector<std::string> out;
    out.reserve(_order);
    for (int v = 0; v < _order; ++v)
        out.push_back(label(v));
    return out;
}

auto Graph::set_labels(std::vector<std::string> labels) -> void
{
    if (! labels.empty() && static_cast<int>(labels.size()) != _order)
        throw Error(ErrorKind::invalid_parameter, "label table size does not match graph order");
    _labels = std::move(labels);
}

auto Graph::find_label(std::string_view name) const -> std::optional<int>
{
    for (int v = 0; v < _order; ++v)
        if (label(v) == name)
            return v;
    return std::nullopt;
}

auto is_connected(const Graph & g) -> bool
{
    return g.order() == 0 || components(g).size() == 1;
}

auto induced(const Graph & g, VertexSet s) -> InducedSubgraph
{
    if (! s.is_subset_of(g.vertices()))
        throw Error(ErrorKind::out_of_range, "vertex set is not contained in the graph");
    return induced(g, s.to_vector());
}

auto induced(const Graph & g, const std::vector<int> & ordered) -> InducedSubgraph
{
    std::vector<int> position(g.order(), -1);
    for (std::size_t i = 0; i < ordered.size(); ++i) {
        int v = ordered[i];
        if (v < 0 || v >= g.order())
            throw Error(ErrorKind::out_of_range, "vertex " + std::to_string(v) + " out of range");
        if (position[v] != -1)
            throw Error(ErrorKind::invalid_parameter, "vertex " + std::to_string(v) + " listed twice");
        position[v] = static_cast<int>(i);
    }

    InducedSubgraph out{Graph(static_cast<int>(ordered.size())), ordered};
    for (std::size_t i = 0; i < ordered.size(); ++i)
        for (int w : g.neighbors(ordered[i]))
            if (position[w] > static_cast<int>(i))
                out.graph.add_edge(static_cast<int>(i), position[w]);

    if (g.has_labels()) {
        std::vector<std::string> labels;
        for (int v : ordered)
            labels.push_back(g.label(v));
        out.graph.set_labels(std::move(labels));
    }
    return out;
}

auto complement(const Graph & g) -> Graph
{
    Graph out(g.order());
    auto all = g.vertices();
    for (int v = 0; v < g.order(); ++v)
        out.set_neighbors(v, all - g.neighbors(v));
    if (g.has_labels())
        out.set_labels(g.labels());
    return out;
}

auto components(const Graph & g) -> std::vector<VertexSet>
{
    return components(g, g.vertices());
}

auto components(const Graph & g, VertexSet s) -> std::vector<VertexSet>
{
    std::vector<VertexSet> out;
    auto unseen = s;
    while (! unseen.empty()) {
        VertexSet comp = VertexSet::single(unseen.front());
        VertexSet frontier = comp;
        while (! frontier.empty()) {
            VertexSet next;
            for (int v : frontier)
                next |= g.neighbors(v);
            next &= s;
            next -= comp;
            comp |= next;
            frontier = next;
        }
        out.push_back(comp);
        unseen -= comp;
    }
    return out;
}

namespace
{
    auto merged_labels(const Graph & g1, const std::vector<int> & keep1,
            const Graph & g2, const std::vector<int> & keep2) -> std::vector<std::string>
    {
        if (! g1.has_labels() && ! g2.has_labels())
            return {};
        std::vector<std::string> out;
        for (int v : keep1)
            out.push_back(g1.label(v));
        for (int v : keep2)
            out.push_back(g2.label(v));
        return out;
    }

    auto all_but(int n, int skip) -> std::vector<int>
    {
        std::vector<int> out;
        for (int v = 0; v < n; ++v)
            if (v != skip)
                out.push_back(v);
        return out;
    }
}

auto disjoint_union(const Graph & g1, const Graph & g2) -> Graph
{
    int shift = g1.order();
    Graph out(g1.order() + g2.order());
    for (auto [u, v] : g1.edges())
        out.add_edge(u, v);
    for (auto [u, v] : g2.edges())
        out.add_edge(u + shift, v + shift);
    out.set_labels(merged_labels(g1, all_but(g1.order(), -1), g2, all_but(g2.order(), -1)));
    return out;
}

auto substitute(const Graph & g1, int v, const Graph & g2) -> Graph
{
    if (v < 0 || v >= g1.order())
        throw Error(ErrorKind::out_of_range, "substitution vertex " + std::to_string(v) + " out of range");
    if (g2.order() == 0)
        throw Error(ErrorKind::invalid_parameter, "substituted graph must be nonempty");

    auto keep = all_but(g1.order(), v);
    auto base = induced(g1, keep);
    int shift = base.graph.order();
    Graph out(shift + g2.order());
    for (auto [a, b] : base.graph.edges())
        out.add_edge(a, b);
    for (auto [a, b] : g2.edges())
        out.add_edge(a + shift, b + shift);
    for (int i = 0; i < shift; ++i)
        if (g1.adjacent(keep[i], v))
            for (int y = 0; y < g2.order(); ++y)
                out.add_edge(i, y + shift);
    out.set_labels(merged_labels(g1, keep, g2, all_but(g2.order(), -1)));
    return out;
}

auto one_join(const Graph & g1, int v1, const Graph & g2, int v2) -> Graph
{
    if (g1.order() < 3 || g2.order() < 3)
        throw Error(ErrorKind::part_too_small, "1-join parts need at least three vertices");
    if (v1 < 0 || v1 >= g1.order() || v2 < 0 || v2 >= g2.order())
        throw Error(ErrorKind::out_of_range, "1-join marker out of range");

    auto keep1 = all_but(g1.order(), v1);
    auto keep2 = all_but(g2.order(), v2);
    auto part1 = induced(g1, keep1);
    auto part2 = induced(g2, keep2);
    int shift = part1.graph.order();

    Graph out(shift + part2.graph.order());
    for (auto [a, b] : part1.graph.edges())
        out.add_edge(a, b);
    for (auto [a, b] : part2.graph.edges())
        out.add_edge(a + shift, b + shift);
    for (int i = 0; i < shift; ++i) {
        if (! g1.adjacent(keep1[i], v1))
            continue;
        for (int j = 0; j < part2.graph.order(); ++j)
            if (g2.adjacent(keep2[j], v2))
                out.add_edge(i, j + shift);
    }
    out.set_labels(merged_labels(g1, keep1, g2, keep2));
    return out;
}

auto delete_vertex(const Graph & g, int v) -> Graph
{
    if (v < 0 || v >= g.order())
        throw Error(ErrorKind::out_of_range, "vertex " + std::to_string(v) + " out of range");
    return induced(g, all_but(g.order(), v)).graph;
}

} // namespace vminor
