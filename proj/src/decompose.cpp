#include <vminor/decompose.hpp>
#include <vminor/error.hpp>
#include <vminor/graph_io.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

namespace vminor
{

namespace
{
    auto require_connected(const Graph & g, const char * what) -> void
    {
        if (! is_connected(g))
            throw Error(ErrorKind::disconnected_input, std::string(what) + " needs a connected graph");
    }

    // Smallest side A containing u and s with u adjacent to b in B, or
    // nothing. Forced moves: a vertex of A adjacent to b has the same
    // neighbours in B as u; a vertex of A not adjacent to b has none.
    auto closure(const Graph & g, int u, int b, int s) -> std::optional<VertexSet>
    {
        VertexSet side{u, s};
        VertexSet pending = side;
        while (! pending.empty()) {
            int a = pending.front();
            pending.erase(a);
            VertexSet forced = g.adjacent(a, b) ? (g.neighbors(a) ^ g.neighbors(u)) : g.neighbors(a);
            forced -= side;
            forced.erase(u);
            forced.erase(a);
            if (forced.contains(b))
                return std::nullopt;
            side |= forced;
            pending |= forced;
        }
        if (g.order() - side.size() < 2)
            return std::nullopt;
        return side;
    }

    auto witness_for(const Graph & g, VertexSet a) -> SplitWitness
    {
        SplitWitness w;
        w.side_a = a;
        w.side_b = g.vertices() - a;
        for (int x : a)
            if (g.neighbors(x).intersects(w.side_b))
                w.core_a.insert(x);
        for (int y : w.side_b)
            if (g.neighbors(y).intersects(a))
                w.core_b.insert(y);
        return w;
    }
}

auto find_split(const Graph & g) -> std::optional<SplitWitness>
{
    require_connected(g, "find_split");
    if (g.order() < 4)
        return std::nullopt;
    std::optional<VertexSet> best;
    for (int u = 0; u < g.order(); ++u)
        for (int b : g.neighbors(u))
            for (int s = 0; s < g.order(); ++s) {
                if (s == u || s == b)
                    continue;
                auto side = closure(g, u, b, s);
                if (! side)
                    continue;
                if (! best || side->size() < best->size() || (side->size() == best->size() && lex_less(*side, *best)))
                    best = side;
            }
    if (! best)
        return std::nullopt;
    auto w = witness_for(g, *best);
    check_split(g, w);
    return w;
}

auto is_prime(const Graph & g) -> bool
{
    return ! find_split(g).has_value();
}

auto check_split(const Graph & g, const SplitWitness & w) -> void
{
    auto fail = [](const std::string & why) { throw Error(ErrorKind::invalid_witness, "invalid split: " + why); };
    if (w.side_a.intersects(w.side_b) || (w.side_a | w.side_b) != g.vertices())
        fail("sides do not partition the vertex set");
    if (w.side_a.size() < 2 || w.side_b.size() < 2)
        fail("a side has fewer than two vertices");
    if (w.core_a.empty() || w.core_b.empty())
        fail("empty core");
    if (! w.core_a.is_subset_of(w.side_a) || ! w.core_b.is_subset_of(w.side_b))
        fail("core outside its side");
    for (int x : w.side_a) {
        auto across = g.neighbors(x) & w.side_b;
        if (! across.empty() && across != w.core_b)
            fail("cross edges are not complete bipartite");
        if (across.empty() == w.core_a.contains(x))
            fail("core_a is not the set of cross-edge ends");
    }
    for (int y : w.side_b)
        if ((g.neighbors(y) & w.side_a).empty() == w.core_b.contains(y))
            fail("core_b is not the set of cross-edge ends");
}

auto split_to_join(const Graph & g, const SplitWitness & w) -> JoinParts
{
    check_split(g, w);
    auto half = [&](VertexSet side, VertexSet core, std::vector<int> & origin) {
        origin = side.to_vector();
        auto part = induced(g, side).graph;
        Graph out(part.order() + 1);
        for (auto [x, y] : part.edges())
            out.add_edge(x, y);
        for (int i = 0; i < part.order(); ++i)
            if (core.contains(origin[i]))
                out.add_edge(i, part.order());
        if (g.has_labels()) {
            auto labels = part.labels();
            labels.push_back("m");
            out.set_labels(std::move(labels));
        }
        return out;
    };
    JoinParts parts;
    parts.g1 = half(w.side_a, w.core_a, parts.origin1);
    parts.v1 = parts.g1.order() - 1;
    parts.g2 = half(w.side_b, w.core_b, parts.origin2);
    parts.v2 = parts.g2.order() - 1;

    std::vector<int> order = parts.origin1;
    order.insert(order.end(), parts.origin2.begin(), parts.origin2.end());
    if (! (one_join(parts.g1, parts.v1, parts.g2, parts.v2) == induced(g, order).graph))
        throw Error(ErrorKind::verification_failed, "split_to_join does not invert one_join");
    return parts;
}

namespace
{
    struct Piece
    {
        Graph graph;
        std::vector<int> ids;
    };

    class Decomposer
    {
    public:
        explicit Decomposer(const Graph & g) :
            _next_id(g.order())
        {
            for (int v = 0; v < g.order(); ++v)
                _taken.insert(g.label(v));
        }

        auto run(Piece piece) -> CompositionTree
        {
            CompositionTree tree;
            std::vector<Piece> work{std::move(piece)};
            std::unordered_map<int, int> node_of;
            std::vector<std::pair<int, int>> pairs;
            while (! work.empty()) {
                Piece p = std::move(work.back());
                work.pop_back();
                auto split = p.graph.order() > 3 ? find_split(p.graph) : std::nullopt;
                if (! split) {
                    int index = static_cast<int>(tree.nodes.size());
                    for (int id : p.ids)
                        node_of[id] = index;
                    tree.nodes.push_back({std::move(p.graph), std::move(p.ids)});
                    continue;
                }
                auto parts = split_to_join(p.graph, *split);
                int m1 = _next_id++, m2 = _next_id++;
                auto make = [&](Graph g, const std::vector<int> & origin, int marker) {
                    Piece out{std::move(g), {}};
                    auto labels = out.graph.labels();
                    for (int x : origin)
                        out.ids.push_back(p.ids[x]);
                    out.ids.push_back(marker);
                    labels.back() = fresh_label();
                    out.graph.set_labels(std::move(labels));
                    return out;
                };
                // the second half is pushed first so that the first is
                // processed first and node order follows vertex order
                auto first = make(parts.g1, parts.origin1, m1);
                auto second = make(parts.g2, parts.origin2, m2);
                work.push_back(std::move(second));
                work.push_back(std::move(first));
                pairs.emplace_back(m1, m2);
            }
            for (auto [m1, m2] : pairs)
                tree.edges.push_back({node_of.at(m1), node_of.at(m2), m1, m2});
            std::sort(tree.edges.begin(), tree.edges.end(), [](const TreeEdge & x, const TreeEdge & y) {
                return std::pair(x.marker_a, x.marker_b) < std::pair(y.marker_a, y.marker_b);
            });
            return tree;
        }

    private:
        auto fresh_label() -> std::string
        {
            for (;;) {
                auto name = "m" + std::to_string(_marker_count++);
                if (_taken.insert(name).second)
                    return name;
            }
        }

        int _next_id;
        int _marker_count = 1;
        std::set<std::string> _taken;
    };
}

auto decompose_tree(const Graph & g) -> CompositionTree
{
    if (g.order() < 3)
        throw Error(ErrorKind::too_small, "decompose_tree needs at least three vertices");
    require_connected(g, "decompose_tree");
    Graph host = g;
    host.set_labels(g.labels());
    std::vector<int> ids(g.order());
    std::iota(ids.begin(), ids.end(), 0);
    auto tree = Decomposer(g).run({host, ids});
    validate_tree(tree);
    return tree;
}

auto validate_tree(const CompositionTree & t) -> void
{
    auto fail = [](const std::string & clause) {
        throw Error(ErrorKind::invariant_violation, "composition tree: " + clause);
    };
    int count = static_cast<int>(t.nodes.size());
    if (count == 0)
        fail("the tree has no nodes");
    if (static_cast<int>(t.edges.size()) != count - 1)
        fail("edge count is not node count minus one");

    std::unordered_map<int, int> node_of;
    for (int i = 0; i < count; ++i) {
        const auto & node = t.nodes[i];
        if (static_cast<int>(node.ids.size()) != node.graph.order())
            fail("node " + std::to_string(i) + " has an id table of the wrong size");
        if (node.graph.order() < 3)
            fail("node " + std::to_string(i) + " has fewer than three vertices");
        if (! is_connected(node.graph))
            fail("node " + std::to_string(i) + " is not connected");
        for (int id : node.ids)
            if (! node_of.emplace(id, i).second)
                fail("vertex id " + std::to_string(id) + " appears in two nodes or twice");
    }

    std::set<int> markers;
    std::vector<int> parent(count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto & e : t.edges) {
        if (e.a < 0 || e.b < 0 || e.a >= count || e.b >= count || e.a == e.b)
            fail("edge endpoints are not two distinct nodes");
        auto ia = node_of.find(e.marker_a), ib = node_of.find(e.marker_b);
        if (ia == node_of.end() || ia->second != e.a || ib == node_of.end() || ib->second != e.b)
            fail("marker pair does not lie in its edge's nodes");
        if (! markers.insert(e.marker_a).second || ! markers.insert(e.marker_b).second)
            fail("a marker appears in more than one pair");
        int ra = find(e.a), rb = find(e.b);
        if (ra == rb)
            fail("the edges contain a cycle");
        parent[ra] = rb;
    }
}

auto host_ids(const CompositionTree & t) -> std::vector<int>
{
    std::set<int> markers;
    for (const auto & e : t.edges) {
        markers.insert(e.marker_a);
        markers.insert(e.marker_b);
    }
    std::vector<int> out;
    for (const auto & node : t.nodes)
        for (int id : node.ids)
            if (! markers.contains(id))
                out.push_back(id);
    std::sort(out.begin(), out.end());
    return out;
}

auto compose(const CompositionTree & t, const std::vector<int> & edge_order) -> Graph
{
    validate_tree(t);
    std::vector<int> order = edge_order;
    if (order.empty()) {
        order.resize(t.edges.size());
        std::iota(order.begin(), order.end(), 0);
    }
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted.size() != t.edges.size() || sorted[i] != static_cast<int>(i))
            throw Error(ErrorKind::invalid_parameter, "edge order is not a permutation of the tree edges");

    // Each cluster of contracted nodes is one graph with its global ids.
    std::vector<Piece> cluster;
    std::vector<int> owner(t.nodes.size());
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        Graph g = t.nodes[i].graph;
        g.set_labels(t.nodes[i].graph.labels());
        cluster.push_back({std::move(g), t.nodes[i].ids});
        owner[i] = static_cast<int>(i);
    }
    auto root = [&](int x) {
        while (owner[x] != x)
            x = owner[x] = owner[owner[x]];
        return x;
    };
    for (int index : order) {
        const auto & e = t.edges[index];
        int ra = root(e.a), rb = root(e.b);
        auto & ca = cluster[ra];
        auto & cb = cluster[rb];
        int va = static_cast<int>(std::find(ca.ids.begin(), ca.ids.end(), e.marker_a) - ca.ids.begin());
        int vb = static_cast<int>(std::find(cb.ids.begin(), cb.ids.end(), e.marker_b) - cb.ids.begin());
        Piece joined{one_join(ca.graph, va, cb.graph, vb), {}};
        for (int id : ca.ids)
            if (id != e.marker_a)
                joined.ids.push_back(id);
        for (int id : cb.ids)
            if (id != e.marker_b)
                joined.ids.push_back(id);
        cluster[ra] = std::move(joined);
        cluster[rb] = {};
        owner[rb] = ra;
    }
    auto & result = cluster[root(0)];
    std::vector<int> by_id(result.ids.size());
    std::iota(by_id.begin(), by_id.end(), 0);
    std::sort(by_id.begin(), by_id.end(), [&](int x, int y) { return result.ids[x] < result.ids[y]; });
    return induced(result.graph, by_id).graph;
}

auto to_json(const CompositionTree & t) -> nlohmann::json
{
    nlohmann::json nodes = nlohmann::json::array();
    std::unordered_map<int, std::string> label_of;
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        const auto & node = t.nodes[i];
        nodes.push_back({{"id", i}, {"graph6", encode_graph6(node.graph)}, {"labels", node.graph.labels()},
                {"ids", node.ids}});
        for (int v = 0; v < node.graph.order(); ++v)
            label_of[node.ids[v]] = node.graph.label(v);
    }
    nlohmann::json edges = nlohmann::json::array();
    for (const auto & e : t.edges)
        edges.push_back({{"a", e.a}, {"b", e.b}, {"marker_a", label_of[e.marker_a]}, {"marker_b", label_of[e.marker_b]}});
    return {{"nodes", nodes}, {"edges", edges}};
}

auto tree_from_json(const nlohmann::json & j) -> CompositionTree
{
    CompositionTree t;
    try {
        int next_id = 0;
        std::vector<bool> has_ids;
        for (const auto & node : j.at("nodes")) {
            TreeNode out;
            out.graph = decode_graph6(node.at("graph6").get<std::string>());
            if (node.contains("labels"))
                out.graph.set_labels(node.at("labels").get<std::vector<std::string>>());
            if (node.contains("ids"))
                out.ids = node.at("ids").get<std::vector<int>>();
            has_ids.push_back(node.contains("ids"));
            t.nodes.push_back(std::move(out));
        }
        // without explicit ids, non-markers are numbered first in node order
        // so that compose() keeps that order, then markers
        std::vector<std::pair<int, std::string>> marker_names;
        for (const auto & e : j.at("edges")) {
            marker_names.emplace_back(e.at("a").get<int>(), e.at("marker_a").get<std::string>());
            marker_names.emplace_back(e.at("b").get<int>(), e.at("marker_b").get<std::string>());
        }
        auto is_marker = [&](int node, const std::string & name) {
            return std::find(marker_names.begin(), marker_names.end(), std::pair(node, name)) != marker_names.end();
        };
        for (int pass = 0; pass < 2; ++pass)
            for (std::size_t i = 0; i < t.nodes.size(); ++i) {
                if (has_ids[i])
                    continue;
                auto & node = t.nodes[i];
                node.ids.resize(node.graph.order(), -1);
                for (int v = 0; v < node.graph.order(); ++v)
                    if (is_marker(static_cast<int>(i), node.graph.label(v)) == (pass == 1))
                        node.ids[v] = next_id++;
            }
        auto find_marker = [&](int node, const std::string & name) {
            if (node < 0 || node >= static_cast<int>(t.nodes.size()))
                throw Error(ErrorKind::invariant_violation, "composition tree: edge endpoint is not a node");
            auto v = t.nodes[node].graph.find_label(name);
            if (! v)
                throw Error(ErrorKind::invariant_violation, "composition tree: marker " + name + " not in node "
                        + std::to_string(node));
            return t.nodes[node].ids[*v];
        };
        for (const auto & e : j.at("edges")) {
            TreeEdge out;
            out.a = e.at("a").get<int>();
            out.b = e.at("b").get<int>();
            out.marker_a = find_marker(out.a, e.at("marker_a").get<std::string>());
            out.marker_b = find_marker(out.b, e.at("marker_b").get<std::string>());
            t.edges.push_back(out);
        }
    }
    catch (const nlohmann::json::exception & e) {
        throw MalformedInput(0, std::string("composition tree JSON: ") + e.what());
    }
    validate_tree(t);
    return t;
}

} // namespace vminor
