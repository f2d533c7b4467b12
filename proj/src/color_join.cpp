#include <vminor/color_join.hpp>
#include <vminor/error.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace vminor
{

namespace
{
    auto neighbourhood_coloring(const Graph & g, int w, const std::function<Coloring(const Graph &)> & colorer)
        -> Coloring
    {
        auto sub = induced(g, g.neighbors(w));
        auto inner = colorer(sub.graph);
        Coloring out(g.order(), 0);
        for (std::size_t i = 0; i < sub.origin.size(); ++i)
            out[sub.origin[i]] = inner[i];
        return out;
    }

    auto max_on(const Coloring & c, VertexSet s) -> int
    {
        int m = 0;
        for (int v : s)
            m = std::max(m, c[v]);
        return m;
    }

    auto check_oracle_answer(const Graph & g, const Coloring & c, VertexSet s, const std::string & who) -> void
    {
        if (static_cast<int>(c.size()) != g.order())
            throw Error(ErrorKind::improper_coloring, who + " returned a coloring of the wrong length");
        for (int v : s)
            if (c[v] <= 0)
                throw Error(ErrorKind::improper_coloring, who + " left vertex " + std::to_string(v) + " uncolored");
        if (auto r = verify_coloring_on(g, c, s); ! r.ok)
            throw Error(ErrorKind::improper_coloring, who + " colored edge " + std::to_string(r.violation->first)
                            + "-" + std::to_string(r.violation->second) + " with one color");
    }

    struct Piece
    {
        Graph graph;
        std::vector<int> ids;

        auto index_of(int id) const -> int
        {
            auto it = std::find(ids.begin(), ids.end(), id);
            if (it == ids.end())
                throw Error(ErrorKind::invariant_violation, "vertex id " + std::to_string(id) + " not in piece");
            return static_cast<int>(it - ids.begin());
        }

        auto id_set(VertexSet s) const -> std::set<int>
        {
            std::set<int> out;
            for (int v : s)
                out.insert(ids[v]);
            return out;
        }
    };

    struct Child
    {
        int node;
        int near_marker;  // v_i, in the parent's node
        int far_marker;   // u_i, in the child's node
    };
}

auto exact_oracles(const OracleBudget & budget) -> ColoringOracles
{
    auto whole = [budget](const Graph & g) { return chromatic_number(g, budget).coloring; };
    return {"exact", whole, [whole](const Graph & g, int w) { return neighbourhood_coloring(g, w, whole); }};
}

auto dsatur_oracles() -> ColoringOracles
{
    auto whole = [](const Graph & g) { return dsatur_coloring(g); };
    return {"dsatur", whole, [whole](const Graph & g, int w) { return neighbourhood_coloring(g, w, whole); }};
}

auto ProductColoring::composite_colors() const -> int
{
    std::set<std::pair<int, int>> used;
    for (int v : domain)
        used.emplace(alpha[v], beta[v]);
    return static_cast<int>(used.size());
}

auto product_is_proper(const Graph & g, const ProductColoring & c) -> bool
{
    for (int u : c.domain)
        for (int w : g.neighbors(u) & c.domain)
            if (u < w && c.alpha[u] == c.alpha[w] && c.beta[u] == c.beta[w])
                return false;
    return true;
}

auto join_color(const CompositionTree & t, int v, const Coloring & beta_v, const ColoringOracles & oracles)
    -> ProductColoring
{
    auto g = compose(t);
    auto hosts = host_ids(t);
    if (v < 0 || v >= g.order())
        throw Error(ErrorKind::precondition_violation, "vertex " + std::to_string(v) + " not in the composed graph");
    if (! is_connected(g))
        throw Error(ErrorKind::precondition_violation, "composed graph is not connected");
    if (static_cast<int>(beta_v.size()) != g.order())
        throw Error(ErrorKind::precondition_violation, "beta must have one entry per vertex");
    for (int w : g.neighbors(v))
        if (beta_v[w] <= 0)
            throw Error(ErrorKind::precondition_violation, "beta leaves a neighbour of v uncolored");
    if (! verify_coloring_on(g, beta_v, g.neighbors(v)).ok)
        throw Error(ErrorKind::precondition_violation, "beta is not proper on N(v)");

    int nodes = static_cast<int>(t.nodes.size());
    int max_id = 0;
    for (const auto & node : t.nodes)
        for (int id : node.ids)
            max_id = std::max(max_id, id);
    std::vector<int> node_of(max_id + 1, -1);
    for (int i = 0; i < nodes; ++i)
        for (int id : t.nodes[i].ids)
            node_of[id] = i;

    // Root the tree at the node holding v; visit order is breadth-first.
    int v_id = hosts[v];
    int root = node_of[v_id];
    std::vector<int> parent(nodes, -1), designated(nodes, -1), swap_with(nodes, 0), order{root};
    std::vector<std::vector<Child>> children(nodes);
    std::vector<bool> seen(nodes, false);
    seen[root] = true;
    designated[root] = v_id;
    for (std::size_t k = 0; k < order.size(); ++k) {
        int s = order[k];
        for (const auto & e : t.edges) {
            int other = -1, near = -1, far = -1;
            if (e.a == s) {
                other = e.b, near = e.marker_a, far = e.marker_b;
            }
            else if (e.b == s) {
                other = e.a, near = e.marker_b, far = e.marker_a;
            }
            if (other < 0 || seen[other])
                continue;
            seen[other] = true;
            parent[other] = s;
            designated[other] = far;
            children[s].push_back({other, near, far});
            order.push_back(other);
        }
    }

    // G_t: the graph composed from the subtree below t.
    std::vector<Piece> sub(nodes);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int s = *it;
        Piece p{t.nodes[s].graph, t.nodes[s].ids};
        for (const auto & c : children[s]) {
            const auto & q = sub[c.node];
            Piece joined{one_join(p.graph, p.index_of(c.near_marker), q.graph, q.index_of(c.far_marker)), {}};
            for (int id : p.ids)
                if (id != c.near_marker)
                    joined.ids.push_back(id);
            for (int id : q.ids)
                if (id != c.far_marker)
                    joined.ids.push_back(id);
            p = std::move(joined);
        }
        sub[s] = std::move(p);
    }

    std::vector<int> alpha_local(max_id + 1, 0), beta_by_id(max_id + 1, 0);
    std::vector<std::map<int, int>> beta_in(nodes);  // beta_t on N_{G_t}(designated)
    for (int w : g.neighbors(v))
        beta_in[root][hosts[w]] = beta_v[w];
    int c1 = 0;
    int c2 = max_on(beta_v, g.neighbors(v));

    for (int s : order) {
        const auto & phi = t.nodes[s].graph;
        const auto & piece = sub[s];
        const auto & beta_t = beta_in[s];
        int d_local = static_cast<int>(std::find(t.nodes[s].ids.begin(), t.nodes[s].ids.end(), designated[s])
                - t.nodes[s].ids.begin());

        auto h = oracles.node_colorer(phi);
        check_oracle_answer(phi, h, phi.vertices(), "node colorer");
        c1 = std::max(c1, max_on(h, phi.vertices()));

        std::set<int> child_markers;
        for (const auto & c : children[s])
            child_markers.insert(c.near_marker);
        for (int w = 0; w < phi.order(); ++w) {
            int id = t.nodes[s].ids[w];
            if (w == d_local || child_markers.contains(id))
                continue;
            alpha_local[id] = phi.adjacent(w, d_local) ? 0 : h[w];
            beta_by_id[id] = phi.adjacent(w, d_local) ? beta_t.at(id) : 1;
        }

        for (const auto & c : children[s]) {
            const auto & below = sub[c.node];
            auto wanted = below.id_set(below.graph.neighbors(below.index_of(c.far_marker)));
            int vi_local = static_cast<int>(std::find(t.nodes[s].ids.begin(), t.nodes[s].ids.end(), c.near_marker)
                    - t.nodes[s].ids.begin());
            auto & beta_c = beta_in[c.node];
            if (phi.adjacent(vi_local, d_local)) {
                for (int id : wanted)
                    beta_c[id] = beta_t.at(id);
                continue;
            }
            swap_with[c.node] = h[vi_local];

            // Candidates for y: non-marker neighbours x of v_i, and for a
            // marker neighbour v_j the neighbours of u_j in G_j.
            std::set<int> candidates;
            for (int x : phi.neighbors(vi_local)) {
                int xid = t.nodes[s].ids[x];
                auto j = std::find_if(children[s].begin(), children[s].end(),
                        [&](const Child & other) { return other.near_marker == xid; });
                if (j == children[s].end()) {
                    candidates.insert(xid);
                    continue;
                }
                const auto & gj = sub[j->node];
                for (int id : gj.id_set(gj.graph.neighbors(gj.index_of(j->far_marker))))
                    candidates.insert(id);
            }
            int y = -1;
            for (int candidate : candidates) {
                auto around = piece.id_set(piece.graph.neighbors(piece.index_of(candidate)));
                if (std::includes(around.begin(), around.end(), wanted.begin(), wanted.end())) {
                    y = candidate;
                    break;
                }
            }
            if (y < 0)
                throw Error(ErrorKind::invariant_violation, "no vertex y with N(u_i) inside N(y)");
            int y_index = piece.index_of(y);
            auto col = oracles.nbr_colorer(piece.graph, y_index);
            auto ny = piece.graph.neighbors(y_index);
            check_oracle_answer(piece.graph, col, ny, "neighbourhood colorer");
            c2 = std::max(c2, max_on(col, ny));
            for (int id : wanted)
                beta_c[id] = col[piece.index_of(id)];
        }
    }

    ProductColoring out;
    out.alpha.assign(g.order(), 0);
    out.beta.assign(g.order(), 0);
    out.domain = g.vertices().without(v);
    out.c1 = c1;
    out.c2 = c2;
    for (int w : out.domain) {
        int id = hosts[w];
        int a = alpha_local[id];
        // swaps apply from the innermost tree edge outwards
        for (int s = node_of[id]; s != root; s = parent[s]) {
            int k = swap_with[s];
            if (k == 0)
                continue;
            if (a == 0)
                a = k;
            else if (a == k)
                a = 0;
        }
        out.alpha[w] = a;
        out.beta[w] = beta_by_id[id];
    }

    for (int w : g.neighbors(v))
        if (out.alpha[w] != 0 || out.beta[w] != beta_v[w])
            throw Error(ErrorKind::invariant_violation, "join_color: condition (1) fails at vertex " + std::to_string(w));
    if (! product_is_proper(g, out))
        throw Error(ErrorKind::invariant_violation, "join_color: alpha x beta is not proper on G - v");
    for (int w : out.domain)
        if (out.alpha[w] < 0 || out.alpha[w] > c1 || out.beta[w] < 1 || out.beta[w] > c2)
            throw Error(ErrorKind::invariant_violation, "join_color: color outside its range");
    return out;
}

auto chi_bound_color(const Graph & g, const ColoringOracles & oracles) -> BoundColoring
{
    BoundColoring out;
    out.coloring.assign(g.order(), 0);
    out.c2 = 1;
    for (auto part : components(g)) {
        auto sub = induced(g, part);
        const auto & h = sub.graph;
        Coloring local;
        if (h.order() < 3) {
            local = oracles.node_colorer(h);
            check_oracle_answer(h, local, h.vertices(), "node colorer");
            out.c1 = std::max(out.c1, max_on(local, h.vertices()));
        }
        else {
            auto tree = decompose_tree(h);
            auto beta = oracles.nbr_colorer(h, 0);
            check_oracle_answer(h, beta, h.neighbors(0), "neighbourhood colorer");
            auto product = join_color(tree, 0, beta, oracles);
            product.alpha[0] = 1;
            product.beta[0] = 1;
            product.domain.insert(0);
            out.c1 = std::max(out.c1, product.c1);
            out.c2 = std::max(out.c2, product.c2);
            // (alpha, beta) numbered row by row; alpha(0) = 1 needs c1 >= 1,
            // which any node coloring guarantees
            local.resize(h.order());
            for (int w = 0; w < h.order(); ++w)
                local[w] = product.alpha[w] * product.c2 + product.beta[w];
        }
        for (int i = 0; i < h.order(); ++i)
            out.coloring[sub.origin[i]] = local[i];
    }
    out.bound = (out.c1 + 1) * out.c2;

    // renumber densely, keeping the relative order of colors
    std::set<int> used(out.coloring.begin(), out.coloring.end());
    std::map<int, int> dense;
    for (int c : used)
        dense.emplace(c, static_cast<int>(dense.size()) + 1);
    for (auto & c : out.coloring)
        c = dense[c];
    out.colors_used = static_cast<int>(used.size());
    if (! verify_coloring(g, out.coloring).ok)
        throw Error(ErrorKind::invariant_violation, "chi_bound_color produced an improper coloring");
    return out;
}

} // namespace vminor
