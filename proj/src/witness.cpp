#include <vminor/error.hpp>
#include <vminor/generators.hpp>
#include <vminor/vm_engine.hpp>
#include <vminor/witness.hpp>

#include <algorithm>
#include <deque>

namespace vminor
{

namespace
{
    auto chi_of(const Graph & g, VertexSet s, const OracleBudget & budget) -> int
    {
        return chromatic_number(induced(g, s).graph, budget).chi;
    }

    // Component of g[s] with the largest chromatic number; ties go to the
    // lexicographically least vertex set.
    auto max_chi_component(const Graph & g, VertexSet s, const OracleBudget & budget) -> std::pair<VertexSet, int>
    {
        VertexSet best;
        int best_chi = -1;
        for (auto part : components(g, s)) {
            int chi = chi_of(g, part, budget);
            if (chi > best_chi || (chi == best_chi && lex_less(part, best))) {
                best = part;
                best_chi = chi;
            }
        }
        return {best, std::max(best_chi, 0)};
    }

    auto precondition(bool ok, const std::string & what) -> void
    {
        if (! ok)
            throw Error(ErrorKind::precondition_violation, what);
    }

    auto find_component(const OmegaRegion & omega, VertexSet c) -> const AttachedComponent *
    {
        for (const auto & part : omega.components)
            if (part.component == c)
                return &part;
        return nullptr;
    }

    auto ipow(std::int64_t base, int exp) -> std::int64_t
    {
        std::int64_t out = 1;
        for (int i = 0; i < exp; ++i)
            out *= base;
        return out;
    }
}

auto omega_region(const Graph & g, const InducedPath & p) -> OmegaRegion
{
    if (p.size() < 2 || ! is_induced_path(g, p))
        throw Error(ErrorKind::not_induced_path, "Omega needs an induced path with at least one edge");
    VertexSet on_path = VertexSet::from(p);
    VertexSet interior_nbrs;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        interior_nbrs |= g.neighbors(p[i]);
    OmegaRegion out;
    out.region = g.vertices() - on_path - interior_nbrs;
    auto w_nbrs = g.neighbors(p.back());
    for (auto part : components(g, out.region))
        out.components.push_back({part, part.intersects(w_nbrs)});
    return out;
}

auto is_d_good(const Graph & g, const InducedPath & p, VertexSet c, std::int64_t d, const OracleBudget & budget)
    -> bool
{
    return chi_of(g, c & g.neighbors(p.back()), budget) > d;
}

auto start_path(const Graph & g, int k, std::int64_t d, const OracleBudget & budget) -> PathAndComponent
{
    if (d < 1)
        throw Error(ErrorKind::degenerate_input, "start_path needs d >= 1");
    precondition(clique_number(g, budget).omega <= k, "start_path: omega(G) exceeds k");
    auto [scope, chi] = max_chi_component(g, g.vertices(), budget);
    precondition(chi > k * d, "start_path: chi(G) is not above k d");

    auto sub = induced(g, scope);
    auto clique = clique_number(sub.graph, budget).clique;
    int x = -1;
    VertexSet h_x;
    for (int local : clique) {
        int candidate = sub.origin[local];
        auto rest = scope - g.neighbors(candidate);
        if (chi_of(g, rest, budget) > d) {
            x = candidate;
            h_x = rest;
            break;
        }
    }
    if (x < 0)
        throw Error(ErrorKind::invariant_violation, "start_path: no clique vertex x with chi(H_x) > d");
    auto target = max_chi_component(g, h_x, budget).first;

    // breadth-first from x inside the component, neighbours in index order
    std::vector<int> parent(g.order(), -1);
    std::deque<int> queue{x};
    VertexSet reached{x};
    int end = -1;
    while (! queue.empty() && end < 0) {
        int u = queue.front();
        queue.pop_front();
        for (int y : (g.neighbors(u) & scope) - reached) {
            reached.insert(y);
            parent[y] = u;
            if (target.contains(y)) {
                end = y;
                break;
            }
            queue.push_back(y);
        }
    }
    std::vector<int> route;
    for (int y = end; y >= 0; y = parent[y])
        route.push_back(y);
    std::reverse(route.begin(), route.end());
    if (end < 0 || route.size() < 3)
        throw Error(ErrorKind::invariant_violation, "start_path: shortest path to C' is shorter than two edges");

    int v = route[route.size() - 3], w = route[route.size() - 2];
    PathAndComponent out{{v, w}, {}};
    for (auto part : components(g, g.vertices() - g.neighbors(v).with(v)))
        if (target.is_subset_of(part))
            out.component = part;
    auto omega = omega_region(g, out.path);
    auto entry = find_component(omega, out.component);
    if (! entry || ! entry->attached || chi_of(g, out.component, budget) <= d)
        throw Error(ErrorKind::invariant_violation, "start_path: postcondition fails");
    return out;
}

auto extend_path(const Graph & g, const InducedPath & p, VertexSet c, std::int64_t d, const OracleBudget & budget)
    -> PathAndComponent
{
    auto omega = omega_region(g, p);
    auto entry = find_component(omega, c);
    precondition(entry && entry->attached, "extend_path: C is not an attached component of Omega(G, P)");
    int chi_c = chi_of(g, c, budget);
    precondition(chi_c > d, "extend_path: chi(C) is not above d");
    precondition(! is_d_good(g, p, c, d, budget), "extend_path: C is d-good");

    int w = p.back();
    auto c_w = c & g.neighbors(w);
    auto [next, chi_next] = max_chi_component(g, c - g.neighbors(w), budget);
    if (chi_next < chi_c - d)
        throw Error(ErrorKind::invariant_violation, "extend_path: chi dropped by more than d");
    int w_next = -1;
    for (int y : c_w)
        if (g.neighbors(y).intersects(next)) {
            w_next = y;
            break;
        }
    if (w_next < 0)
        throw Error(ErrorKind::invariant_violation, "extend_path: no vertex of C_w sees C'");

    PathAndComponent out{p, next};
    out.path.push_back(w_next);
    auto after = omega_region(g, out.path);
    auto check = find_component(after, next);
    if (! check || ! check->attached)
        throw Error(ErrorKind::invariant_violation, "extend_path: C' is not an attached component");
    return out;
}

auto good_path(const Graph & g, const InducedPath & p, std::int64_t d, int n, const OracleBudget & budget)
    -> GoodPathResult
{
    precondition(n >= 4, "good_path needs n >= 4");
    precondition(p.size() == 2, "good_path starts from a path of length 1");
    auto omega = omega_region(g, p);
    VertexSet c;
    int chi_c = -1;
    for (const auto & part : omega.components) {
        if (! part.attached)
            continue;
        int chi = chi_of(g, part.component, budget);
        if (chi > chi_c) {
            c = part.component;
            chi_c = chi;
        }
    }
    precondition(chi_c > d * (n - 3), "good_path: no attached component with chi above d (n - 3)");

    GoodPathResult out;
    out.path = p;
    out.chi_trace.push_back(chi_c);
    for (;;) {
        for (const auto & part : omega_region(g, out.path).components)
            if (is_d_good(g, out.path, part.component, d, budget))
                return out;
        if (out.extensions == n - 3)
            break;
        auto step = extend_path(g, out.path, c, d, budget);
        int chi_next = chi_of(g, step.component, budget);
        if (chi_next < out.chi_trace.back() - d)
            throw Error(ErrorKind::invariant_violation, "good_path: chromatic ledger violated");
        out.path = std::move(step.path);
        c = step.component;
        out.chi_trace.push_back(chi_next);
        ++out.extensions;
    }

    // no d-good path within n - 3 extensions: one more vertex gives P_n
    int w = out.path.back();
    auto touching = c & g.neighbors(w);
    if (touching.empty())
        throw Error(ErrorKind::invariant_violation, "good_path: final component is not attached");
    out.path.push_back(touching.front());
    out.found_long_path = true;
    if (static_cast<int>(out.path.size()) != n || ! is_induced_path(g, out.path))
        throw Error(ErrorKind::verification_failed, "good_path: final path is not an induced P_n");
    return out;
}

auto path_bound(int n, int omega) -> std::int64_t
{
    int h = (n + 1) / 2;
    return ipow(static_cast<std::int64_t>(n - 3) * omega, h - 1);
}

auto verify_witness(const Graph & g, const Witness & w) -> bool
{
    for (int v : w.embedding)
        if (v < 0 || v >= g.order())
            return false;
    if (VertexSet::from(w.embedding).size() != static_cast<int>(w.embedding.size()))
        return false;
    if (w.kind == WitnessKind::induced_path)
        return static_cast<int>(w.embedding.size()) == w.n && is_induced_path(g, w.embedding);
    int h = (w.n + 1) / 2;
    return static_cast<int>(w.embedding.size()) == 2 * h && induced(g, w.embedding).graph == kts_graph(h);
}

auto find_witness(const Graph & g, int n, const OracleBudget & budget) -> Witness
{
    precondition(n >= 4, "find_witness needs n >= 4");
    Witness out;
    out.n = n;
    out.chi = chromatic_number(g, budget).chi;
    out.omega = clique_number(g, budget).omega;
    out.bound = path_bound(n, out.omega);
    precondition(out.chi > out.bound, "find_witness: chi(G) = " + std::to_string(out.chi)
            + " does not exceed the bound " + std::to_string(out.bound));

    int h = (n + 1) / 2;
    std::int64_t k = out.omega;
    auto current = induced(g, max_chi_component(g, g.vertices(), budget).first);
    std::vector<int> last, second_last;  // w_i and s_i in the host

    auto finish = [&](Witness w) {
        if (! verify_witness(g, w))
            throw Error(ErrorKind::verification_failed, "find_witness: embedding does not re-verify");
        return w;
    };

    for (int i = 1; i <= h - 1; ++i) {
        std::int64_t d = ipow((n - 3) * k, h - i - 1);
        const auto & gc = current.graph;
        auto start = start_path(gc, static_cast<int>(k), d * (n - 3), budget);
        auto good = good_path(gc, start.path, d, n, budget);
        if (good.found_long_path) {
            out.kind = WitnessKind::induced_path;
            for (int v : good.path)
                out.embedding.push_back(current.origin[v]);
            return finish(out);
        }
        const auto & q = good.path;
        VertexSet chosen;
        for (const auto & part : omega_region(gc, q).components)
            if (is_d_good(gc, q, part.component, d, budget)) {
                chosen = part.component;
                break;
            }
        auto [next, chi_next] = max_chi_component(gc, chosen & gc.neighbors(q.back()), budget);
        if (chi_next <= d)
            throw Error(ErrorKind::invariant_violation, "find_witness: G_i does not need more than d_i colors");
        last.push_back(current.origin[q.back()]);
        second_last.push_back(current.origin[q[q.size() - 2]]);
        auto sub = induced(gc, next);
        for (auto & v : sub.origin)
            v = current.origin[v];
        current = std::move(sub);
    }

    auto edges = current.graph.edges();
    if (edges.empty())
        throw Error(ErrorKind::invariant_violation, "find_witness: the last G_i has no edge");
    int x = current.origin[edges.front().first], y = current.origin[edges.front().second];
    out.kind = WitnessKind::kts;
    out.embedding.push_back(x);
    for (int i = h - 2; i >= 0; --i)
        out.embedding.push_back(last[i]);
    out.embedding.push_back(y);
    for (int i = h - 2; i >= 0; --i)
        out.embedding.push_back(second_last[i]);
    return finish(out);
}

} // namespace vminor
