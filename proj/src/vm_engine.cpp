#include <vminor/error.hpp>
#include <vminor/generators.hpp>
#include <vminor/vm_engine.hpp>

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace vminor
{

auto local_complement(const Graph & g, int v) -> Graph
{
    if (v < 0 || v >= g.order())
        throw Error(ErrorKind::out_of_range, "vertex " + std::to_string(v) + " out of range");
    Graph out = g;
    out.complement_within(g.neighbors(v));
    return out;
}

auto pivot(const Graph & g, int u, int v) -> Graph
{
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order())
        throw Error(ErrorKind::out_of_range, "pivot vertex out of range");
    if (! g.adjacent(u, v))
        throw Error(ErrorKind::not_an_edge, std::to_string(u) + std::to_string(v) + " is not an edge");
    auto uvu = local_complement(local_complement(local_complement(g, u), v), u);
    auto vuv = local_complement(local_complement(local_complement(g, v), u), v);
    if (! (uvu == vuv))
        throw Error(ErrorKind::verification_failed, "G*u*v*u differs from G*v*u*v");
    return uvu;
}

auto apply_word(const Graph & g, const std::vector<int> & word) -> Graph
{
    Graph out = g;
    for (int v : word)
        out = local_complement(out, v);
    return out;
}

auto apply_pivots(const Graph & g, const std::vector<Edge> & word) -> Graph
{
    Graph out = g;
    for (auto [u, v] : word)
        out = pivot(out, u, v);
    return out;
}

auto expand_pivots(const std::vector<Edge> & word) -> std::vector<int>
{
    std::vector<int> out;
    for (auto [u, v] : word) {
        out.push_back(u);
        out.push_back(v);
        out.push_back(u);
    }
    return out;
}

auto to_string(Answer a) -> const char *
{
    switch (a) {
    case Answer::yes: return "yes";
    case Answer::no: return "no";
    case Answer::unknown: return "unknown";
    }
    return "?";
}

namespace
{
    struct Node
    {
        Graph graph;
        std::vector<int> word;
        std::vector<Edge> pivots;
    };

    struct Exploration
    {
        std::vector<OrbitMember> members;
        bool truncated = false;
        bool stopped = false;
        std::size_t explored = 0;
    };

    // Breadth-first search from the seed. visit() is called once per new
    // isomorphism class, in discovery order; returning true stops the search.
    template <typename Visit>
    auto explore(const Graph & seed, MinorMode moves, std::size_t cap, Visit && visit) -> Exploration
    {
        if (cap == 0)
            throw Error(ErrorKind::invalid_parameter, "orbit cap must be positive");
        Exploration out;
        std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
        std::deque<Node> queue;

        auto discover = [&](Node node) -> bool {
            auto form = canonical(node.graph, max_vertices);
            if (seen.contains(form))
                return false;
            if (seen.size() >= cap) {
                out.truncated = true;
                return false;
            }
            seen.insert(form);
            out.members.push_back({form, node.word});
            if (visit(node)) {
                out.stopped = true;
                return true;
            }
            queue.push_back(std::move(node));
            return false;
        };

        Graph start = seed;
        start.clear_labels();
        if (discover({start, {}, {}}))
            return out;
        while (! queue.empty()) {
            Node node = std::move(queue.front());
            queue.pop_front();
            ++out.explored;
            if (moves == MinorMode::vertex_minor) {
                for (int v = 0; v < node.graph.order(); ++v) {
                    if (node.graph.degree(v) < 2)
                        continue;
                    Node next{local_complement(node.graph, v), node.word, {}};
                    next.word.push_back(v);
                    if (discover(std::move(next)))
                        return out;
                }
            }
            else {
                for (auto [u, v] : node.graph.edges()) {
                    Node next{pivot(node.graph, u, v), node.word, node.pivots};
                    next.word.insert(next.word.end(), {u, v, u});
                    next.pivots.emplace_back(u, v);
                    if (discover(std::move(next)))
                        return out;
                }
            }
        }
        return out;
    }

    auto orbit_report(Exploration && e) -> OrbitReport
    {
        OrbitReport report;
        report.representatives = std::move(e.members);
        std::sort(report.representatives.begin(), report.representatives.end(),
                [](const OrbitMember & a, const OrbitMember & b) { return a.form < b.form; });
        report.truncated = e.truncated;
        report.explored = e.explored;
        return report;
    }

    auto search_minor(const MinorQuery & q, MinorMode mode) -> MinorResult
    {
        MinorResult result;
        if (q.pattern.order() > q.host.order()) {
            result.answer = Answer::no;
            return result;
        }
        auto e = explore(q.host, mode, q.cap, [&](const Node & node) {
            auto hit = find_induced(node.graph, q.pattern);
            if (! hit)
                return false;
            MinorCertificate cert;
            cert.embedding = *hit;
            if (mode == MinorMode::vertex_minor)
                cert.word = node.word;
            else
                cert.pivots = node.pivots;
            result.certificate = std::move(cert);
            return true;
        });
        result.explored = e.explored;
        if (e.stopped)
            result.answer = Answer::yes;
        else
            result.answer = e.truncated ? Answer::unknown : Answer::no;
        if (result.certificate && ! check_certificate(q.host, q.pattern, mode, *result.certificate))
            throw Error(ErrorKind::verification_failed, "minor certificate does not replay");
        return result;
    }
}

auto orbit(const Graph & g, std::size_t cap) -> OrbitReport
{
    return orbit_report(explore(g, MinorMode::vertex_minor, cap, [](const Node &) { return false; }));
}

auto pivot_orbit(const Graph & g, std::size_t cap) -> OrbitReport
{
    return orbit_report(explore(g, MinorMode::pivot_minor, cap, [](const Node &) { return false; }));
}

auto has_vertex_minor(const MinorQuery & q) -> MinorResult
{
    return search_minor(q, MinorMode::vertex_minor);
}

auto has_pivot_minor(const MinorQuery & q) -> MinorResult
{
    return search_minor(q, MinorMode::pivot_minor);
}

auto has_minor(const MinorQuery & q) -> MinorResult
{
    return search_minor(q, q.mode);
}

auto check_certificate(const Graph & host, const Graph & pattern, MinorMode mode, const MinorCertificate & cert)
    -> bool
{
    if (static_cast<int>(cert.embedding.size()) != pattern.order())
        return false;
    for (int v : cert.embedding)
        if (v < 0 || v >= host.order())
            return false;
    Graph g;
    try {
        g = mode == MinorMode::vertex_minor ? apply_word(host, cert.word) : apply_pivots(host, cert.pivots);
    }
    catch (const Error &) {
        return false;
    }
    const auto & e = cert.embedding;
    for (int a = 0; a < pattern.order(); ++a)
        for (int b = a + 1; b < pattern.order(); ++b)
            if (e[a] == e[b] || g.adjacent(e[a], e[b]) != pattern.adjacent(a, b))
                return false;
    return true;
}

auto as_vertex_certificate(const MinorCertificate & cert) -> MinorCertificate
{
    MinorCertificate out;
    out.word = expand_pivots(cert.pivots);
    out.embedding = cert.embedding;
    return out;
}

auto is_induced_path(const Graph & g, const std::vector<int> & path) -> bool
{
    int k = static_cast<int>(path.size());
    for (int v : path)
        if (v < 0 || v >= g.order())
            return false;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (path[i] == path[j] || g.adjacent(path[i], path[j]) != (j == i + 1))
                return false;
    return true;
}

auto kts_pivot_path(int n) -> PivotPath
{
    if (n < 2)
        throw Error(ErrorKind::invalid_parameter, "kts_pivot_path needs n >= 2");
    // G*u*v*u also exchanges the roles of u and v, so the vertex named a_i
    // after pivoting on a_i b_i is the original b_i; the labels follow suit.
    PivotPath out;
    out.graph = kts_graph(n);
    auto labels = out.graph.labels();
    for (int i = 2; i <= n - 1; ++i) {
        int a = kts_a(n, i), b = kts_b(n, i);
        out.pivots.emplace_back(a, b);
        std::swap(labels[a], labels[b]);
    }
    out.graph = apply_pivots(out.graph, out.pivots);
    out.graph.set_labels(labels);
    for (int i = 1; i <= n; ++i)
        out.path.push_back(1 < i && i < n ? kts_b(n, i) : kts_a(n, i));
    out.path.push_back(kts_b(n, n));
    if (! is_induced_path(out.graph, out.path))
        throw Error(ErrorKind::verification_failed,
                "a1..an bn is not an induced path after the pivots for n = " + std::to_string(n));
    return out;
}

} // namespace vminor
