#include <vminor/error.hpp>
#include <vminor/oracles.hpp>

#include <algorithm>

namespace vminor
{

namespace
{
    using Word = VertexSet::word_type;

    class Meter
    {
    public:
        Meter(const OracleBudget & budget, const char * what) :
            _budget(budget),
            _what(what),
            _start(std::chrono::steady_clock::now())
        {
        }

        auto tick() -> void
        {
            if (++_nodes > _budget.node_limit)
                throw Error(ErrorKind::budget_exhausted, std::string(_what) + ": node limit reached");
            if (_budget.time_limit.count() > 0 && (_nodes & 0xfff) == 0 &&
                    std::chrono::steady_clock::now() - _start > _budget.time_limit)
                throw Error(ErrorKind::budget_exhausted, std::string(_what) + ": time limit reached");
        }

    private:
        const OracleBudget & _budget;
        const char * _what;
        std::chrono::steady_clock::time_point _start;
        std::uint64_t _nodes = 0;
    };

    auto check_order(const Graph & g, const OracleBudget & budget, int fallback, const char * what) -> void
    {
        int cap = budget.max_order.value_or(fallback);
        if (g.order() > cap)
            throw Error(ErrorKind::budget_exhausted,
                    std::string(what) + ": order " + std::to_string(g.order()) + " above budget " + std::to_string(cap));
    }

    struct ColoringSearch
    {
        const Graph & g;
        Meter meter;
        int n;
        int lower;
        int best;
        Coloring best_coloring;
        Coloring color;
        std::vector<Word> saturation;

        ColoringSearch(const Graph & graph, const OracleBudget & budget, int lower_bound, Coloring initial) :
            g(graph),
            meter(budget, "chromatic_number"),
            n(graph.order()),
            lower(lower_bound),
            best(count_colors(initial)),
            best_coloring(std::move(initial)),
            color(graph.order(), 0),
            saturation(graph.order(), 0)
        {
        }

        auto pick() const -> int
        {
            int chosen = -1, chosen_sat = -1, chosen_deg = -1;
            for (int v = 0; v < n; ++v) {
                if (color[v])
                    continue;
                int sat = std::popcount(saturation[v]);
                int deg = 0;
                for (int u : g.neighbors(v))
                    if (! color[u])
                        ++deg;
                if (sat > chosen_sat || (sat == chosen_sat && deg > chosen_deg)) {
                    chosen = v;
                    chosen_sat = sat;
                    chosen_deg = deg;
                }
            }
            return chosen;
        }

        auto run(int colored, int used) -> void
        {
            meter.tick();
            if (colored == n) {
                best = used;
                best_coloring = color;
                return;
            }
            if (used >= best)
                return;
            int v = pick();
            int limit = std::min(used + 1, best - 1);
            for (int c = 1; c <= limit; ++c) {
                Word bit = Word{1} << (c - 1);
                if (saturation[v] & bit)
                    continue;
                color[v] = c;
                Word changed = 0;
                for (int u : g.neighbors(v))
                    if (! color[u] && ! (saturation[u] & bit)) {
                        saturation[u] |= bit;
                        changed |= Word{1} << u;
                    }
                run(colored + 1, std::max(used, c));
                for (int u : VertexSet(changed))
                    saturation[u] &= ~bit;
                color[v] = 0;
                if (best <= lower)
                    return;
                limit = std::min(used + 1, best - 1);
            }
        }
    };
}

auto dsatur_coloring(const Graph & g) -> Coloring
{
    int n = g.order();
    Coloring color(n, 0);
    std::vector<Word> saturation(n, 0);
    for (int step = 0; step < n; ++step) {
        int chosen = -1, chosen_sat = -1, chosen_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v])
                continue;
            int sat = std::popcount(saturation[v]);
            int deg = g.degree(v);
            if (sat > chosen_sat || (sat == chosen_sat && deg > chosen_deg)) {
                chosen = v;
                chosen_sat = sat;
                chosen_deg = deg;
            }
        }
        int c = 1;
        while (saturation[chosen] & (Word{1} << (c - 1)))
            ++c;
        color[chosen] = c;
        for (int u : g.neighbors(chosen))
            saturation[u] |= Word{1} << (c - 1);
    }
    return color;
}

auto chromatic_number(const Graph & g, const OracleBudget & budget) -> ChromaticResult
{
    check_order(g, budget, default_chromatic_order, "chromatic_number");
    if (g.order() == 0)
        return {0, {}};

    auto clique = clique_number(g, budget);
    ColoringSearch search(g, budget, clique.omega, dsatur_coloring(g));
    if (search.best > clique.omega)
        search.run(0, 0);

    ChromaticResult out{search.best, search.best_coloring};
    if (! verify_coloring(g, out.coloring).ok || count_colors(out.coloring) != out.chi)
        throw Error(ErrorKind::verification_failed, "chromatic_number produced an invalid coloring");
    return out;
}

auto clique_number(const Graph & g, const OracleBudget & budget) -> CliqueResult
{
    Meter meter(budget, "clique_number");
    CliqueResult best;

    // Include-smallest-first DFS visits cliques in lexicographic order, and
    // only strictly larger cliques replace the incumbent, so the first
    // maximum clique found is the lexicographically least one.
    auto expand = [&](auto & self, VertexSet chosen, VertexSet candidates) -> void {
        meter.tick();
        if (chosen.size() > best.omega) {
            best.omega = chosen.size();
            best.clique = chosen;
        }
        while (! candidates.empty()) {
            if (chosen.size() + candidates.size() <= best.omega)
                return;
            int v = candidates.front();
            candidates.erase(v);
            self(self, chosen.with(v), candidates & g.neighbors(v));
        }
    };
    expand(expand, VertexSet{}, g.vertices());
    return best;
}

auto find_induced(const Graph & g, const Graph & h, const OracleBudget & budget)
    -> std::optional<std::vector<int>>
{
    int k = h.order();
    if (k > g.order())
        return std::nullopt;
    if (k == 0)
        return std::vector<int>{};
    Meter meter(budget, "find_induced");

    // Match h's vertices in BFS order from a maximum-degree vertex so that most
    // steps are constrained by an already placed neighbour.
    std::vector<int> order;
    VertexSet placed;
    while (static_cast<int>(order.size()) < k) {
        int root = -1;
        for (int v : h.vertices() - placed)
            if (root == -1 || h.degree(v) > h.degree(root))
                root = v;
        std::vector<int> queue{root};
        placed.insert(root);
        for (std::size_t i = 0; i < queue.size(); ++i) {
            order.push_back(queue[i]);
            for (int w : h.neighbors(queue[i]) - placed) {
                placed.insert(w);
                queue.push_back(w);
            }
        }
    }

    std::vector<int> image(k, -1);
    auto all = g.vertices();
    auto extend = [&](auto & self, int depth, VertexSet used) -> bool {
        meter.tick();
        if (depth == k)
            return true;
        int hv = order[depth];
        VertexSet candidates = all - used;
        for (int i = 0; i < depth; ++i) {
            int prev = order[i];
            if (h.adjacent(hv, prev))
                candidates &= g.neighbors(image[prev]);
            else
                candidates -= g.neighbors(image[prev]);
        }
        for (int gv : candidates) {
            if (g.degree(gv) < h.degree(hv))
                continue;
            image[hv] = gv;
            if (self(self, depth + 1, used.with(gv)))
                return true;
        }
        image[hv] = -1;
        return false;
    };
    if (! extend(extend, 0, VertexSet{}))
        return std::nullopt;
    return image;
}

auto find_odd_hole(const Graph & g, const OracleBudget & budget) -> std::optional<std::vector<int>>
{
    Meter meter(budget, "find_odd_hole");
    int n = g.order();
    std::vector<int> path;
    std::optional<std::vector<int>> found;

    // Induced paths s = p0, p1, ..., pk with every vertex above s. A vertex q
    // may follow pk if it misses p0..p(k-1) except that touching s closes the
    // cycle (chordless, since q misses p1..p(k-1)).
    auto grow = [&](auto & self, int s, VertexSet blocked) -> bool {
        meter.tick();
        int last = path.back();
        int k = static_cast<int>(path.size()) - 1;
        for (int q : g.neighbors(last) - blocked) {
            if (g.adjacent(q, s)) {
                int length = k + 2;
                if (length >= 5 && length % 2 == 1 && q > path[1]) {
                    path.push_back(q);
                    found = path;
                    return true;
                }
                continue;
            }
            // pk becomes interior once q is appended, so its other neighbours
            // may no longer join the path.
            path.push_back(q);
            bool hit = self(self, s, blocked | g.neighbors(last) | VertexSet::single(q));
            path.pop_back();
            if (hit)
                return true;
        }
        return false;
    };

    for (int s = 0; s < n; ++s) {
        VertexSet below = VertexSet::range(s + 1);
        for (int p1 : g.neighbors(s) - below) {
            path = {s, p1};
            if (grow(grow, s, below | VertexSet::single(p1)))
                return found;
        }
    }
    return std::nullopt;
}

auto is_perfect(const Graph & g, const OracleBudget & budget) -> PerfectResult
{
    check_order(g, budget, default_perfect_order, "is_perfect");
    if (auto hole = find_odd_hole(g, budget))
        return {false, ImperfectionKind::odd_hole, *hole};
    if (auto anti = find_odd_hole(complement(g), budget))
        return {false, ImperfectionKind::odd_antihole, *anti};
    return {};
}

} // namespace vminor
