#include <vminor/census.hpp>
#include <vminor/color_join.hpp>
#include <vminor/error.hpp>
#include <vminor/generators.hpp>
#include <vminor/graph_io.hpp>
#include <vminor/oracles.hpp>
#include <vminor/suites.hpp>

#include <chrono>
#include <sstream>

namespace vminor
{

namespace
{
    class Run
    {
    public:
        explicit Run(std::string name) :
            _start(std::chrono::steady_clock::now())
        {
            _report.suite = std::move(name);
        }

        auto check(bool ok, const std::string & case_name, const std::string & detail, const std::string & reproducer)
            -> bool
        {
            ++_report.cases;
            if (ok)
                ++_report.passes;
            else
                _report.failures.push_back({case_name, detail, reproducer});
            return ok;
        }

        auto details() -> nlohmann::json & { return _report.details; }

        auto finish() -> SuiteReport
        {
            auto elapsed = std::chrono::steady_clock::now() - _start;
            _report.wall_time_ms = std::chrono::duration<double, std::milli>(elapsed).count();
            return std::move(_report);
        }

    private:
        SuiteReport _report;
        std::chrono::steady_clock::time_point _start;
    };

    auto quoted(const Graph & g) -> std::string
    {
        return "'" + encode_graph6(g) + "'";
    }

    auto edges_from_pairs(int n, std::string_view pairs) -> Graph
    {
        // "12 23" with 1-based labels
        Graph g(n);
        for (std::size_t i = 0; i + 1 < pairs.size(); i += 3)
            g.add_edge(pairs[i] - '1', pairs[i + 1] - '1');
        return g;
    }

    auto word_text(const std::vector<int> & word) -> std::string
    {
        std::string out;
        for (int v : word)
            out += (out.empty() ? "" : ",") + std::to_string(v);
        return out;
    }

    auto error_text(const std::exception & e) -> std::string
    {
        return std::string("threw: ") + e.what();
    }
}

auto to_json(const SuiteReport & r) -> nlohmann::json
{
    nlohmann::json failures = nlohmann::json::array();
    for (const auto & f : r.failures)
        failures.push_back({{"case", f.case_name}, {"detail", f.detail}, {"reproducer", f.reproducer}});
    return {
        {"suite", r.suite},
        {"cases", r.cases},
        {"passes", r.passes},
        {"failures", failures},
        {"wall_time_ms", r.wall_time_ms},
        {"details", r.details},
    };
}

OrbitMinorMemo::OrbitMinorMemo(Graph pattern, std::size_t cap) :
    _pattern(std::move(pattern)),
    _cap(cap)
{
}

auto OrbitMinorMemo::answer(const Graph & g) -> Answer
{
    auto key = canonical(g, max_vertices);
    if (auto it = _known.find(key); it != _known.end())
        return it->second;
    ++_orbits;
    auto report = orbit(g, _cap);
    Answer found = Answer::no;
    for (const auto & member : report.representatives)
        if (find_induced(graph_of(member.form), _pattern)) {
            found = Answer::yes;
            break;
        }
    if (found == Answer::no && report.truncated)
        found = Answer::unknown;
    // a truncated orbit is not a full class; only the seed is cached then
    if (report.truncated)
        _known.emplace(key, found);
    else
        for (const auto & member : report.representatives)
            _known.emplace(member.form, found);
    return found;
}

auto suite_names() -> std::vector<std::string>
{
    return {"figure2", "p5-perfect", "kts", "join-bound", "cycle-pipeline"};
}

auto suite_figure2() -> SuiteReport
{
    Run run("figure2");
    struct Arrow
    {
        int from;  // index into the drawings
        std::vector<int> word;  // 1-based labels
        std::string name;
        Graph named;
    };
    // the nine drawings with their own 1..5 labels
    std::vector<Graph> drawn{
        edges_from_pairs(5, "12 23 34 45"),
        edges_from_pairs(5, "12 23 34 45 13 35"),
        edges_from_pairs(5, "15 52 24 41 31 32 34 35"),
        edges_from_pairs(5, "15 52 23 31 41 42 45"),
        edges_from_pairs(5, "15 52 23 31 41 42 45 12"),
        edges_from_pairs(5, "12 23 34 45 24"),
        edges_from_pairs(5, "13 32 24 45 41 12"),
        edges_from_pairs(5, "13 32 24 45 41"),
        edges_from_pairs(5, "13 32 24 45 34 41"),
    };
    // top row P5 -> butterfly -> W4 -> W4' -> HVN; P5 -> bull below it, then
    // bull -> kite -> banner -> dart
    std::vector<Arrow> arrows{
        {0, {2, 4}, "butterfly", generate({Family::butterfly, 0})},
        {1, {3}, "W4", wheel_graph(4)},
        {2, {2}, "W4'", generate({Family::w4prime, 0})},
        {3, {3}, "HVN", generate({Family::hvn, 0})},
        {0, {3}, "bull", generate({Family::bull, 0})},
        {5, {2}, "kite", generate({Family::kite, 0})},
        {6, {3}, "banner", generate({Family::banner, 0})},
        {7, {1}, "dart", generate({Family::dart, 0})},
    };
    const int targets[] = {1, 2, 3, 4, 5, 6, 7, 8};

    // every drawing is reached from P5 itself by composing the arrows
    std::vector<std::vector<int>> from_p5(drawn.size());
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        const auto & a = arrows[i];
        std::vector<int> word;
        for (int v : a.word)
            word.push_back(v - 1);
        auto source = from_p5[a.from];
        source.insert(source.end(), word.begin(), word.end());
        from_p5[targets[i]] = source;

        auto start = drawn[a.from];
        auto reached = apply_word(start, word);
        auto chained = apply_word(path_graph(5), source);
        bool iso = is_isomorphic(reached, a.named);
        bool exact = reached == drawn[targets[i]] && chained == reached;
        std::string label;
        for (int v : a.word)
            label += "*" + std::to_string(v);
        run.check(iso && exact, label + " -> " + a.name,
                iso ? "reached graph differs from the drawing's labelled edges" : "not isomorphic to " + a.name,
                "vminor lc --input " + quoted(start) + " --word " + word_text(word));
    }
    return run.finish();
}

auto suite_p5_perfect(int max_n, std::size_t cap) -> SuiteReport
{
    if (max_n > 8)
        throw Error(ErrorKind::invalid_parameter, "p5-perfect runs on the census up to 8 vertices");
    Run run("p5-perfect");
    auto census = connected_census(max_n);
    auto c5 = cycle_graph(5), w5 = wheel_graph(5);
    OrbitMinorMemo memo(path_graph(5), cap);
    int free_graphs = 0, exempt = 0, unknown = 0;
    for (int n = 1; n <= max_n; ++n)
        for (const auto & g : census[n]) {
            auto answer = memo.answer(g);
            std::string repro = "vminor vm --input " + quoted(g) + " --pattern path:5";
            if (answer == Answer::unknown) {
                ++unknown;
                run.check(false, encode_graph6(g), "orbit search truncated", repro);
                continue;
            }
            if (answer == Answer::yes)
                continue;
            ++free_graphs;
            if (is_isomorphic(g, c5) || is_isomorphic(g, w5)) {
                ++exempt;
                run.check(true, encode_graph6(g), "", repro);
                continue;
            }
            auto perfect = is_perfect(g);
            run.check(perfect.perfect, encode_graph6(g), "P5-vertex-minor-free but not perfect",
                    "vminor oracle perfect --input " + quoted(g));
        }
    std::size_t total = 0;
    for (const auto & level : census)
        total += level.size();
    run.details() = {{"max_n", max_n}, {"census_graphs", total}, {"p5_free", free_graphs}, {"exempt_c5_w5", exempt},
        {"orbits", memo.orbits_explored()}, {"truncated", unknown}};
    return run.finish();
}

auto suite_kts(int n_max, std::size_t cap) -> SuiteReport
{
    Run run("kts");
    for (int n = 4; n <= n_max; ++n) {
        int k = (n + 1) / 2;
        std::string name = "kts(" + std::to_string(k) + ") has P" + std::to_string(n);
        std::string repro = "vminor vm --input " + quoted(kts_graph(k)) + " --pattern path:" + std::to_string(n)
            + " --cap " + std::to_string(cap);
        try {
            auto r = has_vertex_minor({kts_graph(k), path_graph(n), MinorMode::vertex_minor, cap});
            bool ok = r.answer == Answer::yes && r.certificate
                && check_certificate(kts_graph(k), path_graph(n), MinorMode::vertex_minor, *r.certificate);
            run.check(ok, name, std::string("answer ") + to_string(r.answer), repro);
        }
        catch (const std::exception & e) {
            run.check(false, name, error_text(e), repro);
        }
    }
    for (int k = 2; k <= n_max / 2 + 1; ++k) {
        std::string name = "kts_pivot_path(" + std::to_string(k) + ")";
        std::string repro = "vminor pm --input " + quoted(kts_graph(k)) + " --pattern path:" + std::to_string(k + 1);
        try {
            auto p = kts_pivot_path(k);
            run.check(is_induced_path(p.graph, p.path) && static_cast<int>(p.path.size()) == k + 1, name,
                    "path is not induced", repro);
        }
        catch (const std::exception & e) {
            run.check(false, name, error_text(e), repro);
        }
    }
    run.details() = {{"n_max", n_max}, {"cap", cap}};
    return run.finish();
}

auto random_composition_tree(const std::vector<Graph> & base, int nodes, std::mt19937_64 & rng) -> CompositionTree
{
    if (base.empty() || nodes < 1)
        throw Error(ErrorKind::invalid_parameter, "random_composition_tree needs a base and at least one node");
    CompositionTree t;
    int next = 0;
    std::vector<VertexSet> used;
    for (int i = 0; i < nodes; ++i) {
        TreeNode node{base[rng() % base.size()], {}};
        node.graph.clear_labels();
        for (int v = 0; v < node.graph.order(); ++v)
            node.ids.push_back(next++);
        t.nodes.push_back(std::move(node));
        used.emplace_back();
    }
    for (int i = 1; i < nodes; ++i) {
        int parent = static_cast<int>(rng() % i);
        while (used[parent].size() == t.nodes[parent].graph.order())
            parent = (parent + 1) % i;
        auto pick = [&](int node) {
            auto options = (t.nodes[node].graph.vertices() - used[node]).to_vector();
            int v = options[rng() % options.size()];
            used[node].insert(v);
            return t.nodes[node].ids[v];
        };
        int ma = pick(parent);
        t.edges.push_back({parent, i, ma, pick(i)});
    }
    return t;
}

auto suite_join_bound(int trials, std::uint64_t seed) -> SuiteReport
{
    Run run("join-bound");
    std::vector<Graph> base;
    auto census = connected_census(5);
    for (int n = 3; n <= 5; ++n)
        base.insert(base.end(), census[n].begin(), census[n].end());
    std::mt19937_64 rng(seed);
    auto oracles = exact_oracles();
    int max_order = 0;
    for (int trial = 0; trial < trials; ++trial) {
        auto t = random_composition_tree(base, 1 + static_cast<int>(rng() % 6), rng);
        auto g = compose(t);
        max_order = std::max(max_order, g.order());
        std::string name = "trial " + std::to_string(trial);
        std::string repro = "vminor color --input " + quoted(g);
        try {
            auto colored = chi_bound_color(g, oracles);
            bool ok = verify_coloring(g, colored.coloring).ok && count_colors(colored.coloring) == colored.colors_used
                && colored.colors_used <= colored.bound;
            run.check(ok, name + " coloring", "coloring improper or above (c1+1)c2", repro);
        }
        catch (const std::exception & e) {
            run.check(false, name + " coloring", error_text(e), repro);
        }
        std::string round = "vminor decompose --input " + quoted(g);
        try {
            run.check(compose(decompose_tree(g)) == g, name + " roundtrip", "compose(decompose_tree(G)) != G", round);
        }
        catch (const std::exception & e) {
            run.check(false, name + " roundtrip", error_text(e), round);
        }
    }
    run.details() = {{"trials", trials}, {"seed", seed}, {"largest_order", max_order}};
    return run.finish();
}

auto suite_cycle_pipeline(int n, int max_vertices, std::size_t cap) -> SuiteReport
{
    if (max_vertices > 8)
        throw Error(ErrorKind::invalid_parameter, "cycle-pipeline runs on the census up to 8 vertices");
    Run run("cycle-pipeline");
    auto census = connected_census(max_vertices);
    OrbitMinorMemo memo(cycle_graph(n), cap);
    auto oracles = exact_oracles();
    int kept = 0;
    for (int order = 3; order <= max_vertices; ++order)
        for (const auto & g : census[order]) {
            auto answer = memo.answer(g);
            std::string name = encode_graph6(g);
            if (answer == Answer::unknown) {
                run.check(false, name, "orbit search truncated",
                        "vminor vm --input " + quoted(g) + " --pattern cycle:" + std::to_string(n));
                continue;
            }
            if (answer == Answer::yes)
                continue;
            ++kept;
            try {
                auto t = decompose_tree(g);
                validate_tree(t);
                bool leaves = true;
                for (const auto & node : t.nodes)
                    leaves = leaves && (node.graph.order() == 3 || is_prime(node.graph));
                run.check(leaves && compose(t) == g, name + " decompose", "leaf neither prime nor 3 vertices",
                        "vminor decompose --input " + quoted(g));
            }
            catch (const std::exception & e) {
                run.check(false, name + " decompose", error_text(e), "vminor decompose --input " + quoted(g));
            }
            try {
                auto colored = chi_bound_color(g, oracles);
                run.check(verify_coloring(g, colored.coloring).ok && colored.colors_used <= colored.bound,
                        name + " color", "coloring improper or above bound", "vminor color --input " + quoted(g));
            }
            catch (const std::exception & e) {
                run.check(false, name + " color", error_text(e), "vminor color --input " + quoted(g));
            }
        }
    run.details() = {{"n", n}, {"max_vertices", max_vertices}, {"kept", kept}, {"orbits", memo.orbits_explored()}};
    return run.finish();
}

} // namespace vminor
