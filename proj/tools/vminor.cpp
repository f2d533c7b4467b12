#include <vminor/canonical.hpp>
#include <vminor/color_join.hpp>
#include <vminor/decompose.hpp>
#include <vminor/error.hpp>
#include <vminor/generators.hpp>
#include <vminor/graph_io.hpp>
#include <vminor/oracles.hpp>
#include <vminor/suites.hpp>
#include <vminor/vm_engine.hpp>
#include <vminor/witness.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace vminor;
using nlohmann::json;

namespace
{

struct Options
{
    std::string input;
    std::string output = "graph6";
    std::string pattern;
    std::size_t cap = default_orbit_cap;
    std::uint64_t seed = 1;
    std::uint64_t budget = 0;
};

// Exit codes: 0 all checks passed, 1 a check failed, 2 an error was raised.
constexpr int exit_failed = 1;
constexpr int exit_error = 2;

// --input is "-" for stdin, an existing file, or the graph text itself.
auto read_source(const std::string & arg) -> std::string
{
    if (arg.empty())
        throw Error(ErrorKind::invalid_parameter, "--input is required");
    std::stringstream buffer;
    if (arg == "-")
        buffer << std::cin.rdbuf();
    else if (std::filesystem::is_regular_file(arg)) {
        std::ifstream in(arg);
        buffer << in.rdbuf();
    }
    else
        return arg;
    return buffer.str();
}

auto load_graph(const std::string & arg) -> Graph
{
    return read_graph_auto(read_source(arg));
}

// A family such as "path:5" or "bull", otherwise a graph like --input.
auto load_pattern(const std::string & arg) -> Graph
{
    if (arg.empty())
        throw Error(ErrorKind::invalid_parameter, "--pattern is required");
    try {
        return generate(parse_family(arg));
    }
    catch (const Error &) {
        return load_graph(arg);
    }
}

auto budget_of(const Options & o) -> OracleBudget
{
    OracleBudget b;
    if (o.budget > 0)
        b.node_limit = o.budget;
    return b;
}

auto print_graph(const Graph & g, const Options & o) -> void
{
    auto text = write_graph(g, parse_format(o.output));
    std::cout << text;
    if (text.empty() || text.back() != '\n')
        std::cout << '\n';
}

auto print_json(const json & j) -> void
{
    std::cout << j.dump(2) << '\n';
}

auto parse_ints(const std::string & text) -> std::vector<int>
{
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        if (! item.empty())
            out.push_back(std::stoi(item));
    return out;
}

auto certificate_json(const MinorCertificate & c) -> json
{
    json pivots = json::array();
    for (auto [u, v] : c.pivots)
        pivots.push_back({u, v});
    return {{"word", c.word}, {"pivots", pivots}, {"embedding", c.embedding}};
}

auto split_json(const SplitWitness & w) -> json
{
    return {{"side_a", w.side_a.to_vector()}, {"side_b", w.side_b.to_vector()}, {"core_a", w.core_a.to_vector()},
        {"core_b", w.core_b.to_vector()}};
}

auto run_minor(const Options & o, MinorMode mode) -> int
{
    auto host = load_graph(o.input);
    auto pattern = load_pattern(o.pattern);
    auto r = has_minor({host, pattern, mode, o.cap});
    json out{{"answer", to_string(r.answer)}, {"explored", r.explored}};
    bool verified = true;
    if (r.certificate) {
        verified = check_certificate(host, pattern, mode, *r.certificate);
        out["certificate"] = certificate_json(*r.certificate);
        out["certificate_verified"] = verified;
    }
    print_json(out);
    return r.answer != Answer::unknown && verified ? 0 : exit_failed;
}

auto run_suite(const std::string & name, const Options & o, int max_n, int trials, int cycle_n, int max_vertices)
    -> int
{
    SuiteReport r;
    if (name == "figure2")
        r = suite_figure2();
    else if (name == "p5-perfect")
        r = suite_p5_perfect(max_n, o.cap);
    else if (name == "kts")
        r = suite_kts(max_n, o.cap);
    else if (name == "join-bound")
        r = suite_join_bound(trials, o.seed);
    else if (name == "cycle-pipeline")
        r = suite_cycle_pipeline(cycle_n, max_vertices, o.cap);
    else
        throw Error(ErrorKind::invalid_parameter, "unknown suite " + name);
    print_json(to_json(r));
    return r.ok() ? 0 : exit_failed;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"vertex-minor and 1-join toolkit for small graphs"};
    app.require_subcommand(1);
    Options o;

    auto with_input = [&](CLI::App * cmd) {
        cmd->add_option("--input,-i", o.input, "graph6 text, edge list, JSON, a file, or - for stdin");
        cmd->add_option("--output,-o", o.output, "graph6 | edges | json")->check(
                CLI::IsMember({"graph6", "edges", "json"}));
        cmd->add_option("--budget", o.budget, "node limit for the exact oracles");
        return cmd;
    };

    std::string family;
    auto gen = with_input(app.add_subcommand("gen", "build a named graph, e.g. kts:3 or bull"));
    gen->add_option("family", family)->required();

    auto codec = with_input(app.add_subcommand("codec", "convert between graph formats"));

    std::string word_text;
    auto lc = with_input(app.add_subcommand("lc", "apply local complementations"));
    lc->add_option("--word,-w", word_text, "comma-separated vertices, applied left to right")->required();

    std::vector<std::string> edge_texts;
    auto piv = with_input(app.add_subcommand("pivot", "apply pivots along edges"));
    piv->add_option("--edge,-e", edge_texts, "u,v (repeatable)")->required();

    bool orbit_pivots = false;
    auto orb = with_input(app.add_subcommand("orbit", "graphs locally (or pivot) equivalent up to isomorphism"));
    orb->add_flag("--pivot", orbit_pivots, "pivot class instead of local class");
    orb->add_option("--cap", o.cap, "maximum number of forms");

    auto vm = with_input(app.add_subcommand("vm", "vertex-minor test"));
    auto pm = with_input(app.add_subcommand("pm", "pivot-minor test"));
    for (auto * cmd : {vm, pm}) {
        cmd->add_option("--pattern,-p", o.pattern, "family (path:5) or graph")->required();
        cmd->add_option("--cap", o.cap, "maximum number of forms");
    }

    auto dec = with_input(app.add_subcommand("decompose", "composition tree as JSON"));
    auto comp = with_input(app.add_subcommand("compose", "graph of a composition tree given as JSON"));
    auto prime = with_input(app.add_subcommand("prime", "primality with a split witness"));

    std::string oracle_name = "exact";
    int root = -1;
    auto color = with_input(app.add_subcommand("color", "coloring within the 1-join bound"));
    color->add_option("--oracle", oracle_name, "exact | dsatur")->check(CLI::IsMember({"exact", "dsatur"}));
    color->add_option("--vertex", root, "run join_color at this vertex instead");

    int path_n = 4;
    auto wit = with_input(app.add_subcommand("witness", "induced P_n or kts witness above the bound"));
    wit->add_option("--n", path_n, "path order (>= 4)");

    std::string query;
    auto orc = with_input(app.add_subcommand("oracle", "exact chi, omega, perfectness, induced subgraph"));
    orc->add_option("query", query)->required()->check(CLI::IsMember({"chi", "omega", "perfect", "induced"}));
    orc->add_option("--pattern,-p", o.pattern, "pattern for induced");

    std::string suite_name;
    int max_n = 6, trials = 200, cycle_n = 5, max_vertices = 7;
    auto suite = app.add_subcommand("suite", "named verification suite, JSON report");
    suite->add_option("name", suite_name)->required()->check(CLI::IsMember(suite_names()));
    suite->add_option("--max-n", max_n, "census order (p5-perfect) or largest path (kts)");
    suite->add_option("--trials", trials, "random trees (join-bound)");
    suite->add_option("--cycle", cycle_n, "excluded cycle C_n (cycle-pipeline)");
    suite->add_option("--max-vertices", max_vertices, "census order (cycle-pipeline)");
    suite->add_option("--seed", o.seed, "random seed");
    suite->add_option("--cap", o.cap, "orbit cap");

    CLI11_PARSE(app, argc, argv);

    try {
        auto budget = budget_of(o);
        if (gen->parsed()) {
            print_graph(generate(parse_family(family)), o);
            return 0;
        }
        if (codec->parsed()) {
            print_graph(load_graph(o.input), o);
            return 0;
        }
        if (lc->parsed()) {
            print_graph(apply_word(load_graph(o.input), parse_ints(word_text)), o);
            return 0;
        }
        if (piv->parsed()) {
            std::vector<Edge> pivots;
            for (const auto & text : edge_texts) {
                auto uv = parse_ints(text);
                if (uv.size() != 2)
                    throw Error(ErrorKind::invalid_parameter, "--edge takes u,v");
                pivots.emplace_back(uv[0], uv[1]);
            }
            print_graph(apply_pivots(load_graph(o.input), pivots), o);
            return 0;
        }
        if (orb->parsed()) {
            auto g = load_graph(o.input);
            auto r = orbit_pivots ? pivot_orbit(g, o.cap) : orbit(g, o.cap);
            json members = json::array();
            for (const auto & m : r.representatives)
                members.push_back({{"graph6", encode_graph6(graph_of(m.form))}, {"word", m.word}});
            print_json({{"size", r.size()}, {"truncated", r.truncated}, {"explored", r.explored},
                {"members", members}});
            return r.truncated ? exit_failed : 0;
        }
        if (vm->parsed())
            return run_minor(o, MinorMode::vertex_minor);
        if (pm->parsed())
            return run_minor(o, MinorMode::pivot_minor);
        if (dec->parsed()) {
            auto t = decompose_tree(load_graph(o.input));
            validate_tree(t);
            print_json(to_json(t));
            return 0;
        }
        if (comp->parsed()) {
            auto t = tree_from_json(json::parse(read_source(o.input)));
            print_graph(compose(t), o);
            return 0;
        }
        if (prime->parsed()) {
            auto g = load_graph(o.input);
            auto split = find_split(g);
            json out{{"prime", ! split}};
            if (split) {
                check_split(g, *split);
                out["split"] = split_json(*split);
            }
            print_json(out);
            return 0;
        }
        if (color->parsed()) {
            auto g = load_graph(o.input);
            auto oracles = oracle_name == "dsatur" ? dsatur_oracles() : exact_oracles(budget);
            if (root >= 0) {
                auto t = decompose_tree(g);
                auto beta = oracles.nbr_colorer(g, root);
                auto c = join_color(t, root, beta, oracles);
                bool ok = product_is_proper(g, c);
                print_json({{"alpha", c.alpha}, {"beta", c.beta}, {"c1", c.c1}, {"c2", c.c2},
                    {"composite_colors", c.composite_colors()}, {"proper", ok}});
                return ok ? 0 : exit_failed;
            }
            auto c = chi_bound_color(g, oracles);
            bool ok = verify_coloring(g, c.coloring).ok && c.colors_used <= c.bound;
            print_json({{"coloring", c.coloring}, {"colors_used", c.colors_used}, {"c1", c.c1}, {"c2", c.c2},
                {"bound", c.bound}, {"verified", ok}});
            return ok ? 0 : exit_failed;
        }
        if (wit->parsed()) {
            auto g = load_graph(o.input);
            auto w = find_witness(g, path_n, budget);
            bool ok = verify_witness(g, w);
            print_json({{"kind", w.kind == WitnessKind::kts ? "kts" : "induced_path"}, {"embedding", w.embedding},
                {"n", w.n}, {"chi", w.chi}, {"omega", w.omega}, {"bound", w.bound}, {"verified", ok}});
            return ok ? 0 : exit_failed;
        }
        if (orc->parsed()) {
            auto g = load_graph(o.input);
            if (query == "chi") {
                auto r = chromatic_number(g, budget);
                bool ok = verify_coloring(g, r.coloring).ok;
                print_json({{"chi", r.chi}, {"coloring", r.coloring}, {"verified", ok}});
                return ok ? 0 : exit_failed;
            }
            if (query == "omega") {
                auto r = clique_number(g, budget);
                print_json({{"omega", r.omega}, {"clique", r.clique.to_vector()}});
                return 0;
            }
            if (query == "perfect") {
                auto r = is_perfect(g, budget);
                const char * kind = r.kind == ImperfectionKind::odd_hole ? "odd_hole"
                    : r.kind == ImperfectionKind::odd_antihole           ? "odd_antihole"
                                                                         : "none";
                print_json({{"perfect", r.perfect}, {"kind", kind}, {"cycle", r.cycle}});
                return 0;
            }
            auto pattern = load_pattern(o.pattern);
            auto r = find_induced(g, pattern, budget);
            json out{{"found", r.has_value()}};
            if (r)
                out["embedding"] = *r;
            print_json(out);
            return 0;
        }
        if (suite->parsed())
            return run_suite(suite_name, o, max_n, trials, cycle_n, max_vertices);
    }
    catch (const Error & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_error;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_error;
    }
    return 0;
}
