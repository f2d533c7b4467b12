#ifndef VMINOR_SUITES_HPP
#define VMINOR_SUITES_HPP

#include <vminor/canonical.hpp>
#include <vminor/decompose.hpp>
#include <vminor/graph.hpp>
#include <vminor/vm_engine.hpp>

#include <json.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

namespace vminor
{

struct SuiteFailure
{
    std::string case_name;
    std::string detail;
    /// Command line that reproduces the failing check.
    std::string reproducer;
};

struct SuiteReport
{
    std::string suite;
    int cases = 0;
    int passes = 0;
    std::vector<SuiteFailure> failures;
    double wall_time_ms = 0;
    /// Suite-specific counters (graphs filtered, exemptions, ...).
    nlohmann::json details = nlohmann::json::object();

    auto ok() const -> bool { return failures.empty() && passes == cases; }
};

auto to_json(const SuiteReport & r) -> nlohmann::json;

/// Replays the eight arrows of the local-equivalence chain from P5.
auto suite_figure2() -> SuiteReport;

/// Connected graphs up to max_n (<= 8) without a P5 vertex-minor must be
/// perfect, C5 or W5. The vertex-minor answer is shared across each orbit.
auto suite_p5_perfect(int max_n, std::size_t cap = default_orbit_cap) -> SuiteReport;

/// P_n vertex-minor of kts(ceil(n/2)) for n = 4..n_max, and kts_pivot_path for
/// k = 2..n_max/2+1.
auto suite_kts(int n_max, std::size_t cap = default_orbit_cap) -> SuiteReport;

/// Random composition trees over connected bases of 3..5 vertices with up to
/// six nodes: chi_bound_color within its bound, decompose/compose roundtrip.
auto suite_join_bound(int trials, std::uint64_t seed = 1) -> SuiteReport;

/// Connected census graphs up to max_vertices without a C_n vertex-minor:
/// decomposition with prime or 3-vertex leaves, verified coloring.
auto suite_cycle_pipeline(int n, int max_vertices, std::size_t cap = default_orbit_cap) -> SuiteReport;

/// Names accepted by run_suite: figure2, p5-perfect, kts, join-bound,
/// cycle-pipeline.
auto suite_names() -> std::vector<std::string>;

/// A tree of `nodes` nodes drawn from `base`; each node graph is connected
/// with at least three vertices, ids are numbered node by node.
auto random_composition_tree(const std::vector<Graph> & base, int nodes, std::mt19937_64 & rng)
    -> CompositionTree;

/// Caches whether each local-equivalence class (keyed by canonical form)
/// contains an induced copy of a fixed pattern.
class OrbitMinorMemo
{
public:
    OrbitMinorMemo(Graph pattern, std::size_t cap);

    /// yes / no, or unknown when the orbit search was truncated.
    auto answer(const Graph & g) -> Answer;
    auto orbits_explored() const -> std::size_t { return _orbits; }

private:
    Graph _pattern;
    std::size_t _cap;
    std::size_t _orbits = 0;
    std::unordered_map<CanonicalForm, Answer, CanonicalFormHash> _known;
};

} // namespace vminor

#endif
