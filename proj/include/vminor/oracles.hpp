#ifndef VMINOR_ORACLES_HPP
#define VMINOR_ORACLES_HPP

#include <vminor/coloring.hpp>
#include <vminor/graph.hpp>

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

namespace vminor
{

/// Limits for the exact searches. Exhausting any of them raises
/// budget-exhausted; no oracle ever returns an approximate answer.
struct OracleBudget
{
    /// Largest accepted order; unset means the oracle's own default.
    std::optional<int> max_order;
    std::uint64_t node_limit = 200'000'000;
    /// Zero means no time limit.
    std::chrono::milliseconds time_limit{0};
};

struct ChromaticResult
{
    int chi = 0;
    /// Optimal proper coloring with colors 1..chi.
    Coloring coloring;
};

struct CliqueResult
{
    int omega = 0;
    /// Lexicographically least maximum clique.
    VertexSet clique;
};

enum class ImperfectionKind
{
    none,
    odd_hole,
    odd_antihole,
};

struct PerfectResult
{
    bool perfect = true;
    ImperfectionKind kind = ImperfectionKind::none;
    /// The offending cycle in cyclic order (in the complement for antiholes).
    std::vector<int> cycle;
};

inline constexpr int default_chromatic_order = 20;
inline constexpr int default_perfect_order = 14;

auto chromatic_number(const Graph & g, const OracleBudget & budget = {}) -> ChromaticResult;

auto clique_number(const Graph & g, const OracleBudget & budget = {}) -> CliqueResult;

/// Induced copy of h in g: result[i] is the vertex of g playing vertex i of h.
/// Adjacency and non-adjacency are both preserved. nullopt means none exists.
auto find_induced(const Graph & g, const Graph & h, const OracleBudget & budget = {})
    -> std::optional<std::vector<int>>;

/// Odd hole of length >= 5 in g, if any (cycle in cyclic order).
auto find_odd_hole(const Graph & g, const OracleBudget & budget = {}) -> std::optional<std::vector<int>>;

/// Perfect iff no odd hole and no odd antihole; antiholes are searched as holes
/// of the complement.
auto is_perfect(const Graph & g, const OracleBudget & budget = {}) -> PerfectResult;

/// DSATUR greedy coloring (proper, not necessarily optimal).
auto dsatur_coloring(const Graph & g) -> Coloring;

} // namespace vminor

#endif
