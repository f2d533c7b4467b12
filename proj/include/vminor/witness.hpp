#ifndef VMINOR_WITNESS_HPP
#define VMINOR_WITNESS_HPP

#include <vminor/graph.hpp>
#include <vminor/oracles.hpp>

#include <cstdint>
#include <vector>

namespace vminor
{

/// An induced path v0 .. vl of a host graph; w = vl is its last vertex.
using InducedPath = std::vector<int>;

struct AttachedComponent
{
    VertexSet component;
    /// Contains a neighbour of the last vertex of the path.
    bool attached = false;
};

/// Omega(G, P) = G - (V(P) + N(V(P) - w)) with its components, listed by
/// ascending smallest vertex.
struct OmegaRegion
{
    VertexSet region;
    std::vector<AttachedComponent> components;
};

/// Throws not-induced-path (also for paths with fewer than two vertices).
auto omega_region(const Graph & g, const InducedPath & p) -> OmegaRegion;

/// The neighbours of the last vertex inside c need more than d colors.
auto is_d_good(const Graph & g, const InducedPath & p, VertexSet c, std::int64_t d, const OracleBudget & budget = {})
    -> bool;

struct PathAndComponent
{
    InducedPath path;
    VertexSet component;
};

/// Requires omega(G) <= k, chi(G) > k d and d >= 1 (d = 0 is rejected as
/// degenerate-input). Returns a two-vertex path with an attached component
/// of chromatic number above d. Throws precondition-violation.
auto start_path(const Graph & g, int k, std::int64_t d, const OracleBudget & budget = {}) -> PathAndComponent;

/// Requires c to be a d-bad attached component of Omega(G, P) with
/// chi(c) > d. Extends P by one vertex of c and returns a component of the new
/// region with chromatic number at least chi(c) - d.
auto extend_path(const Graph & g, const InducedPath & p, VertexSet c, std::int64_t d,
        const OracleBudget & budget = {}) -> PathAndComponent;

struct GoodPathResult
{
    /// True when the extensions ran out and `path` is an induced P_n.
    bool found_long_path = false;
    /// The d-good path, or the induced P_n.
    InducedPath path;
    int extensions = 0;
    /// chi of the tracked component before and after each extension.
    std::vector<int> chi_trace;
};

/// Requires a two-vertex path whose region has an attached component with
/// chromatic number above d (n - 3). Throws precondition-violation.
auto good_path(const Graph & g, const InducedPath & p, std::int64_t d, int n, const OracleBudget & budget = {})
    -> GoodPathResult;

enum class WitnessKind
{
    induced_path,
    kts,
};

struct Witness
{
    WitnessKind kind = WitnessKind::induced_path;
    /// Path order for an induced path; a1..ak then b1..bk for kts(k).
    std::vector<int> embedding;
    int n = 0;
    std::int64_t bound = 0;
    int chi = 0;
    int omega = 0;
};

/// (n - 3)^(h - 1) * omega^(h - 1) with h = ceil(n / 2).
auto path_bound(int n, int omega) -> std::int64_t;

/// Requires n >= 4 and chi(G) > path_bound(n, omega(G)); returns an induced
/// P_n or an induced kts(ceil(n / 2)), re-verified before returning. Throws
/// precondition-violation, verification-failed.
auto find_witness(const Graph & g, int n, const OracleBudget & budget = {}) -> Witness;

/// Independent check that the embedding is an induced copy of its kind.
auto verify_witness(const Graph & g, const Witness & w) -> bool;

} // namespace vminor

#endif
