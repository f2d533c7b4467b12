#ifndef VMINOR_VM_ENGINE_HPP
#define VMINOR_VM_ENGINE_HPP

#include <vminor/canonical.hpp>
#include <vminor/graph.hpp>
#include <vminor/oracles.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace vminor
{

/// G*v: the pairs inside N(v) are complemented.
auto local_complement(const Graph & g, int v) -> Graph;

/// G ∧ uv = G*u*v*u, cross-checked against G*v*u*v. Throws not-an-edge.
auto pivot(const Graph & g, int u, int v) -> Graph;

/// Applies local complementations in order.
auto apply_word(const Graph & g, const std::vector<int> & word) -> Graph;
/// Applies pivots in order; each pair must be an edge at the time it is used.
auto apply_pivots(const Graph & g, const std::vector<Edge> & word) -> Graph;

/// Pivot word rewritten as local complementations u v u per pivot.
auto expand_pivots(const std::vector<Edge> & word) -> std::vector<int>;

inline constexpr std::size_t default_orbit_cap = 2'000'000;

struct OrbitMember
{
    CanonicalForm form;
    /// Local complementations (seed vertex indices) reaching this member.
    std::vector<int> word;
};

struct OrbitReport
{
    /// Ascending by canonical form.
    std::vector<OrbitMember> representatives;
    bool truncated = false;
    std::size_t explored = 0;

    auto size() const -> std::size_t { return representatives.size(); }
};

/// Breadth-first search over G*v moves, deduplicated by canonical form, keeping
/// at most cap forms.
auto orbit(const Graph & g, std::size_t cap = default_orbit_cap) -> OrbitReport;

/// Same over pivots; the word of each member is stored expanded.
auto pivot_orbit(const Graph & g, std::size_t cap = default_orbit_cap) -> OrbitReport;

enum class MinorMode
{
    vertex_minor,
    pivot_minor,
};

enum class Answer
{
    yes,
    no,
    unknown,
};

auto to_string(Answer a) -> const char *;

struct MinorQuery
{
    Graph host;
    Graph pattern;
    MinorMode mode = MinorMode::vertex_minor;
    std::size_t cap = default_orbit_cap;
};

struct MinorCertificate
{
    /// Local complementations of the host (vertex mode).
    std::vector<int> word;
    /// Pivots of the host (pivot mode); empty in vertex mode.
    std::vector<Edge> pivots;
    /// embedding[i] is the host vertex playing pattern vertex i.
    std::vector<int> embedding;
};

struct MinorResult
{
    Answer answer = Answer::unknown;
    std::optional<MinorCertificate> certificate;
    std::size_t explored = 0;
};

auto has_vertex_minor(const MinorQuery & q) -> MinorResult;
auto has_pivot_minor(const MinorQuery & q) -> MinorResult;
/// Dispatches on q.mode.
auto has_minor(const MinorQuery & q) -> MinorResult;

/// Replays the certificate and checks the embedding is an induced copy. In
/// pivot mode the pivots are replayed; otherwise the word.
auto check_certificate(const Graph & host, const Graph & pattern, MinorMode mode, const MinorCertificate & cert)
    -> bool;

/// Pivot-mode certificate restated as a vertex-mode one.
auto as_vertex_certificate(const MinorCertificate & cert) -> MinorCertificate;

struct PivotPath
{
    /// Labelled so that each pivot swaps the names of its two ends.
    Graph graph;
    /// The vertices named a1 .. an bn: indices a1, b2 .. b(n-1), an, bn of
    /// kts_graph(n).
    std::vector<int> path;
    std::vector<Edge> pivots;
};

/// Pivots a2b2, ..., a(n-1)b(n-1) applied to kts(n), then checks that
/// a1 .. an bn is an induced path. Throws verification-failed otherwise.
auto kts_pivot_path(int n) -> PivotPath;

/// True iff the vertices, in order, form an induced path of g.
auto is_induced_path(const Graph & g, const std::vector<int> & path) -> bool;

} // namespace vminor

#endif
