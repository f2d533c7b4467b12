#ifndef VMINOR_CANONICAL_HPP
#define VMINOR_CANONICAL_HPP

#include <vminor/graph.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

namespace vminor
{

/// Largest order accepted by canonical() unless the caller passes its own cap.
inline constexpr int default_canonical_cap = 24;

/// Adjacency rows of the canonically relabelled graph. Two graphs have equal
/// forms iff they are isomorphic; the ordering is arbitrary but fixed (order
/// first, then rows lexicographically).
struct CanonicalForm
{
    int order = 0;
    std::vector<std::uint64_t> rows;

    auto operator<=>(const CanonicalForm &) const = default;
    auto operator==(const CanonicalForm &) const -> bool = default;
};

struct CanonicalFormHash
{
    auto operator()(const CanonicalForm & f) const noexcept -> std::size_t;
};

struct CanonicalLabeling
{
    CanonicalForm form;
    /// position[v] is the canonical index given to vertex v.
    std::vector<int> position;
};

/// Equitable refinement followed by individualisation/backtracking over the
/// first non-singleton cell, pruned by discovered automorphisms. Throws
/// size-limit-exceeded above cap.
auto canonical_labeling(const Graph & g, int cap = default_canonical_cap) -> CanonicalLabeling;
auto canonical(const Graph & g, int cap = default_canonical_cap) -> CanonicalForm;

/// The graph whose adjacency rows are the form itself.
auto graph_of(const CanonicalForm & form) -> Graph;

auto is_isomorphic(const Graph & g, const Graph & h, int cap = default_canonical_cap) -> bool;

} // namespace vminor

#endif
