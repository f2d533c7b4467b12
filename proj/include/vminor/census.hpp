#ifndef VMINOR_CENSUS_HPP
#define VMINOR_CENSUS_HPP

#include <vminor/canonical.hpp>
#include <vminor/graph.hpp>

#include <vector>

namespace vminor
{

/// All graphs of each order 0..max_order up to isomorphism, generated by
/// one-vertex extension with canonical-form deduplication. Entry [n] lists the
/// order-n graphs in ascending canonical form, each relabelled canonically.
auto graph_census(int max_order) -> std::vector<std::vector<Graph>>;

/// Same, restricted to connected graphs.
auto connected_census(int max_order) -> std::vector<std::vector<Graph>>;

} // namespace vminor

#endif
