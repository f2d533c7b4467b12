#ifndef VMINOR_GRAPH_IO_HPP
#define VMINOR_GRAPH_IO_HPP

#include <vminor/graph.hpp>

#include <json.hpp>

#include <string>
#include <string_view>

namespace vminor
{

/// graph6 encoding. Orders up to 62 use the one-byte size prefix; 63 and 64
/// use the '~' + 18-bit form. Labels are not part of the format.
auto encode_graph6(const Graph & g) -> std::string;

/// Accepts an optional ">>graph6<<" header and trailing newline. Throws
/// MalformedInput with the offending byte offset.
auto decode_graph6(std::string_view text) -> Graph;

/// Plain edge list: a header line "n m" followed by m lines "u v".
auto write_edge_list(const Graph & g) -> std::string;
auto read_edge_list(std::string_view text) -> Graph;

/// {"n": ..., "edges": [[u, v], ...], "labels": [...]}; labels present only
/// when the graph carries a side table.
auto to_json(const Graph & g) -> nlohmann::json;
auto graph_from_json(const nlohmann::json & j) -> Graph;

enum class GraphFormat
{
    graph6,
    edges,
    json,
};

auto parse_format(std::string_view name) -> GraphFormat;
auto write_graph(const Graph & g, GraphFormat format) -> std::string;
auto read_graph(std::string_view text, GraphFormat format) -> Graph;
/// Guesses the format from the first non-blank character.
auto read_graph_auto(std::string_view text) -> Graph;

} // namespace vminor

#endif
