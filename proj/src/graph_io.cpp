#include <vminor/error.hpp>
#include <vminor/graph_io.hpp>

#include <charconv>
#include <sstream>

namespace vminor
{

namespace
{
    constexpr std::string_view graph6_header = ">>graph6<<";

    auto valid_byte(unsigned char c) -> bool { return c >= 63 && c <= 126; }
}

auto encode_graph6(const Graph & g) -> std::string
{
    int n = g.order();
    std::string out;
    if (n <= 62)
        out.push_back(static_cast<char>(n + 63));
    else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }

    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

auto decode_graph6(std::string_view text) -> Graph
{
    std::size_t pos = 0;
    if (text.starts_with(graph6_header))
        pos = graph6_header.size();
    while (! text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);

    if (pos >= text.size())
        throw MalformedInput(pos, "empty graph6 string");

    auto byte = [&](std::size_t at) -> int {
        if (at >= text.size())
            throw MalformedInput(at, "graph6 string truncated");
        auto c = static_cast<unsigned char>(text[at]);
        if (! valid_byte(c))
            throw MalformedInput(at, "byte " + std::to_string(c) + " outside the graph6 range 63..126");
        return c - 63;
    };

    int n = 0;
    if (text[pos] == '~') {
        if (pos + 1 < text.size() && text[pos + 1] == '~')
            throw Error(ErrorKind::size_limit_exceeded, "graph6 orders above 258047 are not supported");
        n = (byte(pos + 1) << 12) | (byte(pos + 2) << 6) | byte(pos + 3);
        pos += 4;
    }
    else {
        n = byte(pos);
        pos += 1;
    }
    if (n > max_vertices)
        throw Error(ErrorKind::size_limit_exceeded,
                "graph6 order " + std::to_string(n) + " exceeds " + std::to_string(max_vertices));

    std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t expected = (bits + 5) / 6;
    if (text.size() - pos != expected)
        throw MalformedInput(std::min(text.size(), pos + expected),
                "expected " + std::to_string(expected) + " data bytes for order " + std::to_string(n) +
                ", found " + std::to_string(text.size() - pos));

    Graph g(n);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            int b = byte(pos + k / 6);
            if ((b >> (5 - k % 6)) & 1)
                g.add_edge(i, j);
        }
    if (k % 6 != 0) {
        int last = byte(pos + k / 6);
        if (last & ((1 << (6 - k % 6)) - 1))
            throw MalformedInput(pos + k / 6, "nonzero padding bits");
    }
    return g;
}

auto write_edge_list(const Graph & g) -> std::string
{
    std::ostringstream out;
    auto edges = g.edges();
    out << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges)
        out << u << ' ' << v << '\n';
    return out.str();
}

auto read_edge_list(std::string_view text) -> Graph
{
    std::size_t pos = 0;
    auto next_int = [&]() -> int {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos >= text.size())
            throw MalformedInput(pos, "unexpected end of edge list");
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc{})
            throw MalformedInput(pos, "expected an integer");
        pos = static_cast<std::size_t>(ptr - text.data());
        return value;
    };

    int n = next_int();
    if (n < 0 || n > max_vertices)
        throw Error(ErrorKind::size_limit_exceeded, "edge list order " + std::to_string(n));
    int m = next_int();
    if (m < 0)
        throw MalformedInput(pos, "negative edge count");
    Graph g(n);
    for (int e = 0; e < m; ++e) {
        auto at = pos;
        int u = next_int(), v = next_int();
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw MalformedInput(at, "bad edge " + std::to_string(u) + " " + std::to_string(v));
        g.add_edge(u, v);
    }
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
        ++pos;
    if (pos != text.size())
        throw MalformedInput(pos, "trailing data after edge list");
    return g;
}

auto to_json(const Graph & g) -> nlohmann::json
{
    nlohmann::json j;
    j["n"] = g.order();
    auto edges = nlohmann::json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({u, v});
    j["edges"] = std::move(edges);
    if (g.has_labels())
        j["labels"] = g.labels();
    return j;
}

auto graph_from_json(const nlohmann::json & j) -> Graph
{
    try {
        int n = j.at("n").get<int>();
        Graph g(n);
        for (auto & e : j.at("edges")) {
            int u = e.at(0).get<int>(), v = e.at(1).get<int>();
            if (u < 0 || v < 0 || u >= n || v >= n || u == v)
                throw Error(ErrorKind::malformed_input, "bad edge in JSON graph");
            g.add_edge(u, v);
        }
        if (j.contains("labels"))
            g.set_labels(j.at("labels").get<std::vector<std::string>>());
        return g;
    }
    catch (const nlohmann::json::exception & e) {
        throw Error(ErrorKind::malformed_input, std::string("JSON graph: ") + e.what());
    }
}

auto parse_format(std::string_view name) -> GraphFormat
{
    if (name == "graph6" || name == "g6")
        return GraphFormat::graph6;
    if (name == "edges")
        return GraphFormat::edges;
    if (name == "json")
        return GraphFormat::json;
    throw Error(ErrorKind::invalid_parameter, "unknown graph format '" + std::string(name) + "'");
}

auto write_graph(const Graph & g, GraphFormat format) -> std::string
{
    switch (format) {
        case GraphFormat::graph6: return encode_graph6(g);
        case GraphFormat::edges: return write_edge_list(g);
        case GraphFormat::json: return to_json(g).dump();
    }
    return {};
}

auto read_graph(std::string_view text, GraphFormat format) -> Graph
{
    switch (format) {
        case GraphFormat::graph6: return decode_graph6(text);
        case GraphFormat::edges: return read_edge_list(text);
        case GraphFormat::json: {
            auto j = nlohmann::json::parse(text, nullptr, false);
            if (j.is_discarded())
                throw MalformedInput(0, "invalid JSON");
            return graph_from_json(j);
        }
    }
    return {};
}

auto read_graph_auto(std::string_view text) -> Graph
{
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        throw MalformedInput(0, "empty graph input");
    char c = text[first];
    if (c == '{')
        return read_graph(text, GraphFormat::json);
    if (c >= '0' && c <= '9' && text.find_first_of(" \t\n", first) != std::string_view::npos)
        return read_graph(text, GraphFormat::edges);
    return read_graph(text.substr(first), GraphFormat::graph6);
}

} // namespace vminor
