#include <vminor/error.hpp>
#include <vminor/generators.hpp>

#include <array>
#include <charconv>

namespace vminor
{

namespace
{
    struct FamilyInfo
    {
        Family family;
        std::string_view name;
        int min_n;  // 0 marks a fixed named graph
    };

    constexpr std::array families{
        FamilyInfo{Family::path, "path", 1},
        FamilyInfo{Family::cycle, "cycle", 3},
        FamilyInfo{Family::wheel, "wheel", 3},
        FamilyInfo{Family::complete, "complete", 1},
        FamilyInfo{Family::kts, "kts", 1},
        FamilyInfo{Family::bull, "bull", 0},
        FamilyInfo{Family::banner, "banner", 0},
        FamilyInfo{Family::dart, "dart", 0},
        FamilyInfo{Family::kite, "kite", 0},
        FamilyInfo{Family::hvn, "hvn", 0},
        FamilyInfo{Family::w4prime, "w4prime", 0},
        FamilyInfo{Family::butterfly, "butterfly", 0},
    };

    auto info(Family f) -> const FamilyInfo &
    {
        for (auto & i : families)
            if (i.family == f)
                return i;
        throw Error(ErrorKind::invalid_parameter, "unknown family");
    }

    auto one_based(int n) -> std::vector<std::string>
    {
        std::vector<std::string> out;
        for (int i = 1; i <= n; ++i)
            out.push_back(std::to_string(i));
        return out;
    }

    // Named 5-vertex graphs, edges written with the 1-based labels.
    auto named(std::initializer_list<Edge> one_based_edges) -> Graph
    {
        Graph g(5);
        for (auto [u, v] : one_based_edges)
            g.add_edge(u - 1, v - 1);
        g.set_labels(one_based(5));
        return g;
    }
}

auto family_name(Family f) -> std::string_view
{
    return info(f).name;
}

auto parse_family(std::string_view text) -> GraphFamily
{
    auto colon = text.find(':');
    auto name = text.substr(0, colon);
    for (auto & i : families) {
        if (i.name != name)
            continue;
        if (i.min_n == 0) {
            if (colon != std::string_view::npos)
                throw Error(ErrorKind::invalid_parameter, std::string(name) + " takes no parameter");
            return {i.family, 0};
        }
        if (colon == std::string_view::npos)
            throw Error(ErrorKind::invalid_parameter, std::string(name) + " needs a parameter, e.g. " +
                    std::string(name) + ":5");
        auto arg = text.substr(colon + 1);
        int n = 0;
        auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), n);
        if (ec != std::errc{} || ptr != arg.data() + arg.size())
            throw Error(ErrorKind::invalid_parameter, "bad family parameter '" + std::string(arg) + "'");
        return {i.family, n};
    }
    throw Error(ErrorKind::invalid_parameter, "unknown graph family '" + std::string(name) + "'");
}

auto generate(const GraphFamily & spec) -> Graph
{
    auto & fi = info(spec.family);
    int n = spec.n;
    if (fi.min_n > 0 && n < fi.min_n)
        throw Error(ErrorKind::invalid_parameter,
                std::string(fi.name) + " needs n >= " + std::to_string(fi.min_n) + ", got " + std::to_string(n));

    switch (spec.family) {
        case Family::path: {
            Graph g(n);
            for (int i = 0; i + 1 < n; ++i)
                g.add_edge(i, i + 1);
            g.set_labels(one_based(n));
            return g;
        }
        case Family::cycle: {
            Graph g(n);
            for (int i = 0; i < n; ++i)
                g.add_edge(i, (i + 1) % n);
            g.set_labels(one_based(n));
            return g;
        }
        case Family::wheel: {
            Graph g(n + 1);
            for (int i = 0; i < n; ++i) {
                g.add_edge(i, (i + 1) % n);
                g.add_edge(i, n);
            }
            auto labels = one_based(n);
            labels.emplace_back("h");
            g.set_labels(std::move(labels));
            return g;
        }
        case Family::complete: {
            Graph g(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    g.add_edge(u, v);
            return g;
        }
        case Family::kts: {
            Graph g(2 * n);
            std::vector<std::string> labels;
            for (int i = 1; i <= n; ++i)
                labels.push_back("a" + std::to_string(i));
            for (int j = 1; j <= n; ++j)
                labels.push_back("b" + std::to_string(j));
            for (int i = 1; i <= n; ++i) {
                for (int i2 = i + 1; i2 <= n; ++i2)
                    g.add_edge(kts_a(n, i), kts_a(n, i2));
                for (int j = 1; j <= i; ++j)
                    g.add_edge(kts_a(n, i), kts_b(n, j));
            }
            g.set_labels(std::move(labels));
            return g;
        }
        case Family::bull:
            return named({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 4}});
        case Family::banner:
            return named({{1, 3}, {3, 2}, {2, 4}, {4, 1}, {4, 5}});
        case Family::dart:
            return named({{1, 3}, {3, 2}, {2, 4}, {4, 1}, {3, 4}, {4, 5}});
        case Family::kite:
            return named({{1, 3}, {3, 2}, {2, 4}, {4, 1}, {1, 2}, {4, 5}});
        case Family::hvn:
            return named({{1, 5}, {5, 2}, {2, 3}, {3, 1}, {4, 1}, {4, 2}, {4, 5}, {1, 2}});
        case Family::w4prime:
            return named({{1, 5}, {5, 2}, {2, 3}, {3, 1}, {4, 1}, {4, 2}, {4, 5}});
        case Family::butterfly:
            return named({{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {3, 5}});
    }
    throw Error(ErrorKind::invalid_parameter, "unknown family");
}

} // namespace vminor
