#include "support.hpp"

#include <vminor/canonical.hpp>
#include <vminor/error.hpp>
#include <vminor/generators.hpp>
#include <vminor/graph_io.hpp>

#include <doctest.h>

using namespace vminor;
using vminor::testing::random_graph;

namespace
{
    auto degree_sequence(const Graph & g) -> std::vector<int>
    {
        std::vector<int> d;
        for (int v = 0; v < g.order(); ++v)
            d.push_back(g.degree(v));
        std::sort(d.rbegin(), d.rend());
        return d;
    }

    auto throws_kind(auto && f, ErrorKind kind) -> bool
    {
        try {
            f();
        }
        catch (const Error & e) {
            return e.kind() == kind;
        }
        return false;
    }

    // Brute-force reading of the 1-join rule: a pair is an edge iff it is an
    // edge inside one part, or it crosses between N(v1) and N(v2).
    auto one_join_by_rule(const Graph & g1, int v1, const Graph & g2, int v2) -> Graph
    {
        std::vector<std::pair<int, int>> origin;  // (part, vertex)
        for (int v = 0; v < g1.order(); ++v)
            if (v != v1)
                origin.emplace_back(1, v);
        for (int v = 0; v < g2.order(); ++v)
            if (v != v2)
                origin.emplace_back(2, v);
        int n = static_cast<int>(origin.size());
        Graph out(n);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                auto [pa, xa] = origin[a];
                auto [pb, xb] = origin[b];
                bool edge = false;
                if (pa == pb)
                    edge = (pa == 1 ? g1 : g2).adjacent(xa, xb);
                else {
                    int x1 = pa == 1 ? xa : xb, x2 = pa == 1 ? xb : xa;
                    edge = g1.adjacent(x1, v1) && g2.adjacent(x2, v2);
                }
                if (edge)
                    out.add_edge(a, b);
            }
        return out;
    }
}

TEST_CASE("generators: documented sizes and labels")
{
    auto k6 = kts_graph(6);
    CHECK(k6.order() == 12);
    CHECK(k6.size() == 36);

    auto p5 = path_graph(5);
    CHECK(p5.order() == 5);
    CHECK(p5.size() == 4);
    auto p5_degrees = degree_sequence(p5);
    CHECK(std::count(p5_degrees.begin(), p5_degrees.end(), 1) == 2);

    auto w5 = wheel_graph(5);
    CHECK(w5.order() == 6);
    CHECK(w5.size() == 10);
    CHECK(degree_sequence(w5).front() == 5);
    CHECK(w5.label(5) == "h");

    CHECK(k6.label(kts_a(6, 1)) == "a1");
    CHECK(k6.label(kts_b(6, 6)) == "b6");
}

TEST_CASE("generators: every output satisfies the handshake lemma; kts follows the i >= j rule")
{
    for (auto fam : {Family::path, Family::cycle, Family::wheel, Family::complete, Family::kts})
        for (int n = 3; n <= 9; ++n) {
            auto g = generate({fam, n});
            int total = 0;
            for (int v = 0; v < g.order(); ++v)
                total += g.degree(v);
            CHECK(total == 2 * g.size());
        }

    for (int n = 1; n <= 8; ++n) {
        auto g = kts_graph(n);
        CHECK(g.size() == n * n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i != j) {
                    CHECK(g.adjacent(kts_a(n, i), kts_a(n, j)));
                    CHECK_FALSE(g.adjacent(kts_b(n, i), kts_b(n, j)));
                }
                CHECK(g.adjacent(kts_a(n, i), kts_b(n, j)) == (i >= j));
            }
    }
}

TEST_CASE("generators: named graphs match their definitions")
{
    // W4' is W4 minus a spoke; the banner is C4 plus a pendant edge; the bull
    // is a triangle with two pendants at distinct vertices.
    auto w4 = wheel_graph(4);
    auto w4_minus_spoke = w4;
    w4_minus_spoke.remove_edge(0, 4);
    CHECK(is_isomorphic(generate({Family::w4prime}), w4_minus_spoke));

    Graph banner(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
    CHECK(is_isomorphic(generate({Family::banner}), banner));

    Graph bull(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 4}});
    CHECK(is_isomorphic(generate({Family::bull}), bull));

    // K4 minus edge 01: degree-3 vertices 2,3; divalent 0,1.
    Graph dart(5, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {2, 4}});
    Graph kite(5, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}});
    CHECK(is_isomorphic(generate({Family::dart}), dart));
    CHECK(is_isomorphic(generate({Family::kite}), kite));

    auto hvn = complete_graph(5);
    hvn.remove_edge(4, 0);
    hvn.remove_edge(4, 1);
    CHECK(is_isomorphic(generate({Family::hvn}), hvn));
}

TEST_CASE("generators: parameters below the family minimum are rejected")
{
    CHECK(throws_kind([] { generate({Family::cycle, 2}); }, ErrorKind::invalid_parameter));
    CHECK(throws_kind([] { generate({Family::wheel, 2}); }, ErrorKind::invalid_parameter));
    CHECK(throws_kind([] { parse_family("bull:3"); }, ErrorKind::invalid_parameter));
    CHECK(parse_family("kts:4").n == 4);
}

TEST_CASE("graph6: fixed strings")
{
    auto g = decode_graph6("D?{");
    CHECK(g.order() == 5);
    CHECK(encode_graph6(g) == "D?{");
    // bits (0,4),(1,4),(2,4),(3,4): a star centred at 4
    CHECK(g.degree(4) == 4);
    CHECK(g.size() == 4);

    CHECK(encode_graph6(complete_graph(1)) == "@");
    CHECK(encode_graph6(Graph(0)) == "?");
    CHECK(decode_graph6(">>graph6<<D?{\n") == g);
}

TEST_CASE("graph6: malformed input reports a byte offset")
{
    CHECK(throws_kind([] { decode_graph6(""); }, ErrorKind::malformed_input));
    try {
        decode_graph6("D?");
        FAIL("expected an exception");
    }
    catch (const MalformedInput & e) {
        CHECK(e.offset() == 2);
    }
    try {
        decode_graph6("D?\x01");
        FAIL("expected an exception");
    }
    catch (const MalformedInput & e) {
        CHECK(e.offset() == 2);
    }
    // padding bits must be zero: order 3 has 3 data bits
    CHECK(throws_kind([] { decode_graph6("Bx"); }, ErrorKind::malformed_input));
}

TEST_CASE("graph6, edge list and JSON: decode(encode(G)) == G for random graphs")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = static_cast<int>(rng() % 21);
        auto g = random_graph(n, 0.1 + 0.8 * (trial % 10) / 10.0, rng);
        CHECK(decode_graph6(encode_graph6(g)) == g);
        if (trial % 10 == 0) {
            CHECK(read_edge_list(write_edge_list(g)) == g);
            CHECK(graph_from_json(to_json(g)) == g);
        }
    }
    auto big = random_graph(64, 0.5, rng);
    CHECK(encode_graph6(big)[0] == '~');
    CHECK(decode_graph6(encode_graph6(big)) == big);
}

TEST_CASE("edge list and format detection")
{
    auto g = read_graph_auto("4 3\n0 1\n1 2\n2 3\n");
    CHECK(g == path_graph(4));
    CHECK(read_graph_auto(R"({"n":3,"edges":[[0,1]]})").size() == 1);
    CHECK(read_graph_auto("D?{") == decode_graph6("D?{"));
    CHECK(throws_kind([] { read_edge_list("3 1\n0 3\n"); }, ErrorKind::malformed_input));
    CHECK(throws_kind([] { read_edge_list("3 2\n0 1\n"); }, ErrorKind::malformed_input));
}

TEST_CASE("induced subgraphs")
{
    auto c5 = cycle_graph(5);
    auto sub = induced(c5, VertexSet{0, 1, 2, 3});
    CHECK(sub.graph == path_graph(4));
    CHECK(sub.origin == std::vector<int>{0, 1, 2, 3});
    CHECK(induced(c5, c5.vertices()).graph == c5);

    auto k2 = kts_graph(2);
    auto paw_part = induced(k2, VertexSet{kts_a(2, 1), kts_a(2, 2), kts_b(2, 1), kts_b(2, 2)}).graph;
    Graph paw(4, {{0, 1}, {1, 2}, {2, 0}, {1, 3}});
    CHECK(is_isomorphic(paw_part, paw));
    // pendant is b2, attached to a2
    CHECK(k2.neighbors(kts_b(2, 2)) == VertexSet{kts_a(2, 2)});

    CHECK(throws_kind([&] { induced(c5, VertexSet{0, 7}); }, ErrorKind::out_of_range));
}

TEST_CASE("complement")
{
    auto c5 = cycle_graph(5);
    CHECK(is_isomorphic(complement(c5), c5));
    CHECK(complement(complete_graph(4)).size() == 0);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        auto g = random_graph(1 + t % 12, 0.4, rng);
        CHECK(complement(complement(g)) == g);
        for (int v = 0; v < g.order(); ++v)
            CHECK_FALSE(complement(g).adjacent(v, v));
    }
}

TEST_CASE("components")
{
    CHECK(components(path_graph(4)).size() == 1);
    auto two = disjoint_union(complete_graph(1), complete_graph(2));
    auto parts = components(two);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].size() == 1);
    CHECK(parts[1].size() == 2);
    CHECK(components(Graph(0)).empty());
}

TEST_CASE("disjoint union")
{
    auto two = disjoint_union(complete_graph(1), complete_graph(1));
    CHECK(two.order() == 2);
    CHECK(two.size() == 0);
    auto tri = disjoint_union(cycle_graph(3), cycle_graph(3));
    CHECK(tri.order() == 6);
    CHECK(tri.size() == 6);
    CHECK(components(tri).size() == 2);
}

TEST_CASE("substitution")
{
    auto p3 = path_graph(3);
    // the substituted vertex moves to the end: 0, 2, then the copy of 1
    CHECK(substitute(p3, 1, complete_graph(1)) == Graph(3, {{0, 2}, {1, 2}}));
    CHECK(substitute(p3, 2, complete_graph(1)) == p3);

    // K2 with one endpoint replaced by K2: the other endpoint sees both.
    CHECK(is_isomorphic(substitute(complete_graph(2), 0, complete_graph(2)), complete_graph(3)));

    // P3 = 1-2-3 with endpoint 1 replaced by two isolated vertices x, y:
    // edges 2-3, 2-x, 2-y, i.e. the claw.
    auto claw = substitute(p3, 0, Graph(2));
    CHECK(degree_sequence(claw) == std::vector<int>{3, 1, 1, 1});

    CHECK(throws_kind([&] { substitute(p3, 5, Graph(1)); }, ErrorKind::out_of_range));
}

TEST_CASE("1-join examples")
{
    // 1-2-m1 joined at m1 with m2-3-4 at m2 gives 1-2-3-4.
    auto left = path_graph(3);
    auto right = path_graph(3);
    CHECK(one_join(left, 2, right, 0) == path_graph(4));

    CHECK(one_join(complete_graph(3), 0, complete_graph(3), 2) == complete_graph(4));

    Graph isolated_marker(3, {{0, 1}});
    auto joined = one_join(isolated_marker, 2, cycle_graph(4), 0);
    CHECK(joined == disjoint_union(complete_graph(2), path_graph(3)));

    CHECK(throws_kind([] { one_join(complete_graph(2), 0, complete_graph(3), 0); }, ErrorKind::part_too_small));
}

TEST_CASE("1-join agrees with the brute-force edge rule on all parts of 3..5 vertices")
{
    const auto & census = vminor::testing::census8();
    std::vector<Graph> parts;
    for (int n = 3; n <= 5; ++n)
        parts.insert(parts.end(), census[n].begin(), census[n].end());

    int checked = 0;
    for (const auto & g1 : parts)
        for (const auto & g2 : parts)
            for (int v1 = 0; v1 < g1.order(); ++v1)
                for (int v2 = 0; v2 < g2.order(); ++v2) {
                    auto joined = one_join(g1, v1, g2, v2);
                    if (! (joined == one_join_by_rule(g1, v1, g2, v2)))
                        FAIL("1-join mismatch");
                    ++checked;
                }
    CHECK(checked > 50000);
}

TEST_CASE("structural operations do not mutate their inputs")
{
    auto g = cycle_graph(5);
    auto copy = g;
    (void) complement(g);
    (void) substitute(g, 0, complete_graph(2));
    (void) one_join(g, 0, g, 1);
    (void) induced(g, VertexSet{1, 2});
    CHECK(g == copy);
}
