#include "support.hpp"

#include <vminor/error.hpp>
#include <vminor/generators.hpp>
#include <vminor/vm_engine.hpp>

#include <doctest.h>

using namespace vminor;
using namespace vminor::testing;

namespace
{
    // Local complementation straight from the definition, pair by pair.
    auto lc_by_definition(const Graph & g, int v) -> Graph
    {
        Graph out = g;
        auto nbrs = g.neighbors(v).to_vector();
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j)
                out.toggle_edge(nbrs[i], nbrs[j]);
        return out;
    }

    // (host ≥ mid via a) and (mid ≥ pattern via b) give host ≥ pattern:
    // complementing at a vertex of an induced subgraph commutes with taking it.
    auto compose(const MinorCertificate & a, const MinorCertificate & b) -> MinorCertificate
    {
        MinorCertificate out;
        out.word = a.word;
        for (int v : b.word)
            out.word.push_back(a.embedding[v]);
        for (int v : b.embedding)
            out.embedding.push_back(a.embedding[v]);
        return out;
    }

    auto vm(const Graph & host, const Graph & pattern) -> MinorResult
    {
        return has_vertex_minor({host, pattern, MinorMode::vertex_minor});
    }

    auto pm(const Graph & host, const Graph & pattern) -> MinorResult
    {
        return has_pivot_minor({host, pattern, MinorMode::pivot_minor});
    }
}

TEST_CASE("local complementation examples")
{
    CHECK(local_complement(path_graph(3), 1) == complete_graph(3));
    auto p5 = path_graph(5);
    CHECK(local_complement(p5, 0) == p5);
    CHECK(local_complement(Graph(1), 0) == Graph(1));
    CHECK_THROWS_AS(local_complement(p5, 5), Error);
}

TEST_CASE("local complementation matches the pairwise definition and is an involution")
{
    const auto & census = census8();
    for (int n = 1; n <= 6; ++n)
        for (const auto & g : census[n])
            for (int v = 0; v < n; ++v) {
                auto h = local_complement(g, v);
                REQUIRE(h == lc_by_definition(g, v));
                CHECK(local_complement(h, v) == g);
            }
}

TEST_CASE("both pivot formulas agree: all graphs up to 6 vertices and 500 random graphs")
{
    const auto & census = census8();
    int checked = 0;
    for (int n = 2; n <= 6; ++n)
        for (const auto & g : census[n])
            for (auto [u, v] : g.edges()) {
                // pivot() raises verification-failed if G*u*v*u != G*v*u*v
                auto h = pivot(g, u, v);
                CHECK(pivot(h, u, v) == g);
                ++checked;
            }
    CHECK(checked > 1000);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
        auto g = random_graph(2 + trial % 11, 0.45, rng);
        auto edges = g.edges();
        if (edges.empty())
            continue;
        auto [u, v] = edges[rng() % edges.size()];
        auto h = pivot(g, u, v);
        CHECK(h == apply_word(g, {v, u, v}));
        CHECK(pivot(h, u, v) == g);
    }
}

TEST_CASE("pivot examples")
{
    CHECK(pivot(complete_graph(2), 0, 1) == complete_graph(2));
    // P4 = 1-2-3-4 pivoted on 23: the 4-cycle 1-3-2-4-1
    CHECK(pivot(path_graph(4), 1, 2) == Graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
    try {
        pivot(path_graph(4), 0, 2);
        FAIL("expected not-an-edge");
    }
    catch (const Error & e) {
        CHECK(e.kind() == ErrorKind::not_an_edge);
    }
}

TEST_CASE("orbit examples")
{
    auto k3 = orbit(complete_graph(3));
    CHECK_FALSE(k3.truncated);
    REQUIRE(k3.size() == 2);
    std::vector<CanonicalForm> forms{k3.representatives[0].form, k3.representatives[1].form};
    CHECK(std::is_sorted(forms.begin(), forms.end()));
    CHECK(std::count(forms.begin(), forms.end(), canonical(path_graph(3))) == 1);
    CHECK(std::count(forms.begin(), forms.end(), canonical(complete_graph(3))) == 1);

    auto k1 = orbit(Graph(1));
    CHECK(k1.size() == 1);
    CHECK_FALSE(k1.truncated);

    auto p5 = orbit(path_graph(5));
    CHECK_FALSE(p5.truncated);
    for (auto fam : {Family::w4prime, Family::hvn, Family::bull, Family::kite, Family::banner, Family::dart,
                 Family::butterfly}) {
        auto form = canonical(generate({fam}));
        bool found = std::any_of(p5.representatives.begin(), p5.representatives.end(),
                [&](const OrbitMember & m) { return m.form == form; });
        CHECK_MESSAGE(found, family_name(fam));
    }
    auto w4 = canonical(wheel_graph(4));
    CHECK(std::any_of(p5.representatives.begin(), p5.representatives.end(),
            [&](const OrbitMember & m) { return m.form == w4; }));
}

TEST_CASE("every orbit member replays from the seed")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        auto g = random_connected_graph(3 + trial % 5, 0.5, rng);
        for (const auto & report : {orbit(g), pivot_orbit(g)})
            for (const auto & m : report.representatives)
                CHECK(canonical(apply_word(g, m.word)) == m.form);
    }
}

TEST_CASE("orbit truncation is reported")
{
    auto r = orbit(path_graph(6), 3);
    CHECK(r.truncated);
    CHECK(r.size() == 3);
    auto q = vm(cycle_graph(5), path_graph(5));
    CHECK(q.answer == Answer::no);
    auto capped = has_vertex_minor({cycle_graph(6), path_graph(6), MinorMode::vertex_minor, 1});
    CHECK(capped.answer != Answer::no);
}

TEST_CASE("vertex-minor examples")
{
    auto c5p4 = vm(cycle_graph(5), path_graph(4));
    CHECK(c5p4.answer == Answer::yes);
    REQUIRE(c5p4.certificate);
    CHECK(c5p4.certificate->word.empty());

    CHECK(vm(cycle_graph(5), path_graph(5)).answer == Answer::no);

    for (int n = 4; n <= 6; ++n) {
        auto r = vm(kts_graph((n + 1) / 2), path_graph(n));
        CHECK(r.answer == Answer::yes);
        REQUIRE(r.certificate);
        CHECK(check_certificate(kts_graph((n + 1) / 2), path_graph(n), MinorMode::vertex_minor, *r.certificate));
    }
}

TEST_CASE("pivot-minor examples")
{
    for (int n = 2; n <= 5; ++n) {
        auto r = pm(kts_graph(n), path_graph(n + 1));
        CHECK(r.answer == Answer::yes);
        REQUIRE(r.certificate);
        CHECK(check_certificate(kts_graph(n), path_graph(n + 1), MinorMode::pivot_minor, *r.certificate));
    }
    CHECK(pm(cycle_graph(4), complete_graph(1)).answer == Answer::yes);
    CHECK(pm(cycle_graph(6), cycle_graph(5)).answer == Answer::no);
    CHECK(pm(complete_graph(3), path_graph(4)).answer == Answer::no);
}

TEST_CASE("induced subgraph implies vertex-minor; pivot-minor certificates revalidate in vertex mode")
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = random_graph(4 + trial % 4, 0.5, rng);
        auto s = VertexSet(rng() & VertexSet::range(g.order()).bits());
        auto h = induced(g, s).graph;
        auto r = vm(g, h);
        CHECK(r.answer == Answer::yes);

        auto pattern = random_graph(3 + trial % 2, 0.5, rng);
        auto p = pm(g, pattern);
        if (p.answer == Answer::yes) {
            auto cert = as_vertex_certificate(*p.certificate);
            CHECK(check_certificate(g, pattern, MinorMode::vertex_minor, cert));
            CHECK(vm(g, pattern).answer == Answer::yes);
        }
    }
}

TEST_CASE("vertex-minor is transitive on composed certificates")
{
    std::mt19937_64 rng(43);
    int composed = 0;
    for (int trial = 0; trial < 40; ++trial) {
        auto g = random_connected_graph(6 + trial % 2, 0.5, rng);
        auto mid = random_graph(5, 0.5, rng);
        auto small = random_graph(4, 0.5, rng);
        auto a = vm(g, mid);
        auto b = vm(mid, small);
        if (a.answer != Answer::yes || b.answer != Answer::yes)
            continue;
        auto c = compose(*a.certificate, *b.certificate);
        CHECK(check_certificate(g, small, MinorMode::vertex_minor, c));
        ++composed;
    }
    CHECK(composed > 5);
}

TEST_CASE("kts pivot path")
{
    auto two = kts_pivot_path(2);
    CHECK(two.pivots.empty());
    CHECK(two.graph == kts_graph(2));
    CHECK(two.path == std::vector<int>{kts_a(2, 1), kts_a(2, 2), kts_b(2, 2)});

    for (int n = 3; n <= 8; ++n) {
        auto r = kts_pivot_path(n);
        CHECK(static_cast<int>(r.pivots.size()) == n - 2);
        CHECK(r.path.size() == static_cast<std::size_t>(n + 1));
        CHECK(is_induced_path(r.graph, r.path));
        std::vector<std::string> names;
        for (int v : r.path)
            names.push_back(r.graph.label(v));
        CHECK(names.front() == "a1");
        CHECK(names[n - 1] == "a" + std::to_string(n));
        CHECK(names.back() == "b" + std::to_string(n));
        if (n > 2)
            CHECK(names[1] == "a2");
    }
    CHECK_THROWS_AS(kts_pivot_path(1), Error);
}
