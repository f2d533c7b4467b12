#include "support.hpp"

#include <vminor/error.hpp>
#include <vminor/generators.hpp>
#include <vminor/vm_engine.hpp>
#include <vminor/witness.hpp>

#include <doctest.h>

using namespace vminor;
using namespace vminor::testing;

namespace
{
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

    // Mycielski graph of C5: triangle-free with chi = 4.
    auto groetzsch() -> Graph
    {
        Graph g(11);
        auto c5 = cycle_graph(5);
        for (auto [u, v] : c5.edges()) {
            g.add_edge(u, v);
            g.add_edge(u + 5, v);
            g.add_edge(u, v + 5);
        }
        for (int i = 5; i < 10; ++i)
            g.add_edge(i, 10);
        return g;
    }

    auto chi_of(const Graph & g, VertexSet s) -> int
    {
        return chromatic_number(induced(g, s).graph).chi;
    }
}

TEST_CASE("omega_region examples")
{
    auto p5 = path_graph(5);
    auto r = omega_region(p5, {0, 1});
    CHECK(r.region == VertexSet{2, 3, 4});
    REQUIRE(r.components.size() == 1);
    CHECK(r.components[0].attached);

    auto c5 = cycle_graph(5);
    auto rc = omega_region(c5, {0, 1});
    CHECK(rc.region == VertexSet{2, 3});
    REQUIRE(rc.components.size() == 1);
    CHECK(rc.components[0].attached);

    // a component away from w is not attached
    auto g = disjoint_union(path_graph(3), complete_graph(2));
    auto rg = omega_region(g, {0, 1});
    REQUIRE(rg.components.size() == 2);
    CHECK(rg.components[0].component == VertexSet{2});
    CHECK(rg.components[0].attached);
    CHECK_FALSE(rg.components[1].attached);

    CHECK(throws_kind([&] { omega_region(c5, {0, 2}); }, ErrorKind::not_induced_path));
    CHECK(throws_kind([&] { omega_region(c5, {0}); }, ErrorKind::not_induced_path));
    CHECK(throws_kind([&] { omega_region(c5, {0, 1, 2, 3, 4}); }, ErrorKind::not_induced_path));
}

TEST_CASE("omega_region matches its definition on random graphs")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        auto g = random_graph(4 + trial % 9, 0.35, rng);
        std::vector<int> p{static_cast<int>(rng() % g.order())};
        while (p.size() < 5) {
            auto options = g.neighbors(p.back()) - g.neighbors(VertexSet::from(std::vector<int>(p.begin(), p.end() - 1)))
                - VertexSet::from(p);
            if (options.empty())
                break;
            auto list = options.to_vector();
            p.push_back(list[rng() % list.size()]);
        }
        if (p.size() < 2 || ! is_induced_path(g, p))
            continue;
        auto r = omega_region(g, p);
        for (int x = 0; x < g.order(); ++x) {
            bool expected = std::find(p.begin(), p.end(), x) == p.end();
            for (std::size_t i = 0; i + 1 < p.size(); ++i)
                expected = expected && ! g.adjacent(x, p[i]);
            CHECK(r.region.contains(x) == expected);
        }
        VertexSet covered;
        for (const auto & part : r.components) {
            covered |= part.component;
            CHECK(part.attached == part.component.intersects(g.neighbors(p.back())));
        }
        CHECK(covered == r.region);
    }
}

TEST_CASE("start_path examples and preconditions")
{
    auto c5 = cycle_graph(5);
    auto s = start_path(c5, 2, 1);
    CHECK(s.path.size() == 2);
    CHECK(c5.adjacent(s.path[0], s.path[1]));
    CHECK(chi_of(c5, s.component) > 1);

    CHECK(throws_kind([&] { start_path(c5, 2, 0); }, ErrorKind::degenerate_input));
    CHECK(throws_kind([&] { start_path(c5, 1, 1); }, ErrorKind::precondition_violation));
    CHECK(throws_kind([&] { start_path(c5, 3, 1); }, ErrorKind::precondition_violation));

    auto gr = groetzsch();
    auto sg = start_path(gr, 2, 1);
    auto r = omega_region(gr, sg.path);
    bool found = false;
    for (const auto & part : r.components)
        found = found || (part.component == sg.component && part.attached);
    CHECK(found);
}

TEST_CASE("start_path postcondition on random graphs")
{
    std::mt19937_64 rng(5);
    int runs = 0;
    for (int trial = 0; trial < 400; ++trial) {
        auto g = random_graph(5 + trial % 8, 0.45, rng);
        int k = clique_number(g).omega;
        int chi = chromatic_number(g).chi;
        for (int d = 1; k * d < chi; ++d) {
            auto s = start_path(g, k, d);
            CHECK(is_induced_path(g, s.path));
            CHECK(chi_of(g, s.component) > d);
            bool attached = false;
            for (const auto & part : omega_region(g, s.path).components)
                attached = attached || (part.component == s.component && part.attached);
            CHECK(attached);
            ++runs;
        }
    }
    CHECK(runs > 20);
}

TEST_CASE("good_path examples")
{
    auto c5 = cycle_graph(5);
    auto r = good_path(c5, {0, 1}, 1, 4);
    CHECK(r.found_long_path);
    CHECK(r.path == std::vector<int>{0, 1, 2, 3});
    CHECK(r.extensions == 1);

    auto p10 = path_graph(10);
    auto rp = good_path(p10, {0, 1}, 1, 4);
    CHECK(rp.found_long_path);
    CHECK(rp.path.size() == 4);
    CHECK(rp.extensions <= 1);
    CHECK(is_induced_path(p10, rp.path));

    // N(1) inside the region holds an edge, so 0-1 is already 1-good
    Graph fan(5, {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
    auto rf = good_path(fan, {0, 1}, 1, 4);
    CHECK_FALSE(rf.found_long_path);
    CHECK(rf.path == std::vector<int>{0, 1});
    CHECK(rf.extensions == 0);

    CHECK(throws_kind([&] { good_path(p10, {0, 1}, 2, 4); }, ErrorKind::precondition_violation));
    CHECK(throws_kind([&] { good_path(c5, {0, 2}, 1, 4); }, ErrorKind::not_induced_path));
}

TEST_CASE("good_path keeps the chromatic ledger and bounds its extensions")
{
    std::mt19937_64 rng(8);
    int runs = 0;
    for (int trial = 0; trial < 600; ++trial) {
        auto g = random_graph(6 + trial % 7, 0.4, rng);
        int k = clique_number(g).omega;
        int chi = chromatic_number(g).chi;
        for (int n = 4; n <= 6; ++n)
            for (int d = 1; k * d * (n - 3) < chi; ++d) {
                auto s = start_path(g, k, d * (n - 3));
                auto r = good_path(g, s.path, d, n);
                CHECK(r.extensions <= n - 3);
                for (std::size_t i = 1; i < r.chi_trace.size(); ++i)
                    CHECK(r.chi_trace[i] >= r.chi_trace[i - 1] - d);
                if (r.found_long_path) {
                    CHECK(static_cast<int>(r.path.size()) == n);
                    CHECK(is_induced_path(g, r.path));
                }
                else {
                    bool good = false;
                    for (const auto & part : omega_region(g, r.path).components)
                        good = good || is_d_good(g, r.path, part.component, d);
                    CHECK(good);
                }
                ++runs;
            }
    }
    CHECK(runs > 20);
}

TEST_CASE("find_witness examples")
{
    auto c5 = cycle_graph(5);
    auto w = find_witness(c5, 4);
    CHECK(w.kind == WitnessKind::induced_path);
    CHECK(w.embedding.size() == 4);
    CHECK(w.bound == 2);
    CHECK(verify_witness(c5, w));

    CHECK(throws_kind([] { find_witness(complete_graph(4), 4); }, ErrorKind::precondition_violation));
    CHECK(throws_kind([] { find_witness(cycle_graph(5), 5); }, ErrorKind::precondition_violation));
    CHECK(throws_kind([] { find_witness(cycle_graph(5), 3); }, ErrorKind::precondition_violation));

    auto c7 = cycle_graph(7);
    auto w7 = find_witness(c7, 4);
    CHECK(w7.kind == WitnessKind::induced_path);
    CHECK(verify_witness(c7, w7));

    auto gr = groetzsch();
    auto wg = find_witness(gr, 4);
    CHECK(verify_witness(gr, wg));
}

TEST_CASE("path_bound values")
{
    CHECK(path_bound(4, 3) == 3);
    CHECK(path_bound(5, 2) == 16);
    CHECK(path_bound(6, 2) == 36);
    CHECK(path_bound(7, 2) == 512);
    CHECK(path_bound(8, 1) == 125);
}

TEST_CASE("find_witness returns a verified witness on every census graph above the bound")
{
    const auto & census = census8();
    int paths = 0, trees = 0;
    for (int n = 4; n <= 8; ++n)
        for (const auto & g : census[n]) {
            int omega = clique_number(g).omega;
            int chi = chromatic_number(g).chi;
            if (chi <= path_bound(4, omega))
                continue;
            auto w = find_witness(g, 4);
            REQUIRE(verify_witness(g, w));
            (w.kind == WitnessKind::induced_path ? paths : trees) += 1;
        }
    CHECK(paths > 0);
    MESSAGE("P4 witnesses: " << paths << ", kts(2) witnesses: " << trees);
}

TEST_CASE("find_witness on random graphs, checked independently")
{
    std::mt19937_64 rng(13);
    int runs = 0;
    for (int trial = 0; trial < 400; ++trial) {
        auto g = random_graph(6 + trial % 7, 0.3 + 0.05 * (trial % 6), rng);
        int omega = clique_number(g).omega;
        int chi = chromatic_number(g).chi;
        for (int n = 4; n <= 8; ++n) {
            if (chi <= path_bound(n, omega))
                continue;
            auto w = find_witness(g, n);
            REQUIRE(verify_witness(g, w));
            auto pattern = w.kind == WitnessKind::induced_path ? path_graph(n) : kts_graph((n + 1) / 2);
            auto sub = induced(g, w.embedding).graph;
            CHECK(is_isomorphic(sub, pattern));
            ++runs;
        }
    }
    CHECK(runs > 20);
}

TEST_CASE("the kts branch is reached and re-verifies")
{
    // w = 1 sees an edge 2-3 in the region, so the path 0-1 is 1-good and the
    // construction ends at kts(2)
    Graph g(8, {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 3}, {4, 6}});
    bool kts_seen = false;
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 2000 && ! kts_seen; ++trial) {
        auto h = trial == 0 ? g : random_graph(6 + trial % 7, 0.5, rng);
        int omega = clique_number(h).omega;
        if (chromatic_number(h).chi <= path_bound(4, omega))
            continue;
        auto w = find_witness(h, 4);
        REQUIRE(verify_witness(h, w));
        if (w.kind == WitnessKind::kts) {
            CHECK(induced(h, w.embedding).graph == kts_graph(2));
            kts_seen = true;
        }
    }
    CHECK(kts_seen);
}
