#include "support.hpp"

#include <vminor/generators.hpp>
#include <vminor/suites.hpp>

#include <doctest.h>

using namespace vminor;
using namespace vminor::testing;

namespace
{
    auto stable(nlohmann::json j) -> nlohmann::json
    {
        j.erase("wall_time_ms");
        return j;
    }
}

TEST_CASE("figure2 suite replays all eight arrows")
{
    auto r = suite_figure2();
    CHECK(r.cases == 8);
    CHECK(r.ok());
    for (const auto & f : r.failures)
        MESSAGE(f.case_name << ": " << f.detail);
}

TEST_CASE("p5-perfect suite up to 6 vertices")
{
    auto r = suite_p5_perfect(6);
    CHECK(r.ok());
    CHECK(r.details["exempt_c5_w5"] == 2);
    CHECK(r.details["truncated"] == 0);
    CHECK(r.cases > 0);
}

TEST_CASE("kts suite")
{
    auto r = suite_kts(7);
    CHECK(r.ok());
    CHECK(r.cases == 4 + 3);
}

TEST_CASE("join-bound suite is deterministic per seed")
{
    auto a = suite_join_bound(40, 5);
    auto b = suite_join_bound(40, 5);
    CHECK(a.ok());
    CHECK(a.cases == 80);
    CHECK(stable(to_json(a)) == stable(to_json(b)));
    CHECK(to_json(a)["failures"].is_array());
}

TEST_CASE("cycle-pipeline suite filters by C5 vertex-minors")
{
    auto r = suite_cycle_pipeline(5, 6);
    CHECK(r.ok());
    CHECK(r.details["kept"].get<int>() > 0);
}

TEST_CASE("orbit memo agrees with the direct search")
{
    OrbitMinorMemo memo(path_graph(5), default_orbit_cap);
    const auto & census = connected_census8();
    for (int n = 5; n <= 6; ++n)
        for (const auto & g : census[n]) {
            auto direct = has_vertex_minor({g, path_graph(5), MinorMode::vertex_minor, default_orbit_cap});
            REQUIRE(memo.answer(g) == direct.answer);
        }
    CHECK(memo.orbits_explored() < census[5].size() + census[6].size());
}

TEST_CASE("random composition trees compose to connected graphs")
{
    std::vector<Graph> base{path_graph(3), cycle_graph(5), complete_graph(4)};
    std::mt19937_64 rng(2);
    for (int i = 0; i < 50; ++i) {
        auto t = random_composition_tree(base, 1 + i % 6, rng);
        CHECK_NOTHROW(validate_tree(t));
        CHECK(is_connected(compose(t)));
    }
}
