#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "recolor/errors.hpp"
#include "recolor/generators.hpp"
#include "recolor/oracle.hpp"
#include "recolor/rng.hpp"

using namespace recolor;

TEST_CASE("enumeration counts and order") {
    Graph k2 = build_graph(2, {{0, 1}});
    CHECK(collect_colorings(k2, 1, 2).size() == 2);

    Graph p3 = gen_path(3);
    auto all = collect_colorings(p3, 2, 3);
    CHECK(all.size() == 6); // diameter <= d forces all-distinct colors
    // Lexicographic vertex-major order.
    for (std::size_t i = 1; i < all.size(); ++i)
        CHECK(all[i - 1].color < all[i].color);
    CHECK(all.front().color == std::vector<int>{1, 2, 3});
    CHECK(all.back().color == std::vector<int>{3, 2, 1});
}

TEST_CASE("enumeration respects lists") {
    Graph p3 = gen_path(3);
    ListAssignment lists{{{1}, {2}, {3}}};
    auto all = collect_colorings(p3, 2, 3, &lists);
    REQUIRE(all.size() == 1);
    CHECK(all[0].color == std::vector<int>{1, 2, 3});
}

TEST_CASE("enumeration budget is a hard stop") {
    Graph p3 = gen_path(3);
    OracleBudget tiny{3, std::nullopt};
    CHECK_THROWS_AS(collect_colorings(p3, 2, 3, nullptr, tiny), budget_exceeded);
    try {
        collect_colorings(p3, 2, 3, nullptr, tiny);
    } catch (const budget_exceeded& e) {
        CHECK(e.states_visited == 3);
    }
}

TEST_CASE("reachability basics") {
    Graph p3 = gen_path(3);
    auto same = make_instance(p3, 2, 3, Coloring{3, {1, 2, 3}}, Coloring{3, {1, 2, 3}});
    auto r = reconfig_reachable(same);
    CHECK(r.reachable);
    CHECK(r.sequence.empty());

    // A path on 2(d+1) vertices with k = d+1 is stuck for distinct endpoints.
    Graph p6 = gen_path(6);
    auto stuck = make_instance(p6, 2, 3, Coloring{3, {1, 2, 3, 1, 2, 3}},
                               Coloring{3, {2, 1, 3, 2, 1, 3}});
    CHECK(!reconfig_reachable(stuck).reachable);

    Graph k3 = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    auto inst = make_instance(k3, 2, 4, Coloring{4, {1, 2, 3}}, Coloring{4, {2, 1, 3}});
    auto rr = reconfig_reachable(inst);
    CHECK(rr.reachable);
    CHECK(verify_sequence(inst, rr.sequence).ok);
}

TEST_CASE("returned sequences verify and reachability is symmetric") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        Rng rng(seed);
        int n = rng.next_int(2, 6);
        int d = rng.next_int(1, 2);
        int k = d + rng.next_int(1, 2);
        Graph g = gen_random_connected(n, 0.5, seed * 17);
        auto cols = collect_colorings(g, d, k, nullptr, OracleBudget{5000, std::nullopt});
        if (cols.size() < 2)
            continue;
        const Coloring& a = cols[rng.next_int(0, static_cast<int>(cols.size()) - 1)];
        const Coloring& b = cols[rng.next_int(0, static_cast<int>(cols.size()) - 1)];
        auto inst = make_instance(g, d, k, a, b);
        auto fwd = reconfig_reachable(inst);
        auto bwd = reconfig_reachable(make_instance(g, d, k, b, a));
        CHECK(fwd.reachable == bwd.reachable);
        if (fwd.reachable) {
            CHECK(verify_sequence(inst, fwd.sequence).ok);
            CHECK(fwd.sequence.size() == bwd.sequence.size());
        }
    }
}

TEST_CASE("budget exceeded is an exception, not a decision") {
    Graph g = gen_random_connected(6, 0.4, 5);
    auto cols = collect_colorings(g, 1, 4, nullptr);
    REQUIRE(cols.size() >= 2);
    auto inst = make_instance(g, 1, 4, cols.front(), cols.back());
    OracleBudget tiny{2, std::nullopt};
    CHECK_THROWS_AS(reconfig_reachable(inst, tiny), budget_exceeded);
}
