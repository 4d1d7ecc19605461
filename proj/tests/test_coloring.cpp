#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "recolor/coloring.hpp"
#include "recolor/errors.hpp"
#include "recolor/generators.hpp"
#include "recolor/oracle.hpp"
#include "recolor/rng.hpp"

using namespace recolor;

TEST_CASE("verify_coloring on a 3-path at distance 2") {
    Graph g = gen_path(3);
    CHECK(verify_coloring(g, 2, 3, Coloring{3, {1, 2, 3}}).valid);

    auto report = verify_coloring(g, 2, 3, Coloring{3, {1, 2, 1}});
    CHECK(!report.valid);
    CHECK(report.conflicts == std::vector<std::pair<int, int>>{{0, 2}});

    CHECK_THROWS_AS(verify_coloring(g, 2, 3, Coloring{3, {1, 2, 4}}), input_error);
    CHECK_THROWS_AS(verify_coloring(g, 2, 3, Coloring{3, {1, 2}}), input_error);
}

TEST_CASE("list constraints are reported separately") {
    Graph g = gen_path(2);
    ListAssignment lists{{{1}, {2, 3}}};
    auto ok = verify_coloring(g, 1, 3, Coloring{3, {1, 2}}, &lists);
    CHECK(ok.valid);
    auto bad = verify_coloring(g, 1, 3, Coloring{3, {3, 2}}, &lists);
    CHECK(!bad.valid);
    CHECK(bad.list_violations == std::vector<std::pair<int, int>>{{0, 3}});
}

TEST_CASE("is_valid_step on an edge") {
    Graph g = gen_path(2);
    Coloring cur{3, {1, 2}};
    CHECK(is_valid_step(g, 2, 3, cur, 0, 3));
    CHECK(!is_valid_step(g, 2, 3, cur, 0, 2)); // neighbor holds it
    CHECK(!is_valid_step(g, 2, 3, cur, 0, 1)); // recoloring to the same color

    ListAssignment lists{{{1}, {2, 3}}};
    CHECK(!is_valid_step(g, 2, 3, cur, 0, 3, &lists));
}

TEST_CASE("verify_sequence replays to beta and rejects bad steps") {
    Graph g = gen_path(3);
    auto inst = make_instance(g, 2, 4, Coloring{4, {1, 2, 3}}, Coloring{4, {1, 2, 3}});
    CHECK(verify_sequence(inst, ReconfigSequence{}).ok);

    auto inst2 = make_instance(g, 2, 4, Coloring{4, {1, 2, 3}}, Coloring{4, {4, 2, 3}});
    ReconfigSequence good{{{0, 4}}};
    CHECK(verify_sequence(inst2, good).ok);

    ReconfigSequence noop{{{1, 2}, {0, 4}}};
    auto r1 = verify_sequence(inst2, noop);
    CHECK(!r1.ok);
    CHECK(r1.first_bad_step == 0);

    ReconfigSequence wrong_end{{{0, 4}, {1, 4}}};
    auto r2 = verify_sequence(inst2, wrong_end);
    CHECK(!r2.ok);
    CHECK(r2.first_bad_step == 1); // 4 clashes with vertex 0 within distance 2

    ReconfigSequence incomplete{};
    auto r3 = verify_sequence(inst2, incomplete);
    CHECK(!r3.ok);
    CHECK(r3.final_mismatch);

    CHECK_THROWS_AS(verify_sequence(inst2, ReconfigSequence{{{7, 1}}}), input_error);
}

TEST_CASE("instance construction rejects invalid endpoints") {
    Graph g = gen_path(3);
    CHECK_THROWS_AS(make_instance(g, 2, 3, Coloring{3, {1, 2, 1}}, Coloring{3, {1, 2, 3}}),
                    input_error);
    CHECK_THROWS_AS(make_instance(g, 2, 2, Coloring{2, {1, 2, 1}}, Coloring{2, {1, 2, 1}}),
                    input_error); // k below d+1
}

TEST_CASE("distance-d validity equals proper coloring of the power graph") {
    int checked = 0;
    for (std::uint64_t seed = 1; checked < 500; ++seed) {
        Rng rng(seed);
        int n = rng.next_int(2, 8);
        int d = rng.next_int(1, 3);
        int k = rng.next_int(2, 6);
        Graph g = gen_random_connected(n, 0.4, seed * 7 + 1);
        Graph power = graph_power(g, d);
        Coloring col{k, {}};
        for (int v = 0; v < n; ++v)
            col.color.push_back(rng.next_int(1, k));
        bool direct = verify_coloring(g, d, k, col).valid;
        bool via_power = verify_coloring(power, 1, k, col).valid;
        CHECK(direct == via_power);
        ++checked;
    }
}

TEST_CASE("valid steps produce valid colorings") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        Rng rng(seed);
        int n = rng.next_int(2, 7);
        int d = rng.next_int(1, 3);
        int k = d + rng.next_int(1, 3);
        Graph g = gen_random_connected(n, 0.5, seed * 13);
        auto cols = collect_colorings(g, d, k, nullptr, OracleBudget{10000, std::nullopt});
        if (cols.empty())
            continue;
        const Coloring& base = cols[rng.next_int(0, static_cast<int>(cols.size()) - 1)];
        for (int v = 0; v < n; ++v)
            for (int c = 1; c <= k; ++c)
                if (is_valid_step(g, d, k, base, v, c)) {
                    Coloring next = base;
                    next.color[v] = c;
                    CHECK(verify_coloring(g, d, k, next).valid);
                }
    }
}

TEST_CASE("verify_sequence is prefix monotone") {
    Graph g = gen_path(4);
    auto inst = make_instance(g, 2, 4, Coloring{4, {1, 2, 3, 1}}, Coloring{4, {4, 2, 3, 1}});
    ReconfigSequence seq{{{0, 4}, {3, 4}, {3, 1}}};
    REQUIRE(verify_sequence(inst, seq).ok);
    // Every prefix is a valid sequence toward its own endpoint.
    for (std::size_t cut = 0; cut <= seq.steps.size(); ++cut) {
        ReconfigSequence prefix{{seq.steps.begin(), seq.steps.begin() + cut}};
        Coloring end = apply_sequence(inst.alpha, prefix);
        auto sub = make_instance(inst.graph, inst.d, inst.k, inst.alpha, end);
        CHECK(verify_sequence(sub, prefix).ok);
    }
}
