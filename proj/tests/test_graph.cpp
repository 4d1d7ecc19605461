#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "recolor/errors.hpp"
#include "recolor/generators.hpp"
#include "recolor/graph.hpp"
#include "recolor/rng.hpp"

#include <algorithm>
#include <set>

using namespace recolor;

TEST_CASE("build_graph canonicalizes and validates") {
    Graph g = build_graph(3, {{0, 1}, {1, 2}});
    CHECK(g.n == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(!g.has_edge(0, 2));

    Graph single = build_graph(1, {});
    CHECK(single.n == 1);
    CHECK(single.edge_count() == 0);

    Graph dedup = build_graph(3, {{0, 1}, {1, 0}, {1, 2}});
    CHECK(dedup.edges() == g.edges());

    CHECK_THROWS_AS(build_graph(3, {{0, 3}}), input_error);
    CHECK_THROWS_AS(build_graph(3, {{1, 1}}), input_error);
}

TEST_CASE("neighborhood_within gives exact bounded distances") {
    Graph path = gen_path(4);
    auto hood = neighborhood_within(path, 0, 2);
    CHECK(hood == std::map<int, int>{{0, 0}, {1, 1}, {2, 2}});

    auto self_only = neighborhood_within(path, 2, 0);
    CHECK(self_only == std::map<int, int>{{2, 0}});

    Graph star = build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(neighborhood_within(star, 0, 1).size() == 5);
}

TEST_CASE("graph_power matches its definition") {
    Graph p4 = gen_path(4);
    Graph sq = graph_power(p4, 2);
    std::vector<std::pair<int, int>> expect{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}};
    CHECK(sq.edges() == expect);

    Graph cube = graph_power(p4, 3);
    CHECK(cube.edge_count() == 6); // complete graph once d reaches the diameter

    CHECK(graph_power(p4, 1).edges() == p4.edges());
}

TEST_CASE("power graph equals the within-distance balls on random graphs") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Rng rng(seed);
        int n = rng.next_int(2, 10);
        Graph g = gen_random_connected(n, 0.4, seed * 11);
        int d = rng.next_int(1, 4);
        Graph power = graph_power(g, d);
        for (int v = 0; v < n; ++v) {
            std::set<int> ball;
            for (auto [u, dist] : neighborhood_within(g, v, d))
                if (u != v)
                    ball.insert(u);
            std::set<int> adj(power.adj[v].begin(), power.adj[v].end());
            CHECK(ball == adj);
        }
    }
}

TEST_CASE("distances are symmetric") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = gen_random_connected(8, 0.3, seed);
        for (int u = 0; u < g.n; ++u) {
            auto from_u = bfs_distances(g, u);
            for (int v = 0; v < g.n; ++v)
                CHECK(from_u[v] == bfs_distances(g, v)[u]);
        }
    }
}

TEST_CASE("diameter and the infinite sentinel") {
    CHECK(diameter(gen_path(5)) == 4);
    CHECK(diameter(build_graph(2, {})) == std::nullopt);
    CHECK(diameter(build_graph(1, {})) == 0);
}

TEST_CASE("split graph components stay within diameter 3") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        Graph g = gen_split(4, 5, 0.5, seed);
        // Check the diameter of every connected component by pairwise BFS.
        for (int v = 0; v < g.n; ++v) {
            auto dist = bfs_distances(g, v);
            for (int u = 0; u < g.n; ++u)
                if (dist[u] >= 0)
                    CHECK(dist[u] <= 3);
        }
    }
}

TEST_CASE("structural checks on basic shapes") {
    Graph tree = build_graph(5, {{0, 1}, {0, 2}, {2, 3}, {2, 4}});
    auto tr = structural_checks(tree);
    CHECK(tr.bipartite);
    CHECK(tr.connected);
    CHECK(tr.degeneracy == 1);

    Graph triangle = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    auto trr = structural_checks(triangle);
    CHECK(!trr.bipartite);
    CHECK(trr.degeneracy == 2);

    Graph cycle = build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
    CHECK(structural_checks(cycle).degeneracy == 2);
}

TEST_CASE("peeling order witnesses the degeneracy") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = gen_random_connected(9, 0.35, seed * 3);
        auto report = structural_checks(g);
        std::vector<int> rank(g.n);
        for (int i = 0; i < g.n; ++i)
            rank[report.peeling_order[i]] = i;
        for (int v = 0; v < g.n; ++v) {
            int later = 0;
            for (int w : g.adj[v])
                later += rank[w] > rank[v] ? 1 : 0;
            CHECK(later <= report.degeneracy);
        }
    }
}
