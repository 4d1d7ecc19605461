#include "recolor/graph.hpp"

#include "recolor/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace recolor {

bool Graph::has_edge(int u, int v) const {
    const auto& a = adj[u];
    return std::binary_search(a.begin(), a.end(), v);
}

int Graph::edge_count() const {
    int twice = 0;
    for (const auto& a : adj)
        twice += static_cast<int>(a.size());
    return twice / 2;
}

std::string Graph::label(int v) const {
    if (!labels.empty() && !labels[v].empty())
        return labels[v];
    return std::to_string(v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges,
                  std::vector<std::string> labels) {
    if (n < 0)
        throw input_error("vertex count must be non-negative");
    if (!labels.empty() && static_cast<int>(labels.size()) != n)
        throw input_error("label table size does not match vertex count");
    Graph g;
    g.n = n;
    g.adj.assign(n, {});
    g.labels = std::move(labels);
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw input_error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") references a vertex outside 0.." + std::to_string(n - 1));
        if (u == v)
            throw input_error("self-loop at vertex " + std::to_string(u));
        auto key = std::minmax(u, v);
        if (!seen.insert({key.first, key.second}).second)
            continue;
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& a : g.adj)
        std::sort(a.begin(), a.end());
    return g;
}

std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(g.n, -1);
    std::deque<int> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : g.adj[u])
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

std::map<int, int> neighborhood_within(const Graph& g, int v, int d) {
    if (v < 0 || v >= g.n)
        throw input_error("vertex " + std::to_string(v) + " out of range");
    if (d < 0)
        throw input_error("radius must be non-negative");
    std::map<int, int> out;
    std::vector<int> dist(g.n, -1);
    std::deque<int> queue{v};
    dist[v] = 0;
    out[v] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (dist[u] == d)
            continue;
        for (int w : g.adj[u])
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                out[w] = dist[w];
                queue.push_back(w);
            }
    }
    return out;
}

Graph graph_power(const Graph& g, int d) {
    if (d < 1)
        throw input_error("graph power requires exponent >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < g.n; ++v)
        for (auto [u, dist] : neighborhood_within(g, v, d))
            if (u > v)
                edges.emplace_back(v, u);
    return build_graph(g.n, edges, g.labels);
}

std::optional<int> diameter(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.n; ++v) {
        auto dist = bfs_distances(g, v);
        for (int u = 0; u < g.n; ++u) {
            if (dist[u] < 0)
                return std::nullopt;
            best = std::max(best, dist[u]);
        }
    }
    return best;
}

StructuralReport structural_checks(const Graph& g) {
    StructuralReport report;

    // Bipartite + connected via one BFS sweep over all components.
    std::vector<int> side(g.n, -1);
    report.bipartite = true;
    int components = 0;
    for (int s = 0; s < g.n; ++s) {
        if (side[s] >= 0)
            continue;
        ++components;
        side[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : g.adj[u]) {
                if (side[w] < 0) {
                    side[w] = side[u] ^ 1;
                    queue.push_back(w);
                } else if (side[w] == side[u]) {
                    report.bipartite = false;
                }
            }
        }
    }
    report.connected = components <= 1;

    // Degeneracy by repeated minimum-degree peeling. Bucketed for O(n + m).
    std::vector<int> deg(g.n);
    int maxdeg = 0;
    for (int v = 0; v < g.n; ++v) {
        deg[v] = g.degree(v);
        maxdeg = std::max(maxdeg, deg[v]);
    }
    // Buckets may hold stale entries after degree decrements; they are
    // skipped when popped by re-checking deg[] against the bucket index.
    std::vector<std::vector<int>> bucket(maxdeg + 1);
    for (int v = 0; v < g.n; ++v)
        bucket[deg[v]].push_back(v);
    std::vector<bool> removed(g.n, false);
    report.degeneracy = 0;
    report.peeling_order.reserve(g.n);
    int cursor = 0;
    for (int step = 0; step < g.n; ++step) {
        int v = -1;
        while (v < 0) {
            while (cursor <= maxdeg && bucket[cursor].empty())
                ++cursor;
            int cand = bucket[cursor].back();
            bucket[cursor].pop_back();
            if (!removed[cand] && deg[cand] == cursor)
                v = cand;
        }
        removed[v] = true;
        report.degeneracy = std::max(report.degeneracy, deg[v]);
        report.peeling_order.push_back(v);
        for (int w : g.adj[v])
            if (!removed[w]) {
                --deg[w];
                bucket[deg[w]].push_back(w);
                cursor = std::min(cursor, deg[w]);
            }
    }
    return report;
}

std::vector<std::vector<int>> distance_balls(const Graph& g, int d) {
    std::vector<std::vector<int>> balls(g.n);
    for (int v = 0; v < g.n; ++v)
        for (auto [u, dist] : neighborhood_within(g, v, d))
            if (u != v)
                balls[v].push_back(u);
    return balls;
}

} // namespace recolor
