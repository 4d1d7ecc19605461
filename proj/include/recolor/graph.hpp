#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace recolor {

// Simple undirected graph with dense 0-based vertex ids. Immutable after
// construction; all operations below are pure functions, so a Graph can be
// shared freely across threads.
//
// Connectivity is not an invariant: validators and per-component solvers
// accept disconnected graphs and treat cross-component distance as infinite.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj; // per-vertex neighbor lists, sorted ascending
    std::vector<std::string> labels;   // empty, or size n with "" = unlabeled

    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    int edge_count() const;

    // The vertex's label, falling back to its id rendered as a string.
    std::string label(int v) const;

    // Edge list with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;
};

// Builds a canonical Graph. Duplicate edges (in either orientation) are
// deduplicated. Out-of-range ids and self-loops raise input_error naming
// the offending edge.
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges,
                  std::vector<std::string> labels = {});

// BFS distances from src; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int src);

// All vertices within distance d of v, mapped to their exact distance.
// Includes v itself at distance 0.
std::map<int, int> neighborhood_within(const Graph& g, int v, int d);

// The graph on the same vertex set where u,v are adjacent iff their
// distance in g is between 1 and d.
Graph graph_power(const Graph& g, int d);

// Maximum pairwise distance, or nullopt when g is disconnected. Distance is
// never encoded as a large finite number.
std::optional<int> diameter(const Graph& g);

struct StructuralReport {
    bool bipartite = false;
    bool connected = false;
    int degeneracy = 0;
    // Min-degree peeling order witnessing the degeneracy: each vertex has at
    // most `degeneracy` neighbors later in this order.
    std::vector<int> peeling_order;
};

StructuralReport structural_checks(const Graph& g);

// Per-vertex sorted lists of all vertices at distance 1..d. This is the
// adjacency of graph_power(g, d); validators and the search oracles keep one
// around to make conflict checks O(ball size).
std::vector<std::vector<int>> distance_balls(const Graph& g, int d);

} // namespace recolor
