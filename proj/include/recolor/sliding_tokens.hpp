#pragma once

#include "recolor/graph.hpp"
#include "recolor/oracle.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace recolor {

// A set of token positions. Valid configurations are independent sets; a
// standard configuration holds exactly one token per token triangle and per
// token edge.
struct TokenConfig {
    std::vector<int> tokens; // sorted ascending

    bool operator==(const TokenConfig&) const = default;
    bool has(int v) const;
};

// A gadget-structured token-sliding instance. The graph is the union of
// triangle edges, token edges, and link edges; every vertex belongs to
// exactly one token triangle or one token edge.
struct STInstance {
    Graph graph;
    std::vector<std::array<int, 3>> triangles;
    std::vector<std::array<int, 2>> token_edges;
    std::vector<std::pair<int, int>> link_edges;
    TokenConfig t_a;
    TokenConfig t_b;
};

// Assembles an instance, checking only structural sanity: ids in range, all
// listed edges present, and the graph's edge set exactly covered by triangle,
// token, and link edges. Semantic requirements are reported by validate_st.
STInstance make_st_instance(Graph graph, std::vector<std::array<int, 3>> triangles,
                            std::vector<std::array<int, 2>> token_edges,
                            std::vector<std::pair<int, int>> link_edges, TokenConfig t_a,
                            TokenConfig t_b);

// Where a vertex lives: gadget kind, gadget index, and 1-based position
// within the gadget.
struct GadgetRef {
    enum class Kind { triangle, token_edge } kind;
    int index = -1;
    int position = 0;
};

// Precomputed lookups shared by validation, moves, and the reductions.
struct STIndex {
    std::vector<GadgetRef> gadget_of;       // by vertex id
    std::vector<int> triangle_degree;       // link edges touching each triangle
    std::vector<int> token_edge_degree;     // link edges touching each token edge

    static STIndex build(const STInstance& inst);
};

struct STReport {
    bool well_formed = false;
    bool restricted = false;
    std::vector<std::string> violations;
};

// Checks every structural invariant of the instance family: gadget
// disjointness and coverage, degree bounds (min 2, max 3, triangle vertices
// exactly 3), and standard independent token configurations. `restricted`
// additionally requires no degree-4 token edge and no link edge joining two
// degree-3 gadgets.
STReport validate_st(const STInstance& inst);

// All single token slides valid from cfg, sorted by (from, to). A slide moves
// a token along an edge to an unoccupied vertex with no other token adjacent.
std::vector<std::pair<int, int>> ts_moves(const STInstance& inst, const TokenConfig& cfg);

struct TSMoveSequence {
    std::vector<std::pair<int, int>> moves; // (from, to)

    bool operator==(const TSMoveSequence&) const = default;
};

// Applies one slide without validity checking.
TokenConfig apply_move(const TokenConfig& cfg, int from, int to);

struct RewriteStep {
    std::string rule;           // "R1" or "R2"
    int gadget_index = -1;      // token-edge index for R1, link-edge index for R2
    std::array<int, 2> removed_edge{};
    std::array<int, 2> new_vertices{}; // u' then v'
};

struct RestrictResult {
    STInstance out;
    std::vector<RewriteStep> trace;
};

// Rewrites the instance so every token edge has degree 2 or 3 and no link
// edge joins two degree-3 gadgets. Degree-4 token edges are split first
// (ascending index), then qualifying link edges are subdivided (ascending
// index). Token placement follows the occupied endpoint; vertices keeping or
// lacking tokens in the input do the same in the output. New vertices get
// fresh ids with provenance labels. Refuses inputs that fail validate_st.
RestrictResult restrict_st(const STInstance& inst);

struct TsReachResult {
    bool reachable = false;
    TSMoveSequence moves; // shortest, deterministic tie-break by sorted move order
    std::uint64_t states_visited = 0;
};

// BFS over token configurations from t_a to t_b.
TsReachResult ts_reachable(const STInstance& inst, const OracleBudget& budget = {});

} // namespace recolor
