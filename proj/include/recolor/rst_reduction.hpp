#pragma once

#include "recolor/coloring.hpp"
#include "recolor/forbidding_path.hpp"
#include "recolor/sliding_tokens.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace recolor {

// One spliced forbidding path of the constructed list instance.
struct RstPathInfo {
    int link_index = -1;      // index of the source link edge
    int u_vertex = -1;        // gadget vertex ids in the output graph
    int v_vertex = -1;
    int a = 0, b = 0;         // forbidden endpoint pair
    int cl_set = -1;          // 0/1/2: ordered color set of the u-side half
    int far_set = -1;
    ForbiddingPath shape;     // standalone path with lists; local ids 0..len
    std::vector<int> vertices; // output ids for w^0..w^len (endpoints included)
};

// Output of the restricted-token-sliding to list-coloring reduction, with
// the correspondence needed to translate solutions both ways.
struct RstToListArtifact {
    STInstance source;
    ReconfigInstance out;      // list (d,k) reconfiguration instance
    int d = 0;
    int q = 0;
    int k = 0;
    std::vector<int> triangle_vertex; // triangle index -> output vertex id
    std::vector<int> edge_vertex;     // token-edge index -> output vertex id
    std::array<std::vector<int>, 3> set_colors; // the three ordered color sets
    std::vector<RstPathInfo> paths;
    std::map<int, std::string> color_names;
};

// Builds the list (d,k) instance for a restricted instance: one vertex per
// token triangle with list {1,2,3}, one per token edge with list {1,2}, and
// a forbidding path per link edge whose color set pairs two of three shared
// ordered sets chosen by assign_parts. Endpoint colorings are derived from
// the token configurations; path interiors take the deterministic completion
// for их endpoint colors. k is 3(d+1)/2+3 for odd d and 3(d+2)/2+3 for even.
RstToListArtifact rst_to_list(const STInstance& rst, int d);

// Expands token slides into recoloring sequences: for each move, every
// forbidding path incident to the moving gadget vertex is prepared first and
// the gadget vertex is recolored last. Throws input_error at the index of an
// invalid move.
ReconfigSequence lift_ts_sequence(const RstToListArtifact& art, const TSMoveSequence& moves);

// Collapses a recoloring sequence back to token slides: interior-path steps
// are dropped and each gadget-vertex recoloring becomes one slide. Throws
// input_error at the index of an invalid step.
TSMoveSequence project_recoloring_sequence(const RstToListArtifact& art,
                                           const ReconfigSequence& seq);

} // namespace recolor
