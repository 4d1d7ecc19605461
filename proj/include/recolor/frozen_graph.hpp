#pragma once

#include "recolor/coloring.hpp"
#include "recolor/graph.hpp"
#include "recolor/rst_reduction.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace recolor {

// A pre-colored tree in which no vertex admits any valid recoloring: all
// palette colors appear exactly once and, for d >= 3, every other color sits
// within distance d of every vertex. Attached next to a vertex v it pins the
// colors v may use: the anchor w_i carrying color i sits at distance d from v
// when i is outside v's list and d+1 when inside.
struct FrozenGadget {
    Graph graph;     // standalone gadget; v itself is not part of it
    Coloring coloring;
    int d = 0;
    int k = 0;       // base palette size
    int k_prime = 0; // full palette: n*(ceil(d/2)-1) + 2 + k for n = peers+1
    int c_center = -1;       // hub carrying the shared hub color
    int c_attach = -1;       // endpoint joined to v from outside (== hub when collapsed)
    int c_star = -1;         // carrier of the second shared color
    std::vector<int> own_path;          // interiors of the center path, hub outward
    std::vector<std::vector<int>> peer_paths; // per peer, interiors hub outward
    std::vector<int> peer_endpoints;          // per peer path endpoint (== hub if empty)
    std::vector<int> peer_stars;              // odd d only; -1 entries otherwise
    std::vector<int> anchors;                 // anchors[i-1] carries base color i
    std::map<int, std::string> color_names;
};

// Builds the gadget for vertex v with allowed colors l_v, one branch per
// peer. Preconditions: d >= 2, non-empty l_v inside 1..k, at least one peer.
// Color codes follow the composed layout: base 1..k, then the hub color, the
// per-vertex branch colors in ascending vertex order, and the star-hub color
// last.
FrozenGadget build_frozen_graph(int v, int d, int k, const std::vector<int>& l_v,
                                const std::vector<int>& peers);

// Placement of one attached gadget inside a composed instance.
struct GadgetLayout {
    int c_center = -1;
    int c_attach = -1;
    int c_star = -1;
    std::vector<int> own_path;
    std::vector<std::vector<int>> branch_paths; // one per foreign color family
    std::vector<int> branch_family;             // family id per branch
    std::vector<int> branch_stars;              // odd d only
    std::vector<int> anchors;
};

struct ListToPlainArtifact {
    ReconfigInstance out; // plain (d, k') instance
    int d = 0;
    int k = 0;
    int k_prime = 0;
    int n_source = 0;                 // vertices of the source list instance
    std::vector<int> family_of;       // source vertex -> color family
    int n_families = 0;
    std::vector<GadgetLayout> gadgets; // per source vertex
    std::map<int, std::string> color_names;
    // Per-source-vertex (set, index) palette keys, present when the list
    // instance came out of the token-sliding reduction. Set 3 marks gadget
    // vertices; 0..2 are the three shared ordered sets.
    std::optional<std::vector<std::pair<int, int>>> palette_provenance;
};

// Attaches one frozen gadget per vertex (branch per other vertex) and joins
// each vertex to its gadget, turning list constraints into plain distance
// constraints at k' = n*(ceil(d/2)-1) + 2 + k. Requires lists and a
// connected graph with at least two vertices.
ListToPlainArtifact list_to_plain(const ReconfigInstance& inst);

// Same construction applied to a reduction artifact, carrying the palette
// provenance needed by reduce_palette.
ListToPlainArtifact list_to_plain_from(const RstToListArtifact& art);

// Rebuilds the attachment with gadget branches shared between vertices whose
// colors can never meet: vertices within distance d keep distinct families,
// so the branch palette depends only on d, not on the instance size. Requires
// palette provenance; the output is re-validated in full.
ListToPlainArtifact reduce_palette(const ListToPlainArtifact& art);

} // namespace recolor
