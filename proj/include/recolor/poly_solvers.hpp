#pragma once

#include "recolor/coloring.hpp"
#include "recolor/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace recolor {

struct SolveOutcome {
    bool yes = false;
    ReconfigSequence sequence;  // passes verify_sequence whenever yes
    std::string certificate;    // reason tag for a no decision
};

// Decides instances whose components all have diameter at most d: within a
// component every vertex needs a distinct color, so a component with as many
// vertices as colors is stuck and anything smaller can be steered to beta by
// always recoloring with a color unused in the component. The instance must
// be list-free; a component with diameter above d raises input_error.
SolveOutcome solve_diameter_le_d(const ReconfigInstance& inst);

// The clique/independent-set partition of a split graph, when one exists.
struct SplitPartition {
    std::vector<int> clique;
    std::vector<int> independent;
};
std::optional<SplitPartition> split_partition(const Graph& g);

// Split graphs have components of diameter at most 3, so for d >= 3 the
// diameter solver applies. Rejects non-split graphs and d < 3.
SolveOutcome solve_split(const ReconfigInstance& inst);

// Consecutive runs of d+1 vertices along a path, starting from the endpoint
// with the smallest id; the last block may be shorter.
struct BlockDecomposition {
    std::vector<std::vector<int>> blocks;
    int d = 0;
};

// Requires a path (n <= 2, or connected with exactly two degree-1 vertices
// and maximum degree 2).
BlockDecomposition path_blocks(const Graph& p, int d);

// With exactly d+1 colors, a valid coloring of a path repeats every block:
// the j-th vertices of any two blocks agree. col must be a valid (d, d+1)
// coloring; anything else is an input error.
bool check_compact(const Graph& p, int d, const Coloring& col);

struct NormalizeResult {
    ReconfigSequence sequence;
    Coloring final; // valid at (d, d+1)
};

// Folds any (d,k)-coloring of a path (k >= d+2) into a block-periodic
// coloring using at most d+1 colors by copying each block's colors into all
// earlier blocks, later blocks first. Step count is at most n * ceil(n/(d+1)).
NormalizeResult path_normalize(const Graph& p, int d, int k, const Coloring& col);

// Full path decision: equal endpoints are trivially yes; short paths go to
// the diameter solver; with k = d+1 distinct colorings are stuck; otherwise
// both endpoint colorings are normalized and bridged block-synchronously.
SolveOutcome solve_path(const ReconfigInstance& inst);

} // namespace recolor
