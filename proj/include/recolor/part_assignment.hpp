#pragma once

#include <array>
#include <utility>
#include <vector>

namespace recolor {

// Incidence structure of the forbidding paths on the gadget vertices: one
// entry per path, giving its two endpoint vertices. Parallel paths between
// the same vertex pair are allowed.
struct PartTopology {
    int n_vertices = 0;
    std::vector<std::pair<int, int>> paths;
};

// For each path, which of the three ordered color sets (0, 1, 2 standing for
// the first, second, and third set) colors its closer half at each endpoint:
// sets[p][0] belongs to the half incident to paths[p].first, sets[p][1] to
// the half incident to paths[p].second.
struct PartAssignment {
    std::vector<std::array<int, 2>> sets;
};

// Assigns one of three color sets to every path half such that the two
// halves of a path differ and the halves meeting at a common vertex are
// pairwise distinct. Vertices incident to three paths are handled first
// (their halves get the sets in incidence order); remaining vertices are
// processed in ascending id order with the swap rule for pre-assigned
// opposite halves. Preconditions: every vertex has at most three incident
// halves and no path joins two degree-3 vertices; violations raise
// input_error naming the condition.
PartAssignment assign_parts(const PartTopology& topology);

} // namespace recolor
