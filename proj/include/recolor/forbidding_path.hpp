#pragma once

#include "recolor/coloring.hpp"
#include "recolor/graph.hpp"
#include "recolor/oracle.hpp"

#include <utility>
#include <vector>

namespace recolor {

// A list-colored path between two endpoints u = w^0 and v = w^len whose only
// excluded endpoint color pair is (a, b). Interior lists walk through the
// ordered color set C, so fixing one endpoint's forbidden color forces the
// whole interior and blocks the other endpoint's forbidden color.
struct ForbiddingPath {
    Graph path;                // vertices 0..len in path order
    int len = 0;               // d+3 when d is odd, d+4 when d is even
    int d = 0;
    int a = 0, b = 0;          // forbidden endpoint pair, both in {1,2,3}
    std::vector<int> colors;   // the ordered set C; |C| = len - 2
    ListAssignment lists;      // per-vertex allowed colors
    int q = 0;                 // (len - 2) / 2
};

// Interior color lists for all of w^1..w^{len-1}, in order. Shared between
// the standalone builder and the instance-level splicing.
std::vector<std::vector<int>> forbidding_path_interior_lists(int a, int b,
                                                             const std::vector<int>& colors);

// Expected |C| for the given distance bound: d+1 when odd, d+2 when even.
int forbidding_path_color_count(int d);

// Builds the path with L(u) = l_u, L(v) = l_v and the interior lists derived
// from `colors`. Preconditions: d >= 2, a in l_u, b in l_v, both endpoint
// lists inside {1,2,3}, colors disjoint from {1,2,3} with the exact size
// above.
ForbiddingPath build_forbidding_path(int d, int a, int b, const std::vector<int>& l_u,
                                     const std::vector<int>& l_v,
                                     const std::vector<int>& colors);

// Deterministic full coloring of the path realizing endpoint colors (x, y).
// (x, y) must be admissible: x in L(u), y in L(v), (x, y) != (a, b).
std::vector<int> forbidding_path_completion(const ForbiddingPath& fp, int x, int y);

// Interior recoloring steps (on local path vertex ids) that prepare one
// endpoint for a recolor, leaving every other vertex's color legal along the
// way. `u_side` selects which endpoint is about to change; `cur` is the
// current full path coloring and `target` the endpoint's next color. After
// the returned steps, recoloring the endpoint to `target` is valid.
std::vector<std::pair<int, int>> forbidding_path_prepare_steps(const ForbiddingPath& fp,
                                                               const std::vector<int>& cur,
                                                               bool u_side, int target);

struct ForbiddingPathReport {
    bool cond1 = false; // realized endpoint pairs are exactly the admissible ones
    bool cond2 = false; // single-endpoint transitions possible with the endpoint last
    std::vector<std::pair<int, int>> admissible_pairs;
};

// Certifies the two defining conditions by exhaustive enumeration of list
// colorings and reachability searches that freeze both endpoints. cond2
// additionally checks the endpoint itself can take its new color at the end.
ForbiddingPathReport check_forbidding_path(const ForbiddingPath& fp, int d, int k,
                                           const OracleBudget& budget = {});

} // namespace recolor
