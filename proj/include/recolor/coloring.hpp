#pragma once

#include "recolor/graph.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace recolor {

// A total assignment of colors 1..k to the vertices of some graph.
struct Coloring {
    int k = 0;
    std::vector<int> color; // indexed by vertex id, values in 1..k

    bool operator==(const Coloring&) const = default;
};

// Per-vertex allowed-color sets. Lists are sorted, non-empty, and subsets of
// the instance palette.
struct ListAssignment {
    std::vector<std::vector<int>> lists;

    bool allows(int v, int c) const;
};

struct VerifyReport {
    bool valid = false;
    // Same-color pairs within distance d, as (min id, max id), sorted.
    std::vector<std::pair<int, int>> conflicts;
    // (vertex, color) entries where the color is outside the vertex's list.
    std::vector<std::pair<int, int>> list_violations;
};

// Checks that no two distinct vertices within distance d share a color, and,
// when lists are given, that every vertex holds a color from its list.
// Violations are enumerated exhaustively in sorted order. A color outside
// 1..k is an input error, not a violation.
VerifyReport verify_coloring(const Graph& g, int d, int k, const Coloring& col,
                             const ListAssignment* lists = nullptr);

// True iff recoloring v to c is a valid single step from `current`, i.e.
// c differs from the current color, c is in v's list when lists are given,
// and no vertex within distance d of v holds c. Assumes `current` is valid.
bool is_valid_step(const Graph& g, int d, int k, const Coloring& current, int v, int c,
                   const ListAssignment* lists = nullptr);

// Single-vertex recoloring steps, applied in order.
struct ReconfigSequence {
    std::vector<std::pair<int, int>> steps; // (vertex, new color)

    bool operator==(const ReconfigSequence&) const = default;
    std::size_t size() const { return steps.size(); }
    bool empty() const { return steps.empty(); }
};

struct ReconfigInstance {
    Graph graph;
    int d = 1;
    int k = 0;
    Coloring alpha;
    Coloring beta;
    std::optional<ListAssignment> lists;
};

// Validates and assembles an instance: d >= 1, k >= d+1, alpha and beta
// total and valid (list) colorings. Throws input_error otherwise.
ReconfigInstance make_instance(Graph graph, int d, int k, Coloring alpha, Coloring beta,
                               std::optional<ListAssignment> lists = std::nullopt);

struct SequenceReport {
    bool ok = false;
    // Index of the first invalid step, when one exists. Unset when the steps
    // all apply but the final coloring is not beta.
    std::optional<std::size_t> first_bad_step;
    bool final_mismatch = false;
};

// Replays seq from inst.alpha. Every step must change its vertex's color and
// keep the coloring valid; the replay must end exactly at inst.beta. A step
// naming an unknown vertex is an input error.
SequenceReport verify_sequence(const ReconfigInstance& inst, const ReconfigSequence& seq);

// Applies seq to col without validity checking. Used by sequence translators
// that track intermediate colorings.
Coloring apply_sequence(const Coloring& col, const ReconfigSequence& seq);

} // namespace recolor
