#pragma once

#include "recolor/coloring.hpp"
#include "recolor/graph.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace recolor {

// Output of the proper-coloring to distance-2 split-graph reduction. The
// independent side keeps the source vertex ids 0..n-1; clique vertex n+j
// stands for source edge j and is adjacent to that edge's endpoints.
struct SplitArtifact {
    Graph source;
    int ell = 0; // source palette size
    int m = 0;   // source edge count
    int k = 0;   // ell + m
    Graph out_graph;
    std::vector<std::pair<int, int>> clique_edge; // clique vertex n+j <- edge j
    // Set by lcr_to_split: the (2, k) reconfiguration instance whose clique
    // colors are fixed and identical in alpha and beta.
    std::optional<ReconfigInstance> out;
};

// Colorability form: ell-colorability of g is equivalent to
// (2, ell+m)-colorability of the output graph. Requires ell >= 3.
SplitArtifact lcol_to_split(const Graph& g, int ell);

// Reconfiguration form: alpha and beta must be proper ell-colorings of g;
// the output instance extends them with one fresh clique color per edge.
SplitArtifact lcr_to_split(const Graph& g, const Coloring& alpha, const Coloring& beta, int ell);

// Forwards a proper-coloring reconfiguration sequence to the split instance
// unchanged: clique colors never move. The input sequence is replayed on the
// source and must be valid from alpha to beta; violations raise input_error
// with the step index.
ReconfigSequence lift_split_sequence(const SplitArtifact& art, const ReconfigSequence& seq);

// Bookkeeping of the projection: the clique colors borrowed onto the
// independent side (domain of the substitution), the source colors parked on
// the clique, and the injective substitution between them.
struct ProjectionTrace {
    std::vector<int> a_sizes; // |{source colors on the clique}| after each step
    std::vector<int> b_sizes; // |{clique colors on the independent side}| after each step
};

// Translates a split-instance sequence back to a proper-coloring sequence on
// the source. Clique recolorings normally vanish; steps that park a source
// color on the independent side go through the substitution, which is kept
// injective with range inside the clique's borrowed source colors. The size
// inequality |A| >= |B| is asserted after every step.
ReconfigSequence project_split_sequence(const SplitArtifact& art, const ReconfigSequence& seq,
                                        ProjectionTrace* trace = nullptr);

} // namespace recolor
