#pragma once

#include "recolor/graph.hpp"
#include "recolor/sliding_tokens.hpp"

#include <cstdint>

namespace recolor {

// Deterministic instance generators: the same seed yields the same output on
// every platform.

Graph gen_path(int n);

// A clique of n_clique vertices, n_indep independent vertices, and each
// clique-independent pair joined with probability edge_prob.
Graph gen_split(int n_clique, int n_indep, double edge_prob, std::uint64_t seed);

// G(n, p) resampled until connected; gives up after a bounded number of
// attempts for parameters that make connectivity too unlikely.
Graph gen_random_connected(int n, double edge_prob, std::uint64_t seed);

// A random well-formed gadget instance: each triangle vertex gets exactly
// one link stub, token-edge vertices one or two, and stubs are matched at
// random avoiding same-gadget pairs and duplicate edges. Token placements
// are sampled until independent. Bounded retries; infeasible shapes raise
// input_error.
STInstance gen_st(int n_triangles, int n_token_edges, std::uint64_t seed);

} // namespace recolor
