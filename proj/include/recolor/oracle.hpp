#pragma once

#include "recolor/coloring.hpp"
#include "recolor/graph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace recolor {

// Caps for the exhaustive searches. Exceeding a cap raises budget_exceeded,
// which is a third outcome distinct from an unreachable/empty result.
struct OracleBudget {
    std::uint64_t max_states = 5'000'000;
    std::optional<std::int64_t> max_millis;
};

// Emits every valid (list) (d,k)-coloring of g exactly once, in lexicographic
// vertex-major order (ordered by the color of vertex 0, then vertex 1, ...).
// The callback may return false to stop early. Returns the number of
// colorings emitted. Budget counts emitted colorings.
std::uint64_t enumerate_colorings(const Graph& g, int d, int k, const ListAssignment* lists,
                                  const OracleBudget& budget,
                                  const std::function<bool(const Coloring&)>& emit);

// Convenience wrapper collecting the full enumeration.
std::vector<Coloring> collect_colorings(const Graph& g, int d, int k,
                                        const ListAssignment* lists = nullptr,
                                        const OracleBudget& budget = {});

struct ReachResult {
    bool reachable = false;
    // A minimum-length sequence from alpha to beta when reachable. Successors
    // are explored by ascending (vertex, color), so the result is
    // deterministic.
    ReconfigSequence sequence;
    std::uint64_t states_visited = 0;
};

// Breadth-first search over the space of valid (list) colorings, moving one
// vertex per step. Ground truth for every solver and reduction at desk scale.
ReachResult reconfig_reachable(const ReconfigInstance& inst, const OracleBudget& budget = {});

} // namespace recolor
