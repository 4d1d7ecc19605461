#include "recolor/part_assignment.hpp"

#include "recolor/errors.hpp"

#include <algorithm>
#include <string>

namespace recolor {

namespace {

struct Incidence {
    int path;
    int end; // 0 = first endpoint, 1 = second
};

} // namespace

PartAssignment assign_parts(const PartTopology& topology) {
    std::vector<std::vector<Incidence>> at(topology.n_vertices);
    for (int p = 0; p < static_cast<int>(topology.paths.size()); ++p) {
        auto [u, v] = topology.paths[p];
        if (u < 0 || u >= topology.n_vertices || v < 0 || v >= topology.n_vertices || u == v)
            throw input_error("path " + std::to_string(p) + " has invalid endpoints");
        at[u].push_back({p, 0});
        at[v].push_back({p, 1});
    }
    for (int v = 0; v < topology.n_vertices; ++v)
        if (at[v].size() > 3)
            throw input_error("vertex " + std::to_string(v) + " has " +
                              std::to_string(at[v].size()) + " incident halves, more than 3");
    for (int p = 0; p < static_cast<int>(topology.paths.size()); ++p) {
        auto [u, v] = topology.paths[p];
        if (at[u].size() == 3 && at[v].size() == 3)
            throw input_error("path " + std::to_string(p) +
                              " joins two vertices with three incident halves each");
    }

    PartAssignment out;
    out.sets.assign(topology.paths.size(), {-1, -1});
    auto other_half = [&](const Incidence& inc) { return out.sets[inc.path][1 - inc.end]; };

    // Degree-3 vertices first: their three halves take the sets in incidence
    // order. No two such vertices share a path, so the opposite halves are
    // still free and no constraint can be violated.
    for (int v = 0; v < topology.n_vertices; ++v)
        if (at[v].size() == 3)
            for (int i = 0; i < 3; ++i)
                out.sets[at[v][i].path][at[v][i].end] = i;

    // Remaining vertices in ascending order. Opposite halves may already be
    // assigned; pick this vertex's halves to dodge them and each other.
    for (int v = 0; v < topology.n_vertices; ++v) {
        if (at[v].size() == 3 || at[v].empty())
            continue;
        if (at[v].size() == 1) {
            const Incidence& inc = at[v][0];
            if (out.sets[inc.path][inc.end] >= 0)
                continue;
            int avoid = other_half(inc);
            out.sets[inc.path][inc.end] = avoid == 0 ? 1 : 0;
            continue;
        }
        const Incidence& first = at[v][0];
        const Incidence& second = at[v][1];
        int far_a = other_half(first);
        int far_b = other_half(second);
        int set_a, set_b;
        if (far_a >= 0 && far_b >= 0 && far_a != far_b) {
            set_a = far_b;
            set_b = far_a;
        } else {
            // At most one distinct opposite set is fixed; hand out the other
            // two sets in incidence order.
            int taken = std::max(far_a, far_b);
            std::array<int, 2> remaining{};
            int found = 0;
            for (int s = 0; s < 3 && found < 2; ++s)
                if (s != taken)
                    remaining[found++] = s;
            set_a = remaining[0];
            set_b = remaining[1];
        }
        out.sets[first.path][first.end] = set_a;
        out.sets[second.path][second.end] = set_b;
    }
    return out;
}

} // namespace recolor
