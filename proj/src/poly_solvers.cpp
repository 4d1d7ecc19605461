#include "recolor/poly_solvers.hpp"

#include "recolor/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>

namespace recolor {

namespace {

std::vector<std::vector<int>> components_by_min_vertex(const Graph& g) {
    std::vector<int> comp(g.n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] >= 0)
            continue;
        std::vector<int> members{s};
        comp[s] = static_cast<int>(out.size());
        for (std::size_t head = 0; head < members.size(); ++head)
            for (int w : g.adj[members[head]])
                if (comp[w] < 0) {
                    comp[w] = comp[s];
                    members.push_back(w);
                }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

} // namespace

SolveOutcome solve_diameter_le_d(const ReconfigInstance& inst) {
    if (inst.lists)
        throw input_error("this solver handles plain instances only");
    const Graph& g = inst.graph;

    SolveOutcome outcome;
    std::vector<int> cur = inst.alpha.color;
    for (const auto& members : components_by_min_vertex(g)) {
        for (int v : members) {
            auto dist = bfs_distances(g, v);
            for (int u : members)
                if (dist[u] > inst.d)
                    throw input_error("component containing vertex " +
                                      std::to_string(members.front()) + " has diameter above " +
                                      std::to_string(inst.d));
        }
        bool differs = false;
        for (int v : members)
            differs |= cur[v] != inst.beta.color[v];
        if (!differs)
            continue;
        if (static_cast<int>(members.size()) == inst.k) {
            outcome.yes = false;
            outcome.certificate = "component_size_equals_k";
            outcome.sequence.steps.clear();
            return outcome;
        }

        // Every vertex of the component holds a distinct color, so recoloring
        // with a color unused in the component is always valid. Assign target
        // colors while they are free; when stuck on a permutation, bounce the
        // lowest mismatched vertex to the lowest free color.
        std::set<int> used;
        for (int v : members)
            used.insert(cur[v]);
        while (true) {
            int pick = -1;
            bool done = true;
            for (int v : members) {
                if (cur[v] == inst.beta.color[v])
                    continue;
                done = false;
                if (!used.count(inst.beta.color[v])) {
                    pick = v;
                    break;
                }
            }
            if (done)
                break;
            if (pick >= 0) {
                used.erase(cur[pick]);
                cur[pick] = inst.beta.color[pick];
                used.insert(cur[pick]);
                outcome.sequence.steps.emplace_back(pick, cur[pick]);
                continue;
            }
            int bounce = -1;
            for (int v : members)
                if (cur[v] != inst.beta.color[v]) {
                    bounce = v;
                    break;
                }
            int extra = 1;
            while (used.count(extra))
                ++extra;
            used.erase(cur[bounce]);
            cur[bounce] = extra;
            used.insert(extra);
            outcome.sequence.steps.emplace_back(bounce, extra);
        }
    }
    outcome.yes = true;
    return outcome;
}

std::optional<SplitPartition> split_partition(const Graph& g) {
    int n = g.n;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
    });
    // Degree-sequence split test: the top m degrees must absorb all edges
    // among themselves plus everything below.
    int m = 0;
    for (int i = 0; i < n; ++i)
        if (g.degree(order[i]) >= i)
            m = i + 1;
    long long top = 0, rest = 0;
    for (int i = 0; i < n; ++i)
        (i < m ? top : rest) += g.degree(order[i]);
    if (top != static_cast<long long>(m) * (m - 1) + rest)
        return std::nullopt;

    // The clique has size m: vertices of degree >= m are forced into it and
    // the remainder comes from the degree m-1 boundary, where a small search
    // settles ties.
    std::vector<int> mandatory, ties;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) >= m)
            mandatory.push_back(v);
        else if (g.degree(v) == m - 1)
            ties.push_back(v);
    }
    if (static_cast<int>(mandatory.size()) > m)
        return std::nullopt;
    for (std::size_t i = 0; i < mandatory.size(); ++i)
        for (std::size_t j = i + 1; j < mandatory.size(); ++j)
            if (!g.has_edge(mandatory[i], mandatory[j]))
                return std::nullopt;
    int need = m - static_cast<int>(mandatory.size());
    std::vector<int> eligible;
    for (int v : ties) {
        bool ok = true;
        for (int u : mandatory)
            ok &= g.has_edge(u, v);
        if (ok)
            eligible.push_back(v);
    }

    std::vector<int> chosen;
    std::optional<SplitPartition> found;
    auto accept = [&]() {
        SplitPartition part;
        part.clique = mandatory;
        part.clique.insert(part.clique.end(), chosen.begin(), chosen.end());
        std::sort(part.clique.begin(), part.clique.end());
        std::vector<bool> in_clique(n, false);
        for (int v : part.clique)
            in_clique[v] = true;
        for (int v = 0; v < n; ++v)
            if (!in_clique[v])
                part.independent.push_back(v);
        for (std::size_t i = 0; i < part.independent.size(); ++i)
            for (std::size_t j = i + 1; j < part.independent.size(); ++j)
                if (g.has_edge(part.independent[i], part.independent[j]))
                    return false;
        found = std::move(part);
        return true;
    };
    std::function<bool(std::size_t)> extend = [&](std::size_t from) {
        if (static_cast<int>(chosen.size()) == need)
            return accept();
        for (std::size_t i = from; i < eligible.size(); ++i) {
            bool ok = true;
            for (int u : chosen)
                ok &= g.has_edge(u, eligible[i]);
            if (!ok)
                continue;
            chosen.push_back(eligible[i]);
            if (extend(i + 1))
                return true;
            chosen.pop_back();
        }
        return false;
    };
    extend(0);
    return found;
}

SolveOutcome solve_split(const ReconfigInstance& inst) {
    if (inst.lists)
        throw input_error("this solver handles plain instances only");
    if (inst.d < 3)
        throw input_error("the split solver covers d >= 3 only");
    if (!split_partition(inst.graph))
        throw input_error("the graph is not a split graph");
    return solve_diameter_le_d(inst);
}

BlockDecomposition path_blocks(const Graph& p, int d) {
    if (p.n < 1)
        throw input_error("empty graph is not a path");
    std::vector<int> ends;
    for (int v = 0; v < p.n; ++v) {
        if (p.degree(v) > 2)
            throw input_error("vertex " + std::to_string(v) + " has degree above 2");
        if (p.degree(v) <= 1)
            ends.push_back(v);
    }
    if (p.n == 1) {
        if (p.edge_count() != 0)
            throw input_error("not a path");
    } else if (ends.size() != 2 || p.edge_count() != p.n - 1 ||
               !structural_checks(p).connected) {
        throw input_error("not a path");
    }

    int start = p.n == 1 ? 0 : std::min(ends[0], ends[1]);
    std::vector<int> walk{start};
    int prev = -1, at = start;
    while (static_cast<int>(walk.size()) < p.n) {
        int next = -1;
        for (int w : p.adj[at])
            if (w != prev)
                next = w;
        prev = at;
        at = next;
        walk.push_back(at);
    }

    BlockDecomposition blocks;
    blocks.d = d;
    for (int i = 0; i < p.n; i += d + 1) {
        std::vector<int> block;
        for (int j = i; j < std::min(p.n, i + d + 1); ++j)
            block.push_back(walk[j]);
        blocks.blocks.push_back(std::move(block));
    }
    return blocks;
}

bool check_compact(const Graph& p, int d, const Coloring& col) {
    if (col.k != d + 1)
        throw input_error("compactness is defined for colorings with exactly d+1 colors");
    BlockDecomposition blocks = path_blocks(p, d);
    if (!verify_coloring(p, d, d + 1, col).valid)
        throw input_error("coloring is not valid at distance " + std::to_string(d));
    const auto& first = blocks.blocks.front();
    for (const auto& block : blocks.blocks)
        for (std::size_t j = 0; j < block.size(); ++j)
            if (col.color[block[j]] != col.color[first[j]])
                return false;
    return true;
}

NormalizeResult path_normalize(const Graph& p, int d, int k, const Coloring& col) {
    if (k < d + 2)
        throw input_error("normalization needs at least d+2 colors");
    if (!verify_coloring(p, d, k, col).valid)
        throw input_error("input coloring is invalid");
    BlockDecomposition blocks = path_blocks(p, d);

    NormalizeResult result;
    result.final = col;
    auto& cur = result.final.color;
    int nb = static_cast<int>(blocks.blocks.size());
    for (int i = 1; i < nb; ++i)
        for (int j = 0; j < static_cast<int>(blocks.blocks[i].size()); ++j) {
            int color = cur[blocks.blocks[i][j]];
            for (int b = i - 1; b >= 0; --b) {
                int v = blocks.blocks[b][j];
                if (cur[v] == color)
                    continue;
                cur[v] = color;
                result.sequence.steps.emplace_back(v, color);
            }
        }
    return result;
}

namespace {

// Reverses a replayable sequence: each step is undone by restoring the color
// its vertex held just before the step was applied.
ReconfigSequence reverse_sequence(const Coloring& start, const ReconfigSequence& seq) {
    std::vector<int> cur = start.color;
    std::vector<std::pair<int, int>> undo;
    for (auto [v, c] : seq.steps) {
        undo.emplace_back(v, cur[v]);
        cur[v] = c;
    }
    std::reverse(undo.begin(), undo.end());
    return ReconfigSequence{std::move(undo)};
}

} // namespace

SolveOutcome solve_path(const ReconfigInstance& inst) {
    if (inst.lists)
        throw input_error("this solver handles plain instances only");
    BlockDecomposition blocks = path_blocks(inst.graph, inst.d);

    SolveOutcome outcome;
    if (inst.alpha.color == inst.beta.color) {
        outcome.yes = true;
        return outcome;
    }
    if (inst.graph.n <= inst.d + 1)
        return solve_diameter_le_d(inst);
    if (inst.k == inst.d + 1) {
        outcome.yes = false;
        outcome.certificate = "palette_equals_d_plus_1";
        return outcome;
    }

    NormalizeResult na = path_normalize(inst.graph, inst.d, inst.k, inst.alpha);
    NormalizeResult nb = path_normalize(inst.graph, inst.d, inst.k, inst.beta);

    // Bridge the two block-periodic colorings by running the small-diameter
    // procedure on the first block, except every recoloring is replicated
    // into the matching position of every other block, nearest first.
    ReconfigSequence bridge;
    const auto& first = blocks.blocks.front();
    std::vector<int> cur = na.final.color;
    const std::vector<int>& target = nb.final.color;
    std::set<int> used;
    for (int c : cur)
        used.insert(c);
    auto recolor_column = [&](std::size_t j, int color) {
        for (const auto& block : blocks.blocks)
            if (j < block.size()) {
                cur[block[j]] = color;
                bridge.steps.emplace_back(block[j], color);
            }
    };
    while (true) {
        int pick = -1;
        std::size_t pick_pos = 0;
        bool done = true;
        for (std::size_t j = 0; j < first.size(); ++j) {
            int v = first[j];
            if (cur[v] == target[v])
                continue;
            done = false;
            if (!used.count(target[v]) && (pick < 0 || v < pick)) {
                pick = v;
                pick_pos = j;
            }
        }
        if (done)
            break;
        if (pick >= 0) {
            used.erase(cur[pick]);
            used.insert(target[pick]);
            recolor_column(pick_pos, target[pick]);
            continue;
        }
        int bounce = -1;
        std::size_t bounce_pos = 0;
        for (std::size_t j = 0; j < first.size(); ++j)
            if (cur[first[j]] != target[first[j]] && (bounce < 0 || first[j] < bounce)) {
                bounce = first[j];
                bounce_pos = j;
            }
        int extra = 1;
        while (used.count(extra))
            ++extra;
        used.erase(cur[bounce]);
        used.insert(extra);
        recolor_column(bounce_pos, extra);
    }

    outcome.yes = true;
    outcome.sequence = na.sequence;
    outcome.sequence.steps.insert(outcome.sequence.steps.end(), bridge.steps.begin(),
                                  bridge.steps.end());
    ReconfigSequence back = reverse_sequence(inst.beta, nb.sequence);
    outcome.sequence.steps.insert(outcome.sequence.steps.end(), back.steps.begin(),
                                  back.steps.end());
    return outcome;
}

} // namespace recolor
