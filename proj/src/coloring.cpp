#include "recolor/coloring.hpp"

#include "recolor/errors.hpp"

#include <algorithm>
#include <string>

namespace recolor {

bool ListAssignment::allows(int v, int c) const {
    const auto& l = lists[v];
    return std::binary_search(l.begin(), l.end(), c);
}

namespace {

void check_inputs(const Graph& g, int d, int k, const Coloring& col,
                  const ListAssignment* lists) {
    if (d < 1)
        throw input_error("distance bound must be >= 1");
    if (k < 1)
        throw input_error("palette size must be >= 1");
    if (static_cast<int>(col.color.size()) != g.n)
        throw input_error("coloring does not cover every vertex");
    if (col.k != k)
        throw input_error("coloring palette size " + std::to_string(col.k) +
                          " does not match k=" + std::to_string(k));
    for (int v = 0; v < g.n; ++v)
        if (col.color[v] < 1 || col.color[v] > k)
            throw input_error("vertex " + std::to_string(v) + " has color " +
                              std::to_string(col.color[v]) + " outside 1.." + std::to_string(k));
    if (lists) {
        if (static_cast<int>(lists->lists.size()) != g.n)
            throw input_error("list assignment does not cover every vertex");
        for (int v = 0; v < g.n; ++v) {
            if (lists->lists[v].empty())
                throw input_error("empty color list at vertex " + std::to_string(v));
            for (int c : lists->lists[v])
                if (c < 1 || c > k)
                    throw input_error("list color " + std::to_string(c) + " at vertex " +
                                      std::to_string(v) + " outside 1.." + std::to_string(k));
        }
    }
}

} // namespace

VerifyReport verify_coloring(const Graph& g, int d, int k, const Coloring& col,
                             const ListAssignment* lists) {
    check_inputs(g, d, k, col, lists);
    VerifyReport report;
    for (int v = 0; v < g.n; ++v)
        for (auto [u, dist] : neighborhood_within(g, v, d))
            if (u > v && col.color[u] == col.color[v])
                report.conflicts.emplace_back(v, u);
    std::sort(report.conflicts.begin(), report.conflicts.end());
    if (lists)
        for (int v = 0; v < g.n; ++v)
            if (!lists->allows(v, col.color[v]))
                report.list_violations.emplace_back(v, col.color[v]);
    report.valid = report.conflicts.empty() && report.list_violations.empty();
    return report;
}

bool is_valid_step(const Graph& g, int d, int k, const Coloring& current, int v, int c,
                   const ListAssignment* lists) {
    if (v < 0 || v >= g.n)
        throw input_error("step vertex " + std::to_string(v) + " out of range");
    if (c < 1 || c > k)
        throw input_error("step color " + std::to_string(c) + " outside 1.." + std::to_string(k));
    if (current.color[v] == c)
        return false;
    if (lists && !lists->allows(v, c))
        return false;
    for (auto [u, dist] : neighborhood_within(g, v, d))
        if (u != v && current.color[u] == c)
            return false;
    return true;
}

ReconfigInstance make_instance(Graph graph, int d, int k, Coloring alpha, Coloring beta,
                               std::optional<ListAssignment> lists) {
    if (k < d + 1)
        throw input_error("palette size k=" + std::to_string(k) + " must be at least d+1=" +
                          std::to_string(d + 1));
    const ListAssignment* lp = lists ? &*lists : nullptr;
    if (!verify_coloring(graph, d, k, alpha, lp).valid)
        throw input_error("alpha is not a valid coloring for this instance");
    if (!verify_coloring(graph, d, k, beta, lp).valid)
        throw input_error("beta is not a valid coloring for this instance");
    ReconfigInstance inst;
    inst.graph = std::move(graph);
    inst.d = d;
    inst.k = k;
    inst.alpha = std::move(alpha);
    inst.beta = std::move(beta);
    inst.lists = std::move(lists);
    return inst;
}

SequenceReport verify_sequence(const ReconfigInstance& inst, const ReconfigSequence& seq) {
    const ListAssignment* lists = inst.lists ? &*inst.lists : nullptr;
    auto balls = distance_balls(inst.graph, inst.d);
    Coloring cur = inst.alpha;
    SequenceReport report;
    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
        auto [v, c] = seq.steps[i];
        if (v < 0 || v >= inst.graph.n)
            throw input_error("step " + std::to_string(i) + " references unknown vertex " +
                              std::to_string(v));
        if (c < 1 || c > inst.k)
            throw input_error("step " + std::to_string(i) + " uses color " + std::to_string(c) +
                              " outside 1.." + std::to_string(inst.k));
        bool ok = cur.color[v] != c && (!lists || lists->allows(v, c));
        if (ok)
            for (int u : balls[v])
                if (cur.color[u] == c) {
                    ok = false;
                    break;
                }
        if (!ok) {
            report.first_bad_step = i;
            return report;
        }
        cur.color[v] = c;
    }
    if (cur.color != inst.beta.color) {
        report.final_mismatch = true;
        return report;
    }
    report.ok = true;
    return report;
}

Coloring apply_sequence(const Coloring& col, const ReconfigSequence& seq) {
    Coloring out = col;
    for (auto [v, c] : seq.steps)
        out.color[v] = c;
    return out;
}

} // namespace recolor
