#include "recolor/split_reduction.hpp"

#include "recolor/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace recolor {

SplitArtifact lcol_to_split(const Graph& g, int ell) {
    if (ell < 3)
        throw input_error("the split reduction requires ell >= 3");
    SplitArtifact art;
    art.source = g;
    art.ell = ell;
    art.clique_edge = g.edges();
    art.m = static_cast<int>(art.clique_edge.size());
    art.k = ell + art.m;

    int n = g.n;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels(n + art.m);
    for (int v = 0; v < n; ++v)
        labels[v] = g.label(v);
    for (int j = 0; j < art.m; ++j) {
        int w = n + j;
        labels[w] = "K" + std::to_string(j);
        edges.emplace_back(art.clique_edge[j].first, w);
        edges.emplace_back(art.clique_edge[j].second, w);
        for (int j2 = 0; j2 < j; ++j2)
            edges.emplace_back(n + j2, w);
    }
    art.out_graph = build_graph(n + art.m, edges, labels);
    return art;
}

SplitArtifact lcr_to_split(const Graph& g, const Coloring& alpha, const Coloring& beta, int ell) {
    for (const Coloring* col : {&alpha, &beta})
        if (!verify_coloring(g, 1, ell, *col).valid)
            throw input_error("endpoint colorings must be proper colorings with ell colors");
    SplitArtifact art = lcol_to_split(g, ell);
    auto extend = [&](const Coloring& base) {
        Coloring col;
        col.k = art.k;
        col.color = base.color;
        for (int j = 0; j < art.m; ++j)
            col.color.push_back(ell + 1 + j);
        return col;
    };
    art.out = make_instance(art.out_graph, 2, art.k, extend(alpha), extend(beta));
    return art;
}

ReconfigSequence lift_split_sequence(const SplitArtifact& art, const ReconfigSequence& seq) {
    if (!art.out)
        throw input_error("sequence lifting needs a reconfiguration artifact");
    // Replay against the source first so errors name the offending step.
    ReconfigInstance src = make_instance(
        art.source, 1, art.ell,
        Coloring{art.ell,
                 {art.out->alpha.color.begin(), art.out->alpha.color.begin() + art.source.n}},
        Coloring{art.ell,
                 {art.out->beta.color.begin(), art.out->beta.color.begin() + art.source.n}});
    SequenceReport report = verify_sequence(src, seq);
    if (!report.ok) {
        if (report.first_bad_step)
            throw input_error("source sequence is invalid at step " +
                              std::to_string(*report.first_bad_step));
        throw input_error("source sequence does not end at beta");
    }
    return seq;
}

ReconfigSequence project_split_sequence(const SplitArtifact& art, const ReconfigSequence& seq,
                                        ProjectionTrace* trace) {
    if (!art.out)
        throw input_error("sequence projection needs a reconfiguration artifact");
    const ReconfigInstance& inst = *art.out;
    int n = art.source.n;
    auto in_clique_palette = [&](int c) { return c > art.ell; };

    auto balls = distance_balls(inst.graph, inst.d);
    std::vector<int> cur = inst.alpha.color;
    std::vector<int> projected(cur.begin(), cur.begin() + n);

    // Colors of the source palette currently parked on the clique.
    std::set<int> borrowed_by_clique;
    // Occurrences of each clique-palette color on the independent side.
    std::map<int, int> parked_count;
    // Injective substitution: clique-palette color on S -> borrowed source color.
    std::map<int, int> subst;

    ReconfigSequence out;
    auto emit = [&](int v, int c) {
        if (projected[v] == c)
            return; // a redundant step is represented by omission
        out.steps.emplace_back(v, c);
        projected[v] = c;
    };
    // Isolated source vertices are unconstrained on both sides; they bypass
    // the substitution entirely and just take their final color when they
    // return to the source palette.
    auto isolated = [&](int v) { return art.source.adj[v].empty(); };
    auto fresh_substitute = [&]() {
        std::set<int> used;
        for (const auto& [from, to] : subst)
            used.insert(to);
        for (int c : borrowed_by_clique)
            if (!used.count(c))
                return c;
        throw internal_error("no free borrowed color for the substitution");
    };
    auto check_invariants = [&](std::size_t step) {
        if (borrowed_by_clique.size() < parked_count.size())
            throw internal_error("substitution invariant broken at step " + std::to_string(step));
        std::set<int> values;
        for (const auto& [from, to] : subst) {
            if (!values.insert(to).second || !borrowed_by_clique.count(to))
                throw internal_error("substitution not injective into the borrowed colors at step " +
                                     std::to_string(step));
        }
        if (trace) {
            trace->a_sizes.push_back(static_cast<int>(borrowed_by_clique.size()));
            trace->b_sizes.push_back(static_cast<int>(parked_count.size()));
        }
    };

    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
        auto [v, q] = seq.steps[i];
        auto bad = [&](const std::string& why) {
            return input_error("step " + std::to_string(i) + " is invalid: " + why);
        };
        if (v < 0 || v >= inst.graph.n)
            throw bad("vertex out of range");
        if (q < 1 || q > inst.k)
            throw bad("color out of range");
        int p = cur[v];
        if (p == q)
            throw bad("recolors a vertex to its current color");
        for (int u : balls[v])
            if (cur[u] == q)
                throw bad("color already used within distance 2");
        cur[v] = q;

        if (v >= n) {
            // Clique step: nothing to emit unless it takes back a borrowed
            // color that the substitution still relies on.
            if (!in_clique_palette(q))
                borrowed_by_clique.insert(q);
            if (!in_clique_palette(p)) {
                borrowed_by_clique.erase(p);
                int parked = -1;
                for (const auto& [from, to] : subst)
                    if (to == p)
                        parked = from;
                if (parked >= 0) {
                    int x = fresh_substitute();
                    subst[parked] = x;
                    for (int y = 0; y < n; ++y)
                        if (cur[y] == parked && !isolated(y))
                            emit(y, x);
                }
            }
            check_invariants(i);
            continue;
        }

        // Independent-side step.
        if (isolated(v)) {
            if (!in_clique_palette(q))
                emit(v, q);
            check_invariants(i);
            continue;
        }
        if (in_clique_palette(q)) {
            if (!subst.count(q))
                subst[q] = fresh_substitute();
            ++parked_count[q];
            emit(v, subst[q]);
        } else {
            emit(v, q);
        }
        if (in_clique_palette(p)) {
            auto it = parked_count.find(p);
            if (--it->second == 0) {
                parked_count.erase(it);
                subst.erase(p);
            }
        }
        check_invariants(i);
    }

    if (cur != inst.beta.color)
        throw input_error("sequence does not end at the target coloring");
    return out;
}

} // namespace recolor
