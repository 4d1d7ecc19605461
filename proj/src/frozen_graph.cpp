#include "recolor/frozen_graph.hpp"

#include "recolor/errors.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

namespace recolor {

namespace {

// Incremental builder shared by the standalone gadget and the composed
// constructions. Vertices are appended with a color and label and edges
// collected for one final build_graph call.
struct PiecePlan {
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels;
    std::vector<int> colors;

    int add(int color, std::string label) {
        colors.push_back(color);
        labels.push_back(std::move(label));
        return static_cast<int>(colors.size()) - 1;
    }
    void join(int u, int v) { edges.emplace_back(u, v); }
};

struct GadgetParams {
    int d;
    int k;
    int hub_code;
    int star_hub_code;
    // family_code(family, j) for j in 1..ceil(d/2)-1
    std::function<int(int, int)> family_code;
    std::function<std::string(int, int)> family_code_name;
};

// Appends one gadget into the plan and returns where everything landed. The
// center path carries the gadget's own family; every other family hangs off
// the hub on its own branch (plus a star carrier when d is odd, since the
// branch is one vertex shorter than the center path). The attachment for the
// guarded vertex is the center path's far endpoint; the anchor fan hangs off
// the lowest foreign branch.
GadgetLayout append_gadget(PiecePlan& plan, const GadgetParams& params, int own_family,
                           const std::vector<int>& allowed,
                           const std::vector<int>& other_families, const std::string& prefix) {
    int t_own = (params.d + 1) / 2 - 1;   // center path interior length
    int t_branch = params.d / 2 - 1;      // foreign branch interior length
    bool odd = params.d % 2 == 1;

    GadgetLayout layout;
    layout.c_center = plan.add(params.hub_code, prefix + ".c");
    int attach = layout.c_center;
    for (int j = 1; j <= t_own; ++j) {
        int v = plan.add(params.family_code(own_family, j), prefix + ".o" + std::to_string(j));
        plan.join(attach, v);
        layout.own_path.push_back(v);
        attach = v;
    }
    layout.c_attach = attach;

    for (int fam : other_families) {
        std::vector<int> branch;
        int tip = layout.c_center;
        for (int j = 1; j <= t_branch; ++j) {
            int code = odd ? params.family_code(fam, j + 1) : params.family_code(fam, j);
            int v = plan.add(code, prefix + ".f" + std::to_string(fam) + "." + std::to_string(j));
            plan.join(tip, v);
            branch.push_back(v);
            tip = v;
        }
        layout.branch_paths.push_back(branch);
        layout.branch_family.push_back(fam);
        if (odd) {
            int star = plan.add(params.family_code(fam, 1),
                                prefix + ".s" + std::to_string(fam));
            plan.join(layout.c_center, star);
            layout.branch_stars.push_back(star);
        } else {
            layout.branch_stars.push_back(-1);
        }
    }

    int fan_base = layout.branch_paths[0].empty() ? layout.c_center : layout.branch_paths[0].back();
    layout.c_star = plan.add(params.star_hub_code, prefix + ".cs");
    plan.join(fan_base, layout.c_star);
    for (int i = 1; i <= params.k; ++i) {
        int w = plan.add(i, prefix + ".w" + std::to_string(i));
        layout.anchors.push_back(w);
        bool in_list = std::binary_search(allowed.begin(), allowed.end(), i);
        plan.join(in_list ? layout.c_star : fan_base, w);
    }
    return layout;
}

} // namespace

FrozenGadget build_frozen_graph(int v, int d, int k, const std::vector<int>& l_v,
                                const std::vector<int>& peers) {
    if (d < 2)
        throw input_error("frozen gadgets require d >= 2");
    if (l_v.empty())
        throw input_error("the allowed color set must be non-empty");
    for (int c : l_v)
        if (c < 1 || c > k)
            throw input_error("allowed color " + std::to_string(c) + " outside 1.." +
                              std::to_string(k));
    if (peers.empty())
        throw input_error("at least one peer vertex is required");

    std::vector<int> members(peers);
    members.push_back(v);
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end())
        throw input_error("duplicate vertex among peers");
    int n = static_cast<int>(members.size());
    int t = (d + 1) / 2 - 1;

    auto family_of_vertex = [&](int x) {
        return static_cast<int>(std::lower_bound(members.begin(), members.end(), x) -
                                members.begin());
    };

    FrozenGadget gadget;
    gadget.d = d;
    gadget.k = k;
    gadget.k_prime = n * t + 2 + k;

    GadgetParams params;
    params.d = d;
    params.k = k;
    params.hub_code = k + 1;
    params.star_hub_code = k + 1 + n * t + 1;
    params.family_code = [&](int fam, int j) { return k + 1 + fam * t + j; };

    gadget.color_names[params.hub_code] = "C0";
    gadget.color_names[params.star_hub_code] = "C1";
    for (int fam = 0; fam < n; ++fam)
        for (int j = 1; j <= t; ++j)
            gadget.color_names[params.family_code(fam, j)] =
                "C_" + std::to_string(members[fam]) + "," + std::to_string(j);

    std::vector<int> sorted_allowed(l_v);
    std::sort(sorted_allowed.begin(), sorted_allowed.end());
    std::vector<int> other_families;
    for (int peer : peers)
        other_families.push_back(family_of_vertex(peer));
    std::sort(other_families.begin(), other_families.end());

    PiecePlan plan;
    GadgetLayout layout = append_gadget(plan, params, family_of_vertex(v), sorted_allowed,
                                        other_families, "F" + std::to_string(v));

    gadget.graph = build_graph(static_cast<int>(plan.colors.size()), plan.edges, plan.labels);
    gadget.coloring.k = gadget.k_prime;
    gadget.coloring.color = plan.colors;
    gadget.c_center = layout.c_center;
    gadget.c_attach = layout.c_attach;
    gadget.c_star = layout.c_star;
    gadget.own_path = layout.own_path;
    gadget.peer_paths = layout.branch_paths;
    gadget.peer_stars = layout.branch_stars;
    gadget.anchors = layout.anchors;
    for (const auto& branch : gadget.peer_paths)
        gadget.peer_endpoints.push_back(branch.empty() ? gadget.c_center : branch.back());
    return gadget;
}

namespace {

ListToPlainArtifact build_plain_core(const ReconfigInstance& inst, std::vector<int> family_of,
                                     int n_families,
                                     const std::function<std::string(int)>& family_name) {
    if (!inst.lists)
        throw input_error("the plain reduction requires a list assignment");
    if (inst.graph.n < 2)
        throw input_error("the plain reduction requires at least two vertices");
    if (!structural_checks(inst.graph).connected)
        throw input_error("the plain reduction requires a connected graph");
    if (n_families < 2)
        throw internal_error("gadget sharing needs at least two color families");

    int n = inst.graph.n;
    int d = inst.d;
    int k = inst.k;
    int t = (d + 1) / 2 - 1;

    ListToPlainArtifact art;
    art.d = d;
    art.k = k;
    art.k_prime = k + 2 + n_families * t;
    art.n_source = n;
    art.family_of = family_of;
    art.n_families = n_families;

    GadgetParams params;
    params.d = d;
    params.k = k;
    params.hub_code = k + 1;
    params.family_code = [k, t](int fam, int j) { return k + 1 + fam * t + j; };
    params.star_hub_code = k + 1 + n_families * t + 1;

    art.color_names[params.hub_code] = "C0";
    art.color_names[params.star_hub_code] = "C1";
    for (int fam = 0; fam < n_families; ++fam)
        for (int j = 1; j <= t; ++j)
            art.color_names[params.family_code(fam, j)] =
                family_name(fam) + "." + std::to_string(j);

    PiecePlan plan;
    for (int v = 0; v < n; ++v)
        plan.add(0, inst.graph.labels.empty() ? "" : inst.graph.labels[v]);
    for (auto [u, v] : inst.graph.edges())
        plan.join(u, v);

    for (int v = 0; v < n; ++v) {
        std::vector<int> others;
        for (int fam = 0; fam < n_families; ++fam)
            if (fam != family_of[v])
                others.push_back(fam);
        GadgetLayout layout = append_gadget(plan, params, family_of[v], inst.lists->lists[v],
                                            others, "F" + std::to_string(v));
        plan.join(v, layout.c_attach);
        art.gadgets.push_back(std::move(layout));
    }

    Graph graph = build_graph(static_cast<int>(plan.colors.size()), plan.edges, plan.labels);
    auto extend = [&](const Coloring& base) {
        Coloring col;
        col.k = art.k_prime;
        col.color = plan.colors;
        for (int v = 0; v < n; ++v)
            col.color[v] = base.color[v];
        return col;
    };
    art.out = make_instance(std::move(graph), d, art.k_prime, extend(inst.alpha),
                            extend(inst.beta));
    return art;
}

} // namespace

ListToPlainArtifact list_to_plain(const ReconfigInstance& inst) {
    std::vector<int> identity(inst.graph.n);
    for (int v = 0; v < inst.graph.n; ++v)
        identity[v] = v;
    auto art = build_plain_core(inst, identity, inst.graph.n,
                                [](int fam) { return "C_" + std::to_string(fam); });
    return art;
}

ListToPlainArtifact list_to_plain_from(const RstToListArtifact& rst) {
    ListToPlainArtifact art = list_to_plain(rst.out);

    // Palette keys: gadget vertices share one class; a path interior is keyed
    // by its half's color set and its depth within that half. The middle
    // vertex counts toward the farther half with an index of its own, so all
    // keys on one path differ and keys meeting through a shared endpoint
    // differ either in set (adjacent halves) or in index (far-half depths
    // cannot add up short enough).
    std::vector<std::pair<int, int>> keys(rst.out.graph.n, {3, 1});
    for (const RstPathInfo& info : rst.paths) {
        int len = info.shape.len;
        int q = info.shape.q;
        for (int i = 1; i < len; ++i) {
            std::pair<int, int> key;
            if (i <= q)
                key = {info.cl_set, i};
            else if (i == q + 1)
                key = {info.far_set, q + 1};
            else
                key = {info.far_set, len - i};
            keys[info.vertices[i]] = key;
        }
    }
    art.palette_provenance = std::move(keys);
    return art;
}

ListToPlainArtifact reduce_palette(const ListToPlainArtifact& art) {
    if (!art.palette_provenance)
        throw input_error("palette reduction needs an artifact from the token-sliding pipeline");
    const auto& keys = *art.palette_provenance;

    // Recover the source list instance from the composed one: its vertices
    // are the first n_source ids of the output graph.
    const ReconfigInstance& big = art.out;
    int n = art.n_source;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : big.graph.edges())
        if (u < n && v < n)
            edges.emplace_back(u, v);
    std::vector<std::string> labels;
    if (!big.graph.labels.empty())
        labels.assign(big.graph.labels.begin(), big.graph.labels.begin() + n);
    Graph src_graph = build_graph(n, edges, labels);

    Coloring alpha{art.k, std::vector<int>(big.alpha.color.begin(), big.alpha.color.begin() + n)};
    Coloring beta{art.k, std::vector<int>(big.beta.color.begin(), big.beta.color.begin() + n)};

    // The list instance is not stored in the artifact; the gadget anchors
    // remember it. Anchor i hangs off the star hub exactly when color i is
    // allowed.
    ListAssignment lists;
    lists.lists.resize(n);
    for (int v = 0; v < n; ++v) {
        const GadgetLayout& layout = art.gadgets[v];
        for (int i = 1; i <= art.k; ++i) {
            int w = layout.anchors[i - 1];
            if (big.graph.has_edge(layout.c_star, w))
                lists.lists[v].push_back(i);
        }
    }
    ReconfigInstance src = make_instance(std::move(src_graph), art.d, art.k, std::move(alpha),
                                         std::move(beta), std::move(lists));

    // Families in order of first appearance over the vertex ids.
    std::map<std::pair<int, int>, int> family_id;
    std::vector<std::pair<int, int>> family_key;
    std::vector<int> family_of(n);
    for (int v = 0; v < n; ++v) {
        auto [it, inserted] = family_id.emplace(keys[v], static_cast<int>(family_key.size()));
        if (inserted)
            family_key.push_back(keys[v]);
        family_of[v] = it->second;
    }

    auto name = [&](int fam) {
        auto [set, index] = family_key[fam];
        if (set == 3)
            return std::string("D'");
        return std::string(1, "ABC"[set]) + "'" + std::to_string(index);
    };
    ListToPlainArtifact reduced = build_plain_core(src, family_of,
                                                   static_cast<int>(family_key.size()), name);
    reduced.palette_provenance = keys;
    return reduced;
}

} // namespace recolor
