#include "recolor/rst_reduction.hpp"

#include "recolor/errors.hpp"
#include "recolor/part_assignment.hpp"

#include <algorithm>
#include <string>

namespace recolor {

namespace {

const char kSetName[3] = {'A', 'B', 'C'};

} // namespace

RstToListArtifact rst_to_list(const STInstance& rst, int d) {
    if (d < 2)
        throw input_error("the list-coloring reduction requires d >= 2");
    STReport check = validate_st(rst);
    if (!check.well_formed)
        throw input_error("reduction input is malformed: " + check.violations.front());
    if (!check.restricted)
        throw input_error("reduction input is not restricted: " + check.violations.front());

    RstToListArtifact art;
    art.source = rst;
    art.d = d;
    int len = d % 2 == 1 ? d + 3 : d + 4;
    art.q = (len - 2) / 2;
    art.k = 3 + 3 * art.q;

    STIndex idx = STIndex::build(rst);
    int nt = static_cast<int>(rst.triangles.size());
    int ne = static_cast<int>(rst.token_edges.size());

    // The three shared ordered color sets, allocated above {1,2,3}.
    for (int s = 0; s < 3; ++s)
        for (int i = 0; i < art.q; ++i) {
            int code = 4 + s * art.q + i;
            art.set_colors[s].push_back(code);
            art.color_names[code] = std::string(1, kSetName[s]) + std::to_string(i + 1);
        }

    // Gadget vertices: triangles first, then token edges.
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    ListAssignment lists;
    art.triangle_vertex.resize(nt);
    art.edge_vertex.resize(ne);
    for (int i = 0; i < nt; ++i) {
        art.triangle_vertex[i] = static_cast<int>(labels.size());
        labels.push_back("t" + std::to_string(i));
        lists.lists.push_back({1, 2, 3});
    }
    for (int j = 0; j < ne; ++j) {
        art.edge_vertex[j] = static_cast<int>(labels.size());
        labels.push_back("e" + std::to_string(j));
        lists.lists.push_back({1, 2});
    }

    // Halves of the link-edge paths get their color sets from the shared
    // assignment; the path endpoints orient triangle side first, otherwise
    // lower gadget-vertex id first.
    PartTopology topology;
    topology.n_vertices = nt + ne;
    struct PendingPath {
        int u_vertex, v_vertex, a, b, link_index;
    };
    std::vector<PendingPath> pending;
    for (int j = 0; j < static_cast<int>(rst.link_edges.size()); ++j) {
        auto [x, y] = rst.link_edges[j];
        const GadgetRef& gx = idx.gadget_of[x];
        const GadgetRef& gy = idx.gadget_of[y];
        bool swap_ends = false;
        if (gx.kind == GadgetRef::Kind::token_edge && gy.kind == GadgetRef::Kind::triangle)
            swap_ends = true;
        if (gx.kind == gy.kind) {
            if (gx.kind == GadgetRef::Kind::triangle)
                throw internal_error("restricted instance has a triangle-triangle link edge");
            int vx = art.edge_vertex[gx.index];
            int vy = art.edge_vertex[gy.index];
            swap_ends = vx > vy;
        }
        int from = swap_ends ? y : x;
        int to = swap_ends ? x : y;
        const GadgetRef& gu = idx.gadget_of[from];
        const GadgetRef& gv = idx.gadget_of[to];
        int u_vertex = gu.kind == GadgetRef::Kind::triangle ? art.triangle_vertex[gu.index]
                                                            : art.edge_vertex[gu.index];
        int v_vertex = gv.kind == GadgetRef::Kind::triangle ? art.triangle_vertex[gv.index]
                                                            : art.edge_vertex[gv.index];
        pending.push_back({u_vertex, v_vertex, gu.position, gv.position, j});
        topology.paths.emplace_back(u_vertex, v_vertex);
    }
    PartAssignment parts = assign_parts(topology);

    for (std::size_t p = 0; p < pending.size(); ++p) {
        const PendingPath& pp = pending[p];
        RstPathInfo info;
        info.link_index = pp.link_index;
        info.u_vertex = pp.u_vertex;
        info.v_vertex = pp.v_vertex;
        info.a = pp.a;
        info.b = pp.b;
        info.cl_set = parts.sets[p][0];
        info.far_set = parts.sets[p][1];

        // C runs through the closer half's set and back down the farther
        // half's, matching the interior list layout of both halves.
        std::vector<int> colors = art.set_colors[info.cl_set];
        const auto& far = art.set_colors[info.far_set];
        for (int i = art.q - 1; i >= 0; --i)
            colors.push_back(far[i]);
        info.shape = build_forbidding_path(d, pp.a, pp.b, lists.lists[pp.u_vertex],
                                           lists.lists[pp.v_vertex], colors);

        info.vertices.resize(info.shape.len + 1);
        info.vertices.front() = pp.u_vertex;
        info.vertices.back() = pp.v_vertex;
        for (int i = 1; i < info.shape.len; ++i) {
            info.vertices[i] = static_cast<int>(labels.size());
            labels.push_back("p" + std::to_string(pp.link_index) + ".w" + std::to_string(i));
            lists.lists.push_back(info.shape.lists.lists[i]);
        }
        for (int i = 0; i < info.shape.len; ++i)
            edges.emplace_back(info.vertices[i], info.vertices[i + 1]);
        art.paths.push_back(std::move(info));
    }

    Graph graph = build_graph(static_cast<int>(labels.size()), edges, labels);

    auto make_endpoint_coloring = [&](const TokenConfig& cfg) {
        Coloring col;
        col.k = art.k;
        col.color.assign(graph.n, 0);
        for (int i = 0; i < nt; ++i)
            for (int p = 0; p < 3; ++p)
                if (cfg.has(rst.triangles[i][p]))
                    col.color[art.triangle_vertex[i]] = p + 1;
        for (int j = 0; j < ne; ++j)
            for (int p = 0; p < 2; ++p)
                if (cfg.has(rst.token_edges[j][p]))
                    col.color[art.edge_vertex[j]] = p + 1;
        for (const RstPathInfo& info : art.paths) {
            auto interior = forbidding_path_completion(info.shape, col.color[info.u_vertex],
                                                       col.color[info.v_vertex]);
            for (int i = 1; i < info.shape.len; ++i)
                col.color[info.vertices[i]] = interior[i];
        }
        return col;
    };

    Coloring alpha = make_endpoint_coloring(rst.t_a);
    Coloring beta = make_endpoint_coloring(rst.t_b);
    art.out = make_instance(std::move(graph), d, art.k, std::move(alpha), std::move(beta),
                            std::move(lists));
    return art;
}

namespace {

// Paths incident to each gadget vertex, in path order.
std::vector<std::vector<int>> paths_by_vertex(const RstToListArtifact& art) {
    std::vector<std::vector<int>> incident(art.out.graph.n);
    for (int p = 0; p < static_cast<int>(art.paths.size()); ++p) {
        incident[art.paths[p].u_vertex].push_back(p);
        incident[art.paths[p].v_vertex].push_back(p);
    }
    return incident;
}

} // namespace

ReconfigSequence lift_ts_sequence(const RstToListArtifact& art, const TSMoveSequence& moves) {
    STIndex idx = STIndex::build(art.source);
    auto incident = paths_by_vertex(art);

    ReconfigSequence seq;
    Coloring cur = art.out.alpha;
    TokenConfig cfg = art.source.t_a;
    for (std::size_t m = 0; m < moves.moves.size(); ++m) {
        auto [from, to] = moves.moves[m];
        auto bad = [&](const std::string& why) {
            return input_error("move " + std::to_string(m) + " (" + std::to_string(from) + "->" +
                               std::to_string(to) + ") is invalid: " + why);
        };
        if (from < 0 || from >= art.source.graph.n || to < 0 || to >= art.source.graph.n)
            throw bad("vertex out of range");
        if (!cfg.has(from) || cfg.has(to))
            throw bad("token placement does not match");
        if (!art.source.graph.has_edge(from, to))
            throw bad("not an edge");
        for (int w : art.source.graph.adj[to])
            if (w != from && cfg.has(w))
                throw bad("destination is adjacent to another token");
        const GadgetRef& gf = idx.gadget_of[from];
        const GadgetRef& gt = idx.gadget_of[to];
        if (gf.kind != gt.kind || gf.index != gt.index)
            throw bad("slide leaves its gadget");

        int u = gf.kind == GadgetRef::Kind::triangle ? art.triangle_vertex[gf.index]
                                                     : art.edge_vertex[gf.index];
        int new_color = gt.position;
        for (int p : incident[u]) {
            const RstPathInfo& info = art.paths[p];
            bool u_side = info.u_vertex == u;
            std::vector<int> local(info.shape.len + 1);
            for (int i = 0; i <= info.shape.len; ++i)
                local[i] = cur.color[info.vertices[i]];
            for (auto [li, c] : forbidding_path_prepare_steps(info.shape, local, u_side,
                                                              new_color)) {
                int vertex = info.vertices[li];
                seq.steps.emplace_back(vertex, c);
                cur.color[vertex] = c;
            }
        }
        seq.steps.emplace_back(u, new_color);
        cur.color[u] = new_color;
        cfg = apply_move(cfg, from, to);
    }
    return seq;
}

TSMoveSequence project_recoloring_sequence(const RstToListArtifact& art,
                                           const ReconfigSequence& seq) {
    // Which gadget each output vertex represents; -1 marks path interiors.
    std::vector<int> triangle_at(art.out.graph.n, -1);
    std::vector<int> edge_at(art.out.graph.n, -1);
    for (int i = 0; i < static_cast<int>(art.triangle_vertex.size()); ++i)
        triangle_at[art.triangle_vertex[i]] = i;
    for (int j = 0; j < static_cast<int>(art.edge_vertex.size()); ++j)
        edge_at[art.edge_vertex[j]] = j;

    auto balls = distance_balls(art.out.graph, art.out.d);
    const ListAssignment& lists = *art.out.lists;
    Coloring cur = art.out.alpha;
    TSMoveSequence out;
    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
        auto [v, c] = seq.steps[i];
        auto bad = [&](const std::string& why) {
            return input_error("step " + std::to_string(i) + " is invalid: " + why);
        };
        if (v < 0 || v >= art.out.graph.n)
            throw bad("vertex out of range");
        if (c == cur.color[v])
            throw bad("recolors a vertex to its current color");
        if (!lists.allows(v, c))
            throw bad("color not in the vertex list");
        for (int u : balls[v])
            if (cur.color[u] == c)
                throw bad("color already used within distance " + std::to_string(art.out.d));
        int old = cur.color[v];
        cur.color[v] = c;
        if (triangle_at[v] >= 0) {
            const auto& tri = art.source.triangles[triangle_at[v]];
            out.moves.emplace_back(tri[old - 1], tri[c - 1]);
        } else if (edge_at[v] >= 0) {
            const auto& e = art.source.token_edges[edge_at[v]];
            out.moves.emplace_back(e[old - 1], e[c - 1]);
        }
    }
    return out;
}

} // namespace recolor
