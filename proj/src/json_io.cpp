#include "recolor/json_io.hpp"

#include "recolor/errors.hpp"

#include <algorithm>
#include <fstream>
#include <map>

namespace recolor {

namespace {

std::map<std::string, int> label_index(const Graph& g) {
    std::map<std::string, int> index;
    for (int v = 0; v < g.n; ++v)
        if (!index.emplace(g.label(v), v).second)
            throw input_error("duplicate vertex label '" + g.label(v) + "'");
    return index;
}

int vertex_by_label(const std::map<std::string, int>& index, const std::string& label) {
    auto it = index.find(label);
    if (it == index.end())
        throw input_error("unknown vertex label '" + label + "'");
    return it->second;
}

} // namespace

Json graph_to_json(const Graph& g) {
    Json j;
    j["n"] = g.n;
    j["edges"] = Json::array();
    for (auto [u, v] : g.edges())
        j["edges"].push_back({u, v});
    bool any_label = false;
    for (const auto& l : g.labels)
        any_label |= !l.empty();
    if (any_label) {
        Json labels = Json::object();
        for (int v = 0; v < g.n; ++v)
            if (!g.labels[v].empty())
                labels[std::to_string(v)] = g.labels[v];
        j["labels"] = std::move(labels);
    }
    return j;
}

Graph graph_from_json(const Json& j) {
    if (!j.contains("n") || !j.contains("edges"))
        throw input_error("graph JSON needs fields 'n' and 'edges'");
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw input_error("graph edge entries must be pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        labels.assign(n, "");
        for (const auto& [key, value] : j.at("labels").items()) {
            int v = std::stoi(key);
            if (v < 0 || v >= n)
                throw input_error("label key '" + key + "' is not a vertex id");
            labels[v] = value.get<std::string>();
        }
    }
    return build_graph(n, edges, std::move(labels));
}

Json coloring_to_json(const Graph& g, const Coloring& col) {
    Json j;
    j["k"] = col.k;
    Json colors = Json::object();
    for (int v = 0; v < g.n; ++v)
        colors[g.label(v)] = col.color[v];
    j["colors"] = std::move(colors);
    return j;
}

Coloring coloring_from_json(const Graph& g, const Json& j) {
    if (!j.contains("k") || !j.contains("colors"))
        throw input_error("coloring JSON needs fields 'k' and 'colors'");
    Coloring col;
    col.k = j.at("k").get<int>();
    col.color.assign(g.n, 0);
    auto index = label_index(g);
    std::vector<bool> seen(g.n, false);
    for (const auto& [key, value] : j.at("colors").items()) {
        int v = vertex_by_label(index, key);
        col.color[v] = value.get<int>();
        seen[v] = true;
    }
    for (int v = 0; v < g.n; ++v)
        if (!seen[v])
            throw input_error("coloring is missing vertex '" + g.label(v) + "'");
    return col;
}

Json lists_to_json(const Graph& g, const ListAssignment& lists) {
    Json inner = Json::object();
    for (int v = 0; v < g.n; ++v)
        inner[g.label(v)] = lists.lists[v];
    Json j;
    j["lists"] = std::move(inner);
    return j;
}

ListAssignment lists_from_json(const Graph& g, const Json& j) {
    if (!j.contains("lists"))
        throw input_error("list JSON needs field 'lists'");
    ListAssignment lists;
    lists.lists.assign(g.n, {});
    auto index = label_index(g);
    for (const auto& [key, value] : j.at("lists").items()) {
        int v = vertex_by_label(index, key);
        lists.lists[v] = value.get<std::vector<int>>();
        std::sort(lists.lists[v].begin(), lists.lists[v].end());
    }
    for (int v = 0; v < g.n; ++v)
        if (lists.lists[v].empty())
            throw input_error("list for vertex '" + g.label(v) + "' is missing or empty");
    return lists;
}

Json sequence_to_json(const Graph& g, const ReconfigSequence& seq) {
    Json steps = Json::array();
    for (auto [v, c] : seq.steps)
        steps.push_back({g.label(v), c});
    Json j;
    j["steps"] = std::move(steps);
    return j;
}

ReconfigSequence sequence_from_json(const Graph& g, const Json& j) {
    if (!j.contains("steps"))
        throw input_error("sequence JSON needs field 'steps'");
    auto index = label_index(g);
    ReconfigSequence seq;
    for (const auto& s : j.at("steps")) {
        if (!s.is_array() || s.size() != 2)
            throw input_error("sequence steps must be [label, color] pairs");
        seq.steps.emplace_back(vertex_by_label(index, s[0].get<std::string>()),
                               s[1].get<int>());
    }
    return seq;
}

Json instance_to_json(const ReconfigInstance& inst) {
    Json j;
    j["graph"] = graph_to_json(inst.graph);
    j["d"] = inst.d;
    j["k"] = inst.k;
    j["alpha"] = coloring_to_json(inst.graph, inst.alpha);
    j["beta"] = coloring_to_json(inst.graph, inst.beta);
    if (inst.lists)
        j["lists"] = lists_to_json(inst.graph, *inst.lists)["lists"];
    return j;
}

ReconfigInstance instance_from_json(const Json& j) {
    for (const char* field : {"graph", "d", "k", "alpha", "beta"})
        if (!j.contains(field))
            throw input_error(std::string("instance JSON needs field '") + field + "'");
    Graph g = graph_from_json(j.at("graph"));
    int d = j.at("d").get<int>();
    int k = j.at("k").get<int>();
    Coloring alpha = coloring_from_json(g, j.at("alpha"));
    Coloring beta = coloring_from_json(g, j.at("beta"));
    std::optional<ListAssignment> lists;
    if (j.contains("lists")) {
        Json wrap;
        wrap["lists"] = j.at("lists");
        lists = lists_from_json(g, wrap);
    }
    return make_instance(std::move(g), d, k, std::move(alpha), std::move(beta),
                         std::move(lists));
}

Json st_to_json(const STInstance& inst) {
    Json j;
    j["graph"] = graph_to_json(inst.graph);
    j["triangles"] = Json::array();
    for (const auto& t : inst.triangles)
        j["triangles"].push_back({t[0], t[1], t[2]});
    j["token_edges"] = Json::array();
    for (const auto& e : inst.token_edges)
        j["token_edges"].push_back({e[0], e[1]});
    j["link_edges"] = Json::array();
    for (const auto& e : inst.link_edges)
        j["link_edges"].push_back({e.first, e.second});
    j["T_A"] = inst.t_a.tokens;
    j["T_B"] = inst.t_b.tokens;
    return j;
}

STInstance st_from_json(const Json& j) {
    for (const char* field : {"graph", "triangles", "token_edges", "link_edges", "T_A", "T_B"})
        if (!j.contains(field))
            throw input_error(std::string("token-sliding JSON needs field '") + field + "'");
    Graph g = graph_from_json(j.at("graph"));
    std::vector<std::array<int, 3>> triangles;
    for (const auto& t : j.at("triangles"))
        triangles.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
    std::vector<std::array<int, 2>> token_edges;
    for (const auto& e : j.at("token_edges"))
        token_edges.push_back({e[0].get<int>(), e[1].get<int>()});
    std::vector<std::pair<int, int>> link_edges;
    for (const auto& e : j.at("link_edges"))
        link_edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    TokenConfig t_a{j.at("T_A").get<std::vector<int>>()};
    TokenConfig t_b{j.at("T_B").get<std::vector<int>>()};
    return make_st_instance(std::move(g), std::move(triangles), std::move(token_edges),
                            std::move(link_edges), std::move(t_a), std::move(t_b));
}

Json moves_to_json(const TSMoveSequence& moves) {
    Json j;
    j["moves"] = Json::array();
    for (auto [from, to] : moves.moves)
        j["moves"].push_back({from, to});
    return j;
}

TSMoveSequence moves_from_json(const Json& j) {
    if (!j.contains("moves"))
        throw input_error("move JSON needs field 'moves'");
    TSMoveSequence moves;
    for (const auto& m : j.at("moves"))
        moves.moves.emplace_back(m[0].get<int>(), m[1].get<int>());
    return moves;
}

Json restrict_bundle_to_json(const STInstance& source, const RestrictResult& result) {
    Json trace = Json::array();
    for (const auto& step : result.trace) {
        Json t;
        t["rule"] = step.rule;
        t["index"] = step.gadget_index;
        t["removed"] = {step.removed_edge[0], step.removed_edge[1]};
        t["added"] = {step.new_vertices[0], step.new_vertices[1]};
        trace.push_back(std::move(t));
    }
    Json j;
    j["instance"] = st_to_json(result.out);
    j["maps"] = Json{{"source", st_to_json(source)}, {"trace", std::move(trace)}};
    j["meta"] = Json{{"construction", "restrict_st"}};
    return j;
}

STInstance restrict_bundle_instance(const Json& j) {
    return st_from_json(j.at("instance"));
}

namespace {

Json color_names_to_json(const std::map<int, std::string>& names) {
    Json j = Json::object();
    for (const auto& [code, name] : names)
        j[std::to_string(code)] = name;
    return j;
}

std::map<int, std::string> color_names_from_json(const Json& j) {
    std::map<int, std::string> names;
    for (const auto& [key, value] : j.items())
        names[std::stoi(key)] = value.get<std::string>();
    return names;
}

} // namespace

Json rst_bundle_to_json(const RstToListArtifact& art) {
    Json paths = Json::array();
    for (const auto& info : art.paths) {
        Json p;
        p["link_index"] = info.link_index;
        p["u"] = info.u_vertex;
        p["v"] = info.v_vertex;
        p["a"] = info.a;
        p["b"] = info.b;
        p["cl_set"] = info.cl_set;
        p["far_set"] = info.far_set;
        p["colors"] = info.shape.colors;
        p["vertices"] = info.vertices;
        paths.push_back(std::move(p));
    }
    Json maps;
    maps["source"] = st_to_json(art.source);
    maps["triangle_vertex"] = art.triangle_vertex;
    maps["edge_vertex"] = art.edge_vertex;
    maps["set_colors"] = {art.set_colors[0], art.set_colors[1], art.set_colors[2]};
    maps["paths"] = std::move(paths);

    Json j;
    j["instance"] = instance_to_json(art.out);
    j["maps"] = std::move(maps);
    j["meta"] = Json{{"construction", "rst_to_list"},
                     {"d", art.d},
                     {"k", art.k},
                     {"q", art.q},
                     {"color_names", color_names_to_json(art.color_names)}};
    return j;
}

RstToListArtifact rst_bundle_from_json(const Json& j) {
    if (j.at("meta").at("construction") != "rst_to_list")
        throw input_error("bundle was not produced by rst-to-list");
    RstToListArtifact art;
    art.out = instance_from_json(j.at("instance"));
    const Json& maps = j.at("maps");
    art.source = st_from_json(maps.at("source"));
    art.triangle_vertex = maps.at("triangle_vertex").get<std::vector<int>>();
    art.edge_vertex = maps.at("edge_vertex").get<std::vector<int>>();
    for (int s = 0; s < 3; ++s)
        art.set_colors[s] = maps.at("set_colors")[s].get<std::vector<int>>();
    art.d = j.at("meta").at("d").get<int>();
    art.k = j.at("meta").at("k").get<int>();
    art.q = j.at("meta").at("q").get<int>();
    art.color_names = color_names_from_json(j.at("meta").at("color_names"));
    for (const auto& p : maps.at("paths")) {
        RstPathInfo info;
        info.link_index = p.at("link_index").get<int>();
        info.u_vertex = p.at("u").get<int>();
        info.v_vertex = p.at("v").get<int>();
        info.a = p.at("a").get<int>();
        info.b = p.at("b").get<int>();
        info.cl_set = p.at("cl_set").get<int>();
        info.far_set = p.at("far_set").get<int>();
        info.vertices = p.at("vertices").get<std::vector<int>>();
        info.shape = build_forbidding_path(art.d, info.a, info.b,
                                           art.out.lists->lists[info.u_vertex],
                                           art.out.lists->lists[info.v_vertex],
                                           p.at("colors").get<std::vector<int>>());
        art.paths.push_back(std::move(info));
    }
    return art;
}

Json plain_bundle_to_json(const ListToPlainArtifact& art, const std::string& construction) {
    Json gadgets = Json::array();
    for (const auto& layout : art.gadgets) {
        Json g;
        g["c_center"] = layout.c_center;
        g["c_attach"] = layout.c_attach;
        g["c_star"] = layout.c_star;
        g["own_path"] = layout.own_path;
        g["branch_paths"] = layout.branch_paths;
        g["branch_family"] = layout.branch_family;
        g["branch_stars"] = layout.branch_stars;
        g["anchors"] = layout.anchors;
        gadgets.push_back(std::move(g));
    }
    Json maps;
    maps["family_of"] = art.family_of;
    maps["gadgets"] = std::move(gadgets);
    if (art.palette_provenance) {
        Json keys = Json::array();
        for (auto [set, index] : *art.palette_provenance)
            keys.push_back({set, index});
        maps["palette_provenance"] = std::move(keys);
    }
    Json j;
    j["instance"] = instance_to_json(art.out);
    j["maps"] = std::move(maps);
    j["meta"] = Json{{"construction", construction},
                     {"d", art.d},
                     {"k", art.k},
                     {"k_prime", art.k_prime},
                     {"n_source", art.n_source},
                     {"n_families", art.n_families},
                     {"color_names", color_names_to_json(art.color_names)}};
    return j;
}

ListToPlainArtifact plain_bundle_from_json(const Json& j) {
    const std::string construction = j.at("meta").at("construction").get<std::string>();
    if (construction != "list_to_plain" && construction != "reduce_palette")
        throw input_error("bundle was not produced by list-to-plain or reduce-palette");
    ListToPlainArtifact art;
    art.out = instance_from_json(j.at("instance"));
    const Json& maps = j.at("maps");
    art.family_of = maps.at("family_of").get<std::vector<int>>();
    for (const auto& g : maps.at("gadgets")) {
        GadgetLayout layout;
        layout.c_center = g.at("c_center").get<int>();
        layout.c_attach = g.at("c_attach").get<int>();
        layout.c_star = g.at("c_star").get<int>();
        layout.own_path = g.at("own_path").get<std::vector<int>>();
        layout.branch_paths = g.at("branch_paths").get<std::vector<std::vector<int>>>();
        layout.branch_family = g.at("branch_family").get<std::vector<int>>();
        layout.branch_stars = g.at("branch_stars").get<std::vector<int>>();
        layout.anchors = g.at("anchors").get<std::vector<int>>();
        art.gadgets.push_back(std::move(layout));
    }
    if (maps.contains("palette_provenance")) {
        std::vector<std::pair<int, int>> keys;
        for (const auto& key : maps.at("palette_provenance"))
            keys.emplace_back(key[0].get<int>(), key[1].get<int>());
        art.palette_provenance = std::move(keys);
    }
    art.d = j.at("meta").at("d").get<int>();
    art.k = j.at("meta").at("k").get<int>();
    art.k_prime = j.at("meta").at("k_prime").get<int>();
    art.n_source = j.at("meta").at("n_source").get<int>();
    art.n_families = j.at("meta").at("n_families").get<int>();
    art.color_names = color_names_from_json(j.at("meta").at("color_names"));
    return art;
}

Json split_bundle_to_json(const SplitArtifact& art) {
    Json maps;
    maps["source"] = graph_to_json(art.source);
    Json clique_edge = Json::array();
    for (auto [x, y] : art.clique_edge)
        clique_edge.push_back({x, y});
    maps["clique_edge"] = std::move(clique_edge);

    Json j;
    if (art.out) {
        j["instance"] = instance_to_json(*art.out);
    } else {
        Json inst;
        inst["graph"] = graph_to_json(art.out_graph);
        inst["d"] = 2;
        inst["k"] = art.k;
        j["instance"] = std::move(inst);
    }
    j["maps"] = std::move(maps);
    j["meta"] = Json{{"construction", art.out ? "lcr_to_split" : "lcol_to_split"},
                     {"l", art.ell},
                     {"m", art.m},
                     {"k", art.k}};
    return j;
}

SplitArtifact split_bundle_from_json(const Json& j) {
    const std::string construction = j.at("meta").at("construction").get<std::string>();
    if (construction != "lcol_to_split" && construction != "lcr_to_split")
        throw input_error("bundle was not produced by a split reduction");
    SplitArtifact art;
    art.source = graph_from_json(j.at("maps").at("source"));
    art.ell = j.at("meta").at("l").get<int>();
    art.m = j.at("meta").at("m").get<int>();
    art.k = j.at("meta").at("k").get<int>();
    for (const auto& e : j.at("maps").at("clique_edge"))
        art.clique_edge.emplace_back(e[0].get<int>(), e[1].get<int>());
    if (construction == "lcr_to_split") {
        art.out = instance_from_json(j.at("instance"));
        art.out_graph = art.out->graph;
    } else {
        art.out_graph = graph_from_json(j.at("instance").at("graph"));
    }
    return art;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw input_error("cannot parse '" + path + "': " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out)
        throw input_error("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

} // namespace recolor
