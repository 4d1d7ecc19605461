#include "recolor/sliding_tokens.hpp"

#include "recolor/errors.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace recolor {

bool TokenConfig::has(int v) const {
    return std::binary_search(tokens.begin(), tokens.end(), v);
}

namespace {

std::string edge_str(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

void require_edge(const Graph& g, int u, int v, const char* what) {
    if (u < 0 || u >= g.n || v < 0 || v >= g.n || u == v || !g.has_edge(u, v))
        throw input_error(std::string(what) + " " + edge_str(u, v) + " is not an edge of the graph");
}

} // namespace

STInstance make_st_instance(Graph graph, std::vector<std::array<int, 3>> triangles,
                            std::vector<std::array<int, 2>> token_edges,
                            std::vector<std::pair<int, int>> link_edges, TokenConfig t_a,
                            TokenConfig t_b) {
    int listed = 0;
    for (const auto& t : triangles) {
        require_edge(graph, t[0], t[1], "triangle edge");
        require_edge(graph, t[1], t[2], "triangle edge");
        require_edge(graph, t[0], t[2], "triangle edge");
        listed += 3;
    }
    for (const auto& e : token_edges) {
        require_edge(graph, e[0], e[1], "token edge");
        ++listed;
    }
    for (const auto& e : link_edges) {
        require_edge(graph, e.first, e.second, "link edge");
        ++listed;
    }
    if (listed != graph.edge_count())
        throw input_error("graph has " + std::to_string(graph.edge_count()) +
                          " edges but the gadget lists cover " + std::to_string(listed));
    for (auto& cfg : {&t_a, &t_b}) {
        std::sort(cfg->tokens.begin(), cfg->tokens.end());
        for (int v : cfg->tokens)
            if (v < 0 || v >= graph.n)
                throw input_error("token on unknown vertex " + std::to_string(v));
    }
    STInstance inst;
    inst.graph = std::move(graph);
    inst.triangles = std::move(triangles);
    inst.token_edges = std::move(token_edges);
    inst.link_edges = std::move(link_edges);
    inst.t_a = std::move(t_a);
    inst.t_b = std::move(t_b);
    return inst;
}

STIndex STIndex::build(const STInstance& inst) {
    STIndex idx;
    idx.gadget_of.assign(inst.graph.n, GadgetRef{GadgetRef::Kind::triangle, -1, 0});
    std::vector<int> memberships(inst.graph.n, 0);
    for (int i = 0; i < static_cast<int>(inst.triangles.size()); ++i)
        for (int p = 0; p < 3; ++p) {
            int v = inst.triangles[i][p];
            idx.gadget_of[v] = {GadgetRef::Kind::triangle, i, p + 1};
            ++memberships[v];
        }
    for (int i = 0; i < static_cast<int>(inst.token_edges.size()); ++i)
        for (int p = 0; p < 2; ++p) {
            int v = inst.token_edges[i][p];
            idx.gadget_of[v] = {GadgetRef::Kind::token_edge, i, p + 1};
            ++memberships[v];
        }
    // Vertices covered zero or multiple times keep the last reference; the
    // validator reports those instances as malformed.
    idx.triangle_degree.assign(inst.triangles.size(), 0);
    idx.token_edge_degree.assign(inst.token_edges.size(), 0);
    for (const auto& [u, v] : inst.link_edges)
        for (int x : {u, v}) {
            if (memberships[x] == 0)
                continue;
            const GadgetRef& ref = idx.gadget_of[x];
            if (ref.kind == GadgetRef::Kind::triangle)
                ++idx.triangle_degree[ref.index];
            else
                ++idx.token_edge_degree[ref.index];
        }
    return idx;
}

STReport validate_st(const STInstance& inst) {
    STReport report;
    auto& bad = report.violations;

    std::vector<int> memberships(inst.graph.n, 0);
    for (const auto& t : inst.triangles)
        for (int v : t)
            ++memberships[v];
    for (const auto& e : inst.token_edges)
        for (int v : e)
            ++memberships[v];
    for (int v = 0; v < inst.graph.n; ++v)
        if (memberships[v] != 1)
            bad.push_back("vertex " + std::to_string(v) + " belongs to " +
                          std::to_string(memberships[v]) + " gadgets, expected 1");

    STIndex idx = STIndex::build(inst);
    for (int v = 0; v < inst.graph.n; ++v) {
        int deg = inst.graph.degree(v);
        if (deg > 3)
            bad.push_back("vertex " + std::to_string(v) + " has degree " + std::to_string(deg) +
                          " > 3");
        if (deg < 2)
            bad.push_back("vertex " + std::to_string(v) + " has degree " + std::to_string(deg) +
                          " < 2");
    }
    for (const auto& t : inst.triangles)
        for (int v : t)
            if (inst.graph.degree(v) != 3)
                bad.push_back("triangle vertex " + std::to_string(v) + " has degree " +
                              std::to_string(inst.graph.degree(v)) + ", expected 3");

    auto check_config = [&](const TokenConfig& cfg, const char* name) {
        for (const auto& [u, v] : inst.graph.edges())
            if (cfg.has(u) && cfg.has(v))
                bad.push_back(std::string(name) + " holds adjacent tokens on edge " +
                              edge_str(u, v));
        for (int i = 0; i < static_cast<int>(inst.triangles.size()); ++i) {
            int count = 0;
            for (int v : inst.triangles[i])
                count += cfg.has(v) ? 1 : 0;
            if (count != 1)
                bad.push_back(std::string(name) + " has " + std::to_string(count) +
                              " tokens on triangle " + std::to_string(i) + ", expected 1");
        }
        for (int i = 0; i < static_cast<int>(inst.token_edges.size()); ++i) {
            int count = 0;
            for (int v : inst.token_edges[i])
                count += cfg.has(v) ? 1 : 0;
            if (count != 1)
                bad.push_back(std::string(name) + " has " + std::to_string(count) +
                              " tokens on token edge " + std::to_string(i) + ", expected 1");
        }
        int on_gadgets = 0;
        for (int v : cfg.tokens)
            if (v >= 0 && v < inst.graph.n)
                ++on_gadgets;
        if (static_cast<int>(cfg.tokens.size()) != on_gadgets ||
            cfg.tokens.size() != inst.triangles.size() + inst.token_edges.size())
            bad.push_back(std::string(name) + " token count " + std::to_string(cfg.tokens.size()) +
                          " does not match gadget count " +
                          std::to_string(inst.triangles.size() + inst.token_edges.size()));
    };
    check_config(inst.t_a, "T_A");
    check_config(inst.t_b, "T_B");

    report.well_formed = bad.empty();

    report.restricted = report.well_formed;
    for (int i = 0; i < static_cast<int>(inst.token_edges.size()); ++i)
        if (idx.token_edge_degree[i] >= 4) {
            report.restricted = false;
            if (report.well_formed)
                bad.push_back("token edge " + std::to_string(i) + " has gadget degree " +
                              std::to_string(idx.token_edge_degree[i]) + " (not restricted)");
        }
    auto gadget_degree = [&](int v) {
        const GadgetRef& ref = idx.gadget_of[v];
        return ref.kind == GadgetRef::Kind::triangle ? idx.triangle_degree[ref.index]
                                                     : idx.token_edge_degree[ref.index];
    };
    if (report.well_formed)
        for (int j = 0; j < static_cast<int>(inst.link_edges.size()); ++j) {
            auto [u, v] = inst.link_edges[j];
            if (gadget_degree(u) == 3 && gadget_degree(v) == 3) {
                report.restricted = false;
                bad.push_back("link edge " + std::to_string(j) +
                              " joins two degree-3 gadgets (not restricted)");
            }
        }
    return report;
}

std::vector<std::pair<int, int>> ts_moves(const STInstance& inst, const TokenConfig& cfg) {
    std::vector<std::pair<int, int>> out;
    for (int from : cfg.tokens)
        for (int to : inst.graph.adj[from]) {
            if (cfg.has(to))
                continue;
            bool ok = true;
            for (int w : inst.graph.adj[to])
                if (w != from && cfg.has(w)) {
                    ok = false;
                    break;
                }
            if (ok)
                out.emplace_back(from, to);
        }
    std::sort(out.begin(), out.end());
    return out;
}

TokenConfig apply_move(const TokenConfig& cfg, int from, int to) {
    TokenConfig next = cfg;
    auto it = std::lower_bound(next.tokens.begin(), next.tokens.end(), from);
    next.tokens.erase(it);
    next.tokens.insert(std::lower_bound(next.tokens.begin(), next.tokens.end(), to), to);
    return next;
}

namespace {

// Mutable working form used by the rewrite passes.
struct Workspace {
    int n;
    std::vector<std::string> labels;
    std::vector<std::array<int, 3>> triangles;
    std::vector<std::array<int, 2>> token_edges;
    std::vector<std::pair<int, int>> link_edges;
    std::vector<int> tokens_a;
    std::vector<int> tokens_b;

    explicit Workspace(const STInstance& inst)
        : n(inst.graph.n), triangles(inst.triangles), token_edges(inst.token_edges),
          link_edges(inst.link_edges), tokens_a(inst.t_a.tokens), tokens_b(inst.t_b.tokens) {
        labels.resize(n);
        if (!inst.graph.labels.empty())
            labels = inst.graph.labels;
    }

    int add_vertex(std::string label) {
        labels.push_back(std::move(label));
        return n++;
    }

    STInstance finish() const {
        std::vector<std::pair<int, int>> edges;
        for (const auto& t : triangles) {
            edges.emplace_back(t[0], t[1]);
            edges.emplace_back(t[1], t[2]);
            edges.emplace_back(t[0], t[2]);
        }
        for (const auto& e : token_edges)
            edges.emplace_back(e[0], e[1]);
        for (const auto& e : link_edges)
            edges.emplace_back(e.first, e.second);
        return make_st_instance(build_graph(n, edges, labels), triangles, token_edges, link_edges,
                                TokenConfig{tokens_a}, TokenConfig{tokens_b});
    }
};

bool contains(const std::vector<int>& xs, int v) {
    return std::find(xs.begin(), xs.end(), v) != xs.end();
}

} // namespace

RestrictResult restrict_st(const STInstance& inst) {
    STReport check = validate_st(inst);
    if (!check.well_formed)
        throw input_error("restrict requires a well-formed instance: " + check.violations.front());

    std::vector<RewriteStep> trace;

    // Pass 1: split every degree-4 token edge. The replacement edges have
    // degree at most 3, so the trigger set is fixed upfront.
    STIndex idx = STIndex::build(inst);
    Workspace ws(inst);
    {
        std::vector<std::array<int, 2>> kept;
        for (int j = 0; j < static_cast<int>(ws.token_edges.size()); ++j) {
            const auto edge = ws.token_edges[j];
            if (idx.token_edge_degree[j] < 4) {
                kept.push_back(edge);
                continue;
            }
            int u = edge[0], v = edge[1];
            int up = ws.add_vertex("e" + std::to_string(j) + ".u'");
            int vp = ws.add_vertex("e" + std::to_string(j) + ".v'");
            kept.push_back({u, up});
            kept.push_back({v, vp});
            ws.link_edges.emplace_back(up, vp);
            for (auto* tokens : {&ws.tokens_a, &ws.tokens_b}) {
                if (contains(*tokens, u))
                    tokens->push_back(vp);
                else
                    tokens->push_back(up);
            }
            trace.push_back({"R1", j, {u, v}, {up, vp}});
        }
        ws.token_edges = std::move(kept);
    }
    STInstance mid = ws.finish();

    // Pass 2: subdivide every link edge joining two degree-3 gadgets. A
    // rewritten link leaves both original gadget degrees unchanged and the
    // inserted token edge has degree 2, so this trigger set is also fixed.
    STIndex mid_idx = STIndex::build(mid);
    auto gadget_degree = [&](int v) {
        const GadgetRef& ref = mid_idx.gadget_of[v];
        return ref.kind == GadgetRef::Kind::triangle ? mid_idx.triangle_degree[ref.index]
                                                     : mid_idx.token_edge_degree[ref.index];
    };
    Workspace ws2(mid);
    {
        std::vector<std::pair<int, int>> kept;
        for (int j = 0; j < static_cast<int>(ws2.link_edges.size()); ++j) {
            auto [u, v] = ws2.link_edges[j];
            if (gadget_degree(u) != 3 || gadget_degree(v) != 3) {
                kept.emplace_back(u, v);
                continue;
            }
            int up = ws2.add_vertex("l" + std::to_string(j) + ".u'");
            int vp = ws2.add_vertex("l" + std::to_string(j) + ".v'");
            kept.emplace_back(u, up);
            kept.emplace_back(vp, v);
            ws2.token_edges.push_back({up, vp});
            for (auto* tokens : {&ws2.tokens_a, &ws2.tokens_b}) {
                if (contains(*tokens, v))
                    tokens->push_back(up);
                else
                    tokens->push_back(vp);
            }
            trace.push_back({"R2", j, {u, v}, {up, vp}});
        }
        ws2.link_edges = std::move(kept);
    }

    RestrictResult result;
    result.out = ws2.finish();
    result.trace = std::move(trace);
    return result;
}

TsReachResult ts_reachable(const STInstance& inst, const OracleBudget& budget) {
    struct Node {
        const std::vector<int>* state;
        std::uint32_t parent;
        std::pair<int, int> move;
    };
    constexpr std::uint32_t kNoParent = 0xffffffffu;

    struct VectorHash {
        std::size_t operator()(const std::vector<int>& v) const {
            std::uint64_t h = 1469598103934665603ull;
            for (int x : v) {
                h ^= static_cast<std::uint64_t>(x);
                h *= 1099511628211ull;
            }
            return static_cast<std::size_t>(h);
        }
    };

    std::vector<Node> nodes;
    std::unordered_map<std::vector<int>, std::uint32_t, VectorHash> seen;
    auto root = seen.emplace(inst.t_a.tokens, 0).first;
    nodes.push_back({&root->first, kNoParent, {-1, -1}});

    std::uint32_t goal = kNoParent;
    if (inst.t_a.tokens == inst.t_b.tokens)
        goal = 0;

    for (std::uint32_t head = 0; head < nodes.size() && goal == kNoParent; ++head) {
        TokenConfig cfg{*nodes[head].state};
        for (auto [from, to] : ts_moves(inst, cfg)) {
            TokenConfig next = apply_move(cfg, from, to);
            auto [it, inserted] = seen.emplace(std::move(next.tokens), 0);
            if (!inserted)
                continue;
            if (seen.size() > budget.max_states)
                throw budget_exceeded("token-sliding state budget exceeded", seen.size());
            it->second = static_cast<std::uint32_t>(nodes.size());
            nodes.push_back({&it->first, head, {from, to}});
            if (it->first == inst.t_b.tokens) {
                goal = it->second;
                break;
            }
        }
    }

    TsReachResult result;
    result.states_visited = seen.size();
    if (goal == kNoParent)
        return result;
    result.reachable = true;
    std::vector<std::pair<int, int>> moves;
    for (std::uint32_t at = goal; nodes[at].parent != kNoParent; at = nodes[at].parent)
        moves.push_back(nodes[at].move);
    std::reverse(moves.begin(), moves.end());
    result.moves.moves = std::move(moves);
    return result;
}

} // namespace recolor
