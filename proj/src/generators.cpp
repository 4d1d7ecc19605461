#include "recolor/generators.hpp"

#include "recolor/errors.hpp"
#include "recolor/rng.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace recolor {

Graph gen_path(int n) {
    if (n < 1)
        throw input_error("a path needs at least one vertex");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return build_graph(n, edges);
}

Graph gen_split(int n_clique, int n_indep, double edge_prob, std::uint64_t seed) {
    if (n_clique < 0 || n_indep < 0 || n_clique + n_indep < 1)
        throw input_error("split generator needs at least one vertex");
    if (edge_prob < 0.0 || edge_prob > 1.0)
        throw input_error("edge probability must be in [0,1]");
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n_clique; ++i)
        for (int j = i + 1; j < n_clique; ++j)
            edges.emplace_back(i, j);
    for (int s = 0; s < n_indep; ++s)
        for (int i = 0; i < n_clique; ++i)
            if (rng.next_bool(edge_prob))
                edges.emplace_back(i, n_clique + s);
    return build_graph(n_clique + n_indep, edges);
}

Graph gen_random_connected(int n, double edge_prob, std::uint64_t seed) {
    if (n < 1)
        throw input_error("graph generator needs at least one vertex");
    if (edge_prob < 0.0 || edge_prob > 1.0)
        throw input_error("edge probability must be in [0,1]");
    Rng rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.next_bool(edge_prob))
                    edges.emplace_back(i, j);
        Graph g = build_graph(n, edges);
        if (structural_checks(g).connected)
            return g;
    }
    throw input_error("could not sample a connected graph with these parameters");
}

namespace {

struct StubPlan {
    std::vector<int> stub_vertex; // one entry per link-edge endpoint wanted
    std::vector<int> gadget_of_stub;
};

} // namespace

STInstance gen_st(int n_triangles, int n_token_edges, std::uint64_t seed) {
    if (n_triangles < 0 || n_token_edges < 0 || n_triangles + n_token_edges < 1)
        throw input_error("gadget generator needs at least one gadget");
    Rng rng(seed);

    int n = 3 * n_triangles + 2 * n_token_edges;
    std::vector<std::array<int, 3>> triangles;
    std::vector<std::array<int, 2>> token_edges;
    std::vector<std::string> labels(n);
    for (int i = 0; i < n_triangles; ++i) {
        int base = 3 * i;
        triangles.push_back({base, base + 1, base + 2});
        for (int p = 0; p < 3; ++p)
            labels[base + p] = "t" + std::to_string(i) + "." + std::to_string(p + 1);
    }
    for (int j = 0; j < n_token_edges; ++j) {
        int base = 3 * n_triangles + 2 * j;
        token_edges.push_back({base, base + 1});
        for (int p = 0; p < 2; ++p)
            labels[base + p] = "e" + std::to_string(j) + "." + std::to_string(p + 1);
    }

    for (int attempt = 0; attempt < 400; ++attempt) {
        // Stub demands: triangle vertices need exactly one link, token-edge
        // vertices one or two.
        StubPlan plan;
        auto add_stubs = [&](int vertex, int gadget, int count) {
            for (int c = 0; c < count; ++c) {
                plan.stub_vertex.push_back(vertex);
                plan.gadget_of_stub.push_back(gadget);
            }
        };
        for (int i = 0; i < n_triangles; ++i)
            for (int p = 0; p < 3; ++p)
                add_stubs(3 * i + p, i, 1);
        for (int j = 0; j < n_token_edges; ++j)
            for (int p = 0; p < 2; ++p)
                add_stubs(3 * n_triangles + 2 * j + p, n_triangles + j, rng.next_int(1, 2));
        if (plan.stub_vertex.size() % 2 != 0)
            continue;

        // Random pairing avoiding same-gadget pairs and duplicate edges.
        std::vector<int> order(plan.stub_vertex.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            order[i] = static_cast<int>(i);
        for (std::size_t i = order.size(); i > 1; --i)
            std::swap(order[i - 1], order[rng.next_int(0, static_cast<int>(i) - 1)]);

        std::vector<std::pair<int, int>> links;
        std::set<std::pair<int, int>> used;
        std::vector<bool> taken(order.size(), false);
        bool ok = true;
        for (std::size_t i = 0; i < order.size() && ok; ++i) {
            if (taken[order[i]])
                continue;
            int a = order[i];
            int partner = -1;
            for (std::size_t j = i + 1; j < order.size(); ++j) {
                int b = order[j];
                if (taken[b] || plan.gadget_of_stub[a] == plan.gadget_of_stub[b])
                    continue;
                auto key = std::minmax(plan.stub_vertex[a], plan.stub_vertex[b]);
                if (used.count({key.first, key.second}))
                    continue;
                partner = static_cast<int>(j);
                break;
            }
            if (partner < 0) {
                ok = false;
                break;
            }
            taken[a] = taken[order[partner]] = true;
            int b = order[partner];
            auto key = std::minmax(plan.stub_vertex[a], plan.stub_vertex[b]);
            used.insert({key.first, key.second});
            links.emplace_back(key.first, key.second);
        }
        if (!ok)
            continue;
        std::sort(links.begin(), links.end());

        std::vector<std::pair<int, int>> edges;
        for (const auto& t : triangles) {
            edges.emplace_back(t[0], t[1]);
            edges.emplace_back(t[1], t[2]);
            edges.emplace_back(t[0], t[2]);
        }
        for (const auto& e : token_edges)
            edges.emplace_back(e[0], e[1]);
        for (const auto& l : links)
            edges.emplace_back(l.first, l.second);
        Graph graph = build_graph(n, edges, labels);

        // Random standard token configurations, resampled until independent.
        auto sample_config = [&]() -> std::optional<TokenConfig> {
            for (int round = 0; round < 200; ++round) {
                TokenConfig cfg;
                for (const auto& t : triangles)
                    cfg.tokens.push_back(t[rng.next_int(0, 2)]);
                for (const auto& e : token_edges)
                    cfg.tokens.push_back(e[rng.next_int(0, 1)]);
                std::sort(cfg.tokens.begin(), cfg.tokens.end());
                bool independent = true;
                for (auto [u, v] : links)
                    if (cfg.has(u) && cfg.has(v))
                        independent = false;
                if (independent)
                    return cfg;
            }
            return std::nullopt;
        };
        auto t_a = sample_config();
        auto t_b = sample_config();
        if (!t_a || !t_b)
            continue;

        STInstance inst = make_st_instance(std::move(graph), triangles, token_edges, links,
                                           *t_a, *t_b);
        if (validate_st(inst).well_formed)
            return inst;
    }
    throw input_error("could not generate a well-formed gadget instance for these parameters");
}

} // namespace recolor
