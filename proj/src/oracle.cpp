#include "recolor/oracle.hpp"

#include "recolor/errors.hpp"

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <deque>
#include <unordered_map>

namespace recolor {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
    std::optional<Clock::time_point> at;

    explicit Deadline(const OracleBudget& budget) {
        if (budget.max_millis)
            at = Clock::now() + std::chrono::milliseconds(*budget.max_millis);
    }
    bool passed() const { return at && Clock::now() > *at; }
};

struct VectorHash {
    std::size_t operator()(const std::vector<int>& v) const {
        // FNV-1a over the color values.
        std::uint64_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::uint64_t>(x);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

} // namespace

std::uint64_t enumerate_colorings(const Graph& g, int d, int k, const ListAssignment* lists,
                                  const OracleBudget& budget,
                                  const std::function<bool(const Coloring&)>& emit) {
    if (d < 1 || k < 1)
        throw input_error("enumeration requires d >= 1 and k >= 1");
    if (lists && static_cast<int>(lists->lists.size()) != g.n)
        throw input_error("list assignment does not cover every vertex");
    auto balls = distance_balls(g, d);
    // Only earlier-assigned vertices constrain the current one.
    std::vector<std::vector<int>> earlier(g.n);
    for (int v = 0; v < g.n; ++v)
        for (int u : balls[v])
            if (u < v)
                earlier[v].push_back(u);
    std::vector<std::vector<int>> choices(g.n);
    for (int v = 0; v < g.n; ++v) {
        if (lists) {
            choices[v] = lists->lists[v];
            if (choices[v].empty())
                throw input_error("empty color list at vertex " + std::to_string(v));
        } else {
            choices[v].resize(k);
            for (int c = 1; c <= k; ++c)
                choices[v][c - 1] = c;
        }
    }

    Deadline deadline(budget);
    std::uint64_t emitted = 0;
    Coloring cur;
    cur.k = k;
    cur.color.assign(g.n, 0);
    bool stopped = false;
    std::uint64_t nodes = 0;

    // Iterative DFS in lexicographic vertex-major order.
    std::vector<std::size_t> pick(g.n, 0);
    int v = 0;
    if (g.n == 0) {
        emit(cur);
        return 1;
    }
    while (v >= 0 && !stopped) {
        if ((++nodes & 0xfff) == 0 && deadline.passed())
            throw budget_exceeded("enumeration time budget exceeded", emitted);
        if (pick[v] == choices[v].size()) {
            pick[v] = 0;
            --v;
            if (v >= 0)
                ++pick[v];
            continue;
        }
        int c = choices[v][pick[v]];
        bool ok = true;
        for (int u : earlier[v])
            if (cur.color[u] == c) {
                ok = false;
                break;
            }
        if (!ok) {
            ++pick[v];
            continue;
        }
        cur.color[v] = c;
        if (v == g.n - 1) {
            if (emitted == budget.max_states)
                throw budget_exceeded("enumeration state budget exceeded", emitted);
            ++emitted;
            if (!emit(cur))
                stopped = true;
            ++pick[v];
        } else {
            ++v;
        }
    }
    return emitted;
}

std::vector<Coloring> collect_colorings(const Graph& g, int d, int k,
                                        const ListAssignment* lists,
                                        const OracleBudget& budget) {
    std::vector<Coloring> out;
    enumerate_colorings(g, d, k, lists, budget, [&](const Coloring& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

ReachResult reconfig_reachable(const ReconfigInstance& inst, const OracleBudget& budget) {
    const Graph& g = inst.graph;
    const ListAssignment* lists = inst.lists ? &*inst.lists : nullptr;
    auto balls = distance_balls(g, inst.d);
    std::vector<std::vector<int>> choices(g.n);
    for (int v = 0; v < g.n; ++v) {
        if (lists) {
            choices[v] = lists->lists[v];
        } else {
            choices[v].resize(inst.k);
            for (int c = 1; c <= inst.k; ++c)
                choices[v][c - 1] = c;
        }
    }

    struct Node {
        const std::vector<int>* state; // owned by `seen`; keys are stable
        std::uint32_t parent;
        std::pair<int, int> move;
    };
    constexpr std::uint32_t kNoParent = 0xffffffffu;

    Deadline deadline(budget);
    std::vector<Node> nodes;
    std::unordered_map<std::vector<int>, std::uint32_t, VectorHash> seen;
    auto root = seen.emplace(inst.alpha.color, 0).first;
    nodes.push_back({&root->first, kNoParent, {-1, -1}});

    ReachResult result;
    std::uint32_t goal = kNoParent;
    if (inst.alpha.color == inst.beta.color)
        goal = 0;

    std::uint64_t expanded = 0;
    for (std::uint32_t head = 0; head < nodes.size() && goal == kNoParent; ++head) {
        if ((++expanded & 0xff) == 0 && deadline.passed())
            throw budget_exceeded("reachability time budget exceeded", seen.size());
        const std::vector<int>& state = *nodes[head].state;
        for (int v = 0; v < g.n && goal == kNoParent; ++v) {
            for (int c : choices[v]) {
                if (c == state[v])
                    continue;
                bool ok = true;
                for (int u : balls[v])
                    if (state[u] == c) {
                        ok = false;
                        break;
                    }
                if (!ok)
                    continue;
                std::vector<int> next = state;
                next[v] = c;
                auto [it, inserted] = seen.emplace(std::move(next), 0);
                if (!inserted)
                    continue;
                if (seen.size() > budget.max_states)
                    throw budget_exceeded("reachability state budget exceeded", seen.size());
                it->second = static_cast<std::uint32_t>(nodes.size());
                nodes.push_back({&it->first, head, {v, c}});
                if (it->first == inst.beta.color) {
                    goal = it->second;
                    break;
                }
            }
        }
    }

    result.states_visited = seen.size();
    if (goal == kNoParent)
        return result;
    result.reachable = true;
    std::vector<std::pair<int, int>> steps;
    for (std::uint32_t at = goal; nodes[at].parent != kNoParent; at = nodes[at].parent)
        steps.push_back(nodes[at].move);
    std::reverse(steps.begin(), steps.end());
    result.sequence.steps = std::move(steps);
    return result;
}

} // namespace recolor
