#include "recolor/forbidding_path.hpp"

#include "recolor/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace recolor {

int forbidding_path_color_count(int d) {
    return d % 2 == 1 ? d + 1 : d + 2;
}

std::vector<std::vector<int>> forbidding_path_interior_lists(int a, int b,
                                                             const std::vector<int>& colors) {
    int p = static_cast<int>(colors.size());
    std::vector<std::vector<int>> lists;
    lists.reserve(p + 1);
    lists.push_back({std::min(a, colors[0]), std::max(a, colors[0])});
    for (int i = 2; i <= p; ++i) {
        std::vector<int> l{colors[i - 2], colors[i - 1]};
        std::sort(l.begin(), l.end());
        lists.push_back(std::move(l));
    }
    lists.push_back({std::min(colors[p - 1], b), std::max(colors[p - 1], b)});
    return lists;
}

ForbiddingPath build_forbidding_path(int d, int a, int b, const std::vector<int>& l_u,
                                     const std::vector<int>& l_v,
                                     const std::vector<int>& colors) {
    if (d < 2)
        throw input_error("forbidding paths require d >= 2");
    auto inside_123 = [](const std::vector<int>& l) {
        return std::all_of(l.begin(), l.end(), [](int c) { return c >= 1 && c <= 3; });
    };
    if (l_u.empty() || l_v.empty() || !inside_123(l_u) || !inside_123(l_v))
        throw input_error("endpoint lists must be non-empty subsets of {1,2,3}");
    if (!std::count(l_u.begin(), l_u.end(), a) || !std::count(l_v.begin(), l_v.end(), b))
        throw input_error("forbidden colors must appear in the endpoint lists");
    int want = forbidding_path_color_count(d);
    if (static_cast<int>(colors.size()) != want)
        throw input_error("forbidding path for d=" + std::to_string(d) + " needs exactly " +
                          std::to_string(want) + " interior colors, got " +
                          std::to_string(colors.size()));
    std::set<int> distinct(colors.begin(), colors.end());
    if (static_cast<int>(distinct.size()) != want)
        throw input_error("interior colors must be distinct");
    for (int c : colors)
        if (c >= 1 && c <= 3)
            throw input_error("interior colors must avoid {1,2,3}");

    ForbiddingPath fp;
    fp.d = d;
    fp.a = a;
    fp.b = b;
    fp.colors = colors;
    fp.len = want + 2;
    fp.q = (fp.len - 2) / 2;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < fp.len; ++i)
        edges.emplace_back(i, i + 1);
    fp.path = build_graph(fp.len + 1, edges);
    fp.lists.lists.push_back(l_u);
    std::sort(fp.lists.lists.back().begin(), fp.lists.lists.back().end());
    for (auto& l : forbidding_path_interior_lists(a, b, colors))
        fp.lists.lists.push_back(std::move(l));
    fp.lists.lists.push_back(l_v);
    std::sort(fp.lists.lists.back().begin(), fp.lists.lists.back().end());
    return fp;
}

std::vector<int> forbidding_path_completion(const ForbiddingPath& fp, int x, int y) {
    if (!fp.lists.allows(0, x) || !fp.lists.allows(fp.len, y) || (x == fp.a && y == fp.b))
        throw input_error("(" + std::to_string(x) + "," + std::to_string(y) +
                          ") is not an admissible endpoint pair");
    int p = static_cast<int>(fp.colors.size());
    std::vector<int> col(fp.len + 1, 0);
    col[0] = x;
    col[fp.len] = y;
    if (x == fp.a) {
        for (int i = 1; i <= p; ++i)
            col[i] = fp.colors[i - 1];
        col[p + 1] = fp.b;
    } else if (y == fp.b) {
        col[1] = fp.a;
        for (int i = 2; i <= p + 1; ++i)
            col[i] = fp.colors[i - 2];
    } else {
        col[1] = fp.a;
        for (int i = 2; i <= p; ++i)
            col[i] = fp.colors[i - 1];
        col[p + 1] = fp.b;
    }
    return col;
}

std::vector<std::pair<int, int>> forbidding_path_prepare_steps(const ForbiddingPath& fp,
                                                               const std::vector<int>& cur,
                                                               bool u_side, int target) {
    int p = static_cast<int>(fp.colors.size());
    std::vector<std::pair<int, int>> steps;
    // Each sweep touches a vertex at most once, so comparing against the
    // starting coloring suffices to drop no-op recolorings.
    auto put = [&](int vertex, int color) {
        if (cur[vertex] != color)
            steps.emplace_back(vertex, color);
    };
    // Forward form fills the interior as (a, c_1, ..., c_p); backward form as
    // (c_1, ..., c_p, b). Each sweep recolors toward the far end so the color
    // being written was just vacated by its only other holder.
    auto forward = [&] {
        put(1, fp.a);
        for (int i = 2; i <= p + 1; ++i)
            put(i, fp.colors[i - 2]);
    };
    auto backward = [&] {
        put(p + 1, fp.b);
        for (int i = p; i >= 1; --i)
            put(i, fp.colors[i - 1]);
    };
    if (u_side) {
        if (cur[0] == fp.a)
            return steps; // interior already forced to the backward form
        if (target == fp.a)
            backward();
        else
            forward();
    } else {
        if (cur[fp.len] == fp.b)
            return steps; // interior already forced to the forward form
        if (target == fp.b)
            forward();
        else
            backward();
    }
    return steps;
}

ForbiddingPathReport check_forbidding_path(const ForbiddingPath& fp, int d, int k,
                                           const OracleBudget& budget) {
    ForbiddingPathReport report;
    auto all = collect_colorings(fp.path, d, k, &fp.lists, budget);
    std::set<std::vector<int>> all_set;
    for (const auto& col : all)
        all_set.insert(col.color);

    // Condition 1: realized endpoint pairs match the admissible set exactly.
    std::set<std::pair<int, int>> realized;
    std::map<std::pair<int, int>, std::vector<const Coloring*>> buckets;
    for (const auto& col : all) {
        std::pair<int, int> pair{col.color[0], col.color[fp.len]};
        realized.insert(pair);
        buckets[pair].push_back(&col);
    }
    std::set<std::pair<int, int>> expected;
    for (int x : fp.lists.lists[0])
        for (int y : fp.lists.lists[fp.len])
            if (!(x == fp.a && y == fp.b))
                expected.insert({x, y});
    report.cond1 = realized == expected;
    report.admissible_pairs.assign(realized.begin(), realized.end());

    // Condition 2: with both endpoints frozen, every (x,y)-coloring can reach
    // one from which the moving endpoint takes its new color in a single
    // final step. The frozen search never touches the fixed endpoint and
    // leaves the moving endpoint for last by construction.
    auto transition_ok = [&](const std::vector<const Coloring*>& bucket, int endpoint,
                             int new_color) {
        for (const Coloring* start : bucket) {
            std::set<std::vector<int>> visited{start->color};
            std::deque<const std::vector<int>*> queue{&start->color};
            bool done = false;
            while (!queue.empty() && !done) {
                const std::vector<int>& cur = *queue.front();
                queue.pop_front();
                std::vector<int> probe = cur;
                probe[endpoint] = new_color;
                if (all_set.count(probe)) {
                    done = true;
                    break;
                }
                for (const Coloring* next : bucket) {
                    int diff = 0;
                    for (int i = 0; i <= fp.len && diff < 2; ++i)
                        if (cur[i] != next->color[i])
                            ++diff;
                    if (diff == 1 && visited.insert(next->color).second)
                        queue.push_back(&next->color);
                }
            }
            if (!done)
                return false;
        }
        return true;
    };

    report.cond2 = true;
    for (const auto& [pair, bucket] : buckets) {
        auto [x, y] = pair;
        for (int xp : fp.lists.lists[0])
            if (xp != x && realized.count({xp, y}) && !transition_ok(bucket, 0, xp))
                report.cond2 = false;
        for (int yp : fp.lists.lists[fp.len])
            if (yp != y && realized.count({x, yp}) && !transition_ok(bucket, fp.len, yp))
                report.cond2 = false;
    }
    return report;
}

} // namespace recolor
