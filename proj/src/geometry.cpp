#include "ssbid/geometry.hpp"

#include <queue>

namespace ssbid {

std::string describe(const Hyperplane &h) {
    if (h.axis()) return "p" + std::to_string(h.i) + " = " + std::to_string(h.c);
    return "p" + std::to_string(h.i) + " - p" + std::to_string(h.j) + " = " + std::to_string(h.c);
}

std::optional<std::vector<Coord>> solve_intersection(int n, const std::vector<Hyperplane> &hs) {
    if (static_cast<int>(hs.size()) != n) return std::nullopt;
    std::vector<bool> known(n + 1, false);
    std::vector<Coord> value(n + 1, 0);
    // adjacency for difference constraints: value[i] - value[j] = c
    std::vector<std::vector<std::pair<int, Coord>>> adj(n + 1);
    std::queue<int> frontier;
    for (const auto &h : hs) {
        if (h.axis()) {
            if (known[h.i]) {
                if (value[h.i] != h.c) return std::nullopt;  // inconsistent anchors
            } else {
                known[h.i] = true;
                value[h.i] = h.c;
                frontier.push(h.i);
            }
        } else {
            adj[h.i].push_back({h.j, h.c});
            adj[h.j].push_back({h.i, -h.c});
        }
    }
    while (!frontier.empty()) {
        int u = frontier.front();
        frontier.pop();
        for (auto [v, c] : adj[u]) {
            Coord want = value[u] - c;  // value[u] - value[v] = c
            if (known[v]) {
                if (value[v] != want) return std::nullopt;
            } else {
                known[v] = true;
                value[v] = want;
                frontier.push(v);
            }
        }
    }
    for (int i = 1; i <= n; ++i)
        if (!known[i]) return std::nullopt;  // dependent normals
    return std::vector<Coord>(value.begin() + 1, value.end());
}

}  // namespace ssbid
