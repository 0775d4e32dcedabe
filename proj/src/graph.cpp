#include "regiongray/graph.hpp"

#include <algorithm>
#include <deque>

namespace regiongray {

std::size_t UndirectedGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& nb : adj_) twice += nb.size();
    return twice / 2;
}

void UndirectedGraph::add_edge(std::size_t a, std::size_t b) {
    adj_[a].push_back(b);
    adj_[b].push_back(a);
}

void UndirectedGraph::finalize() {
    for (auto& nb : adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
}

bool UndirectedGraph::adjacent(std::size_t a, std::size_t b) const {
    if (a >= adj_.size() || b >= adj_.size()) return false;
    const auto& nb = adj_[a];
    return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<std::pair<std::size_t, std::size_t>> UndirectedGraph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < adj_.size(); ++a)
        for (std::size_t b : adj_[a])
            if (a < b) out.emplace_back(a, b);
    return out;
}

std::vector<int> bfs_distances(const UndirectedGraph& g, std::size_t source) {
    std::vector<int> dist(g.size(), -1);
    std::deque<std::size_t> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop_front();
        for (std::size_t w : g.neighbors(v)) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

bool is_connected(const UndirectedGraph& g) {
    if (g.size() == 0) return true;
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::optional<std::vector<int>> two_coloring(const UndirectedGraph& g) {
    std::vector<int> color(g.size(), -1);
    for (std::size_t s = 0; s < g.size(); ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::deque<std::size_t> queue{s};
        while (!queue.empty()) {
            std::size_t v = queue.front();
            queue.pop_front();
            for (std::size_t w : g.neighbors(v)) {
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

ListingCheck verify_listing(const UndirectedGraph& g, const std::vector<std::size_t>& order, bool cyclic) {
    std::vector<char> seen(g.size(), 0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        std::size_t v = order[i];
        if (v >= g.size()) return {false, i, "entry is not a vertex of the graph"};
        if (seen[v]) return {false, i, "entry repeats an earlier one"};
        seen[v] = 1;
        if (i > 0 && !g.adjacent(order[i - 1], v)) return {false, i, "entry is not adjacent to its predecessor"};
    }
    if (order.size() != g.size()) return {false, order.size(), "listing misses some vertices"};
    if (cyclic && order.size() > 1) {
        if (order.size() % 2 != 0) return {false, order.size() - 1, "cyclic listing has odd length"};
        if (!g.adjacent(order.back(), order.front()))
            return {false, order.size() - 1, "last entry is not adjacent to the first"};
    }
    return {};
}

}  // namespace regiongray
