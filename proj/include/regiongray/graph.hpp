#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace regiongray {

class UndirectedGraph {
public:
    UndirectedGraph() = default;
    explicit UndirectedGraph(std::size_t n) : adj_(n) {}

    std::size_t size() const { return adj_.size(); }
    std::size_t edge_count() const;

    void add_edge(std::size_t a, std::size_t b);
    // Sorts adjacency lists and drops duplicates; call once after the last add_edge.
    void finalize();

    bool adjacent(std::size_t a, std::size_t b) const;
    const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_[v]; }
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

private:
    std::vector<std::vector<std::size_t>> adj_;
};

// Unreachable vertices get -1.
std::vector<int> bfs_distances(const UndirectedGraph& g, std::size_t source);
bool is_connected(const UndirectedGraph& g);
// Returns a 0/1 coloring if the graph is bipartite.
std::optional<std::vector<int>> two_coloring(const UndirectedGraph& g);

struct ListingCheck {
    bool ok = true;
    std::size_t index = 0;  // position of the first offending entry when !ok
    std::string reason;
};

// Checks that `order` visits every vertex exactly once along edges of g, and when
// `cyclic` is set that the ends are adjacent and the length is even.
ListingCheck verify_listing(const UndirectedGraph& g, const std::vector<std::size_t>& order, bool cyclic);

}  // namespace regiongray
