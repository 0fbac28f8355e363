#include "mbd/graph.hpp"

#include <algorithm>

#include "mbd/union_find.hpp"

namespace mbd {

Graph Graph::make(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw InputError("graph: negative vertex count");
    for (auto& [u, v] : edges) {
        if (u == v) throw InputError("graph: self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InputError("graph: edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw InputError("graph: duplicate edge");
    Graph g;
    g.n = n;
    g.edges = std::move(edges);
    return g;
}

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

std::vector<std::vector<int>> Graph::vertex_components() const {
    UnionFind uf(n);
    for (auto [u, v] : edges) uf.unite(u, v);
    std::vector<std::vector<int>> by_root(n);
    for (int v = 0; v < n; ++v) by_root[uf.find(v)].push_back(v);
    std::vector<std::vector<int>> comps;
    for (auto& c : by_root)
        if (!c.empty()) comps.push_back(std::move(c));
    return comps;
}

bool Graph::is_connected() const { return n <= 1 || int(vertex_components().size()) == 1; }

}  // namespace mbd
