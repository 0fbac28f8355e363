#pragma once

#include <utility>
#include <vector>

#include "mbd/common.hpp"

namespace mbd {

/// Simple undirected graph on vertices 0..n-1.  Edges are normalized to
/// u < v, sorted, duplicates rejected.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    static Graph make(int n, std::vector<std::pair<int, int>> edges);

    bool operator==(const Graph&) const = default;

    std::vector<std::vector<int>> adjacency() const;
    /// Partition of the vertex set into connected components, each sorted,
    /// ordered by smallest vertex.
    std::vector<std::vector<int>> vertex_components() const;
    bool is_connected() const;
};

}  // namespace mbd
