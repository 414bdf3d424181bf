#pragma once

#include <string>
#include <utility>
#include <vector>

#include "planes/errors.hpp"

namespace planes {

/// Finite simple graph. Vertex order is significant: it is the induction
/// order of the encoding. Edges are stored as index pairs (i < j).
class Graph {
public:
    Graph() = default;
    Graph(std::vector<std::string> vertices, std::vector<std::pair<std::string, std::string>> edges);

    static Graph from_indices(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return int(names_.size()); }
    int edge_count() const { return int(edges_.size()); }
    const std::vector<std::string>& vertex_names() const { return names_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    bool adjacent(int i, int j) const;

    bool operator==(const Graph& o) const { return names_ == o.names_ && edges_ == o.edges_; }

private:
    std::vector<std::string> names_;
    std::vector<std::pair<int, int>> edges_; // i < j, sorted
};

} // namespace planes
