#include "planes/graph.hpp"

#include <algorithm>
#include <set>

namespace planes {

Graph::Graph(std::vector<std::string> vertices,
             std::vector<std::pair<std::string, std::string>> edges) {
    names_ = std::move(vertices);
    std::set<std::string> seen;
    for (const auto& v : names_)
        if (!seen.insert(v).second)
            throw PlaneError(Err::DuplicateLabel, "vertex '" + v + "'");
    for (const auto& [a, b] : edges) {
        auto ia = std::find(names_.begin(), names_.end(), a);
        auto ib = std::find(names_.begin(), names_.end(), b);
        if (ia == names_.end()) throw PlaneError(Err::UnknownPoint, "vertex '" + a + "'");
        if (ib == names_.end()) throw PlaneError(Err::UnknownPoint, "vertex '" + b + "'");
        int i = int(ia - names_.begin()), j = int(ib - names_.begin());
        if (i == j) throw PlaneError(Err::NotDistinct, "loop at '" + a + "'");
        if (i > j) std::swap(i, j);
        edges_.emplace_back(i, j);
    }
    std::sort(edges_.begin(), edges_.end());
    for (size_t i = 0; i + 1 < edges_.size(); ++i)
        if (edges_[i] == edges_[i + 1])
            throw PlaneError(Err::DuplicateLabel, "repeated edge");
}

Graph Graph::from_indices(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> es;
    es.reserve(edges.size());
    for (auto [a, b] : edges) es.emplace_back(names.at(a), names.at(b));
    return Graph(std::move(names), std::move(es));
}

bool Graph::adjacent(int i, int j) const {
    if (i > j) std::swap(i, j);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(i, j));
}

} // namespace planes
