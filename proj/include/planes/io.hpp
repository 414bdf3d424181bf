#pragma once

#include <iosfwd>
#include <string>

#include "planes/graph.hpp"
#include "planes/plane.hpp"

namespace planes {

/// Plane file format (UTF-8, LF):
///   plane v1
///   p <label>              one per point, sorted
///   l <m1> <m2> ...        one per stored line, members sorted, lines sorted
std::string write_plane(const Plane& P);
Plane read_plane(const std::string& text);
Plane read_plane_file(const std::string& path);
void write_plane_file(const Plane& P, const std::string& path);

/// Graph file format:
///   graph v1
///   v <name>               in induction order
///   e <name1> <name2>      name1 < name2, sorted
std::string write_graph(const Graph& g);
Graph read_graph(const std::string& text);
Graph read_graph_file(const std::string& path);
void write_graph_file(const Graph& g, const std::string& path);

std::string slurp_file(const std::string& path);
void spew_file(const std::string& path, const std::string& content);

} // namespace planes
