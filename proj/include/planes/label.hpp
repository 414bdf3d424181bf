#pragma once

#include <string>

namespace planes {

/// Point labels are plain strings under a total namespace grammar:
///
///   anchor:<name>          seed-plane points
///   vtx:<a>:<j>            vertex gadget, j in {0,1,2}
///   edge:<d>-<a>           edge gadget, d < a
///   q:<site>:<letter>      points of an attached Q copy
///   free:<n>:<la>|<lb>     free intersection point of parallel lines la, lb
///   anything else          raw
///
/// Labels never contain whitespace. The total order used for every canonical
/// enumeration is plain byte-wise string comparison.
enum class LabelNs { Anchor, Vtx, Edge, Q, Free, Raw };

LabelNs label_ns(const std::string& label);

/// Rejects labels containing whitespace or control characters, and labels in
/// a structured namespace whose payload does not parse.
bool label_valid(const std::string& label);

std::string vtx_label(int vertex, int j);
std::string edge_label(int smaller, int larger);
std::string q_label(const std::string& site, char letter);
std::string free_label(int level, const std::string& line_a, const std::string& line_b);

} // namespace planes
