#pragma once

#include <map>
#include <string>
#include <vector>

#include "planes/extension.hpp"
#include "planes/graph.hpp"
#include "planes/plane.hpp"

namespace planes {

/// The rigid 17-point seed plane with its distinguished points
/// anchor:q, anchor:p2, anchor:p3, anchor:0, anchor:0', anchor:1',
/// anchor:1_0, anchor:2_1 (and nine further points).
Plane anchor_plane();
Report validate_anchor();

/// All 17 anchor point labels, sorted.
const std::vector<std::string>& anchor_labels();

struct EncodeResult {
    Plane plane;
    BuildLog log;
};

/// The Theorem-1.2 map: for each vertex, three gadget points hung off the
/// rails p2∨1' and 0∨1'; for each edge, one point under the two vertex lines.
/// |encode(G)| = 3|V| + |E| + 17.
EncodeResult encode(const Graph& g);

/// phi(p): p lies on exactly four non-trivial lines, or some non-trivial line
/// through p carries a point with exactly four non-trivial lines.
bool phi(const Plane& P, const std::string& p);

/// Finds the unique embedding of the anchor into the phi-subset of P.
/// Returns anchor label -> point of P. Throws NoEmbedding / Ambiguous.
std::map<std::string, std::string> locate_anchor(const Plane& P);

/// Structural inverse of encode, up to relabeling: locate the anchor, read the
/// vertex gadgets off the p2∨1' rail, output the intersection graph of their
/// lines. Fresh vertex names v0, v1, ... follow the lex order of the line
/// labels in P.
Graph decode(const Plane& P);

/// Verifies the starred invariants of the Theorem-1.2 proof on an encoding
/// with intact labels, plus the "at most two non-trivial lines off the anchor"
/// bound.
Report check_star_invariants(const Plane& P, const Graph& g);

} // namespace planes
