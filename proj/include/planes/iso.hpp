#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "planes/plane.hpp"

namespace planes {

/// Isomorphism-invariant stable coloring of points and stored lines,
/// computed by iterated neighborhood refinement. Colors are canonical small
/// integers; equal colors across two jointly refined planes mean equal
/// invariants.
struct Coloring {
    std::vector<int> point_color;
    std::vector<int> line_color;
    int point_classes = 0;
    int rounds = 0;
};

Coloring refine(const Plane& P);

using IsoMapping = std::vector<std::pair<std::string, std::string>>;

/// Color-guided exhaustive backtracking. A returned mapping is re-verified
/// against raw incidence (stored lines map onto stored lines bijectively);
/// nullopt is returned only after exhausting the search space.
std::optional<IsoMapping> isomorphic(const Plane& A, const Plane& B);

struct AutGroup {
    std::vector<std::string> domain;          // point labels in index order
    std::vector<std::vector<int>> generators; // verified automorphisms, reduced set
    unsigned long long order = 1;             // via orbit-stabilizer chain over generators
};

AutGroup automorphisms(const Plane& P);
bool is_rigid(const Plane& P);

/// True iff `map` (point index -> point index) carries every stored line of A
/// onto a stored line of B, bijectively.
bool verify_plane_map(const Plane& A, const Plane& B, const std::vector<int>& map);

/// Order of the permutation group generated by `gens` (orbit-stabilizer with
/// Schreier generators). Exposed for the test suite's cross-checks.
unsigned long long perm_group_order(const std::vector<std::vector<int>>& gens, int n);

} // namespace planes
