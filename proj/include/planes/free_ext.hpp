#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "planes/plane.hpp"

namespace planes {

struct FreeManifestEntry {
    std::string label;
    std::string parent_a; // canonical labels of the two parallel parents
    std::string parent_b;
    bool targeted = false; // added by materialize_meet rather than a full level
};

/// Truncated Hall tower P0 ⊆ P1 ⊆ ...: each full level adds one fresh point
/// for every unordered parallel pair of lines (trivial included) of the
/// previous level, in canonical pair order.
struct FreeExtTower {
    std::vector<Plane> levels;                          // levels[0] = base
    std::vector<std::vector<FreeManifestEntry>> manifests; // per level >= 1
    bool truncated = false;

    const Plane& base() const { return levels.front(); }
    const Plane& top() const { return levels.back(); }
    int level_count() const { return int(levels.size()) - 1; }
};

FreeExtTower free_extend(const Plane& P, int levels, size_t point_budget = size_t(-1));

struct MaterializeResult {
    FreeExtTower tower;
    std::string point;
    bool existed = false; // the meet already existed; tower unchanged
};

/// Adds the free intersection point of two parallel lines of the top level as
/// a targeted partial level. If the lines already meet, returns the existing
/// point flagged instead.
MaterializeResult materialize_meet(FreeExtTower tower, const Line& l1, const Line& l2);

// ---- Desargues --------------------------------------------------------------

struct DesarguesWitness {
    std::string center;
    std::array<std::string, 3> triangle1;
    std::array<std::string, 3> triangle2;
    std::array<std::string, 3> meets; // (pq x p'q'), (pr x p'r'), (qr x q'r')
    std::string to_report() const;    // report v1
};

/// Exhaustive scan over all Desargues configurations realized in P (center
/// with three stored pencil lines, nondegenerate triangles, all meets
/// existing). Returns the canonically first violating configuration, or
/// nullopt when the plane satisfies Desargues on every realized configuration.
std::optional<DesarguesWitness> desargues_check(const Plane& P, int jobs = 1);

/// Independent re-validation of every incidence in the witness.
bool verify_desargues_witness(const Plane& P, const DesarguesWitness& w);

struct DesarguesSearchResult {
    std::optional<DesarguesWitness> witness;
    FreeExtTower tower; // with any materialized meet points appended
    size_t configs_tried = 0;
};

/// Deterministic violation search on a tower: picks perspective-triangle
/// configurations canonically, materializes the missing conclusion meets via
/// Fact 2.2, and tests collinearity. Throws NotApplicable when the base is
/// projective (F(P) = P).
DesarguesSearchResult desargues_violation_search(FreeExtTower tower, size_t budget = 1000);

} // namespace planes
