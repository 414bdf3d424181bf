#pragma once

#include <optional>
#include <string>
#include <vector>

#include "planes/codec.hpp"
#include "planes/extension.hpp"
#include "planes/graph.hpp"
#include "planes/plane.hpp"

namespace planes {

/// Maximal confined subconfiguration: every core point on >= 3 core lines,
/// every core line with >= 3 core points (lines taken with their induced
/// member sets). Obtained as the peeling fixpoint.
struct ConfinedCore {
    std::vector<std::string> points;                 // sorted
    std::vector<std::vector<std::string>> lines;     // induced members, sorted
    std::vector<std::string> trace;                  // removals in peel order

    bool has_point(const std::string& p) const;
    /// True iff the stored line of P identified by these two points survives.
    bool has_line_through(const std::string& a, const std::string& b) const;
    Plane as_plane() const;
};

ConfinedCore peel(const Plane& P);

bool is_confined(const Plane& P, const std::string& point);
bool is_confined(const Plane& P, const Line& l);

/// Peel of the connected incidence component of x inside the core;
/// nullopt when x does not survive the peel.
std::optional<ConfinedCore> confinement_certificate(const Plane& P, const std::string& point);
std::optional<ConfinedCore> confinement_certificate(const Plane& P, const Line& l);

struct StageEntry {
    int stage = 0;
    bool is_line = false;
    std::string target; // point label, or canonical line label
    std::string site;
};

struct StageLog {
    std::vector<StageEntry> entries;
    bool truncated = false;

    std::string to_text() const;
    static StageLog from_text(const std::string& text);
};

struct BuildPlusResult {
    Plane plane;
    StageLog log;
};

constexpr size_t kNoBudget = size_t(-1);

/// Stage 0: a Q copy at every unconfined point of encode(G). Stages 1..n:
/// a Q copy at every unconfined line (trivial lines included), up to `budget`
/// attachments per stage; hitting the budget sets the truncation marker.
BuildPlusResult build_plus(const Graph& g, int line_stages, size_t budget = kNoBudget);

/// For each threshold t in 2..8, reports whether the points of non-trivial
/// degree >= t are exactly the original encode(G) points. The paper's t = 4
/// row is flagged in the clause name.
Report separation_scan(const Plane& pplus, const StageLog& log);

/// Strips all logged attachments (after verifying the log replays to pplus
/// bit-exactly) and decodes the remaining plane.
Graph decode_plus(const Plane& pplus, const StageLog& log);

} // namespace planes
