#pragma once

#include <string>
#include <vector>

#include "planes/plane.hpp"

namespace planes {

/// One replayable construction step: a single one-point extension. Target
/// lines are recorded by canonical label (two least members at application
/// time); any two points of a plane determine at most one line, so the labels
/// resolve unambiguously during replay.
struct ExtensionStep {
    std::string new_label;
    std::vector<std::string> targets; // canonical line labels
    std::string tag;                  // originating vertex/edge/site, free-form
};

struct BuildLog {
    std::vector<ExtensionStep> steps;

    std::string to_text() const;
    static BuildLog from_text(const std::string& text);
};

/// Fact 2.2: extend P by a fresh point incident with exactly the lines of L
/// (which must be pairwise parallel; trivial lines in L become stored
/// 3-point lines). L may be empty.
Plane one_point_extension(const Plane& P, const std::vector<Line>& L, const std::string& label);

/// Replays a log of one-point extensions from a base plane. Bit-exact.
Plane replay(const Plane& base, const BuildLog& log);

/// Ditor's rigid 13-point, 11-line plane with points a..o (i, j unused).
Plane q_plane();
Report validate_q();

/// Construction 4.4: attach an independent copy of Q identifying host point p
/// with Q's point a. New points are labeled q:<site>:<letter>. Adds 12 points.
Plane attach_q_at_point(const Plane& P, const std::string& p, const std::string& site,
                        BuildLog* log = nullptr);

/// Construction 4.5: attach an independent copy of Q identifying host line l
/// with Q's line a∨b (a, b = the two least points of l). l may be trivial.
/// Adds 11 points; l gains the copies of c, d, e.
Plane attach_q_at_line(const Plane& P, const Line& l, const std::string& site,
                       BuildLog* log = nullptr);

} // namespace planes
