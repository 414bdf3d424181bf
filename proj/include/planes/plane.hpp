#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "planes/bits.hpp"
#include "planes/errors.hpp"

namespace planes {

/// A line as a value: its sorted member labels. Lines with exactly two
/// members are trivial; they are never stored in a Plane, only materialized
/// on demand. The canonical label of a line is derived from its two least
/// members.
struct Line {
    std::vector<std::string> members; // sorted by label

    bool trivial() const { return members.size() == 2; }
    std::string label() const { return members[0] + "," + members[1]; }

    bool operator==(const Line& o) const { return members == o.members; }
    bool operator<(const Line& o) const { return members < o.members; }
};

struct MeetResult {
    bool bottom = true;             // true iff the lines are parallel
    std::string point;              // set iff !bottom

    static MeetResult at(std::string p) { return {false, std::move(p)}; }
    static MeetResult none() { return {true, {}}; }
};

/// One clause of a validation report.
struct ReportClause {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct Report {
    std::string subject;
    std::vector<ReportClause> clauses;

    bool ok() const {
        for (const auto& c : clauses)
            if (!c.ok) return false;
        return true;
    }
    void add(const std::string& name, bool pass, const std::string& detail = "") {
        clauses.push_back({name, pass, detail});
    }
    std::string to_text() const;
    std::string to_machine() const;
};

/// Finite simple rank-3 incidence structure. Only lines with >= 3 points are
/// stored; every uncovered point pair is implicitly a trivial line. Immutable
/// after construction; extension operations return new planes.
///
/// Point indices follow the sorted label order, so index order is the
/// canonical enumeration order everywhere.
class Plane {
public:
    Plane() = default;

    /// Full axiom check on raw data (the spec's new_plane). Throws
    /// DuplicateLabel / LineTooSmall / AxiomB / UnknownPoint.
    static Plane from_raw(const std::vector<std::string>& points,
                          const std::vector<std::vector<std::string>>& lines);

    int point_count() const { return int(pts_.size()); }
    const std::vector<std::string>& point_labels() const { return pts_; }
    const std::string& point_label(int i) const { return pts_[i]; }
    bool has_point(const std::string& p) const { return idx_.count(p) != 0; }
    int point_index(const std::string& p) const;

    int stored_line_count() const { return int(lines_.size()); }
    const std::vector<int>& stored_line(int lid) const { return lines_[lid]; }
    const Bits& stored_line_bits(int lid) const { return line_bits_[lid]; }
    const std::vector<int>& lines_of_point(int pid) const { return point_lines_[pid]; }

    /// Stored line through both points, or -1.
    int stored_line_through(int p, int q) const;
    /// Stored line with exactly these member indices (sorted), or -1.
    int find_stored_line(const std::vector<int>& members) const;

    Line line_value(int lid) const;
    std::vector<std::string> member_labels(int lid) const;

    /// Trusted extension used by one_point_extension: add a fresh point and
    /// append it to the given targets (stored line ids and/or trivial pairs).
    /// Axiom preservation comes from the caller checking the Fact-2.2
    /// precondition; this only asserts structural soundness.
    Plane extended(const std::string& fresh_label,
                   const std::vector<int>& stored_targets,
                   const std::vector<std::pair<int, int>>& trivial_targets) const;

    /// Induced subplane: keep the given points; stored lines are the
    /// restrictions that still carry >= 3 points.
    Plane restricted_to(const std::vector<std::string>& keep) const;

    bool operator==(const Plane& o) const { return pts_ == o.pts_ && label_lines() == o.label_lines(); }

    /// All stored lines as sorted label vectors (canonical form).
    std::vector<std::vector<std::string>> label_lines() const;

private:
    static Plane build(std::vector<std::string> points,
                       std::vector<std::vector<std::string>> lines,
                       bool full_check);

    std::vector<std::string> pts_;               // sorted, unique
    std::unordered_map<std::string, int> idx_;
    std::vector<std::vector<int>> lines_;        // sorted member indices; lex-sorted
    std::vector<Bits> line_bits_;
    std::vector<std::vector<int>> point_lines_;
};

// ---- spec operations -------------------------------------------------------

inline Plane new_plane(const std::vector<std::string>& points,
                       const std::vector<std::vector<std::string>>& lines) {
    return Plane::from_raw(points, lines);
}

Line join(const Plane& P, const std::string& p, const std::string& q);
MeetResult meet(const Plane& P, const Line& l1, const Line& l2);
bool is_trivial(const Plane& P, const Line& l);
bool are_parallel(const Plane& P, const Line& l1, const Line& l2);
bool collinear(const Plane& P, const std::string& p, const std::string& q, const std::string& r);

/// Stored lines plus, if requested, every uncovered point pair, in canonical
/// (member-vector lexicographic) order.
std::vector<Line> all_lines(const Plane& P, bool include_trivial);

Report validate_plane(const Plane& P);
bool is_projective(const Plane& P);
int nontrivial_degree(const Plane& P, const std::string& p);

namespace detail {

/// Resolved form of a Line value against a concrete plane.
struct ResolvedLine {
    int stored_id = -1;          // >= 0 iff stored
    std::pair<int, int> pair{-1, -1}; // set iff trivial
    bool trivial() const { return stored_id < 0; }
};

/// Validates that `l` is a line of P (stored exactly, or an uncovered pair).
/// Throws UnknownLine otherwise.
ResolvedLine resolve_line(const Plane& P, const Line& l);

bool lines_parallel(const Plane& P, const ResolvedLine& a, const ResolvedLine& b);

} // namespace detail

} // namespace planes
