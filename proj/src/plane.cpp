#include "planes/plane.hpp"

#include <algorithm>
#include <sstream>

#include "planes/label.hpp"

namespace planes {

const char* err_name(Err e) {
    switch (e) {
        case Err::DuplicateLabel: return "DuplicateLabel";
        case Err::LineTooSmall: return "LineTooSmall";
        case Err::AxiomB: return "AxiomB";
        case Err::UnknownPoint: return "UnknownPoint";
        case Err::SamePoint: return "SamePoint";
        case Err::UnknownLine: return "UnknownLine";
        case Err::SameLine: return "SameLine";
        case Err::NotDistinct: return "NotDistinct";
        case Err::NotParallel: return "NotParallel";
        case Err::StaleLabel: return "StaleLabel";
        case Err::ParseError: return "ParseError";
        case Err::UnsupportedOrder: return "UnsupportedOrder";
        case Err::NoEmbedding: return "NoEmbedding";
        case Err::Ambiguous: return "Ambiguous";
        case Err::MalformedGadget: return "MalformedGadget";
        case Err::LogMismatch: return "LogMismatch";
        case Err::NotApplicable: return "NotApplicable";
        case Err::UnknownElement: return "UnknownElement";
    }
    return "Unknown";
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "report: " << subject << "\n";
    for (const auto& c : clauses) {
        os << "  [" << (c.ok ? "pass" : "FAIL") << "] " << c.name;
        if (!c.detail.empty()) os << " -- " << c.detail;
        os << "\n";
    }
    os << (ok() ? "OK" : "FAILED") << "\n";
    return os.str();
}

std::string Report::to_machine() const {
    std::ostringstream os;
    os << "report v1\n";
    os << "subject " << subject << "\n";
    for (const auto& c : clauses) {
        os << "clause " << (c.ok ? "pass" : "fail") << " " << c.name;
        if (!c.detail.empty()) os << " " << c.detail;
        os << "\n";
    }
    os << "verdict " << (ok() ? "pass" : "fail") << "\n";
    return os.str();
}

Plane Plane::build(std::vector<std::string> points,
                   std::vector<std::vector<std::string>> lines,
                   bool full_check) {
    Plane P;
    std::sort(points.begin(), points.end());
    for (size_t i = 0; i + 1 < points.size(); ++i)
        if (points[i] == points[i + 1])
            throw PlaneError(Err::DuplicateLabel, "point '" + points[i] + "'");
    for (const auto& p : points)
        if (!label_valid(p))
            throw PlaneError(Err::ParseError, "bad point label '" + p + "'");
    P.pts_ = std::move(points);
    P.idx_.reserve(P.pts_.size() * 2);
    for (int i = 0; i < int(P.pts_.size()); ++i) P.idx_[P.pts_[i]] = i;

    std::vector<std::vector<int>> ls;
    ls.reserve(lines.size());
    for (auto& lm : lines) {
        if (lm.size() < 3)
            throw PlaneError(Err::LineTooSmall,
                             "line with " + std::to_string(lm.size()) + " members");
        std::vector<int> m;
        m.reserve(lm.size());
        for (const auto& lbl : lm) {
            auto it = P.idx_.find(lbl);
            if (it == P.idx_.end())
                throw PlaneError(Err::UnknownPoint, "line member '" + lbl + "'");
            m.push_back(it->second);
        }
        std::sort(m.begin(), m.end());
        for (size_t i = 0; i + 1 < m.size(); ++i)
            if (m[i] == m[i + 1])
                throw PlaneError(Err::DuplicateLabel,
                                 "repeated member '" + P.pts_[m[i]] + "' in line");
        ls.push_back(std::move(m));
    }
    std::sort(ls.begin(), ls.end());
    P.lines_ = std::move(ls);

    P.line_bits_.reserve(P.lines_.size());
    P.point_lines_.assign(P.pts_.size(), {});
    for (int lid = 0; lid < int(P.lines_.size()); ++lid) {
        Bits b(P.point_count());
        for (int m : P.lines_[lid]) {
            b.set(m);
            P.point_lines_[m].push_back(lid);
        }
        P.line_bits_.push_back(std::move(b));
    }

    if (full_check) {
        for (size_t i = 0; i + 1 < P.lines_.size(); ++i)
            if (P.lines_[i] == P.lines_[i + 1])
                throw PlaneError(Err::AxiomB, "duplicate line {" + P.pts_[P.lines_[i][0]] + ",...}");
        for (size_t i = 0; i < P.lines_.size(); ++i)
            for (size_t j = i + 1; j < P.lines_.size(); ++j)
                if (P.line_bits_[i].intersect_count(P.line_bits_[j]) > 1) {
                    int w = P.line_bits_[i].intersect_single(P.line_bits_[j]);
                    throw PlaneError(Err::AxiomB,
                                     "lines " + P.line_value(int(i)).label() + " and " +
                                         P.line_value(int(j)).label() +
                                         " share >1 point (e.g. '" + P.pts_[w] + "')");
                }
    }
    return P;
}

Plane Plane::from_raw(const std::vector<std::string>& points,
                      const std::vector<std::vector<std::string>>& lines) {
    return build(points, lines, /*full_check=*/true);
}

int Plane::point_index(const std::string& p) const {
    auto it = idx_.find(p);
    if (it == idx_.end()) throw PlaneError(Err::UnknownPoint, "'" + p + "'");
    return it->second;
}

int Plane::stored_line_through(int p, int q) const {
    const auto& lp = point_lines_[p];
    const auto& lq = point_lines_[q];
    const auto& smaller = lp.size() <= lq.size() ? lp : lq;
    int other = lp.size() <= lq.size() ? q : p;
    for (int lid : smaller)
        if (line_bits_[lid].test(other)) return lid;
    return -1;
}

int Plane::find_stored_line(const std::vector<int>& members) const {
    auto it = std::lower_bound(lines_.begin(), lines_.end(), members);
    if (it != lines_.end() && *it == members) return int(it - lines_.begin());
    return -1;
}

Line Plane::line_value(int lid) const { return Line{member_labels(lid)}; }

std::vector<std::string> Plane::member_labels(int lid) const {
    std::vector<std::string> out;
    out.reserve(lines_[lid].size());
    for (int m : lines_[lid]) out.push_back(pts_[m]);
    return out;
}

std::vector<std::vector<std::string>> Plane::label_lines() const {
    std::vector<std::vector<std::string>> out;
    out.reserve(lines_.size());
    for (int lid = 0; lid < int(lines_.size()); ++lid) out.push_back(member_labels(lid));
    return out;
}

Plane Plane::extended(const std::string& fresh_label,
                      const std::vector<int>& stored_targets,
                      const std::vector<std::pair<int, int>>& trivial_targets) const {
    if (has_point(fresh_label))
        throw PlaneError(Err::StaleLabel, "'" + fresh_label + "' already present");
    if (!label_valid(fresh_label))
        throw PlaneError(Err::ParseError, "bad point label '" + fresh_label + "'");

    std::vector<std::string> points = pts_;
    points.push_back(fresh_label);
    auto lines = label_lines();
    for (int lid : stored_targets) lines[lid].push_back(fresh_label);
    for (auto [a, b] : trivial_targets) lines.push_back({pts_[a], pts_[b], fresh_label});
    for (auto& l : lines) std::sort(l.begin(), l.end());
    return build(std::move(points), std::move(lines), /*full_check=*/false);
}

Plane Plane::restricted_to(const std::vector<std::string>& keep) const {
    std::vector<std::string> points;
    points.reserve(keep.size());
    for (const auto& p : keep) {
        point_index(p); // throws on unknown
        points.push_back(p);
    }
    std::sort(points.begin(), points.end());
    Bits keepb(point_count());
    for (const auto& p : points) keepb.set(idx_.at(p));

    std::vector<std::vector<std::string>> lines;
    for (int lid = 0; lid < stored_line_count(); ++lid) {
        std::vector<std::string> m;
        for (int x : lines_[lid])
            if (keepb.test(x)) m.push_back(pts_[x]);
        if (m.size() >= 3) lines.push_back(std::move(m));
    }
    return build(std::move(points), std::move(lines), /*full_check=*/false);
}

// ---- operations ------------------------------------------------------------

namespace detail {

ResolvedLine resolve_line(const Plane& P, const Line& l) {
    if (l.members.size() < 2)
        throw PlaneError(Err::UnknownLine, "line value with <2 members");
    std::vector<int> m;
    m.reserve(l.members.size());
    for (const auto& lbl : l.members) {
        if (!P.has_point(lbl))
            throw PlaneError(Err::UnknownLine, "member '" + lbl + "' not in plane");
        m.push_back(P.point_index(lbl));
    }
    std::sort(m.begin(), m.end());
    if (m.size() == 2) {
        if (P.stored_line_through(m[0], m[1]) >= 0)
            throw PlaneError(Err::UnknownLine,
                             "pair {" + l.members[0] + "," + l.members[1] +
                                 "} lies on a stored line; not a trivial line");
        ResolvedLine r;
        r.pair = {m[0], m[1]};
        return r;
    }
    int lid = P.find_stored_line(m);
    if (lid < 0)
        throw PlaneError(Err::UnknownLine, "no stored line " + l.label() + ",...");
    ResolvedLine r;
    r.stored_id = lid;
    return r;
}

bool lines_parallel(const Plane& P, const ResolvedLine& a, const ResolvedLine& b) {
    if (!a.trivial() && !b.trivial())
        return !P.stored_line_bits(a.stored_id).intersects(P.stored_line_bits(b.stored_id));
    if (a.trivial() && b.trivial())
        return a.pair.first != b.pair.first && a.pair.first != b.pair.second &&
               a.pair.second != b.pair.first && a.pair.second != b.pair.second;
    const ResolvedLine& t = a.trivial() ? a : b;
    const ResolvedLine& s = a.trivial() ? b : a;
    return !P.stored_line_bits(s.stored_id).test(t.pair.first) &&
           !P.stored_line_bits(s.stored_id).test(t.pair.second);
}

} // namespace detail

Line join(const Plane& P, const std::string& p, const std::string& q) {
    if (p == q) throw PlaneError(Err::SamePoint, "'" + p + "'");
    int pi = P.point_index(p), qi = P.point_index(q);
    int lid = P.stored_line_through(pi, qi);
    if (lid >= 0) return P.line_value(lid);
    std::vector<std::string> m{p, q};
    std::sort(m.begin(), m.end());
    return Line{std::move(m)};
}

MeetResult meet(const Plane& P, const Line& l1, const Line& l2) {
    auto a = detail::resolve_line(P, l1);
    auto b = detail::resolve_line(P, l2);
    if ((!a.trivial() && !b.trivial() && a.stored_id == b.stored_id) ||
        (a.trivial() && b.trivial() && a.pair == b.pair))
        throw PlaneError(Err::SameLine, l1.label());
    if (!a.trivial() && !b.trivial()) {
        int w = P.stored_line_bits(a.stored_id).intersect_single(P.stored_line_bits(b.stored_id));
        return w < 0 ? MeetResult::none() : MeetResult::at(P.point_label(w));
    }
    if (a.trivial() && b.trivial()) {
        for (int x : {a.pair.first, a.pair.second})
            for (int y : {b.pair.first, b.pair.second})
                if (x == y) return MeetResult::at(P.point_label(x));
        return MeetResult::none();
    }
    const auto& t = a.trivial() ? a : b;
    const auto& s = a.trivial() ? b : a;
    if (P.stored_line_bits(s.stored_id).test(t.pair.first))
        return MeetResult::at(P.point_label(t.pair.first));
    if (P.stored_line_bits(s.stored_id).test(t.pair.second))
        return MeetResult::at(P.point_label(t.pair.second));
    return MeetResult::none();
}

bool is_trivial(const Plane& P, const Line& l) {
    detail::resolve_line(P, l);
    return l.members.size() == 2;
}

bool are_parallel(const Plane& P, const Line& l1, const Line& l2) {
    return meet(P, l1, l2).bottom;
}

bool collinear(const Plane& P, const std::string& p, const std::string& q, const std::string& r) {
    if (p == q || p == r || q == r)
        throw PlaneError(Err::NotDistinct, p + "," + q + "," + r);
    int pi = P.point_index(p), qi = P.point_index(q), ri = P.point_index(r);
    int lid = P.stored_line_through(pi, qi);
    return lid >= 0 && P.stored_line_bits(lid).test(ri);
}

std::vector<Line> all_lines(const Plane& P, bool include_trivial) {
    std::vector<Line> out;
    for (int lid = 0; lid < P.stored_line_count(); ++lid) out.push_back(P.line_value(lid));
    if (include_trivial) {
        int n = P.point_count();
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (P.stored_line_through(i, j) < 0)
                    out.push_back(Line{{P.point_label(i), P.point_label(j)}});
        std::sort(out.begin(), out.end());
    }
    return out;
}

Report validate_plane(const Plane& P) {
    Report rep;
    rep.subject = "plane(" + std::to_string(P.point_count()) + " points, " +
                  std::to_string(P.stored_line_count()) + " lines)";

    bool sizes_ok = true;
    for (int lid = 0; lid < P.stored_line_count(); ++lid)
        if (P.stored_line(lid).size() < 3) sizes_ok = false;
    rep.add("stored lines have >=3 points", sizes_ok);

    bool axiom_b = true;
    std::string detail;
    for (int i = 0; i < P.stored_line_count() && axiom_b; ++i)
        for (int j = i + 1; j < P.stored_line_count(); ++j)
            if (P.stored_line_bits(i).intersect_count(P.stored_line_bits(j)) > 1) {
                axiom_b = false;
                detail = P.line_value(i).label() + " vs " + P.line_value(j).label();
                break;
            }
    rep.add("two lines share at most one point", axiom_b, detail);

    // axiom D: three non-collinear points, required once |points| >= 3
    bool axiom_d = true;
    if (P.point_count() >= 3) {
        for (int lid = 0; lid < P.stored_line_count(); ++lid)
            if (int(P.stored_line(lid).size()) == P.point_count()) axiom_d = false;
        rep.add("three non-collinear points exist", axiom_d,
                axiom_d ? "" : "all points lie on one line");
    }
    return rep;
}

bool is_projective(const Plane& P) {
    auto ls = all_lines(P, true);
    for (size_t i = 0; i < ls.size(); ++i)
        for (size_t j = i + 1; j < ls.size(); ++j)
            if (meet(P, ls[i], ls[j]).bottom) return false;
    return true;
}

int nontrivial_degree(const Plane& P, const std::string& p) {
    return int(P.lines_of_point(P.point_index(p)).size());
}

} // namespace planes
