#include "planes/confinement.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "planes/label.hpp"

namespace planes {

bool ConfinedCore::has_point(const std::string& p) const {
    return std::binary_search(points.begin(), points.end(), p);
}

bool ConfinedCore::has_line_through(const std::string& a, const std::string& b) const {
    for (const auto& l : lines)
        if (std::binary_search(l.begin(), l.end(), a) && std::binary_search(l.begin(), l.end(), b))
            return true;
    return false;
}

Plane ConfinedCore::as_plane() const {
    std::vector<std::vector<std::string>> ls = lines;
    return Plane::from_raw(points, ls);
}

ConfinedCore peel(const Plane& P) {
    int n = P.point_count();
    int L = P.stored_line_count();
    std::vector<bool> point_alive(n, true), line_alive(L, true);
    ConfinedCore core;

    for (;;) {
        bool changed = false;
        for (int lid = 0; lid < L; ++lid) {
            if (!line_alive[lid]) continue;
            int have = 0;
            for (int m : P.stored_line(lid))
                if (point_alive[m]) ++have;
            if (have < 3) {
                line_alive[lid] = false;
                changed = true;
                core.trace.push_back("line " + P.line_value(lid).label() + " (" +
                                     std::to_string(have) + " surviving points)");
            }
        }
        for (int pid = 0; pid < n; ++pid) {
            if (!point_alive[pid]) continue;
            int deg = 0;
            for (int lid : P.lines_of_point(pid))
                if (line_alive[lid]) ++deg;
            if (deg < 3) {
                point_alive[pid] = false;
                changed = true;
                core.trace.push_back("point " + P.point_label(pid) + " (degree " +
                                     std::to_string(deg) + ")");
            }
        }
        if (!changed) break;
    }

    for (int pid = 0; pid < n; ++pid)
        if (point_alive[pid]) core.points.push_back(P.point_label(pid));
    for (int lid = 0; lid < L; ++lid) {
        if (!line_alive[lid]) continue;
        std::vector<std::string> mem;
        for (int m : P.stored_line(lid))
            if (point_alive[m]) mem.push_back(P.point_label(m));
        core.lines.push_back(std::move(mem));
    }
    std::sort(core.lines.begin(), core.lines.end());
    return core;
}

bool is_confined(const Plane& P, const std::string& point) {
    P.point_index(point); // UnknownElement if absent
    return peel(P).has_point(point);
}

bool is_confined(const Plane& P, const Line& l) {
    detail::resolve_line(P, l);
    if (l.trivial()) return false; // a trivial line never carries 3 core points
    return peel(P).has_line_through(l.members[0], l.members[1]);
}

namespace {

/// Connected component of `seed` (a point, or a line picked by two member
/// labels) in the bipartite incidence graph of the core.
ConfinedCore core_component(const ConfinedCore& core, const std::string& seed_point,
                            const std::pair<std::string, std::string>* seed_line) {
    int np = int(core.points.size()), nl = int(core.lines.size());
    std::vector<std::vector<int>> lines_of(np);
    for (int l = 0; l < nl; ++l)
        for (const auto& m : core.lines[l]) {
            int p = int(std::lower_bound(core.points.begin(), core.points.end(), m) -
                        core.points.begin());
            lines_of[p].push_back(l);
        }
    std::vector<bool> pv(np, false), lv(nl, false);
    std::vector<int> stackp, stackl;
    if (seed_line) {
        for (int l = 0; l < nl; ++l)
            if (std::binary_search(core.lines[l].begin(), core.lines[l].end(), seed_line->first) &&
                std::binary_search(core.lines[l].begin(), core.lines[l].end(), seed_line->second)) {
                lv[l] = true;
                stackl.push_back(l);
            }
    } else {
        int p = int(std::lower_bound(core.points.begin(), core.points.end(), seed_point) -
                    core.points.begin());
        pv[p] = true;
        stackp.push_back(p);
    }
    while (!stackp.empty() || !stackl.empty()) {
        if (!stackp.empty()) {
            int p = stackp.back();
            stackp.pop_back();
            for (int l : lines_of[p])
                if (!lv[l]) {
                    lv[l] = true;
                    stackl.push_back(l);
                }
        } else {
            int l = stackl.back();
            stackl.pop_back();
            for (const auto& m : core.lines[l]) {
                int p = int(std::lower_bound(core.points.begin(), core.points.end(), m) -
                            core.points.begin());
                if (!pv[p]) {
                    pv[p] = true;
                    stackp.push_back(p);
                }
            }
        }
    }
    ConfinedCore out;
    for (int p = 0; p < np; ++p)
        if (pv[p]) out.points.push_back(core.points[p]);
    for (int l = 0; l < nl; ++l)
        if (lv[l]) out.lines.push_back(core.lines[l]);
    return out;
}

} // namespace

std::optional<ConfinedCore> confinement_certificate(const Plane& P, const std::string& point) {
    P.point_index(point);
    ConfinedCore core = peel(P);
    if (!core.has_point(point)) return std::nullopt;
    return core_component(core, point, nullptr);
}

std::optional<ConfinedCore> confinement_certificate(const Plane& P, const Line& l) {
    detail::resolve_line(P, l);
    if (l.trivial()) return std::nullopt;
    ConfinedCore core = peel(P);
    if (!core.has_line_through(l.members[0], l.members[1])) return std::nullopt;
    std::pair<std::string, std::string> seed{l.members[0], l.members[1]};
    return core_component(core, "", &seed);
}

// ---- staged Q attachment ----------------------------------------------------

std::string StageLog::to_text() const {
    std::ostringstream os;
    os << "stagelog v1\n";
    for (const auto& e : entries)
        os << "stage " << e.stage << " " << (e.is_line ? "line" : "point") << " " << e.target
           << " site " << e.site << "\n";
    os << "truncated " << (truncated ? "true" : "false") << "\n";
    return os.str();
}

StageLog StageLog::from_text(const std::string& text) {
    StageLog log;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    bool header = false;
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        auto fail = [&](const std::string& what) -> void {
            throw PlaneError(Err::ParseError, "line " + std::to_string(lineno) + ": " + what);
        };
        if (!header) {
            std::string v;
            ls >> v;
            if (tok != "stagelog" || v != "v1") fail("expected 'stagelog v1'");
            header = true;
            continue;
        }
        if (tok == "stage") {
            StageEntry e;
            std::string kind, sitekw;
            if (!(ls >> e.stage >> kind >> e.target >> sitekw >> e.site)) fail("bad stage entry");
            if (kind != "point" && kind != "line") fail("kind must be point|line");
            if (sitekw != "site") fail("expected 'site'");
            e.is_line = kind == "line";
            log.entries.push_back(std::move(e));
        } else if (tok == "truncated") {
            std::string b;
            ls >> b;
            log.truncated = b == "true";
        } else {
            fail("unknown directive '" + tok + "'");
        }
    }
    return log;
}

namespace {

Line line_from_canonical_label(const Plane& P, const std::string& label) {
    auto comma = label.find(',');
    if (comma == std::string::npos)
        throw PlaneError(Err::ParseError, "bad line label '" + label + "'");
    return join(P, label.substr(0, comma), label.substr(comma + 1));
}

/// Unconfined lines of P in canonical order: stored lines off the core plus
/// every trivial line, merged lazily so a budget stops the enumeration early.
template <typename F>
void for_each_unconfined_line(const Plane& P, const ConfinedCore& core, F&& f) {
    int n = P.point_count();
    int s = 0;
    int i = 0, j = 1;
    auto pair_covered = [&](int a, int b) { return P.stored_line_through(a, b) >= 0; };
    auto advance_pair = [&] {
        ++j;
        if (j >= n) {
            ++i;
            j = i + 1;
        }
    };
    while (s < P.stored_line_count() || i < n - 1) {
        while (i < n - 1 && pair_covered(i, j)) advance_pair();
        bool take_stored;
        if (s >= P.stored_line_count())
            take_stored = false;
        else if (i >= n - 1)
            take_stored = true;
        else {
            std::vector<std::string> pv{P.point_label(i), P.point_label(j)};
            take_stored = P.member_labels(s) < pv;
        }
        if (take_stored) {
            Line l = P.line_value(s);
            ++s;
            if (!core.has_line_through(l.members[0], l.members[1]))
                if (!f(l)) return;
        } else {
            Line l{{P.point_label(i), P.point_label(j)}};
            advance_pair();
            if (!f(l)) return; // trivial lines are never confined
        }
    }
}

} // namespace

BuildPlusResult build_plus(const Graph& g, int line_stages, size_t budget) {
    BuildPlusResult res;
    res.plane = encode(g).plane;
    Plane& P = res.plane;

    // stage 0: points
    {
        ConfinedCore core = peel(P);
        std::vector<std::string> targets;
        for (const auto& p : P.point_labels())
            if (!core.has_point(p)) targets.push_back(p);
        size_t count = 0;
        for (const auto& p : targets) {
            if (count >= budget) {
                res.log.truncated = true;
                break;
            }
            std::string site = "s0i" + std::to_string(count);
            P = attach_q_at_point(P, p, site);
            res.log.entries.push_back({0, false, p, site});
            ++count;
        }
    }

    for (int stage = 1; stage <= line_stages; ++stage) {
        ConfinedCore core = peel(P);
        std::vector<std::string> targets;
        size_t cap = budget;
        for_each_unconfined_line(P, core, [&](const Line& l) {
            if (targets.size() >= cap) return false;
            targets.push_back(l.label());
            return true;
        });
        // detect truncation: one more target would have existed
        bool more = false;
        size_t seen = 0;
        for_each_unconfined_line(P, core, [&](const Line&) {
            if (++seen > targets.size()) {
                more = true;
                return false;
            }
            return true;
        });
        if (more) res.log.truncated = true;
        size_t idx = 0;
        for (const auto& lbl : targets) {
            Line l = line_from_canonical_label(P, lbl);
            std::string site = "s" + std::to_string(stage) + "i" + std::to_string(idx++);
            P = attach_q_at_line(P, l, site);
            res.log.entries.push_back({stage, true, lbl, site});
        }
    }
    return res;
}

Report separation_scan(const Plane& pplus, const StageLog& log) {
    Report rep;
    rep.subject = "separation scan (" + std::to_string(log.entries.size()) + " attachments)";
    std::set<std::string> original;
    for (const auto& p : pplus.point_labels())
        if (label_ns(p) != LabelNs::Q) original.insert(p);

    for (int t = 2; t <= 8; ++t) {
        std::set<std::string> st;
        for (const auto& p : pplus.point_labels())
            if (nontrivial_degree(pplus, p) >= t) st.insert(p);
        bool equal = st == original;
        std::string name = "threshold t=" + std::to_string(t) +
                           (t == 4 ? " (paper's threshold)" : "");
        rep.add(name, equal,
                "|{deg>=t}| = " + std::to_string(st.size()) + ", |originals| = " +
                    std::to_string(original.size()));
    }
    return rep;
}

Graph decode_plus(const Plane& pplus, const StageLog& log) {
    std::vector<std::string> keep;
    for (const auto& p : pplus.point_labels())
        if (label_ns(p) != LabelNs::Q) keep.push_back(p);
    Plane base = pplus.restricted_to(keep);

    // the log must replay from the stripped plane to pplus, bit-exactly
    Plane replayed = base;
    try {
        for (const auto& e : log.entries) {
            std::string site = e.site;
            if (e.is_line)
                replayed = attach_q_at_line(replayed, line_from_canonical_label(replayed, e.target), site);
            else
                replayed = attach_q_at_point(replayed, e.target, site);
        }
    } catch (const PlaneError& err) {
        throw PlaneError(Err::LogMismatch, std::string("replay failed: ") + err.what());
    }
    if (!(replayed == pplus))
        throw PlaneError(Err::LogMismatch, "log does not reproduce the given plane");
    return decode(base);
}

} // namespace planes
