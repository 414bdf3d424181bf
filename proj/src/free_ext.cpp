#include "planes/free_ext.hpp"

#include <algorithm>
#include <sstream>

#include "planes/extension.hpp"
#include "planes/label.hpp"
#include "planes/parallel.hpp"

namespace planes {

namespace {

Line resolve_by_label(const Plane& P, const Line& snapshot) {
    // the two least members of a line never leave it, so join() recovers the
    // grown line from a snapshot taken earlier
    return join(P, snapshot.members[0], snapshot.members[1]);
}

} // namespace

namespace {

/// Appends one full free level to the tower: a fresh point for every
/// unordered parallel pair of top-level lines (trivial included), in
/// canonical pair order. Returns false when the budget ran out mid-level.
bool append_free_level(FreeExtTower& t, size_t point_budget, size_t& added) {
    int n = int(t.levels.size()); // the new level's index; labels free:<n>:...
    Plane cur = t.top();
    auto snapshot = all_lines(t.top(), true);
    std::vector<FreeManifestEntry> manifest;
    bool stop = false;
    for (size_t i = 0; i < snapshot.size() && !stop; ++i) {
        for (size_t j = i + 1; j < snapshot.size(); ++j) {
            Line a = resolve_by_label(cur, snapshot[i]);
            Line b = resolve_by_label(cur, snapshot[j]);
            if (!meet(cur, a, b).bottom) continue;
            if (added >= point_budget) {
                t.truncated = true;
                stop = true;
                break;
            }
            std::string label = free_label(n, snapshot[i].label(), snapshot[j].label());
            cur = one_point_extension(cur, {a, b}, label);
            manifest.push_back({label, snapshot[i].label(), snapshot[j].label(), false});
            ++added;
        }
    }
    t.levels.push_back(std::move(cur));
    t.manifests.push_back(std::move(manifest));
    return !stop;
}

} // namespace

FreeExtTower free_extend(const Plane& P, int levels, size_t point_budget) {
    FreeExtTower t;
    t.levels.push_back(P);
    size_t added = 0;
    for (int n = 1; n <= levels; ++n)
        if (!append_free_level(t, point_budget, added)) break;
    return t;
}

MaterializeResult materialize_meet(FreeExtTower tower, const Line& l1, const Line& l2) {
    const Plane& top = tower.top();
    MeetResult m = meet(top, l1, l2); // validates both lines, rejects SameLine
    if (!m.bottom) return {std::move(tower), m.point, true};

    int level = int(tower.levels.size());
    std::string label = free_label(level, l1.label(), l2.label());
    Plane extended = one_point_extension(top, {l1, l2}, label);
    tower.levels.push_back(std::move(extended));
    tower.manifests.push_back({{label, l1.label(), l2.label(), true}});
    return {std::move(tower), label, false};
}

// ---- Desargues --------------------------------------------------------------

std::string DesarguesWitness::to_report() const {
    std::ostringstream os;
    os << "report v1\n";
    os << "kind desargues\n";
    os << "center " << center << "\n";
    os << "triangle1 " << triangle1[0] << " " << triangle1[1] << " " << triangle1[2] << "\n";
    os << "triangle2 " << triangle2[0] << " " << triangle2[1] << " " << triangle2[2] << "\n";
    os << "meet12 " << meets[0] << "\n";
    os << "meet13 " << meets[1] << "\n";
    os << "meet23 " << meets[2] << "\n";
    os << "verdict noncollinear\n";
    return os.str();
}

namespace {

bool triple_noncollinear(const Plane& P, int a, int b, int c) {
    int lid = P.stored_line_through(a, b);
    return lid < 0 || !P.stored_line_bits(lid).test(c);
}

struct PencilConfig {
    int center;
    std::array<int, 3> lines;
    std::array<int, 6> pts; // p, p', q, q', r, r'
};

/// Enumerates Desargues configurations at one center in canonical order.
template <typename F>
bool for_each_config_at(const Plane& P, int o, F&& f) {
    const auto& pencil = P.lines_of_point(o);
    int k = int(pencil.size());
    if (k < 3) return true;
    std::vector<std::vector<int>> off(k);
    for (int i = 0; i < k; ++i)
        for (int m : P.stored_line(pencil[i]))
            if (m != o) off[i].push_back(m);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            for (int l = j + 1; l < k; ++l)
                for (int p : off[i])
                    for (int pp : off[i]) {
                        if (pp == p) continue;
                        for (int q : off[j])
                            for (int qq : off[j]) {
                                if (qq == q) continue;
                                for (int r : off[l])
                                    for (int rr : off[l]) {
                                        if (rr == r) continue;
                                        PencilConfig cfg{o,
                                                         {pencil[i], pencil[j], pencil[l]},
                                                         {p, pp, q, qq, r, rr}};
                                        if (!f(cfg)) return false;
                                    }
                            }
                    }
    return true;
}

/// The three conclusion joins of a configuration, as (pointA, pointB) pairs:
/// (p,q)x(p',q'), (p,r)x(p',r'), (q,r)x(q',r').
std::array<std::array<int, 4>, 3> conclusion_pairs(const PencilConfig& c) {
    auto [p, pp, q, qq, r, rr] = std::tuple{c.pts[0], c.pts[1], c.pts[2],
                                            c.pts[3], c.pts[4], c.pts[5]};
    return {{{p, q, pp, qq}, {p, r, pp, rr}, {q, r, qq, rr}}};
}

bool config_nondegenerate(const Plane& P, const PencilConfig& c) {
    return triple_noncollinear(P, c.pts[0], c.pts[2], c.pts[4]) &&
           triple_noncollinear(P, c.pts[1], c.pts[3], c.pts[5]);
}

} // namespace

std::optional<DesarguesWitness> desargues_check(const Plane& P, int jobs) {
    int n = P.point_count();
    auto scan_center = [&](size_t oi) -> std::optional<DesarguesWitness> {
        std::optional<DesarguesWitness> found;
        for_each_config_at(P, int(oi), [&](const PencilConfig& c) {
            if (!config_nondegenerate(P, c)) return true;
            std::array<std::string, 3> meets;
            for (int t = 0; t < 3; ++t) {
                auto [a, b, a2, b2] = conclusion_pairs(c)[t];
                int l1 = P.stored_line_through(a, b);
                int l2 = P.stored_line_through(a2, b2);
                Line la = l1 >= 0 ? P.line_value(l1)
                                  : join(P, P.point_label(a), P.point_label(b));
                Line lb = l2 >= 0 ? P.line_value(l2)
                                  : join(P, P.point_label(a2), P.point_label(b2));
                if (la == lb) return true; // degenerate: joins coincide
                MeetResult m = meet(P, la, lb);
                if (m.bottom) return true; // meet does not exist: not realized
                meets[t] = m.point;
            }
            if (meets[0] == meets[1] || meets[0] == meets[2] || meets[1] == meets[2])
                return true; // fewer than three distinct points are collinear
            if (collinear(P, meets[0], meets[1], meets[2])) return true;
            DesarguesWitness w;
            w.center = P.point_label(c.center);
            w.triangle1 = {P.point_label(c.pts[0]), P.point_label(c.pts[2]),
                           P.point_label(c.pts[4])};
            w.triangle2 = {P.point_label(c.pts[1]), P.point_label(c.pts[3]),
                           P.point_label(c.pts[5])};
            w.meets = meets;
            found = w;
            return false;
        });
        return found;
    };
    return parallel_first(size_t(n), jobs, scan_center);
}

bool verify_desargues_witness(const Plane& P, const DesarguesWitness& w) {
    std::vector<std::string> seven{w.center};
    for (const auto& x : w.triangle1) seven.push_back(x);
    for (const auto& x : w.triangle2) seven.push_back(x);
    std::vector<std::string> uniq = seven;
    std::sort(uniq.begin(), uniq.end());
    if (std::unique(uniq.begin(), uniq.end()) != uniq.end()) return false;
    for (const auto& x : seven)
        if (!P.has_point(x)) return false;

    // perspective from the center
    for (int t = 0; t < 3; ++t)
        if (!collinear(P, w.center, w.triangle1[t], w.triangle2[t])) return false;
    // nondegenerate triangles
    int a = P.point_index(w.triangle1[0]), b = P.point_index(w.triangle1[1]),
        c = P.point_index(w.triangle1[2]);
    if (!triple_noncollinear(P, a, b, c)) return false;
    a = P.point_index(w.triangle2[0]);
    b = P.point_index(w.triangle2[1]);
    c = P.point_index(w.triangle2[2]);
    if (!triple_noncollinear(P, a, b, c)) return false;
    // pencil lines pairwise distinct
    for (int s = 0; s < 3; ++s)
        for (int t = s + 1; t < 3; ++t)
            if (join(P, w.center, w.triangle1[s]).members ==
                join(P, w.center, w.triangle1[t]).members)
                return false;
    // each meet lies on both conclusion joins
    const std::array<std::array<int, 2>, 3> idx{{{0, 1}, {0, 2}, {1, 2}}};
    for (int t = 0; t < 3; ++t) {
        auto [s1, s2] = idx[t];
        Line l1 = join(P, w.triangle1[s1], w.triangle1[s2]);
        Line l2 = join(P, w.triangle2[s1], w.triangle2[s2]);
        const std::string& m = w.meets[t];
        if (!std::binary_search(l1.members.begin(), l1.members.end(), m)) return false;
        if (!std::binary_search(l2.members.begin(), l2.members.end(), m)) return false;
    }
    // the violation itself
    if (w.meets[0] == w.meets[1] || w.meets[0] == w.meets[2] || w.meets[1] == w.meets[2])
        return false;
    return !collinear(P, w.meets[0], w.meets[1], w.meets[2]);
}

DesarguesSearchResult desargues_violation_search(FreeExtTower tower, size_t budget) {
    if (is_projective(tower.base()))
        throw PlaneError(Err::NotApplicable, "base plane is projective; F(P) = P");

    DesarguesSearchResult res;
    res.tower = std::move(tower);

    for (int attempt = 0; attempt < 3; ++attempt) {
        const Plane snapshot = res.tower.top();
        bool any_config = false;
        for (int o = 0; o < snapshot.point_count() && res.configs_tried < budget; ++o) {
            bool keep_going = for_each_config_at(snapshot, o, [&](const PencilConfig& c) {
                if (res.configs_tried >= budget) return false;
                if (!config_nondegenerate(snapshot, c)) return true;
                any_config = true;
                ++res.configs_tried;

                // materialize the three conclusion meets on the live tower
                const Plane* live = &res.tower.top();
                std::array<std::string, 3> meets;
                for (int t = 0; t < 3; ++t) {
                    auto [a, b, a2, b2] = conclusion_pairs(c)[t];
                    Line la = join(*live, snapshot.point_label(a), snapshot.point_label(b));
                    Line lb = join(*live, snapshot.point_label(a2), snapshot.point_label(b2));
                    if (la == lb) return true; // degenerate configuration
                    auto mat = materialize_meet(std::move(res.tower), la, lb);
                    res.tower = std::move(mat.tower);
                    live = &res.tower.top();
                    meets[t] = mat.point;
                }
                if (meets[0] == meets[1] || meets[0] == meets[2] || meets[1] == meets[2])
                    return true;
                if (collinear(*live, meets[0], meets[1], meets[2])) return true;

                DesarguesWitness w;
                w.center = snapshot.point_label(c.center);
                w.triangle1 = {snapshot.point_label(c.pts[0]), snapshot.point_label(c.pts[2]),
                               snapshot.point_label(c.pts[4])};
                w.triangle2 = {snapshot.point_label(c.pts[1]), snapshot.point_label(c.pts[3]),
                               snapshot.point_label(c.pts[5])};
                w.meets = meets;
                res.witness = w;
                return false;
            });
            if (!keep_going && res.witness) break;
        }
        if (res.witness || res.configs_tried >= budget) break;
        if (!any_config) {
            // no realizable configuration yet; grow one free level and retry
            size_t added = 0;
            append_free_level(res.tower, size_t(-1), added);
        } else {
            break; // configs existed but all satisfied Desargues within budget
        }
    }
    return res;
}

} // namespace planes
