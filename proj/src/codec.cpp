#include "planes/codec.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "planes/iso.hpp"
#include "planes/label.hpp"

namespace planes {

namespace {

// The 17-point seed. Its load-bearing properties (all machine-checked by
// validate_anchor): rigidity; p2, 0 and 1' have the exact non-trivial pencils
// the decoding relies on; p3 and q carry exactly four non-trivial lines each,
// and the four p3-lines cover every point except q.
const char* kAnchorPoints[17] = {
    "q", "p2", "p3", "0", "1", "2", "3", "0'", "1'", "2'", "3'",
    "1_0", "2_0", "2_1", "3_0", "3_1", "3_2",
};

const std::vector<std::vector<const char*>>& anchor_matrix() {
    static const std::vector<std::vector<const char*>> m = {
        {"p3", "p2", "0", "1", "2", "3"},
        {"p3", "0'", "1'", "2'", "3'"},
        {"p3", "1_0", "2_0", "3_0"},
        {"p3", "2_1", "3_1", "3_2"},
        {"p2", "1'", "2_1"},
        {"0", "1'", "1_0"},
        {"q", "0", "0'"},
        {"q", "1", "2'"},
        {"q", "2", "3_1"},
        {"q", "3", "3_2"},
        {"1", "3'", "2_0"},
        {"2", "3'", "2_1"},
    };
    return m;
}

std::string anchor_label(const std::string& name) { return "anchor:" + name; }

} // namespace

const std::vector<std::string>& anchor_labels() {
    static const std::vector<std::string> labels = [] {
        std::vector<std::string> v;
        for (const char* p : kAnchorPoints) v.push_back(anchor_label(p));
        std::sort(v.begin(), v.end());
        return v;
    }();
    return labels;
}

Plane anchor_plane() {
    std::vector<std::string> points;
    for (const char* p : kAnchorPoints) points.push_back(anchor_label(p));
    std::vector<std::vector<std::string>> lines;
    for (const auto& row : anchor_matrix()) {
        std::vector<std::string> l;
        for (const char* p : row) l.push_back(anchor_label(p));
        lines.push_back(std::move(l));
    }
    return Plane::from_raw(points, lines);
}

EncodeResult encode(const Graph& g) {
    EncodeResult res;
    res.plane = anchor_plane();
    Plane& P = res.plane;

    auto log_and_apply = [&](const std::string& label, const std::vector<Line>& L,
                             const std::string& tag) {
        ExtensionStep step;
        step.new_label = label;
        for (const auto& l : L) step.targets.push_back(l.label());
        step.tag = tag;
        res.log.steps.push_back(std::move(step));
        P = one_point_extension(P, L, label);
    };

    int n = g.vertex_count();
    for (int a = 0; a < n; ++a) {
        std::string tag = "vertex " + g.vertex_names()[a];
        Line rail0 = join(P, anchor_label("p2"), anchor_label("1'"));
        log_and_apply(vtx_label(a, 0), {rail0}, tag);
        Line rail1 = join(P, anchor_label("0"), anchor_label("1'"));
        log_and_apply(vtx_label(a, 1), {rail1}, tag);
        Line ell_a = join(P, vtx_label(a, 0), vtx_label(a, 1));
        log_and_apply(vtx_label(a, 2), {ell_a}, tag);
        // edges whose larger endpoint is a, by ascending smaller endpoint
        for (auto [d, b] : g.edges()) {
            if (b != a) continue;
            Line ell_d = join(P, vtx_label(d, 0), vtx_label(d, 1));
            Line ell_cur = join(P, vtx_label(a, 0), vtx_label(a, 1));
            log_and_apply(edge_label(d, a), {ell_d, ell_cur},
                          "edge " + g.vertex_names()[d] + "-" + g.vertex_names()[a]);
        }
    }
    return res;
}

bool phi(const Plane& P, const std::string& p) {
    int pi = P.point_index(p);
    if (int(P.lines_of_point(pi).size()) == 4) return true;
    for (int lid : P.lines_of_point(pi))
        for (int m : P.stored_line(lid))
            if (int(P.lines_of_point(m).size()) == 4) return true;
    return false;
}

std::map<std::string, std::string> locate_anchor(const Plane& P) {
    std::vector<std::string> phiset;
    for (const auto& p : P.point_labels())
        if (phi(P, p)) phiset.push_back(p);
    if (phiset.size() != 17)
        throw PlaneError(Err::NoEmbedding,
                         "phi-subset has " + std::to_string(phiset.size()) + " points, want 17");

    Plane induced = P.restricted_to(phiset);
    Plane seed = anchor_plane();
    auto mapping = isomorphic(seed, induced);
    if (!mapping)
        throw PlaneError(Err::NoEmbedding, "phi-subset is not a copy of the anchor plane");
    auto aut = automorphisms(induced);
    if (aut.order != 1)
        throw PlaneError(Err::Ambiguous,
                         "phi-subset has " + std::to_string(aut.order) +
                             " automorphisms; anchor asset corrupted");
    return std::map<std::string, std::string>(mapping->begin(), mapping->end());
}

Graph decode(const Plane& P) {
    auto anchor = locate_anchor(P);
    std::set<std::string> anchor_points;
    for (const auto& [k, v] : anchor) anchor_points.insert(v);

    Line rail0 = join(P, anchor.at(anchor_label("p2")), anchor.at(anchor_label("1'")));
    auto rail0_res = detail::resolve_line(P, rail0);

    // vertex gadget points: non-anchor members of the p2 v 1' rail
    std::vector<std::string> vtx0;
    for (const auto& m : rail0.members)
        if (!anchor_points.count(m)) vtx0.push_back(m);

    struct Gadget {
        std::string ell_label;
        int ell_id;
    };
    std::vector<Gadget> gadgets;
    for (const auto& x : vtx0) {
        const auto& through = P.lines_of_point(P.point_index(x));
        if (through.size() != 2)
            throw PlaneError(Err::MalformedGadget,
                             "'" + x + "' lies on " + std::to_string(through.size()) +
                                 " non-trivial lines, want 2");
        int ell = -1;
        for (int lid : through)
            if (rail0_res.trivial() || lid != rail0_res.stored_id) ell = lid;
        if (ell < 0) throw PlaneError(Err::MalformedGadget, "'" + x + "' has no vertex line");
        gadgets.push_back({P.line_value(ell).label(), ell});
    }
    std::sort(gadgets.begin(), gadgets.end(),
              [](const Gadget& a, const Gadget& b) { return a.ell_label < b.ell_label; });

    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < gadgets.size(); ++i)
        for (size_t j = i + 1; j < gadgets.size(); ++j)
            if (P.stored_line_bits(gadgets[i].ell_id).intersects(P.stored_line_bits(gadgets[j].ell_id)))
                edges.emplace_back(int(i), int(j));
    return Graph::from_indices(int(gadgets.size()), edges);
}

Report check_star_invariants(const Plane& P, const Graph& g) {
    Report rep;
    rep.subject = "star invariants (" + std::to_string(g.vertex_count()) + " vertices, " +
                  std::to_string(g.edge_count()) + " edges)";
    int n = g.vertex_count();

    // a clause that throws (missing labels on a foreign plane) is a violation
    auto guarded = [&rep](const std::string& name, auto&& fn) {
        try {
            auto [ok, detail] = fn();
            rep.add(name, ok, detail);
        } catch (const PlaneError& e) {
            rep.add(name, false, e.what());
        }
    };
    using Clause = std::pair<bool, std::string>;

    auto lines_of = [&](const std::string& p) {
        std::set<std::string> out;
        for (int lid : P.lines_of_point(P.point_index(p))) out.insert(P.line_value(lid).label());
        return out;
    };
    auto label_of = [&](const std::string& a, const std::string& b) {
        return join(P, a, b).label();
    };

    guarded("star2: phi <=> anchor membership", [&]() -> Clause {
        std::set<std::string> anchors(anchor_labels().begin(), anchor_labels().end());
        for (const auto& p : P.point_labels())
            if (phi(P, p) != (anchors.count(p) != 0)) return {false, "phi mismatch at '" + p + "'"};
        return {true, ""};
    });

    // (*3)/(*4): vertex points 0 and 1 lie on exactly the rail and ell_a
    for (int j = 0; j < 2; ++j) {
        guarded(j == 0 ? "star3: vtx:a:0 degrees" : "star4: vtx:a:1 degrees", [&]() -> Clause {
            std::string rail = j == 0 ? label_of(anchor_label("p2"), anchor_label("1'"))
                                      : label_of(anchor_label("0"), anchor_label("1'"));
            for (int a = 0; a < n; ++a) {
                std::set<std::string> want{rail, label_of(vtx_label(a, 0), vtx_label(a, 1))};
                if (lines_of(vtx_label(a, j)) != want) return {false, vtx_label(a, j)};
            }
            return {true, ""};
        });
    }

    guarded("star5: anchor pencils at p2, 0, 1'", [&]() -> Clause {
        bool ok = lines_of(anchor_label("p2")) ==
                      std::set<std::string>{label_of(anchor_label("p2"), anchor_label("0")),
                                            label_of(anchor_label("p2"), anchor_label("1'"))} &&
                  lines_of(anchor_label("0")) ==
                      std::set<std::string>{label_of(anchor_label("p2"), anchor_label("0")),
                                            label_of(anchor_label("0"), anchor_label("0'")),
                                            label_of(anchor_label("0"), anchor_label("1'"))} &&
                  lines_of(anchor_label("1'")) ==
                      std::set<std::string>{label_of(anchor_label("1'"), anchor_label("0'")),
                                            label_of(anchor_label("1'"), anchor_label("1_0")),
                                            label_of(anchor_label("1'"), anchor_label("2_1"))};
        return {ok, ""};
    });

    guarded("star6: edge point degrees", [&]() -> Clause {
        for (auto [d, a] : g.edges()) {
            std::set<std::string> want{label_of(vtx_label(d, 0), vtx_label(d, 1)),
                                       label_of(vtx_label(a, 0), vtx_label(a, 1))};
            if (lines_of(edge_label(d, a)) != want) return {false, edge_label(d, a)};
        }
        return {true, ""};
    });

    guarded("star7: vertex line membership", [&]() -> Clause {
        for (int a = 0; a < n; ++a) {
            Line ell = join(P, vtx_label(a, 0), vtx_label(a, 1));
            std::set<std::string> want{vtx_label(a, 0), vtx_label(a, 1), vtx_label(a, 2)};
            for (auto [d, b] : g.edges())
                if (d == a || b == a) want.insert(edge_label(std::min(d, b), std::max(d, b)));
            if (std::set<std::string>(ell.members.begin(), ell.members.end()) != want)
                return {false, "ell_" + std::to_string(a)};
        }
        return {true, ""};
    });

    guarded("star8: cross joins trivial", [&]() -> Clause {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (a == b) continue;
                if (!join(P, vtx_label(a, 0), vtx_label(b, 1)).trivial())
                    return {false, vtx_label(a, 0) + " v " + vtx_label(b, 1)};
            }
        return {true, ""};
    });

    guarded("thm1.2(3): non-anchor degree <= 2", [&]() -> Clause {
        for (const auto& p : P.point_labels()) {
            if (label_ns(p) == LabelNs::Anchor) continue;
            if (nontrivial_degree(P, p) > 2)
                return {false, "'" + p + "' has degree " + std::to_string(nontrivial_degree(P, p))};
        }
        return {true, ""};
    });
    guarded("thm1.2(3): exactly 17 exempt points", [&]() -> Clause {
        int exempt = 0;
        for (const auto& p : P.point_labels())
            if (label_ns(p) == LabelNs::Anchor) ++exempt;
        return {exempt == 17, std::to_string(exempt)};
    });
    return rep;
}

Report validate_anchor() {
    Report rep;
    rep.subject = "anchor-plane";
    Plane A = anchor_plane();
    rep.add("17 points", A.point_count() == 17, std::to_string(A.point_count()));
    Report ax = validate_plane(A);
    rep.add("plane axioms", ax.ok());
    auto aut = automorphisms(A);
    rep.add("rigid", aut.order == 1, "|Aut| = " + std::to_string(aut.order));

    // probe: 2 vertices, 1 edge
    Graph probe = Graph::from_indices(2, {{0, 1}});
    auto enc = encode(probe);
    rep.add("probe size 24", enc.plane.point_count() == 24,
            std::to_string(enc.plane.point_count()));
    Report stars = check_star_invariants(enc.plane, probe);
    for (const auto& c : stars.clauses)
        if (c.name.rfind("star2", 0) == 0 || c.name.rfind("star5", 0) == 0)
            rep.add("probe " + c.name, c.ok, c.detail);
    return rep;
}

} // namespace planes
