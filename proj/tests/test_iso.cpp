#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "planes/codec.hpp"
#include "planes/extension.hpp"
#include "planes/iso.hpp"
#include "planes/label.hpp"
#include "planes/pg.hpp"

using namespace planes;

namespace {

std::vector<int> mapping_to_perm(const Plane& A, const Plane& B, const IsoMapping& m) {
    std::vector<int> perm(A.point_count());
    for (const auto& [x, y] : m) perm[A.point_index(x)] = B.point_index(y);
    return perm;
}

} // namespace

TEST_CASE("refine separates what must be separated") {
    // Fano is point-transitive: a single color class
    Coloring cf = refine(pg2(gf(2)));
    CHECK(cf.point_classes == 1);

    // Q: h is the unique degree-2 point, alone in its class
    Plane Q = q_plane();
    Coloring cq = refine(Q);
    int h = Q.point_index("h");
    for (int i = 0; i < Q.point_count(); ++i)
        if (i != h) CHECK(cq.point_color[i] != cq.point_color[h]);

    // encode(one vertex): anchor colors disjoint from gadget colors
    auto enc = encode(Graph::from_indices(1, {}));
    Coloring ce = refine(enc.plane);
    std::set<int> anchor_colors, gadget_colors;
    for (int i = 0; i < enc.plane.point_count(); ++i) {
        if (label_ns(enc.plane.point_label(i)) == LabelNs::Anchor)
            anchor_colors.insert(ce.point_color[i]);
        else
            gadget_colors.insert(ce.point_color[i]);
    }
    for (int c : gadget_colors) CHECK(!anchor_colors.count(c));
}

TEST_CASE("refine is preserved by every automorphism") {
    Plane fano = pg2(gf(2));
    Coloring c = refine(fano);
    AutGroup g = automorphisms(fano);
    for (const auto& gen : g.generators) {
        CHECK(verify_plane_map(fano, fano, gen));
        for (int i = 0; i < fano.point_count(); ++i)
            CHECK(c.point_color[i] == c.point_color[gen[i]]);
    }
}

TEST_CASE("isomorphic finds and verifies mappings") {
    Plane Q = q_plane();
    oracle::Det rng(3);
    Plane Qp = oracle::scramble(Q, rng);
    auto m = isomorphic(Q, Qp);
    REQUIRE(m.has_value());
    CHECK(verify_plane_map(Q, Qp, mapping_to_perm(Q, Qp, *m)));

    CHECK(!isomorphic(pg2(gf(2)), pg2(gf(3))).has_value());

    // 3-vertex path vs triangle: encodings must not be isomorphic
    auto p3 = encode(Graph::from_indices(3, {{0, 1}, {1, 2}}));
    auto k3 = encode(Graph::from_indices(3, {{0, 1}, {0, 2}, {1, 2}}));
    CHECK(!isomorphic(p3.plane, k3.plane).has_value());
}

TEST_CASE("isomorphic behaves as an equivalence oracle") {
    Plane Q = q_plane();
    oracle::Det rng(17);
    Plane A = oracle::scramble(Q, rng);
    Plane B = oracle::scramble(Q, rng);

    auto qa = isomorphic(Q, A);
    auto ab = isomorphic(A, B);
    auto qb = isomorphic(Q, B);
    REQUIRE(qa.has_value());
    REQUIRE(ab.has_value());
    REQUIRE(qb.has_value());

    // reflexive
    CHECK(isomorphic(Q, Q).has_value());
    // symmetric: the inverse verifies
    std::vector<int> f = mapping_to_perm(Q, A, *qa);
    std::vector<int> finv(f.size());
    for (size_t i = 0; i < f.size(); ++i) finv[f[i]] = int(i);
    CHECK(verify_plane_map(A, Q, finv));
    // transitive: the composition verifies
    std::vector<int> gmap = mapping_to_perm(A, B, *ab);
    std::vector<int> comp(f.size());
    for (size_t i = 0; i < f.size(); ++i) comp[i] = gmap[f[i]];
    CHECK(verify_plane_map(Q, B, comp));
}

TEST_CASE("automorphism groups") {
    CHECK(automorphisms(q_plane()).order == 1);
    CHECK(is_rigid(q_plane()));
    CHECK(is_rigid(anchor_plane()));

    AutGroup fano = automorphisms(pg2(gf(2)));
    CHECK(fano.order == 168);
    CHECK(perm_group_order(fano.generators, 7) == 168);

    AutGroup k3 = automorphisms(encode(Graph::from_indices(3, {{0, 1}, {0, 2}, {1, 2}})).plane);
    CHECK(k3.order == 6);
}

TEST_CASE("every generator re-validates against raw incidence") {
    for (const Plane& P : {pg2(gf(2)), q_plane(), encode(Graph::from_indices(3, {{0, 1}})).plane}) {
        AutGroup g = automorphisms(P);
        for (const auto& gen : g.generators) CHECK(verify_plane_map(P, P, gen));
    }
}

TEST_CASE("perm_group_order on known groups") {
    // S3 acting on 3 points
    CHECK(perm_group_order({{1, 0, 2}, {0, 2, 1}}, 3) == 6);
    // cyclic C4
    CHECK(perm_group_order({{1, 2, 3, 0}}, 4) == 4);
    CHECK(perm_group_order({}, 5) == 1);
}
