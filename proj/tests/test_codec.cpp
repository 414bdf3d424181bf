#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "planes/codec.hpp"
#include "planes/io.hpp"
#include "planes/iso.hpp"
#include "planes/label.hpp"

using namespace planes;

TEST_CASE("anchor asset invariants") {
    Plane A = anchor_plane();
    CHECK(A.point_count() == 17);
    CHECK(validate_plane(A).ok());
    CHECK(validate_anchor().ok());
}

TEST_CASE("encode sizes follow 3V + E + 17") {
    CHECK(encode(Graph::from_indices(0, {})).plane.point_count() == 17);
    CHECK(encode(Graph::from_indices(1, {})).plane.point_count() == 20);
    auto enc = encode(Graph::from_indices(2, {{0, 1}}));
    CHECK(enc.plane.point_count() == 24);
    // the edge point lies on both vertex lines
    Line l0 = join(enc.plane, vtx_label(0, 0), vtx_label(0, 1));
    Line l1 = join(enc.plane, vtx_label(1, 0), vtx_label(1, 1));
    MeetResult m = meet(enc.plane, l0, l1);
    CHECK(!m.bottom);
    CHECK(m.point == edge_label(0, 1));

    oracle::Det rng(7);
    for (int it = 0; it < 12; ++it) {
        Graph g = oracle::random_graph(rng, 8);
        CHECK(encode(g).plane.point_count() == 3 * g.vertex_count() + g.edge_count() + 17);
    }
}

TEST_CASE("encode log replays bit-exactly and is ordered by the induction") {
    Graph g = Graph::from_indices(3, {{0, 1}, {0, 2}, {1, 2}});
    auto enc = encode(g);
    CHECK(replay(anchor_plane(), enc.log) == enc.plane);
    // vertex steps precede the edge steps of the same stage
    std::vector<std::string> labels;
    for (const auto& s : enc.log.steps) labels.push_back(s.new_label);
    std::vector<std::string> want{
        vtx_label(0, 0), vtx_label(0, 1), vtx_label(0, 2),
        vtx_label(1, 0), vtx_label(1, 1), vtx_label(1, 2), edge_label(0, 1),
        vtx_label(2, 0), vtx_label(2, 1), vtx_label(2, 2), edge_label(0, 2), edge_label(1, 2),
    };
    CHECK(labels == want);
}

TEST_CASE("phi") {
    auto one = encode(Graph::from_indices(1, {}));
    CHECK(phi(one.plane, "anchor:q"));
    CHECK(!phi(one.plane, vtx_label(0, 0)));
    auto two = encode(Graph::from_indices(2, {{0, 1}}));
    CHECK(!phi(two.plane, edge_label(0, 1)));
    for (const auto& a : anchor_labels()) CHECK(phi(two.plane, a));
}

TEST_CASE("locate_anchor") {
    auto enc = encode(Graph::from_indices(2, {{0, 1}}));
    auto m = locate_anchor(enc.plane);
    for (const auto& a : anchor_labels()) CHECK(m.at(a) == a); // identity on intact labels

    oracle::Det rng(11);
    Plane scrambled = oracle::scramble(enc.plane, rng);
    auto m2 = locate_anchor(scrambled);
    CHECK(m2.size() == 17);
    // the image is exactly the phi-subset of the scrambled plane
    std::set<std::string> image;
    for (const auto& [k, v] : m2) image.insert(v);
    std::set<std::string> phiset;
    for (const auto& p : scrambled.point_labels())
        if (phi(scrambled, p)) phiset.insert(p);
    CHECK(image == phiset);

    CHECK_THROWS_WITH_AS(locate_anchor(q_plane()), doctest::Contains("NoEmbedding"), PlaneError);
}

TEST_CASE("decode round trips") {
    // empty graph
    CHECK(decode(encode(Graph::from_indices(0, {})).plane).vertex_count() == 0);

    // triangle, labels intact
    Graph k3 = Graph::from_indices(3, {{0, 1}, {0, 2}, {1, 2}});
    Graph back = decode(encode(k3).plane);
    CHECK(oracle::graphs_isomorphic(k3, back));

    // permuted path-3
    Graph p3 = Graph::from_indices(3, {{0, 1}, {1, 2}});
    oracle::Det rng(23);
    Plane scrambled = oracle::scramble(encode(p3).plane, rng);
    Graph back2 = decode(scrambled);
    CHECK(oracle::graphs_isomorphic(p3, back2));
}

TEST_CASE("check_star_invariants passes on the 4-vertex corpus") {
    for (const Graph& g : oracle::four_vertex_graphs()) {
        auto enc = encode(g);
        Report rep = check_star_invariants(enc.plane, g);
        INFO(rep.to_text());
        CHECK(rep.ok());
    }
}

TEST_CASE("check_star_invariants passes on a random 10-vertex graph") {
    oracle::Det rng(5);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j)
            if (rng.below(5) < 2) edges.emplace_back(i, j);
    Graph g = Graph::from_indices(10, edges);
    CHECK(check_star_invariants(encode(g).plane, g).ok());
}

TEST_CASE("check_star_invariants fails on mismatched input (negative control)") {
    Graph k3 = Graph::from_indices(3, {{0, 1}, {0, 2}, {1, 2}});
    Graph p3 = Graph::from_indices(3, {{0, 1}, {1, 2}});
    Report rep = check_star_invariants(encode(k3).plane, p3);
    CHECK(!rep.ok());
    // substituting a foreign plane reports violations rather than passing
    Report rep2 = check_star_invariants(one_point_extension(q_plane(), {}, "w"), p3);
    CHECK(!rep2.ok());
}

TEST_CASE("encode is injective on labeled graphs with a shared vertex set") {
    Graph g1 = Graph::from_indices(4, {{0, 1}, {2, 3}});
    Graph g2 = Graph::from_indices(4, {{0, 1}, {1, 2}});
    CHECK(!(encode(g1).plane == encode(g2).plane));
}
