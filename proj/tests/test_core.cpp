#include <doctest.h>

#include <cstdlib>

#include "oracles.hpp"
#include "planes/codec.hpp"
#include "planes/extension.hpp"
#include "planes/io.hpp"
#include "planes/pg.hpp"

using namespace planes;

namespace {

std::string asset_path(const std::string& name) {
    const char* dir = std::getenv("PLANES_ASSETS");
    return std::string(dir ? dir : "assets") + "/" + name;
}

} // namespace

TEST_CASE("new_plane accepts and rejects raw data") {
    Plane P = new_plane({"a", "b", "c"}, {});
    CHECK(P.point_count() == 3);
    CHECK(P.stored_line_count() == 0);
    CHECK(all_lines(P, true).size() == 3);

    CHECK_THROWS_WITH_AS(new_plane({"a", "b", "c", "d"}, {{"a", "b", "c"}, {"a", "b", "d"}}),
                         doctest::Contains("AxiomB"), PlaneError);
    CHECK_THROWS_AS(new_plane({"a", "a", "b"}, {}), PlaneError);
    CHECK_THROWS_AS(new_plane({"a", "b", "c"}, {{"a", "b"}}), PlaneError); // LineTooSmall
    CHECK_THROWS_AS(new_plane({"a", "b"}, {{"a", "b", "x"}}), PlaneError); // UnknownPoint

    CHECK(validate_plane(q_plane()).ok());
}

TEST_CASE("join") {
    Plane Q = q_plane();
    CHECK(join(Q, "a", "b").members == std::vector<std::string>{"a", "b", "c", "d", "e"});
    Line hb = join(Q, "h", "b");
    CHECK(hb.trivial());
    CHECK(hb.members == std::vector<std::string>{"b", "h"});

    Plane F = new_plane({"a", "b", "c"}, {});
    CHECK(join(F, "a", "b").trivial());
    CHECK_THROWS_AS(join(Q, "a", "a"), PlaneError);
    CHECK_THROWS_AS(join(Q, "a", "zz"), PlaneError);
}

TEST_CASE("meet") {
    Plane Q = q_plane();
    Line l1 = join(Q, "a", "b");  // {a,b,c,d,e}
    Line l4 = join(Q, "a", "f");  // {a,f,g,h}
    MeetResult m = meet(Q, l1, l4);
    CHECK(!m.bottom);
    CHECK(m.point == "a");

    Line l2 = join(Q, "c", "n");  // {c,l,n}
    Line l5 = join(Q, "b", "k");  // {b,k,l,m}
    m = meet(Q, l2, l5);
    CHECK(m.point == "l");

    // two disjoint trivial lines
    Line t1 = join(Q, "b", "h");
    Line t2 = join(Q, "c", "o");
    CHECK(meet(Q, t1, t2).bottom);

    CHECK_THROWS_AS(meet(Q, l1, l1), PlaneError); // SameLine
    CHECK_THROWS_AS(meet(Q, l1, Line{{"x", "y", "z"}}), PlaneError);
}

TEST_CASE("is_trivial and are_parallel") {
    Plane Q = q_plane();
    CHECK(is_trivial(Q, join(Q, "b", "h")));
    CHECK(!is_trivial(Q, join(Q, "c", "k"))); // {c,k,g}

    Plane two = new_plane({"a", "b"}, {});
    CHECK(is_trivial(two, join(two, "a", "b")));

    Plane fano = pg2(gf(2));
    auto ls = all_lines(fano, false);
    for (size_t i = 0; i < ls.size(); ++i)
        for (size_t j = i + 1; j < ls.size(); ++j) CHECK(!are_parallel(fano, ls[i], ls[j]));

    CHECK(are_parallel(Q, join(Q, "c", "k"), join(Q, "d", "o"))); // {c,k,g} vs {d,o,m,h}
    CHECK_THROWS_AS(are_parallel(Q, join(Q, "c", "k"), join(Q, "c", "k")), PlaneError);
}

TEST_CASE("collinear") {
    Plane Q = q_plane();
    CHECK(collinear(Q, "a", "b", "c"));
    CHECK(!collinear(Q, "a", "b", "f"));
    CHECK_THROWS_AS(collinear(Q, "a", "b", "a"), PlaneError); // NotDistinct
}

TEST_CASE("all_lines") {
    Plane Q = q_plane();
    CHECK(all_lines(Q, false).size() == 11);
    // 11 stored + uncovered pairs, counted by the independent oracle
    auto naive = oracle::naive_all_lines(Q);
    CHECK(all_lines(Q, true).size() == naive.size());
    CHECK(all_lines(Q, true).size() == 34); // C(13,2)=78 pairs, 55 covered

    Plane F = new_plane({"a", "b", "c"}, {});
    CHECK(all_lines(F, true).size() == 3);

    // canonical order and no duplicates
    auto ls = all_lines(Q, true);
    for (size_t i = 0; i + 1 < ls.size(); ++i) CHECK(ls[i] < ls[i + 1]);
}

TEST_CASE("is_projective") {
    CHECK(is_projective(pg2(gf(2))));
    CHECK(!is_projective(q_plane()));
    Plane quad = new_plane({"A", "B", "C", "D"}, {});
    CHECK(!is_projective(quad)); // six trivial lines, disjoint pairs exist
}

TEST_CASE("nontrivial_degree") {
    Plane Q = q_plane();
    // k and o are the internal degree-4 points; f sits on columns 3, 4, 6
    CHECK(nontrivial_degree(Q, "f") == 3);
    CHECK(nontrivial_degree(Q, "k") == 4);
    CHECK(nontrivial_degree(Q, "o") == 4);
    CHECK(nontrivial_degree(Q, "h") == 2);
    CHECK(nontrivial_degree(Q, "a") == 3);

    Plane F = new_plane({"a", "b", "c"}, {});
    CHECK(nontrivial_degree(F, "a") == 0);
    CHECK_THROWS_AS(nontrivial_degree(Q, "zz"), PlaneError);
}

TEST_CASE("plane serialization round trip") {
    std::string qtext = slurp_file(asset_path("q.plane"));
    Plane Q = read_plane(qtext);
    CHECK(write_plane(Q) == qtext);
    CHECK(Q == q_plane());

    CHECK_THROWS_WITH_AS(read_plane("plane v1\np a\np a\n"), doctest::Contains("ParseError"),
                         PlaneError);
    CHECK_THROWS_AS(read_plane("nonsense\n"), PlaneError);

    Plane fano = pg2(gf(2));
    CHECK(read_plane(write_plane(fano)) == fano);
    CHECK(fano.point_count() == 7);
    CHECK(fano.stored_line_count() == 7);
}

TEST_CASE("graph serialization round trip") {
    Graph g({"x", "y", "z"}, {{"y", "x"}, {"y", "z"}});
    Graph h = read_graph(write_graph(g));
    CHECK(h == g);
    CHECK(h.vertex_names() == std::vector<std::string>{"x", "y", "z"});
    CHECK_THROWS_AS(read_graph("graph v1\nv a\nv a\n"), PlaneError);
    CHECK_THROWS_AS(read_graph("graph v1\ne a b\n"), PlaneError);
}

TEST_CASE("join/meet laws hold exhaustively on small planes") {
    std::vector<Plane> fixtures{q_plane(), anchor_plane(), pg2(gf(2)), pg2(gf(3))};
    for (const Plane& P : fixtures) {
        int n = P.point_count();
        auto every = all_lines(P, true);
        // join(p,q) is the unique line containing both
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                Line l = join(P, P.point_label(i), P.point_label(j));
                int count = 0;
                for (const auto& candidate : every) {
                    bool has_i = std::binary_search(candidate.members.begin(),
                                                    candidate.members.end(), P.point_label(i));
                    bool has_j = std::binary_search(candidate.members.begin(),
                                                    candidate.members.end(), P.point_label(j));
                    if (has_i && has_j) {
                        ++count;
                        CHECK(candidate == l);
                    }
                }
                CHECK(count == 1);
            }
        // meet(join(p,q), join(p,r)) = p when the joins differ
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    if (i == j || i == k || j == k) continue;
                    Line l1 = join(P, P.point_label(i), P.point_label(j));
                    Line l2 = join(P, P.point_label(i), P.point_label(k));
                    if (l1 == l2) continue;
                    MeetResult m = meet(P, l1, l2);
                    CHECK(!m.bottom);
                    CHECK(m.point == P.point_label(i));
                }
        // stored line pairs intersect in at most one point
        for (int a = 0; a < P.stored_line_count(); ++a)
            for (int b = a + 1; b < P.stored_line_count(); ++b)
                CHECK(P.stored_line_bits(a).intersect_count(P.stored_line_bits(b)) <= 1);
    }
}

TEST_CASE("is_projective agrees with the parallel-pair scan") {
    for (const Plane& P : {q_plane(), pg2(gf(2)), new_plane({"A", "B", "C", "D"}, {})}) {
        bool any_parallel = oracle::naive_parallel_pairs(P) > 0;
        CHECK(is_projective(P) == !any_parallel);
    }
}
