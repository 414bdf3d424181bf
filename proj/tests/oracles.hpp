// Test-side oracles, deliberately independent of the library's code paths:
// naive set-based reimplementations used to compute or cross-check expected
// values before they are asserted.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "planes/graph.hpp"
#include "planes/plane.hpp"

namespace oracle {

using LineSet = std::set<std::string>;

/// All lines of P including trivial ones, as label sets, by direct pair scan.
inline std::vector<LineSet> naive_all_lines(const planes::Plane& P) {
    std::vector<LineSet> out;
    for (int l = 0; l < P.stored_line_count(); ++l) {
        auto m = P.member_labels(l);
        out.emplace_back(m.begin(), m.end());
    }
    int n = P.point_count();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool covered = false;
            for (const auto& l : out)
                if (l.count(P.point_label(i)) && l.count(P.point_label(j))) {
                    covered = true;
                    break;
                }
            if (!covered) out.push_back({P.point_label(i), P.point_label(j)});
        }
    return out;
}

/// Number of unordered parallel (disjoint) line pairs, trivial lines included.
inline int naive_parallel_pairs(const planes::Plane& P) {
    auto ls = naive_all_lines(P);
    int count = 0;
    for (size_t i = 0; i < ls.size(); ++i)
        for (size_t j = i + 1; j < ls.size(); ++j) {
            bool disjoint = true;
            for (const auto& p : ls[i])
                if (ls[j].count(p)) {
                    disjoint = false;
                    break;
                }
            if (disjoint) ++count;
        }
    return count;
}

/// Independent fixpoint peeling: recompute alive sets from scratch each round.
struct NaiveCore {
    std::set<std::string> points;
    std::vector<std::set<std::string>> lines;
};

inline NaiveCore naive_peel(const planes::Plane& P) {
    std::set<std::string> pts(P.point_labels().begin(), P.point_labels().end());
    std::vector<std::set<std::string>> lines;
    for (int l = 0; l < P.stored_line_count(); ++l) {
        auto m = P.member_labels(l);
        lines.emplace_back(m.begin(), m.end());
    }
    for (;;) {
        std::vector<std::set<std::string>> live;
        for (const auto& l : lines) {
            std::set<std::string> induced;
            for (const auto& p : l)
                if (pts.count(p)) induced.insert(p);
            if (induced.size() >= 3) live.push_back(induced);
        }
        std::set<std::string> keep;
        for (const auto& p : pts) {
            int deg = 0;
            for (const auto& l : live)
                if (l.count(p)) ++deg;
            if (deg >= 3) keep.insert(p);
        }
        if (keep == pts && live.size() == lines.size()) {
            NaiveCore c;
            c.points = pts;
            c.lines = live;
            return c;
        }
        pts = keep;
        lines = live;
    }
}

// ---- graph brute force -------------------------------------------------------

template <typename F>
void for_each_perm(int n, F&& f) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        f(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

inline bool perm_maps_edges(const planes::Graph& a, const planes::Graph& b,
                            const std::vector<int>& perm) {
    if (a.edge_count() != b.edge_count()) return false;
    for (auto [i, j] : a.edges())
        if (!b.adjacent(perm[i], perm[j])) return false;
    return true;
}

inline unsigned long long graph_aut_order(const planes::Graph& g) {
    unsigned long long count = 0;
    for_each_perm(g.vertex_count(), [&](const std::vector<int>& perm) {
        if (perm_maps_edges(g, g, perm)) ++count;
    });
    return count;
}

inline bool graphs_isomorphic(const planes::Graph& a, const planes::Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    bool found = false;
    for_each_perm(a.vertex_count(), [&](const std::vector<int>& perm) {
        if (!found && perm_maps_edges(a, b, perm)) found = true;
    });
    return found;
}

// ---- fixtures ------------------------------------------------------------------

/// The 11 unlabeled simple graphs on exactly 4 vertices.
inline std::vector<planes::Graph> four_vertex_graphs() {
    using E = std::vector<std::pair<int, int>>;
    std::vector<E> es = {
        {},
        {{0, 1}},
        {{0, 1}, {2, 3}},
        {{0, 1}, {1, 2}},
        {{0, 1}, {1, 2}, {2, 3}},
        {{0, 1}, {0, 2}, {0, 3}},
        {{0, 1}, {0, 2}, {1, 2}},
        {{0, 1}, {1, 2}, {2, 3}, {0, 3}},
        {{0, 1}, {0, 2}, {1, 2}, {0, 3}},
        {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}},
        {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}},
    };
    std::vector<planes::Graph> out;
    for (const auto& e : es) out.push_back(planes::Graph::from_indices(4, e));
    return out;
}

/// Small deterministic generator (LCG); no global RNG anywhere in the repo.
class Det {
public:
    explicit Det(uint64_t seed) : s_(seed) {}
    uint32_t next() {
        s_ = s_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return uint32_t(s_ >> 33);
    }
    uint32_t below(uint32_t n) { return next() % n; }

private:
    uint64_t s_;
};

inline planes::Graph random_graph(Det& rng, int max_vertices) {
    int n = 1 + int(rng.below(uint32_t(max_vertices)));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.below(5) < 2) edges.emplace_back(i, j);
    return planes::Graph::from_indices(n, edges);
}

/// Deterministically relabels a plane by a pseudorandom permutation of fresh
/// raw names, returning the permuted plane.
inline planes::Plane scramble(const planes::Plane& P, Det& rng) {
    int n = P.point_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[int(rng.below(uint32_t(i + 1)))]);
    std::vector<std::string> fresh(n);
    for (int i = 0; i < n; ++i) fresh[i] = "z" + std::to_string(perm[i]);
    std::vector<std::string> points(fresh.begin(), fresh.end());
    std::vector<std::vector<std::string>> lines;
    for (const auto& l : P.label_lines()) {
        std::vector<std::string> nl;
        for (const auto& m : l) {
            int idx = int(std::lower_bound(P.point_labels().begin(), P.point_labels().end(), m) -
                          P.point_labels().begin());
            nl.push_back(fresh[idx]);
        }
        lines.push_back(nl);
    }
    return planes::Plane::from_raw(points, lines);
}

} // namespace oracle
