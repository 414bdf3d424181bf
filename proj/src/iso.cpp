#include "planes/iso.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace planes {

namespace {

struct RefineState {
    std::vector<int> pcolor;
    std::vector<int> lcolor;
};

/// Joint refinement over one or two planes sharing one palette.
std::vector<RefineState> refine_joint(const std::vector<const Plane*>& ps, int* rounds_out) {
    std::vector<RefineState> st(ps.size());

    // initial colors: points by (degree, sorted line sizes), lines by size
    {
        std::map<std::pair<int, std::vector<int>>, int> pmap;
        std::map<int, int> lmap;
        for (size_t k = 0; k < ps.size(); ++k) {
            const Plane& P = *ps[k];
            st[k].pcolor.resize(P.point_count());
            st[k].lcolor.resize(P.stored_line_count());
            for (int i = 0; i < P.point_count(); ++i) {
                std::vector<int> sizes;
                for (int lid : P.lines_of_point(i)) sizes.push_back(int(P.stored_line(lid).size()));
                std::sort(sizes.begin(), sizes.end());
                pmap[{int(sizes.size()), sizes}] = 0;
            }
            for (int lid = 0; lid < P.stored_line_count(); ++lid)
                lmap[int(P.stored_line(lid).size())] = 0;
        }
        int c = 0;
        for (auto& [sig, col] : pmap) col = c++;
        c = 0;
        for (auto& [sig, col] : lmap) col = c++;
        for (size_t k = 0; k < ps.size(); ++k) {
            const Plane& P = *ps[k];
            for (int i = 0; i < P.point_count(); ++i) {
                std::vector<int> sizes;
                for (int lid : P.lines_of_point(i)) sizes.push_back(int(P.stored_line(lid).size()));
                std::sort(sizes.begin(), sizes.end());
                st[k].pcolor[i] = pmap[{int(sizes.size()), sizes}];
            }
            for (int lid = 0; lid < P.stored_line_count(); ++lid)
                st[k].lcolor[lid] = lmap[int(P.stored_line(lid).size())];
        }
    }

    auto classes = [&](bool points) {
        std::set<int> s;
        for (size_t k = 0; k < ps.size(); ++k)
            for (int c : (points ? st[k].pcolor : st[k].lcolor)) s.insert(c);
        return int(s.size());
    };

    int rounds = 0;
    for (;;) {
        ++rounds;
        int pc_before = classes(true), lc_before = classes(false);

        // lines first: (old, sorted member point colors)
        std::map<std::pair<int, std::vector<int>>, int> lmap;
        for (size_t k = 0; k < ps.size(); ++k) {
            const Plane& P = *ps[k];
            for (int lid = 0; lid < P.stored_line_count(); ++lid) {
                std::vector<int> mem;
                for (int m : P.stored_line(lid)) mem.push_back(st[k].pcolor[m]);
                std::sort(mem.begin(), mem.end());
                lmap[{st[k].lcolor[lid], mem}] = 0;
            }
        }
        int c = 0;
        for (auto& [sig, col] : lmap) col = c++;
        for (size_t k = 0; k < ps.size(); ++k) {
            const Plane& P = *ps[k];
            for (int lid = 0; lid < P.stored_line_count(); ++lid) {
                std::vector<int> mem;
                for (int m : P.stored_line(lid)) mem.push_back(st[k].pcolor[m]);
                std::sort(mem.begin(), mem.end());
                st[k].lcolor[lid] = lmap[{st[k].lcolor[lid], mem}];
            }
        }

        // then points: (old, sorted incident line colors)
        std::map<std::pair<int, std::vector<int>>, int> pmap;
        for (size_t k = 0; k < ps.size(); ++k) {
            const Plane& P = *ps[k];
            for (int i = 0; i < P.point_count(); ++i) {
                std::vector<int> through;
                for (int lid : P.lines_of_point(i)) through.push_back(st[k].lcolor[lid]);
                std::sort(through.begin(), through.end());
                pmap[{st[k].pcolor[i], through}] = 0;
            }
        }
        c = 0;
        for (auto& [sig, col] : pmap) col = c++;
        for (size_t k = 0; k < ps.size(); ++k) {
            const Plane& P = *ps[k];
            for (int i = 0; i < P.point_count(); ++i) {
                std::vector<int> through;
                for (int lid : P.lines_of_point(i)) through.push_back(st[k].lcolor[lid]);
                std::sort(through.begin(), through.end());
                st[k].pcolor[i] = pmap[{st[k].pcolor[i], through}];
            }
        }

        if (classes(true) == pc_before && classes(false) == lc_before) break;
    }
    if (rounds_out) *rounds_out = rounds;
    return st;
}

/// Backtracking point-mapping search between two refined planes.
class MapSearch {
public:
    MapSearch(const Plane& A, const Plane& B, const RefineState& ca, const RefineState& cb)
        : A_(A), B_(B), ca_(ca), cb_(cb), n_(A.point_count()) {
        joinA_ = build_join(A);
        joinB_ = build_join(B);
        map_.assign(n_, -1);
        rmap_.assign(n_, -1);
        lmap_.assign(A.stored_line_count(), -1);
        rlmap_.assign(B.stored_line_count(), -1);
    }

    /// Runs the exhaustive search; calls sink(map) on every verified complete
    /// mapping. If sink returns false the search stops.
    template <typename Sink>
    void run(Sink&& sink) {
        stop_ = false;
        dfs(0, sink);
    }

private:
    static std::vector<int> build_join(const Plane& P) {
        int n = P.point_count();
        std::vector<int> j(size_t(n) * n, -1);
        for (int lid = 0; lid < P.stored_line_count(); ++lid) {
            const auto& mem = P.stored_line(lid);
            for (size_t a = 0; a < mem.size(); ++a)
                for (size_t b = a + 1; b < mem.size(); ++b) {
                    j[size_t(mem[a]) * n + mem[b]] = lid;
                    j[size_t(mem[b]) * n + mem[a]] = lid;
                }
        }
        return j;
    }

    int pick_next() const {
        int best = -1, best_links = -1;
        for (int u = 0; u < n_; ++u) {
            if (map_[u] >= 0) continue;
            int links = 0;
            for (int lid : A_.lines_of_point(u))
                if (line_touched_[lid]) ++links;
            if (links > best_links) {
                best_links = links;
                best = u;
            }
        }
        return best;
    }

    template <typename Sink>
    void dfs(int depth, Sink&& sink) {
        if (stop_) return;
        if (depth == n_) {
            if (verify_plane_map(A_, B_, map_))
                if (!sink(map_)) stop_ = true;
            return;
        }
        if (depth == 0) line_touched_.assign(A_.stored_line_count(), false);
        int u = pick_next();
        for (int v = 0; v < n_; ++v) {
            if (stop_) return;
            if (rmap_[v] >= 0 || cb_.pcolor[v] != ca_.pcolor[u]) continue;
            if (!consistent(u, v)) continue;
            std::vector<std::pair<int, int>> lchanges;
            assign(u, v, lchanges);
            dfs(depth + 1, sink);
            unassign(u, v, lchanges);
        }
    }

    bool consistent(int u, int v) const {
        for (int u2 = 0; u2 < n_; ++u2) {
            int v2 = map_[u2];
            if (v2 < 0) continue;
            int la = joinA_[size_t(u) * n_ + u2];
            int lb = joinB_[size_t(v) * n_ + v2];
            if ((la < 0) != (lb < 0)) return false;
            if (la >= 0) {
                if (A_.stored_line(la).size() != B_.stored_line(lb).size()) return false;
                if (ca_.lcolor[la] != cb_.lcolor[lb]) return false;
                if (lmap_[la] != -1 && lmap_[la] != lb) return false;
                if (rlmap_[lb] != -1 && rlmap_[lb] != la) return false;
            }
        }
        return true;
    }

    void assign(int u, int v, std::vector<std::pair<int, int>>& lchanges) {
        map_[u] = v;
        rmap_[v] = u;
        for (int u2 = 0; u2 < n_; ++u2) {
            int v2 = map_[u2];
            if (v2 < 0 || u2 == u) continue;
            int la = joinA_[size_t(u) * n_ + u2];
            if (la >= 0 && lmap_[la] == -1) {
                int lb = joinB_[size_t(v) * n_ + v2];
                lmap_[la] = lb;
                rlmap_[lb] = la;
                lchanges.emplace_back(la, lb);
            }
        }
        for (int lid : A_.lines_of_point(u)) {
            if (!line_touched_[lid]) {
                line_touched_[lid] = true;
                lchanges.emplace_back(-1 - lid, 0); // marker for untouch
            }
        }
    }

    void unassign(int u, int v, const std::vector<std::pair<int, int>>& lchanges) {
        for (auto [la, lb] : lchanges) {
            if (la < 0)
                line_touched_[-1 - la] = false;
            else {
                lmap_[la] = -1;
                rlmap_[lb] = -1;
            }
        }
        map_[u] = -1;
        rmap_[v] = -1;
    }

    const Plane& A_;
    const Plane& B_;
    RefineState ca_, cb_;
    int n_;
    std::vector<int> joinA_, joinB_;
    std::vector<int> map_, rmap_, lmap_, rlmap_;
    std::vector<bool> line_touched_;
    bool stop_ = false;
};

std::vector<int> identity_perm(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return p;
}

std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& g) {
    // (f*g)(x) = f(g(x))
    std::vector<int> h(f.size());
    for (size_t i = 0; i < f.size(); ++i) h[i] = f[g[i]];
    return h;
}

std::vector<int> invert(const std::vector<int>& f) {
    std::vector<int> h(f.size());
    for (size_t i = 0; i < f.size(); ++i) h[f[i]] = int(i);
    return h;
}

} // namespace

Coloring refine(const Plane& P) {
    int rounds = 0;
    auto st = refine_joint({&P}, &rounds);
    Coloring c;
    c.point_color = st[0].pcolor;
    c.line_color = st[0].lcolor;
    std::set<int> uniq(c.point_color.begin(), c.point_color.end());
    c.point_classes = int(uniq.size());
    c.rounds = rounds;
    return c;
}

bool verify_plane_map(const Plane& A, const Plane& B, const std::vector<int>& map) {
    if (A.point_count() != B.point_count() || A.stored_line_count() != B.stored_line_count())
        return false;
    std::set<int> image(map.begin(), map.end());
    if (int(image.size()) != A.point_count()) return false;
    std::set<int> hit;
    for (int lid = 0; lid < A.stored_line_count(); ++lid) {
        std::vector<int> img;
        for (int m : A.stored_line(lid)) img.push_back(map[m]);
        std::sort(img.begin(), img.end());
        int lb = B.find_stored_line(img);
        if (lb < 0) return false;
        hit.insert(lb);
    }
    return int(hit.size()) == A.stored_line_count();
}

std::optional<IsoMapping> isomorphic(const Plane& A, const Plane& B) {
    if (A.point_count() != B.point_count() || A.stored_line_count() != B.stored_line_count())
        return std::nullopt;
    auto st = refine_joint({&A, &B}, nullptr);
    // color class sizes must agree
    std::map<int, int> ca, cb;
    for (int c : st[0].pcolor) ca[c]++;
    for (int c : st[1].pcolor) cb[c]++;
    if (ca != cb) return std::nullopt;

    MapSearch search(A, B, st[0], st[1]);
    std::optional<std::vector<int>> found;
    search.run([&](const std::vector<int>& m) {
        found = m;
        return false; // stop at first verified mapping
    });
    if (!found) return std::nullopt;
    IsoMapping out;
    for (int i = 0; i < A.point_count(); ++i)
        out.emplace_back(A.point_label(i), B.point_label((*found)[i]));
    return out;
}

unsigned long long perm_group_order(const std::vector<std::vector<int>>& gens_in, int n) {
    std::vector<std::vector<int>> gens;
    for (const auto& g : gens_in)
        if (g != identity_perm(n)) gens.push_back(g);
    if (gens.empty()) return 1;

    int base = -1;
    for (int i = 0; i < n && base < 0; ++i)
        for (const auto& g : gens)
            if (g[i] != i) {
                base = i;
                break;
            }
    if (base < 0) return 1;

    // orbit of base with transversal
    std::map<int, std::vector<int>> trans;
    trans[base] = identity_perm(n);
    std::vector<int> frontier{base};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier)
            for (const auto& g : gens) {
                int y = g[x];
                if (!trans.count(y)) {
                    trans[y] = compose(g, trans[x]);
                    next.push_back(y);
                }
            }
        frontier = std::move(next);
    }

    // Schreier generators for the stabilizer of base
    std::set<std::vector<int>> stab;
    for (const auto& [x, tx] : trans)
        for (const auto& g : gens) {
            const auto& tgx = trans.at(g[x]);
            auto s = compose(invert(tgx), compose(g, tx));
            if (s != identity_perm(n)) stab.insert(std::move(s));
        }
    std::vector<std::vector<int>> stab_gens(stab.begin(), stab.end());
    return trans.size() * perm_group_order(stab_gens, n);
}

AutGroup automorphisms(const Plane& P) {
    auto st = refine_joint({&P}, nullptr);
    MapSearch search(P, P, st[0], st[0]);
    std::vector<std::vector<int>> all;
    search.run([&](const std::vector<int>& m) {
        all.push_back(m);
        return true;
    });
    std::sort(all.begin(), all.end());

    AutGroup g;
    g.domain = P.point_labels();
    int n = P.point_count();

    // greedy reduction: add an automorphism only if not generated so far
    std::set<std::vector<int>> known{identity_perm(n)};
    for (const auto& a : all) {
        if (known.count(a)) continue;
        g.generators.push_back(a);
        // closure under the enlarged generator set
        std::vector<std::vector<int>> frontier(known.begin(), known.end());
        known.insert(a);
        frontier.push_back(a);
        while (!frontier.empty()) {
            auto x = frontier.back();
            frontier.pop_back();
            for (const auto& gen : g.generators) {
                auto y = compose(gen, x);
                if (known.insert(y).second) frontier.push_back(y);
            }
        }
        if (known.size() == all.size()) break;
    }
    g.order = perm_group_order(g.generators, n);
    return g;
}

bool is_rigid(const Plane& P) { return automorphisms(P).order == 1; }

} // namespace planes
