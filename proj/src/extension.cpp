#include "planes/extension.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "planes/iso.hpp"
#include "planes/label.hpp"

namespace planes {

Plane one_point_extension(const Plane& P, const std::vector<Line>& L, const std::string& label) {
    std::vector<detail::ResolvedLine> rs;
    rs.reserve(L.size());
    for (const auto& l : L) rs.push_back(detail::resolve_line(P, l));
    for (size_t i = 0; i < rs.size(); ++i)
        for (size_t j = i + 1; j < rs.size(); ++j)
            if (!detail::lines_parallel(P, rs[i], rs[j]))
                throw PlaneError(Err::NotParallel,
                                 L[i].label() + " and " + L[j].label() + " intersect");
    std::vector<int> stored;
    std::vector<std::pair<int, int>> trivial;
    for (const auto& r : rs) {
        if (r.trivial())
            trivial.push_back(r.pair);
        else
            stored.push_back(r.stored_id);
    }
    return P.extended(label, stored, trivial);
}

std::string BuildLog::to_text() const {
    std::ostringstream os;
    os << "steplog v1\n";
    for (const auto& s : steps) {
        os << "ext " << s.new_label;
        for (const auto& t : s.targets) os << " " << t;
        if (!s.tag.empty()) os << " # " << s.tag;
        os << "\n";
    }
    return os.str();
}

BuildLog BuildLog::from_text(const std::string& text) {
    BuildLog log;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    bool header = false;
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (!header) {
            std::string v;
            ls >> v;
            if (tok != "steplog" || v != "v1")
                throw PlaneError(Err::ParseError,
                                 "line " + std::to_string(lineno) + ": expected 'steplog v1'");
            header = true;
            continue;
        }
        if (tok != "ext")
            throw PlaneError(Err::ParseError, "line " + std::to_string(lineno) + ": expected 'ext'");
        ExtensionStep step;
        if (!(ls >> step.new_label))
            throw PlaneError(Err::ParseError, "line " + std::to_string(lineno) + ": missing label");
        std::string t;
        bool in_tag = false;
        while (ls >> t) {
            if (t == "#") { in_tag = true; continue; }
            if (in_tag)
                step.tag += (step.tag.empty() ? "" : " ") + t;
            else
                step.targets.push_back(t);
        }
        log.steps.push_back(std::move(step));
    }
    return log;
}

namespace {

/// Resolves a canonical line label "<a>,<b>" against P. The two least members
/// of a line remain on it for good, so join() recovers the line exactly.
Line line_from_label(const Plane& P, const std::string& label) {
    auto comma = label.find(',');
    if (comma == std::string::npos)
        throw PlaneError(Err::ParseError, "bad line label '" + label + "'");
    return join(P, label.substr(0, comma), label.substr(comma + 1));
}

} // namespace

Plane replay(const Plane& base, const BuildLog& log) {
    Plane P = base;
    for (const auto& s : log.steps) {
        std::vector<Line> L;
        L.reserve(s.targets.size());
        for (const auto& t : s.targets) L.push_back(line_from_label(P, t));
        P = one_point_extension(P, L, s.new_label);
    }
    return P;
}

// ---- the plane Q -----------------------------------------------------------

namespace {

// Column matrix of Q. Each string is one line; points are single letters.
constexpr std::array<const char*, 11> kQColumns = {
    "abcde", "cnl", "eolf", "afgh", "bklm", "dnkf", "domh", "ckg", "emg", "ako", "bno",
};

std::vector<std::vector<char>> q_lines_through(char letter) {
    std::vector<std::vector<char>> out;
    for (const char* col : kQColumns) {
        std::string s(col);
        if (s.find(letter) != std::string::npos) out.emplace_back(s.begin(), s.end());
    }
    return out;
}

/// Shared core of both attachment constructions: given the seed mapping
/// (Q letters already present in the host), build the remaining points of the
/// Q copy one by one via Fact 2.2, each under the current restrictions of its
/// Q-lines. Restrictions of distinct Q-lines through one letter are pairwise
/// parallel because those lines meet only at the letter being added.
Plane grow_q_copy(Plane P, std::vector<std::pair<char, std::string>>& mapping,
                  const std::string& site, const std::vector<char>& order, BuildLog* log) {
    auto mapped = [&](char c) -> const std::string* {
        for (const auto& [letter, lbl] : mapping)
            if (letter == c) return &lbl;
        return nullptr;
    };
    for (char letter : order) {
        std::string fresh = q_label(site, letter);
        std::vector<Line> L;
        for (const auto& qline : q_lines_through(letter)) {
            std::vector<std::string> present;
            for (char c : qline)
                if (c != letter)
                    if (const std::string* lbl = mapped(c)) present.push_back(*lbl);
            if (present.size() >= 2) L.push_back(join(P, present[0], present[1]));
        }
        if (log) {
            ExtensionStep step;
            step.new_label = fresh;
            for (const auto& l : L) step.targets.push_back(l.label());
            step.tag = "q-copy " + site;
            log->steps.push_back(std::move(step));
        }
        P = one_point_extension(P, L, fresh);
        mapping.emplace_back(letter, fresh);
    }
    return P;
}

void check_site_fresh(const Plane& P, const std::string& site) {
    if (site.empty() || site.find(':') != std::string::npos ||
        site.find_first_of(" \t\n") != std::string::npos)
        throw PlaneError(Err::StaleLabel, "bad site token '" + site + "'");
    std::string prefix = "q:" + site + ":";
    for (const auto& p : P.point_labels())
        if (p.compare(0, prefix.size(), prefix) == 0)
            throw PlaneError(Err::StaleLabel, "site '" + site + "' already used");
}

} // namespace

Plane q_plane() {
    std::vector<std::string> points;
    for (char c = 'a'; c <= 'o'; ++c)
        if (c != 'i' && c != 'j') points.emplace_back(1, c);
    std::vector<std::vector<std::string>> lines;
    for (const char* col : kQColumns) {
        std::vector<std::string> l;
        for (const char* c = col; *c; ++c) l.emplace_back(1, *c);
        lines.push_back(std::move(l));
    }
    return Plane::from_raw(points, lines);
}

Report validate_q() {
    Report rep;
    rep.subject = "q-plane";
    Plane Q = q_plane();
    rep.add("13 points", Q.point_count() == 13, std::to_string(Q.point_count()));
    rep.add("11 stored lines", Q.stored_line_count() == 11, std::to_string(Q.stored_line_count()));
    Report ax = validate_plane(Q);
    rep.add("plane axioms", ax.ok());
    auto aut = automorphisms(Q);
    rep.add("rigid", aut.order == 1, "|Aut| = " + std::to_string(aut.order));
    return rep;
}

Plane attach_q_at_point(const Plane& P, const std::string& p, const std::string& site,
                        BuildLog* log) {
    P.point_index(p); // UnknownPoint check
    check_site_fresh(P, site);
    std::vector<std::pair<char, std::string>> mapping{{'a', p}};
    Plane R = P;
    // generic seeds first, then the rest alphabetically
    for (char seed : {'b', 'f'}) {
        std::string fresh = q_label(site, seed);
        if (log) log->steps.push_back({fresh, {}, "q-copy " + site});
        R = one_point_extension(R, {}, fresh);
        mapping.emplace_back(seed, fresh);
    }
    return grow_q_copy(std::move(R), mapping, site,
                       {'c', 'd', 'e', 'g', 'h', 'k', 'l', 'm', 'n', 'o'}, log);
}

Plane attach_q_at_line(const Plane& P, const Line& l, const std::string& site, BuildLog* log) {
    detail::resolve_line(P, l); // UnknownLine check
    check_site_fresh(P, site);
    // a, b are identified with the two least points of l
    std::vector<std::pair<char, std::string>> mapping{{'a', l.members[0]}, {'b', l.members[1]}};
    Plane R = P;
    std::string fresh = q_label(site, 'f');
    if (log) log->steps.push_back({fresh, {}, "q-copy " + site});
    R = one_point_extension(R, {}, fresh);
    mapping.emplace_back('f', fresh);
    return grow_q_copy(std::move(R), mapping, site,
                       {'c', 'd', 'e', 'g', 'h', 'k', 'l', 'm', 'n', 'o'}, log);
}

} // namespace planes
