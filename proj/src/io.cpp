#include "planes/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace planes {

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

[[noreturn]] void parse_fail(int lineno, const std::string& what) {
    throw PlaneError(Err::ParseError, "line " + std::to_string(lineno) + ": " + what);
}

} // namespace

std::string write_plane(const Plane& P) {
    std::ostringstream os;
    os << "plane v1\n";
    for (const auto& p : P.point_labels()) os << "p " << p << "\n";
    for (const auto& l : P.label_lines()) {
        os << "l";
        for (const auto& m : l) os << " " << m;
        os << "\n";
    }
    return os.str();
}

Plane read_plane(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    std::vector<std::string> points;
    std::vector<std::vector<std::string>> lines;
    bool header = false;
    while (std::getline(is, line)) {
        ++lineno;
        auto tk = tokens(line);
        if (tk.empty()) continue;
        if (!header) {
            if (tk.size() != 2 || tk[0] != "plane" || tk[1] != "v1")
                parse_fail(lineno, "expected 'plane v1' header");
            header = true;
            continue;
        }
        if (tk[0] == "p") {
            if (tk.size() != 2) parse_fail(lineno, "expected 'p <label>'");
            points.push_back(tk[1]);
        } else if (tk[0] == "l") {
            if (tk.size() < 3) parse_fail(lineno, "line needs >=2 members");
            lines.emplace_back(tk.begin() + 1, tk.end());
        } else {
            parse_fail(lineno, "unknown directive '" + tk[0] + "'");
        }
    }
    if (!header) parse_fail(lineno, "missing 'plane v1' header");
    try {
        return Plane::from_raw(points, lines);
    } catch (const PlaneError& e) {
        throw PlaneError(Err::ParseError, std::string("invalid plane data: ") + e.what());
    }
}

std::string write_graph(const Graph& g) {
    std::ostringstream os;
    os << "graph v1\n";
    for (const auto& v : g.vertex_names()) os << "v " << v << "\n";
    std::vector<std::pair<std::string, std::string>> es;
    for (auto [i, j] : g.edges()) {
        std::string a = g.vertex_names()[i], b = g.vertex_names()[j];
        if (b < a) std::swap(a, b);
        es.emplace_back(a, b);
    }
    std::sort(es.begin(), es.end());
    for (const auto& [a, b] : es) os << "e " << a << " " << b << "\n";
    return os.str();
}

Graph read_graph(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    bool header = false;
    while (std::getline(is, line)) {
        ++lineno;
        auto tk = tokens(line);
        if (tk.empty()) continue;
        if (!header) {
            if (tk.size() != 2 || tk[0] != "graph" || tk[1] != "v1")
                parse_fail(lineno, "expected 'graph v1' header");
            header = true;
            continue;
        }
        if (tk[0] == "v") {
            if (tk.size() != 2) parse_fail(lineno, "expected 'v <name>'");
            vertices.push_back(tk[1]);
        } else if (tk[0] == "e") {
            if (tk.size() != 3) parse_fail(lineno, "expected 'e <name1> <name2>'");
            edges.emplace_back(tk[1], tk[2]);
        } else {
            parse_fail(lineno, "unknown directive '" + tk[0] + "'");
        }
    }
    if (!header) parse_fail(lineno, "missing 'graph v1' header");
    try {
        return Graph(std::move(vertices), std::move(edges));
    } catch (const PlaneError& e) {
        throw PlaneError(Err::ParseError, std::string("invalid graph data: ") + e.what());
    }
}

std::string slurp_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw PlaneError(Err::ParseError, "cannot open '" + path + "'");
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

void spew_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw PlaneError(Err::ParseError, "cannot write '" + path + "'");
    f << content;
}

Plane read_plane_file(const std::string& path) { return read_plane(slurp_file(path)); }
void write_plane_file(const Plane& P, const std::string& path) { spew_file(path, write_plane(P)); }
Graph read_graph_file(const std::string& path) { return read_graph(slurp_file(path)); }
void write_graph_file(const Graph& g, const std::string& path) { spew_file(path, write_graph(g)); }

} // namespace planes
