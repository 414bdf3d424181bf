// Batch front door: every subcommand is a pure function of its flags and
// input files, so reruns are byte-identical (also across --jobs values).
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "planes/codec.hpp"
#include "planes/confinement.hpp"
#include "planes/extension.hpp"
#include "planes/free_ext.hpp"
#include "planes/io.hpp"
#include "planes/iso.hpp"
#include "planes/pg.hpp"

using namespace planes;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitWitness = 1;
constexpr int kExitUsage = 2;

std::string render(const Report& rep, const std::string& format) {
    return format == "machine" ? rep.to_machine() : rep.to_text();
}

int cmd_encode(const std::string& in, const std::string& out, const std::string& logpath) {
    Graph g = read_graph_file(in);
    auto enc = encode(g);
    write_plane_file(enc.plane, out);
    if (!logpath.empty()) spew_file(logpath, enc.log.to_text());
    std::cout << "encoded " << g.vertex_count() << " vertices, " << g.edge_count()
              << " edges -> " << enc.plane.point_count() << " points\n";
    return kExitOk;
}

int cmd_decode(const std::string& in, const std::string& out) {
    Plane P = read_plane_file(in);
    Graph g = decode(P);
    write_graph_file(g, out);
    std::cout << "decoded " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
    return kExitOk;
}

int cmd_plus(const std::string& in, int stages, size_t budget, const std::string& out,
             const std::string& logpath) {
    Graph g = read_graph_file(in);
    auto res = build_plus(g, stages, budget);
    write_plane_file(res.plane, out);
    if (!logpath.empty()) spew_file(logpath, res.log.to_text());
    std::cout << "built " << res.plane.point_count() << " points, "
              << res.log.entries.size() << " attachments"
              << (res.log.truncated ? " (truncated)" : "") << "\n";
    return kExitOk;
}

int cmd_freeext(const std::string& in, int levels, size_t budget, const std::string& out) {
    Plane P = read_plane_file(in);
    auto tower = free_extend(P, levels, budget);
    write_plane_file(tower.top(), out);
    std::cout << "levels:";
    for (const auto& lvl : tower.levels) std::cout << " " << lvl.point_count();
    if (tower.truncated) std::cout << " (truncated)";
    std::cout << "\n";
    return kExitOk;
}

int cmd_check(const std::string& kind, const std::string& in, int jobs,
              const std::string& format, bool force) {
    Plane P = read_plane_file(in);
    if (kind == "axioms") {
        Report rep = validate_plane(P);
        std::cout << render(rep, format);
        return rep.ok() ? kExitOk : kExitWitness;
    }
    if ((kind == "desargues" || kind == "pappus") && P.point_count() > 25 && !force) {
        std::cerr << "plane has " << P.point_count()
                  << " points; exhaustive configuration scan may be slow. "
                     "Pass --force to run it anyway.\n";
        return kExitUsage;
    }
    if (kind == "desargues") {
        auto w = desargues_check(P, jobs);
        if (!w) {
            std::cout << "holds\n";
            return kExitOk;
        }
        std::cout << (format == "machine" ? w->to_report()
                                          : "witness found (center " + w->center + ")\n" +
                                                w->to_report());
        return kExitWitness;
    }
    if (kind == "pappus") {
        auto w = pappus_check(P, jobs);
        if (!w) {
            std::cout << "holds\n";
            return kExitOk;
        }
        std::cout << (format == "machine" ? w->to_report()
                                          : "witness found (lines " + w->line1 + " | " +
                                                w->line2 + ")\n" + w->to_report());
        return kExitWitness;
    }
    std::cerr << "unknown check kind '" << kind << "'\n";
    return kExitUsage;
}

int cmd_peel(const std::string& in, const std::string& format) {
    Plane P = read_plane_file(in);
    ConfinedCore core = peel(P);
    if (format == "machine") {
        std::cout << "report v1\nkind core\n";
        for (const auto& p : core.points) std::cout << "point " << p << "\n";
        for (const auto& l : core.lines) {
            std::cout << "line";
            for (const auto& m : l) std::cout << " " << m;
            std::cout << "\n";
        }
    } else {
        std::cout << "core: " << core.points.size() << " of " << P.point_count()
                  << " points, " << core.lines.size() << " of " << P.stored_line_count()
                  << " lines\n";
        for (const auto& p : core.points) std::cout << "  " << p << "\n";
    }
    return kExitOk;
}

int cmd_aut(const std::string& in) {
    Plane P = read_plane_file(in);
    AutGroup g = automorphisms(P);
    std::cout << "order " << g.order << "\n";
    for (const auto& gen : g.generators) {
        std::cout << "gen";
        for (int i = 0; i < int(gen.size()); ++i)
            if (gen[i] != i) std::cout << " " << g.domain[i] << "->" << g.domain[gen[i]];
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_iso(const std::string& a, const std::string& b) {
    Plane A = read_plane_file(a);
    Plane B = read_plane_file(b);
    auto m = isomorphic(A, B);
    if (!m) {
        std::cout << "none\n";
        return kExitWitness;
    }
    for (const auto& [x, y] : *m) std::cout << x << " -> " << y << "\n";
    return kExitOk;
}

int cmd_pg2(int q, const std::string& out, bool show_modulus) {
    if (show_modulus) {
        if (q > 0) {
            FiniteField F = gf(q);
            std::cout << "q=" << q << " modulus " << F.modulus_string() << "\n";
        } else {
            for (int order : gf_supported_orders()) {
                FiniteField F = gf(order);
                std::cout << "q=" << order << " modulus " << F.modulus_string() << "\n";
            }
        }
        return kExitOk;
    }
    FiniteField F = gf(q);
    Plane P = pg2(F);
    if (!out.empty()) write_plane_file(P, out);
    std::cout << "pg2(" << q << "): " << P.point_count() << " points, "
              << P.stored_line_count() << " lines\n";
    return kExitOk;
}

int cmd_validate_assets(const std::string& dir, const std::string& format) {
    Report all;
    all.subject = "assets";
    Report rq = validate_q();
    Report ra = validate_anchor();
    for (const auto& c : rq.clauses) all.add("q: " + c.name, c.ok, c.detail);
    for (const auto& c : ra.clauses) all.add("anchor: " + c.name, c.ok, c.detail);
    // asset files must be bit-exact serializations of the canonical planes
    try {
        std::string qfile = slurp_file(dir + "/q.plane");
        all.add("q.plane file bit-exact", qfile == write_plane(q_plane()));
    } catch (const PlaneError& e) {
        all.add("q.plane file bit-exact", false, e.what());
    }
    try {
        std::string afile = slurp_file(dir + "/anchor17.plane");
        all.add("anchor17.plane file bit-exact", afile == write_plane(anchor_plane()));
    } catch (const PlaneError& e) {
        all.add("anchor17.plane file bit-exact", false, e.what());
    }
    std::cout << render(all, format);
    return all.ok() ? kExitOk : kExitWitness;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-plane constructions and checkers"};
    app.require_subcommand(1);

    std::string in, out, logpath, format = "text", dir = "assets", kind;
    std::string in2;
    int jobs = 1, stages = 0, levels = 1, q = 0;
    size_t budget = kNoBudget;
    bool force = false, show_modulus = false;

    auto* enc = app.add_subcommand("encode", "graph -> plane");
    enc->add_option("-i,--input", in, "graph file")->required();
    enc->add_option("-o,--output", out, "plane file")->required();
    enc->add_option("--log", logpath, "write the extension step log");

    auto* dec = app.add_subcommand("decode", "plane -> graph");
    dec->add_option("-i,--input", in, "plane file")->required();
    dec->add_option("-o,--output", out, "graph file")->required();

    auto* plus = app.add_subcommand("plus", "staged Q-attachment build");
    plus->add_option("-i,--input", in, "graph file")->required();
    plus->add_option("-o,--output", out, "plane file")->required();
    plus->add_option("--line-stages", stages, "number of line stages");
    plus->add_option("--budget", budget, "max attachments per stage");
    plus->add_option("--log", logpath, "write the stage log");

    auto* fx = app.add_subcommand("freeext", "truncated free projective extension");
    fx->add_option("-i,--input", in, "plane file")->required();
    fx->add_option("-o,--output", out, "plane file for the top level")->required();
    fx->add_option("--levels", levels, "levels to build");
    fx->add_option("--budget", budget, "max new points");

    auto* chk = app.add_subcommand("check", "axioms|desargues|pappus");
    chk->add_option("kind", kind, "what to check")->required();
    chk->add_option("-i,--input", in, "plane file")->required();
    chk->add_option("--jobs", jobs, "worker threads");
    chk->add_option("--format", format, "text|machine");
    chk->add_flag("--force", force, "run big exhaustive scans");

    auto* pl = app.add_subcommand("peel", "maximal confined subconfiguration");
    pl->add_option("-i,--input", in, "plane file")->required();
    pl->add_option("--format", format, "text|machine");

    auto* au = app.add_subcommand("aut", "automorphism group");
    au->add_option("plane", in, "plane file")->required();

    auto* is = app.add_subcommand("iso", "isomorphism between two planes");
    is->add_option("plane1", in, "first plane")->required();
    is->add_option("plane2", in2, "second plane")->required();

    auto* pg = app.add_subcommand("pg2", "projective plane over GF(q)");
    pg->add_option("--q", q, "field order");
    pg->add_option("-o,--output", out, "plane file");
    pg->add_flag("--show-modulus", show_modulus, "print the published moduli");

    auto* va = app.add_subcommand("validate-assets", "validate q.plane / anchor17.plane");
    va->add_option("--dir", dir, "asset directory");
    va->add_option("--format", format, "text|machine");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (enc->parsed()) return cmd_encode(in, out, logpath);
        if (dec->parsed()) return cmd_decode(in, out);
        if (plus->parsed()) return cmd_plus(in, stages, budget, out, logpath);
        if (fx->parsed()) return cmd_freeext(in, levels, budget, out);
        if (chk->parsed()) return cmd_check(kind, in, jobs, format, force);
        if (pl->parsed()) return cmd_peel(in, format);
        if (au->parsed()) return cmd_aut(in);
        if (is->parsed()) return cmd_iso(in, in2);
        if (pg->parsed()) {
            if (!show_modulus && q == 0) {
                std::cerr << "pg2 requires --q or --show-modulus\n";
                return kExitUsage;
            }
            return cmd_pg2(q, out, show_modulus);
        }
        if (va->parsed()) return cmd_validate_assets(dir, format);
    } catch (const PlaneError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
