// knotfam: construct and check L(T(p,q),T(r,s)) diagrams.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "knotfam/invariants.hpp"
#include "knotfam/reference.hpp"
#include "knotfam/representations.hpp"
#include "knotfam/survey.hpp"

#ifndef KNOTFAM_DATA
#define KNOTFAM_DATA "data/reference.json"
#endif

using namespace knotfam;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const json& j, const std::string& out) {
    if (out.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(out);
    if (!f) throw UsageError("cannot write " + out);
    f << j.dump(2) << "\n";
}

PlanarDiagram read_diagram(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    try {
        json j;
        in >> j;
        auto d = diagram_from_json(j);
        require_valid(d);
        return d;
    } catch (const json::exception& e) {
        throw UsageError(path + ": " + e.what());
    } catch (const DiagramError& e) {
        throw UsageError(path + ": " + e.what());
    }
}

int cmd_construct(i64 p, i64 q, i64 r, i64 s, const std::string& form, const std::string& out) {
    GluingData g{{p, q}, {r, s}};
    PlanarDiagram d;
    try {
        d = form == "alternating" ? assemble_alternating(g) : assemble_initial(g);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    int comps = components(d).count;
    std::cerr << d.name << ": " << comps << (comps == 1 ? " component, " : " components, ") << d.crossing_count()
              << " crossings" << (is_alternating(d) ? ", alternating" : "") << "\n";
    emit(diagram_to_json(d), out);
    if (!out.empty())
        std::cout << "components " << comps << "\ncrossings " << d.crossing_count() << "\n";
    return 0;
}

int cmd_invariants(const std::string& path, bool want_jones, bool want_alex, bool want_det, bool want_sig,
                   bool want_hom, const std::string& out) {
    auto d = read_diagram(path);
    bool all = !(want_jones || want_alex || want_det || want_sig || want_hom);
    int comps = components(d).count;
    json j;
    j["name"] = d.name;
    j["components"] = comps;
    j["crossings"] = d.crossing_count();
    if (all || want_jones) j["jones"] = polynomial_json(jones(d), jones_variable(comps));
    if ((all || want_alex) && comps == 1) j["alexander"] = polynomial_json(alexander(d), "t");
    if (want_alex && comps != 1) throw UsageError("Alexander polynomial is only computed for knots");
    if (all || want_det) j["determinant"] = determinant(d);
    if (all || want_sig) j["signature"] = signature(d);
    if (all || want_hom) {
        auto h = double_cover_homology(d);
        j["double_cover_homology"] = {{"factors", h.nontrivial()}, {"free_rank", h.free_rank},
                                      {"z2_rank", h.rank_mod2()}};
    }
    emit(j, out);
    return 0;
}

int cmd_reps(const std::string& path, const SearchOptions& opt, const std::string& out) {
    auto d = read_diagram(path);
    if (components(d).count != 1) throw UsageError("representation survey needs a knot, got a link");
    std::cerr << "searching " << opt.restarts << " restarts, seed " << opt.seed << "\n";
    auto rep = simplicity_report(d, opt);
    auto j = simplicity_json(rep);
    j["name"] = d.name;
    emit(j, out);
    return 0;
}

int cmd_verify_table(const std::string& data, const std::string& out) {
    std::vector<ReferenceEntry> entries;
    try {
        entries = load_reference(data);
    } catch (const ReferenceError& e) {
        throw UsageError(e.what());
    }
    json rows = json::array();
    bool ok = true;
    for (auto& row : table_rows()) {
        RowVerdict v;
        try {
            v = verify_row(row, find_entry(entries, row.knot));
        } catch (const ReferenceError& e) {
            v.row = row;
            v.message = e.what();
        }
        ok = ok && v.pass;
        std::cerr << gluing_name(row.gluing, "") << " vs " << row.knot << ": " << (v.pass ? "pass" : "FAIL")
                  << (v.pass ? "" : " (" + v.message + ")") << "\n";
        rows.push_back(v.constructed_determinant ? verdict_json(v)
                                                 : json{{"knot", row.knot}, {"pass", false}, {"message", v.message}});
    }
    emit({{"rows", rows}, {"pass", ok}}, out);
    return ok ? 0 : 1;
}

int cmd_survey(i64 pmax, i64 qmax, i64 rmax, i64 smax, bool negative, const std::string& out) {
    if (pmax < 2 || qmax < 2 || rmax < 2 || smax < 2) throw UsageError("survey bounds must be at least 2");
    auto grid = survey_grid(pmax, qmax, rmax, smax, negative);
    json cells = json::array();
    int failed = 0, skipped = 0;
    for (auto& g : grid) {
        auto c = survey_cell(g);
        if (c.degenerate) ++skipped;
        if (!c.pass()) {
            ++failed;
            std::cerr << gluing_name(g, "") << ": FAIL\n";
        }
        cells.push_back(cell_json(c));
    }
    std::cerr << grid.size() << " cells, " << failed << " failed, " << skipped << " skipped\n";
    emit({{"cells", cells}, {"failed", failed}, {"skipped", skipped}, {"pass", failed == 0}}, out);
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Diagrams and invariants for the knots L(T(p,q),T(r,s))"};
    app.require_subcommand(1);
    std::string out;

    auto* construct = app.add_subcommand("construct", "build a diagram and write it as JSON");
    i64 p = 0, q = 0, r = 0, s = 0;
    std::string form = "initial";
    construct->add_option("-p", p)->required();
    construct->add_option("-q", q)->required();
    construct->add_option("-r", r)->required();
    construct->add_option("-s", s)->required();
    construct->add_option("--form", form)->check(CLI::IsMember({"initial", "alternating"}));
    construct->add_option("--out", out);

    auto* inv = app.add_subcommand("invariants", "invariant report for a diagram file");
    std::string path;
    bool wj = false, wa = false, wd = false, ws = false, wh = false;
    inv->add_option("diagram", path)->required();
    inv->add_flag("--jones", wj);
    inv->add_flag("--alexander", wa);
    inv->add_flag("--det", wd);
    inv->add_flag("--signature", ws);
    inv->add_flag("--homology", wh);
    inv->add_option("--out", out);

    auto* reps = app.add_subcommand("reps", "search meridian-traceless SU(2) representations");
    SearchOptions opt;
    reps->add_option("diagram", path)->required();
    reps->add_option("--restarts", opt.restarts)->check(CLI::NonNegativeNumber);
    reps->add_option("--tol", opt.tol);
    reps->add_option("--seed", opt.seed);
    reps->add_option("--threads", opt.threads);
    reps->add_option("--out", out);

    auto* verify = app.add_subcommand("verify-table", "compare the table rows with reference diagrams");
    std::string data = KNOTFAM_DATA;
    verify->add_option("--data", data);
    verify->add_option("--out", out);

    auto* survey = app.add_subcommand("survey", "check the family identities over a parameter grid");
    i64 pmax = 3, qmax = 5, rmax = 3, smax = 5;
    bool no_negative = false;
    survey->add_option("--pmax", pmax);
    survey->add_option("--qmax", qmax);
    survey->add_option("--rmax", rmax);
    survey->add_option("--smax", smax);
    survey->add_flag("--no-negative", no_negative, "skip the (r,-s) variants");
    survey->add_option("--out", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*construct) return cmd_construct(p, q, r, s, form, out);
        if (*inv) return cmd_invariants(path, wj, wa, wd, ws, wh, out);
        if (*reps) return cmd_reps(path, opt, out);
        if (*verify) return cmd_verify_table(data, out);
        if (*survey) return cmd_survey(pmax, qmax, rmax, smax, !no_negative, out);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
