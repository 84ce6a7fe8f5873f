#include "knotfam/reference.hpp"

#include <cstdlib>
#include <fstream>
#include <map>

namespace knotfam {

const std::vector<TableRow>& table_rows() {
    static const std::vector<TableRow> rows = {
        {{{2, 3}, {2, 3}}, "8_16"},   {{{2, 3}, {2, -3}}, "8_17"}, {{{2, 3}, {2, 5}}, "9_32"},
        {{{2, 3}, {2, -5}}, "9_33"},  {{{2, 3}, {2, 7}}, "10_83"}, {{{2, 3}, {2, -7}}, "10_86"},
        {{{2, 5}, {2, 5}}, "10_89"},  {{{2, 5}, {2, -5}}, "10_88"}, {{{2, 5}, {2, 7}}, "11a_54"},
        {{{2, 7}, {2, 7}}, "12a_1010"},
    };
    return rows;
}

std::optional<i64> expected_determinant(const std::string& name) {
    for (auto& r : table_rows())
        if (r.knot == name) {
            i64 pqrs = r.gluing.left.p * r.gluing.left.q * r.gluing.right.p * r.gluing.right.q;
            return std::abs(1 - pqrs);
        }
    static const std::map<std::string, i64> controls = {{"3_1", 3}, {"4_1", 5}, {"P(3,5,7)", 71}};
    auto it = controls.find(name);
    if (it == controls.end()) return std::nullopt;
    return it->second;
}

std::vector<ReferenceEntry> parse_reference(const nlohmann::json& j) {
    if (!j.is_array()) throw ReferenceError("reference data must be a JSON array");
    std::vector<ReferenceEntry> out;
    for (auto& e : j) {
        ReferenceEntry r;
        try {
            r.name = e.at("name").get<std::string>();
            r.source = e.value("source", "");
            r.diagram = diagram_from_json(e.at("diagram"));
        } catch (const nlohmann::json::exception& ex) {
            throw ReferenceError(std::string("malformed reference entry: ") + ex.what());
        }
        if (r.diagram.name.empty()) r.diagram.name = r.name;
        auto rep = validate(r.diagram);
        if (!rep.ok) throw ReferenceError("reference " + r.name + ": " + rep.violations.front());
        auto want = expected_determinant(r.name);
        if (!want) throw ReferenceError("reference " + r.name + " has no expected determinant");
        i64 got = determinant(r.diagram);
        if (got != *want)
            throw ReferenceError("reference " + r.name + ": determinant " + std::to_string(got) + ", expected " +
                                 std::to_string(*want));
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<ReferenceEntry> load_reference(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ReferenceError("cannot open reference data " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& ex) {
        throw ReferenceError("cannot parse " + path + ": " + ex.what());
    }
    return parse_reference(j);
}

const ReferenceEntry& find_entry(const std::vector<ReferenceEntry>& entries, const std::string& name) {
    for (auto& e : entries)
        if (e.name == name) return e;
    throw ReferenceError("reference entry " + name + " missing");
}

RowVerdict verify_row(const TableRow& row, const ReferenceEntry& ref) {
    RowVerdict v;
    v.row = row;
    auto boxes = initial_boxes(row.gluing);
    auto built = assemble_initial(row.gluing);
    v.jones = jones_family(boxes, built);
    v.alexander = alexander(built);
    v.constructed_determinant = determinant(built);
    v.reference_determinant = determinant(ref.diagram);
    v.jones_match = equal_up_to_mirror(v.jones, jones(ref.diagram));
    v.alexander_match = equal_up_to_unit(v.alexander, alexander(ref.diagram));
    bool det_match = v.constructed_determinant == v.reference_determinant;
    v.pass = v.jones_match && v.alexander_match && det_match;
    std::vector<std::string> bad;
    if (!v.jones_match) bad.push_back("jones");
    if (!v.alexander_match) bad.push_back("alexander");
    if (!det_match) bad.push_back("determinant");
    for (size_t i = 0; i < bad.size(); ++i) v.message += (i ? ", " : "mismatch: ") + bad[i];
    if (v.pass) v.message = "invariants agree (equality of invariants, not a proof of isotopy)";
    return v;
}

nlohmann::json verdict_json(const RowVerdict& v) {
    auto& g = v.row.gluing;
    return {{"row", {g.left.p, g.left.q, g.right.p, g.right.q}},
            {"knot", v.row.knot},
            {"pass", v.pass},
            {"jones_match", v.jones_match},
            {"alexander_match", v.alexander_match},
            {"determinant", v.constructed_determinant},
            {"reference_determinant", v.reference_determinant},
            {"jones", polynomial_json(v.jones, "t")},
            {"alexander", polynomial_json(v.alexander, "t")},
            {"message", v.message}};
}

}  // namespace knotfam
