#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "knotfam/diagram.hpp"
#include "knotfam/invariants.hpp"
#include "knotfam/tangle.hpp"

namespace knotfam {

struct ReferenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ReferenceEntry {
    std::string name;
    PlanarDiagram diagram;
    std::string source;
};

// Knot table rows: gluing parameters and the name of the matching knot.
struct TableRow {
    GluingData gluing;
    std::string knot;
};

const std::vector<TableRow>& table_rows();

// Determinant an entry must have: |1 - pqrs| for table knots, the recorded value for controls.
std::optional<i64> expected_determinant(const std::string& name);

std::vector<ReferenceEntry> parse_reference(const nlohmann::json& j);
// Parses and runs the load-time determinant checks.
std::vector<ReferenceEntry> load_reference(const std::string& path);
const ReferenceEntry& find_entry(const std::vector<ReferenceEntry>& entries, const std::string& name);

struct RowVerdict {
    TableRow row;
    i64 constructed_determinant = 0;
    i64 reference_determinant = 0;
    bool jones_match = false;
    bool alexander_match = false;
    bool pass = false;
    std::string message;
    LaurentPolynomial jones;
    LaurentPolynomial alexander;
};

RowVerdict verify_row(const TableRow& row, const ReferenceEntry& ref);
nlohmann::json verdict_json(const RowVerdict& v);

}  // namespace knotfam
