#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "knotfam/algebra.hpp"

namespace knotfam {

struct DiagramError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Crossings are read counterclockwise starting at the incoming under-strand.
// Slots 0 and 2 are under, 1 and 3 are over.
struct PlanarDiagram {
    std::string name;
    int arc_count = 0;
    std::vector<std::array<int, 4>> crossings;
    std::optional<std::array<int, 4>> marked_curve;
    std::optional<int> unbounded_arc;

    int crossing_count() const { return static_cast<int>(crossings.size()); }
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
    int faces = 0;
    int components = 0;
    bool connected = true;
};

struct ComponentInfo {
    int count = 0;
    std::vector<int> arc_component;  // indexed by arc label; entry 0 unused
};

struct Incidence {
    int crossing;
    int slot;
};

// Directed view of a valid diagram: for every arc its tail (where it leaves a crossing)
// and head (where it enters one), plus crossing signs.
struct Orientation {
    std::vector<Incidence> tail;  // indexed by label
    std::vector<Incidence> head;
    std::vector<int> sign;        // per crossing, +1 when the over strand runs slot 3 -> slot 1
};

struct FaceData {
    // face boundary as a cyclic list of corners; corner (c, k) lies between slots k and k+1
    std::vector<std::vector<Incidence>> faces;
    std::vector<int> corner_face;  // 4*c + k -> face index
    std::vector<int> color;        // per face: 0 white, 1 black
    int unbounded_face = 0;
};

struct GoeritzData {
    IntegerMatrix full;     // indexed by white faces
    IntegerMatrix reduced;  // one white face deleted
    std::vector<int> white_faces;
    int deleted_face = -1;
    std::vector<int> eta;      // per crossing
    std::vector<bool> type_two;
    int correction = 0;        // sum of eta over type II crossings
};

ValidationReport validate(const PlanarDiagram& d);
void require_valid(const PlanarDiagram& d);
ComponentInfo components(const PlanarDiagram& d);
Orientation orientation(const PlanarDiagram& d);
FaceData faces_and_coloring(const PlanarDiagram& d);
FaceData faces_and_coloring(const PlanarDiagram& d, bool swap_colors);
GoeritzData goeritz(const PlanarDiagram& d, bool swap_colors = false);
bool is_alternating(const PlanarDiagram& d);
int writhe(const PlanarDiagram& d);
PlanarDiagram mirror(const PlanarDiagram& d);

// Build a diagram from crossing tuples that start at some under end but carry no
// orientation; components are oriented in order of first appearance and arcs are
// relabeled 1..n along each component. label_map receives old label -> new label.
PlanarDiagram orient_pd(const std::vector<std::array<int, 4>>& raw, std::vector<std::pair<int, int>>* label_map = nullptr);

nlohmann::json diagram_to_json(const PlanarDiagram& d);
PlanarDiagram diagram_from_json(const nlohmann::json& j);

}  // namespace knotfam
