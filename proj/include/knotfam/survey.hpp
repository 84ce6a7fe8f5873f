#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "knotfam/tangle.hpp"

namespace knotfam {

struct SurveyCell {
    GluingData gluing;
    bool degenerate = false;  // 1 - pqrs = 0
    i64 expected_determinant = 0;
    i64 determinant = 0;
    int components = 0;
    int initial_crossings = 0;
    int alternating_crossings = 0;
    std::vector<i64> goeritz_factors;
    std::vector<i64> presentation_factors;
    i64 dihedral = -1;  // knots only

    bool determinant_ok = false;
    bool presentation_ok = false;
    bool parity_ok = false;
    bool z2_rank_ok = false;
    bool alternating_ok = false;
    bool initial_not_alternating = false;
    bool crossing_drop_ok = false;
    bool jones_ok = false;
    bool klassen_ok = true;
    bool rank_identity_ok = true;

    bool pass() const;
};

// Coprime pairs (p, q) with 2 <= p <= pmax, 2 <= q <= qmax.
std::vector<TorusKnotParams> coprime_pairs(i64 pmax, i64 qmax);
// All tuples from the two pair ranges; with_negative adds the (r, -s) variant of each.
std::vector<GluingData> survey_grid(i64 pmax, i64 qmax, i64 rmax, i64 smax, bool with_negative = true);

SurveyCell survey_cell(const GluingData& g);
nlohmann::json cell_json(const SurveyCell& c);

}  // namespace knotfam
