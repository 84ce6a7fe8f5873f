#include "knotfam/survey.hpp"

#include <numeric>

#include "knotfam/invariants.hpp"
#include "knotfam/representations.hpp"

namespace knotfam {

bool SurveyCell::pass() const {
    if (degenerate) return true;
    return determinant_ok && presentation_ok && parity_ok && z2_rank_ok && alternating_ok &&
           initial_not_alternating && crossing_drop_ok && jones_ok && klassen_ok && rank_identity_ok;
}

std::vector<TorusKnotParams> coprime_pairs(i64 pmax, i64 qmax) {
    std::vector<TorusKnotParams> out;
    for (i64 p = 2; p <= pmax; ++p)
        for (i64 q = 2; q <= qmax; ++q)
            if (std::gcd(p, q) == 1) out.push_back({p, q});
    return out;
}

std::vector<GluingData> survey_grid(i64 pmax, i64 qmax, i64 rmax, i64 smax, bool with_negative) {
    std::vector<GluingData> out;
    auto left = coprime_pairs(pmax, qmax);
    auto right = coprime_pairs(rmax, smax);
    for (auto& l : left)
        for (auto& r : right) {
            out.push_back({l, r});
            if (with_negative) out.push_back({l, {r.p, -r.q}});
        }
    return out;
}

SurveyCell survey_cell(const GluingData& g) {
    SurveyCell c;
    c.gluing = g;
    i64 pqrs = checked_mul(checked_mul(g.left.p, g.left.q), checked_mul(g.right.p, g.right.q));
    if (1 - pqrs == 0) {
        c.degenerate = true;
        return c;
    }
    c.expected_determinant = std::abs(1 - pqrs);

    auto init_boxes = initial_boxes(g);
    auto init = assemble_initial(g);
    auto alt_boxes = alternating_boxes(g);
    auto alt = assemble_alternating(g);

    c.determinant = determinant(init);
    c.determinant_ok = c.determinant == c.expected_determinant;
    c.components = components(init).count;
    bool all_odd = g.left.p % 2 != 0 && g.left.q % 2 != 0 && g.right.p % 2 != 0 && g.right.q % 2 != 0;
    c.parity_ok = (c.components == 1) == ((pqrs - 1) % 2 != 0) && (c.components == 2) == all_odd;

    auto h = double_cover_homology(init);
    c.goeritz_factors = h.nontrivial();
    c.z2_rank_ok = h.rank_mod2() == c.components - 1;
    auto pres = snf(h1_presentation(g));
    c.presentation_factors = pres.factors;
    c.presentation_ok = pres.free_rank == 0 && pres.nontrivial() == c.goeritz_factors && h.free_rank == 0 &&
                        pres.factors.size() == 2 && pres.factors[0] == 1 && pres.factors[1] == c.expected_determinant;

    c.initial_crossings = init.crossing_count();
    c.alternating_crossings = alt.crossing_count();
    c.alternating_ok = is_alternating(alt) && components(alt).count == c.components;
    c.initial_not_alternating = !is_alternating(init);
    c.crossing_drop_ok = c.alternating_crossings == c.initial_crossings - 2;
    c.jones_ok = jones_family(init_boxes, init) == jones_family(alt_boxes, alt);

    if (c.components == 1) {
        c.dihedral = dihedral_classes(init);
        c.klassen_ok = c.dihedral == (c.determinant - 1) / 2;
        c.rank_identity_ok = 2 * c.dihedral + 1 == c.expected_determinant;
    }
    return c;
}

nlohmann::json cell_json(const SurveyCell& c) {
    auto& g = c.gluing;
    nlohmann::json j = {{"p", g.left.p}, {"q", g.left.q}, {"r", g.right.p}, {"s", g.right.q}};
    if (c.degenerate) {
        j["status"] = "not a rational homology sphere";
        j["skipped"] = true;
        return j;
    }
    j["determinant"] = c.determinant;
    j["expected_determinant"] = c.expected_determinant;
    j["components"] = c.components;
    j["initial_crossings"] = c.initial_crossings;
    j["alternating_crossings"] = c.alternating_crossings;
    j["goeritz_factors"] = c.goeritz_factors;
    j["presentation_factors"] = c.presentation_factors;
    j["checks"] = {{"determinant", c.determinant_ok},         {"presentation", c.presentation_ok},
                   {"parity", c.parity_ok},                   {"z2_rank", c.z2_rank_ok},
                   {"alternating", c.alternating_ok},         {"initial_not_alternating", c.initial_not_alternating},
                   {"crossing_drop", c.crossing_drop_ok},     {"jones", c.jones_ok},
                   {"klassen", c.klassen_ok},                 {"rank_identity", c.rank_identity_ok}};
    if (c.components == 1) {
        j["dihedral_classes"] = c.dihedral;
        j["predicted_instanton_rank"] = c.expected_determinant;
    }
    j["pass"] = c.pass();
    return j;
}

}  // namespace knotfam
