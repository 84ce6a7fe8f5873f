#pragma once

#include <json.hpp>

#include "knotfam/algebra.hpp"
#include "knotfam/diagram.hpp"
#include "knotfam/tangle.hpp"

namespace knotfam {

// <T> = coeff_zero <0> + coeff_infinity <oo>, with <0> joining NW-NE, SW-SE.
struct SkeinVector {
    LaurentPolynomial coeff_zero;
    LaurentPolynomial coeff_infinity;
    bool operator==(const SkeinVector&) const = default;
};

LaurentPolynomial loop_value();  // -A^2 - A^-2

SkeinVector skein_crossing(int sign);
SkeinVector skein_hsum(const SkeinVector& a, const SkeinVector& b);
SkeinVector skein_vsum(const SkeinVector& a, const SkeinVector& b);
SkeinVector skein_rotate(const SkeinVector& a);
SkeinVector skein_rational(const Fraction& x);

// Bracket in the variable A, normalized so the crossingless unknot is 1.
LaurentPolynomial kauffman_bracket(const PlanarDiagram& d);
LaurentPolynomial kauffman_bracket_brute(const PlanarDiagram& d);
LaurentPolynomial kauffman_bracket_frontier(const PlanarDiagram& d);
LaurentPolynomial kauffman_bracket_skein(const BoxDiagram& b);

// Jones polynomial in t when the link has an odd number of components, otherwise in t^(1/2).
LaurentPolynomial jones(const PlanarDiagram& d);
LaurentPolynomial jones_from_bracket(const LaurentPolynomial& bracket, int writhe, int components);
LaurentPolynomial jones_family(const BoxDiagram& b, const PlanarDiagram& expanded);
std::string jones_variable(int components);

LaurentPolynomial alexander(const PlanarDiagram& d);
LaurentPolynomial normalize_alexander(const LaurentPolynomial& p);

i64 determinant(const PlanarDiagram& d);
int signature(const PlanarDiagram& d, bool swap_colors = false);
InvariantFactors double_cover_homology(const PlanarDiagram& d);

// equality up to t <-> t^-1
bool equal_up_to_mirror(const LaurentPolynomial& a, const LaurentPolynomial& b);
// equality up to multiplication by +-t^k
bool equal_up_to_unit(const LaurentPolynomial& a, const LaurentPolynomial& b);
LaurentPolynomial reverse_variable(const LaurentPolynomial& p);

struct InvariantReport {
    LaurentPolynomial jones;
    std::string jones_var = "t";
    std::optional<LaurentPolynomial> alexander;
    i64 determinant = 0;
    int signature = 0;
    InvariantFactors double_cover_homology;
    int components = 1;
};

InvariantReport invariant_report(const PlanarDiagram& d);
nlohmann::json polynomial_json(const LaurentPolynomial& p, const std::string& var);
nlohmann::json report_json(const InvariantReport& r);

}  // namespace knotfam
