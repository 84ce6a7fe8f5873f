#pragma once

#include <array>
#include <string>
#include <vector>

#include "knotfam/algebra.hpp"
#include "knotfam/diagram.hpp"

namespace knotfam {

struct TorusKnotParams {
    i64 p = 0;
    i64 q = 0;
};

struct GluingData {
    TorusKnotParams left;
    TorusKnotParams right;
};

struct RationalTangle {
    ContinuedFraction terms;
    bool barred = false;
};

enum Corner { NW = 0, SW = 1, SE = 2, NE = 3 };

// A box holds the rational tangle R(x) drawn in its own frame; corners are listed
// NW, SW, SE, NE. A box with x = 1 is the crossing whose over strand runs SW-NE, and
// its corner list is then exactly its PD tuple.
struct Box {
    std::array<int, 4> corners;
    Fraction x;
};

// 4-ended tangle made of boxes. Boundary labels appear once, internal labels twice.
struct TangleFragment {
    std::vector<Box> boxes;
    std::array<int, 4> ends{};  // indexed by Corner
    int next_label = 1;

    int crossing_count() const;
    std::vector<std::array<int, 4>> crossings() const;  // only valid when every box is +-1
};

// Closed diagram of boxes; the unit of the skein fast path.
struct BoxDiagram {
    std::vector<Box> boxes;
    std::vector<int> marked;  // raw labels of a recorded Conway sphere
};

IntegerMatrix shear_matrix(i64 p, i64 q);
IntegerMatrix gluing_matrix(const GluingData& g);
IntegerMatrix h1_presentation(const GluingData& g);

TangleFragment box_fragment(const Fraction& x);
TangleFragment crossing_fragment(int sign);
TangleFragment hsum(const TangleFragment& a, const TangleFragment& b);
TangleFragment vsum(const TangleFragment& a, const TangleFragment& b);
TangleFragment rotate(const TangleFragment& t);  // quarter turn counterclockwise
TangleFragment mirror_fragment(const TangleFragment& t);
TangleFragment bar(const TangleFragment& t);  // half turn about the vertical axis
BoxDiagram numerator_closure(const TangleFragment& t);
BoxDiagram denominator_closure(const TangleFragment& t);

TangleFragment rational_tangle_fragment(const RationalTangle& t);
// Fraction of the tangle; a leading zero term is allowed.
TangleFragment rational_fragment(const Fraction& x);

// Replace every box by crossings.
PlanarDiagram expand(const BoxDiagram& b, const std::string& name = "");

struct QuotientTangle {
    TangleFragment fragment;        // two boxes, R(u) + R(v)
    Fraction u, v;                  // opposite signs
    ContinuedFraction expansion;    // odd-length expansion of the governing fraction
    i64 P = 0, Q = 0;               // governing fraction P/Q
    std::array<int, 4> meridian_pairing{NW, NE, SW, SE};  // numerator closure
    std::array<int, 4> fibre_pairing{NW, SW, NE, SE};     // denominator closure
};

QuotientTangle torus_quotient_tangle(const TorusKnotParams& t);

BoxDiagram initial_boxes(const GluingData& g);
BoxDiagram alternating_boxes(const GluingData& g);
PlanarDiagram assemble_initial(const GluingData& g);
PlanarDiagram assemble_alternating(const GluingData& g);

// Slot tangles of one side in the alternating form: A = [a_n - 1, ..., a_1, a_0] and
// B = 1/[a_n - 1, ..., a_1] built from the odd-length expansion of the side.
struct AlternatingSlots {
    Fraction a, b;
    int sign;
};
AlternatingSlots alternating_slots(const TorusKnotParams& t);

std::string gluing_name(const GluingData& g, const std::string& form);
void require_coprime(const GluingData& g);

}  // namespace knotfam
