#include "knotfam/tangle.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace knotfam {

namespace {

void substitute(TangleFragment& t, int from, int to) {
    if (from == to) return;
    for (auto& b : t.boxes)
        for (auto& c : b.corners)
            if (c == from) c = to;
    for (auto& e : t.ends)
        if (e == from) e = to;
}

TangleFragment shifted(const TangleFragment& t, int offset) {
    TangleFragment r = t;
    for (auto& b : r.boxes)
        for (auto& c : b.corners) c += offset;
    for (auto& e : r.ends) e += offset;
    r.next_label += offset;
    return r;
}

TangleFragment integer_fragment(i64 n) {
    TangleFragment t = crossing_fragment(n > 0 ? 1 : -1);
    for (i64 i = 1; i < std::abs(n); ++i) t = hsum(t, crossing_fragment(n > 0 ? 1 : -1));
    return t;
}

TangleFragment vertical_fragment(i64 n) {
    TangleFragment t = crossing_fragment(n > 0 ? 1 : -1);
    for (i64 i = 1; i < std::abs(n); ++i) t = vsum(t, crossing_fragment(n > 0 ? 1 : -1));
    return t;
}

TangleFragment rational_from_terms(const std::vector<i64>& a, size_t from) {
    const size_t left = a.size() - from;
    TangleFragment rest;
    if (left == 1) return integer_fragment(a[from]);
    if (left == 2) rest = vertical_fragment(a[from + 1]);
    else rest = vsum(vertical_fragment(a[from + 1]), rational_from_terms(a, from + 2));
    if (a[from] == 0) return rest;
    return hsum(integer_fragment(a[from]), rest);
}

// the tangle with vertical arcs NW-SW and NE-SE and no crossings
TangleFragment infinity_fragment() {
    TangleFragment t;
    t.ends[NW] = t.ends[SW] = 1;
    t.ends[NE] = t.ends[SE] = 2;
    t.next_label = 3;
    return t;
}

// closure of the braid word on n strands; entry k is the box for letter k
std::vector<std::array<int, 4>> braid_closure(const std::vector<int>& word, int n) {
    int label = 0;
    std::vector<int> cur(n), start(n);
    for (int i = 0; i < n; ++i) start[i] = cur[i] = ++label;
    std::vector<std::array<int, 4>> pd;
    for (int g : word) {
        int i = std::abs(g) - 1;
        int e1 = cur[i], e2 = cur[i + 1];
        int f1 = ++label, f2 = ++label;
        if (g > 0) pd.push_back({e2, f2, f1, e1});
        else pd.push_back({e1, e2, f2, f1});
        cur[i] = f1;
        cur[i + 1] = f2;
    }
    for (int i = 0; i < n; ++i)
        for (auto& c : pd)
            for (auto& v : c)
                if (v == cur[i]) v = start[i];
    return pd;
}

i64 sgn(i64 x) { return x > 0 ? 1 : -1; }

}  // namespace

// ---- gluing bookkeeping ----

IntegerMatrix shear_matrix(i64 p, i64 q) { return IntegerMatrix(2, 2, {1, 0, -checked_mul(p, q), 1}); }

IntegerMatrix gluing_matrix(const GluingData& g) {
    IntegerMatrix swap(2, 2, {0, 1, 1, 0});
    IntegerMatrix shear_inv(2, 2, {1, 0, checked_mul(g.right.p, g.right.q), 1});
    return shear_inv * (swap * shear_matrix(g.left.p, g.left.q));
}

IntegerMatrix h1_presentation(const GluingData& g) {
    i64 rs = checked_mul(g.right.p, g.right.q);
    i64 pq = checked_mul(g.left.p, g.left.q);
    return IntegerMatrix(2, 2, {0, 1, 1 - checked_mul(rs, pq), rs});
}

void require_coprime(const GluingData& g) {
    if (std::gcd(g.left.p, g.left.q) != 1 || std::gcd(g.right.p, g.right.q) != 1)
        throw std::invalid_argument("torus knot parameters must be coprime");
}

std::string gluing_name(const GluingData& g, const std::string& form) {
    return "L(T(" + std::to_string(g.left.p) + "," + std::to_string(g.left.q) + "),T(" + std::to_string(g.right.p) +
           "," + std::to_string(g.right.q) + "))" + (form.empty() ? "" : " " + form);
}

// ---- fragments ----

int TangleFragment::crossing_count() const {
    int n = 0;
    for (auto& b : boxes) {
        auto cf = cf_expand(b.x, CfMode::UniformSign);
        for (auto a : cf.terms) n += static_cast<int>(std::abs(a));
    }
    return n;
}

std::vector<std::array<int, 4>> TangleFragment::crossings() const {
    std::vector<std::array<int, 4>> out;
    for (auto& b : boxes) {
        auto& c = b.corners;
        if (b.x == Fraction(1)) out.push_back({c[NW], c[SW], c[SE], c[NE]});
        else if (b.x == Fraction(-1)) out.push_back({c[SW], c[SE], c[NE], c[NW]});
        else throw std::logic_error("fragment contains an unexpanded box");
    }
    return out;
}

TangleFragment box_fragment(const Fraction& x) {
    TangleFragment t;
    t.boxes.push_back({{1, 2, 3, 4}, x});
    t.ends[NW] = 1;
    t.ends[SW] = 2;
    t.ends[SE] = 3;
    t.ends[NE] = 4;
    t.next_label = 5;
    return t;
}

TangleFragment crossing_fragment(int sign) { return box_fragment(Fraction(sign > 0 ? 1 : -1)); }

TangleFragment hsum(const TangleFragment& a, const TangleFragment& b) {
    TangleFragment r = a;
    TangleFragment s = shifted(b, a.next_label - 1);
    substitute(s, s.ends[NW], a.ends[NE]);
    substitute(s, s.ends[SW], a.ends[SE]);
    r.boxes.insert(r.boxes.end(), s.boxes.begin(), s.boxes.end());
    r.ends[NE] = s.ends[NE];
    r.ends[SE] = s.ends[SE];
    r.next_label = s.next_label;
    return r;
}

TangleFragment vsum(const TangleFragment& a, const TangleFragment& b) {
    TangleFragment r = a;
    TangleFragment s = shifted(b, a.next_label - 1);
    substitute(s, s.ends[NW], a.ends[SW]);
    substitute(s, s.ends[NE], a.ends[SE]);
    r.boxes.insert(r.boxes.end(), s.boxes.begin(), s.boxes.end());
    r.ends[SW] = s.ends[SW];
    r.ends[SE] = s.ends[SE];
    r.next_label = s.next_label;
    return r;
}

TangleFragment rotate(const TangleFragment& t) {
    TangleFragment r = t;
    r.ends[NW] = t.ends[NE];
    r.ends[SW] = t.ends[NW];
    r.ends[SE] = t.ends[SW];
    r.ends[NE] = t.ends[SE];
    return r;
}

TangleFragment mirror_fragment(const TangleFragment& t) {
    TangleFragment r = t;
    for (auto& b : r.boxes) b.x = -b.x;
    return r;
}

TangleFragment bar(const TangleFragment& t) {
    TangleFragment r = t;
    for (auto& b : r.boxes) {
        auto c = b.corners;
        b.corners = {c[NE], c[SE], c[SW], c[NW]};
    }
    std::swap(r.ends[NW], r.ends[NE]);
    std::swap(r.ends[SW], r.ends[SE]);
    return r;
}

BoxDiagram numerator_closure(const TangleFragment& t) {
    TangleFragment r = t;
    substitute(r, r.ends[NE], r.ends[NW]);
    substitute(r, r.ends[SE], r.ends[SW]);
    return {r.boxes, {}};
}

BoxDiagram denominator_closure(const TangleFragment& t) {
    TangleFragment r = t;
    substitute(r, r.ends[SW], r.ends[NW]);
    substitute(r, r.ends[SE], r.ends[NE]);
    return {r.boxes, {}};
}

TangleFragment rational_tangle_fragment(const RationalTangle& t) {
    const auto& a = t.terms.terms;
    if (a.empty()) throw AlgebraError("empty continued fraction");
    for (size_t i = 1; i < a.size(); ++i)
        if (a[i] == 0) throw AlgebraError("zero term in rational tangle");
    if (a.size() == 1 && a[0] == 0) throw AlgebraError("the 0 tangle has no crossings");
    TangleFragment f = rational_from_terms(a, 0);
    return t.barred ? bar(f) : f;
}

TangleFragment rational_fragment(const Fraction& x) {
    return rational_tangle_fragment({cf_expand(x, CfMode::UniformSign), false});
}

PlanarDiagram expand(const BoxDiagram& b, const std::string& name) {
    int next = 1;
    for (auto& box : b.boxes)
        for (int c : box.corners) next = std::max(next, c + 1);
    std::vector<std::array<int, 4>> raw;
    for (auto& box : b.boxes) {
        if (box.x == Fraction(1) || box.x == Fraction(-1)) {
            TangleFragment one;
            one.boxes.push_back(box);
            auto x = one.crossings();
            raw.insert(raw.end(), x.begin(), x.end());
            continue;
        }
        TangleFragment f = shifted(rational_fragment(box.x), next - 1);
        next = f.next_label;
        for (int k = 0; k < 4; ++k) substitute(f, f.ends[k], box.corners[k]);
        auto x = f.crossings();
        raw.insert(raw.end(), x.begin(), x.end());
    }
    std::vector<std::pair<int, int>> map;
    PlanarDiagram d = orient_pd(raw, &map);
    d.name = name;
    if (b.marked.size() == 4) {
        std::array<int, 4> m{};
        for (int k = 0; k < 4; ++k)
            for (auto& [from, to] : map)
                if (from == b.marked[k]) m[k] = to;
        d.marked_curve = m;
    }
    return d;
}

// ---- quotient tangles and assembly ----

QuotientTangle torus_quotient_tangle(const TorusKnotParams& t) {
    if (std::gcd(t.p, t.q) != 1) throw std::invalid_argument("torus knot parameters must be coprime");
    QuotientTangle out;
    i64 pq = checked_mul(t.p, t.q);
    if (std::abs(pq) <= 1) {
        // trivial torus knot: the rational tangle 1/pq
        out.fragment = pq == 0 ? infinity_fragment() : box_fragment(Fraction(pq));
        out.P = pq == 0 ? 1 : pq;
        out.Q = 1;
        return out;
    }
    Fraction x(t.p, t.q);
    if (std::abs(x.num) < x.den) x = x.inverse();
    out.expansion = cf_expand(x, CfMode::OddLength);
    auto conv = cf_convergents(out.expansion);
    auto [P, Q] = conv.back();
    auto [Pp, Qp] = conv[conv.size() - 2];
    if (P * Qp - Pp * Q != 1) throw std::logic_error("convergent identity failed");
    out.P = P;
    out.Q = Q;
    out.u = Fraction(-Pp, P);
    out.v = Fraction(Qp, Q);
    out.fragment = hsum(box_fragment(out.u), box_fragment(out.v));
    return out;
}

BoxDiagram initial_boxes(const GluingData& g) {
    require_coprime(g);
    auto t1 = torus_quotient_tangle(g.left).fragment;
    auto t2 = torus_quotient_tangle(g.right).fragment;
    TangleFragment sum = hsum(t1, rotate(t2));
    BoxDiagram b = numerator_closure(sum);
    // hsum keeps the left labels, so the ends of t1 still bound it after closing
    if (!t1.boxes.empty()) b.marked = {t1.ends[NW], t1.ends[NE], t1.ends[SW], t1.ends[SE]};
    return b;
}

AlternatingSlots alternating_slots(const TorusKnotParams& t) {
    if (std::gcd(t.p, t.q) != 1) throw std::invalid_argument("torus knot parameters must be coprime");
    if (std::abs(t.p) < 2 || std::abs(t.q) < 2)
        throw std::invalid_argument("alternating form needs nontrivial torus knots");
    Fraction x(t.p, t.q);
    if (std::abs(x.num) < x.den) x = x.inverse();
    auto cf = cf_expand(x, CfMode::OddLength);
    std::vector<i64> a;
    for (auto v : cf.terms) a.push_back(std::abs(v));
    std::vector<i64> rev(a.rbegin(), a.rend());
    rev[0] -= 1;
    AlternatingSlots s;
    s.sign = static_cast<int>(sgn(cf.terms[0]));
    s.a = cf_evaluate({rev});
    rev.pop_back();
    s.b = cf_evaluate({rev}).inverse();
    return s;
}

BoxDiagram alternating_boxes(const GluingData& g) {
    require_coprime(g);
    // 6* polyhedron: closed 3-braid (s1 s2^-1)^3; opposite vertices are k and k+3
    auto skel = braid_closure({1, -2, 1, -2, 1, -2}, 3);
    auto left = alternating_slots(g.left);
    auto right = alternating_slots(g.right);
    std::vector<std::pair<Fraction, int>> slot(6, {Fraction(1), 1});
    slot[0] = {left.a, left.sign};
    slot[3] = {left.b, left.sign};
    slot[1] = {right.a, right.sign};
    slot[4] = {right.b, right.sign};
    BoxDiagram b;
    for (int k = 0; k < 6; ++k) {
        auto [x, s] = slot[k];
        auto c = skel[k];
        if (s > 0) b.boxes.push_back({{c[0], c[1], c[2], c[3]}, x});
        else b.boxes.push_back({{c[3], c[0], c[1], c[2]}, -x});
    }
    // the hidden Conway sphere crosses the four skeleton edges joining the two sides
    auto side = [](int k) { return (k == 0 || k == 3) ? 0 : (k == 1 || k == 4) ? 1 : -1; };
    std::vector<std::vector<int>> at;
    int maxl = 0;
    for (auto& c : skel)
        for (int v : c) maxl = std::max(maxl, v);
    at.resize(maxl + 1);
    for (int k = 0; k < 6; ++k)
        for (int v : skel[k]) at[v].push_back(k);
    for (int v = 1; v <= maxl; ++v) {
        if (at[v].size() != 2) continue;
        int s0 = side(at[v][0]), s1 = side(at[v][1]);
        if (s0 >= 0 && s1 >= 0 && s0 != s1) b.marked.push_back(v);
    }
    if (b.marked.size() != 4) throw std::logic_error("skeleton does not have four side-crossing edges");
    return b;
}

PlanarDiagram assemble_initial(const GluingData& g) { return expand(initial_boxes(g), gluing_name(g, "initial")); }

PlanarDiagram assemble_alternating(const GluingData& g) {
    return expand(alternating_boxes(g), gluing_name(g, "alternating"));
}

}  // namespace knotfam
