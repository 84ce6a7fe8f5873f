#include "knotfam/invariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

namespace knotfam {

using Poly = LaurentPolynomial;

Poly loop_value() { return Poly(-2, {-1, 0, 0, 0, -1}); }

// ---- skein vectors ----

SkeinVector skein_crossing(int sign) {
    // the positive crossing's A-smoothing is the oo tangle
    if (sign > 0) return {Poly::monomial(1, -1), Poly::monomial(1, 1)};
    return {Poly::monomial(1, 1), Poly::monomial(1, -1)};
}

SkeinVector skein_hsum(const SkeinVector& a, const SkeinVector& b) {
    return {a.coeff_zero * b.coeff_zero,
            a.coeff_zero * b.coeff_infinity + a.coeff_infinity * b.coeff_zero +
                loop_value() * a.coeff_infinity * b.coeff_infinity};
}

SkeinVector skein_vsum(const SkeinVector& a, const SkeinVector& b) {
    return {a.coeff_zero * b.coeff_infinity + a.coeff_infinity * b.coeff_zero +
                loop_value() * a.coeff_zero * b.coeff_zero,
            a.coeff_infinity * b.coeff_infinity};
}

SkeinVector skein_rotate(const SkeinVector& a) { return {a.coeff_infinity, a.coeff_zero}; }

namespace {

SkeinVector skein_chain(i64 n, bool vertical) {
    SkeinVector unit = skein_crossing(n > 0 ? 1 : -1);
    SkeinVector v = unit;
    for (i64 i = 1; i < std::abs(n); ++i) v = vertical ? skein_vsum(v, unit) : skein_hsum(v, unit);
    return v;
}

SkeinVector skein_terms(const std::vector<i64>& a, size_t from) {
    const size_t left = a.size() - from;
    if (left == 1) return skein_chain(a[from], false);
    SkeinVector rest = left == 2 ? skein_chain(a[from + 1], true)
                                 : skein_vsum(skein_chain(a[from + 1], true), skein_terms(a, from + 2));
    if (a[from] == 0) return rest;
    return skein_hsum(skein_chain(a[from], false), rest);
}

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[a] = b;
        return true;
    }
};

void require_connected_diagram(const PlanarDiagram& d) {
    auto r = validate(d);
    if (!r.ok) throw DiagramError("invalid diagram: " + r.violations.front());
    if (!r.connected) throw DiagramError("split diagrams are not supported");
}

Poly d_power(int k) {
    Poly r = Poly::constant(1);
    for (int i = 0; i < k; ++i) r = r * loop_value();
    return r;
}

}  // namespace

SkeinVector skein_rational(const Fraction& x) { return skein_terms(cf_expand(x, CfMode::UniformSign).terms, 0); }

// ---- bracket ----

LaurentPolynomial kauffman_bracket_brute(const PlanarDiagram& d) {
    require_connected_diagram(d);
    const int n = d.crossing_count();
    if (n == 0) return Poly::constant(1);
    if (n > 24) throw DiagramError("brute-force bracket limited to 24 crossings");
    // tally[a_minus_b + n][loops]
    std::vector<std::vector<i64>> tally(2 * n + 1, std::vector<i64>(n + 2, 0));
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        UnionFind uf(d.arc_count + 1);
        int loops = d.arc_count;
        int a = 0;
        for (int c = 0; c < n; ++c) {
            auto& x = d.crossings[c];
            if (mask & (1u << c)) {
                loops -= uf.unite(x[1], x[2]);
                loops -= uf.unite(x[3], x[0]);
            } else {
                ++a;
                loops -= uf.unite(x[0], x[1]);
                loops -= uf.unite(x[2], x[3]);
            }
        }
        tally[2 * a - n + n][loops] += 1;
    }
    Poly total;
    for (int s = 0; s <= 2 * n; ++s)
        for (int l = 1; l <= n + 1; ++l)
            if (tally[s][l]) total += Poly::monomial(tally[s][l], s - n) * d_power(l - 1);
    return total;
}

LaurentPolynomial kauffman_bracket_frontier(const PlanarDiagram& d) {
    require_connected_diagram(d);
    const int n = d.crossing_count();
    if (n == 0) return Poly::constant(1);

    // greedy order keeping the open boundary small
    std::vector<int> seen(d.arc_count + 1, 0);
    std::vector<char> done(n, 0);
    std::vector<int> order;
    for (int step = 0; step < n; ++step) {
        int best = -1, score = -1;
        for (int c = 0; c < n; ++c) {
            if (done[c]) continue;
            int s = 0;
            for (int e : d.crossings[c]) s += seen[e] == 1;
            if (s > score) { score = s; best = c; }
        }
        done[best] = 1;
        order.push_back(best);
        for (int e : d.crossings[best]) ++seen[e];
    }

    using State = std::vector<int>;  // partner[] over open labels, stored as sorted (label, partner) pairs
    std::map<State, Poly> states;
    states[{}] = Poly::constant(1);
    const Poly loop = loop_value();

    auto apply = [](std::map<int, int>& m, int x, int y) -> int {
        if (x == y) return 1;
        bool xo = m.count(x), yo = m.count(y);
        if (xo && yo) {
            int px = m[x], py = m[y];
            m.erase(x);
            m.erase(y);
            if (px == y) return 1;
            m[px] = py;
            m[py] = px;
            return 0;
        }
        if (xo || yo) {
            if (yo) std::swap(x, y);
            int px = m[x];
            m.erase(x);
            m[px] = y;
            m[y] = px;
            return 0;
        }
        m[x] = y;
        m[y] = x;
        return 0;
    };

    for (int c : order) {
        const auto& x = d.crossings[c];
        std::map<State, Poly> next;
        for (auto& [st, val] : states) {
            for (int smoothing = 0; smoothing < 2; ++smoothing) {
                std::map<int, int> m;
                for (size_t i = 0; i < st.size(); i += 2) m[st[i]] = st[i + 1];
                int loops = 0;
                if (smoothing == 0) {
                    loops += apply(m, x[0], x[1]);
                    loops += apply(m, x[2], x[3]);
                } else {
                    loops += apply(m, x[1], x[2]);
                    loops += apply(m, x[3], x[0]);
                }
                State key;
                for (auto& [k, v] : m) {
                    key.push_back(k);
                    key.push_back(v);
                }
                Poly term = val.shift(smoothing == 0 ? 1 : -1);
                for (int l = 0; l < loops; ++l) term = term * loop;
                next[key] += term;
            }
        }
        states.swap(next);
    }
    if (states.size() != 1 || !states.begin()->first.empty()) throw DiagramError("bracket frontier did not close");
    return states.begin()->second.divide_exact(loop);
}

LaurentPolynomial kauffman_bracket_skein(const BoxDiagram& b) {
    const int k = static_cast<int>(b.boxes.size());
    if (k == 0) return Poly::constant(1);
    if (k > 20) throw DiagramError("too many boxes for the skein path");
    std::vector<SkeinVector> sv;
    int maxl = 0;
    for (auto& box : b.boxes) {
        sv.push_back(skein_rational(box.x));
        for (int c : box.corners) maxl = std::max(maxl, c);
    }
    std::vector<char> used(maxl + 1, 0);
    for (auto& box : b.boxes)
        for (int c : box.corners) used[c] = 1;
    const int labels = static_cast<int>(std::count(used.begin(), used.end(), 1));
    Poly total;
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        UnionFind uf(maxl + 1);
        int loops = labels;
        Poly coeff = Poly::constant(1);
        for (int i = 0; i < k; ++i) {
            auto& c = b.boxes[i].corners;
            if (mask & (1u << i)) {
                loops -= uf.unite(c[NW], c[SW]);
                loops -= uf.unite(c[NE], c[SE]);
                coeff = coeff * sv[i].coeff_infinity;
            } else {
                loops -= uf.unite(c[NW], c[NE]);
                loops -= uf.unite(c[SW], c[SE]);
                coeff = coeff * sv[i].coeff_zero;
            }
            if (coeff.is_zero()) break;
        }
        if (coeff.is_zero()) continue;
        total += coeff * d_power(loops - 1);
    }
    return total;
}

LaurentPolynomial kauffman_bracket(const PlanarDiagram& d) {
    if (d.crossing_count() <= 16) return kauffman_bracket_brute(d);
    return kauffman_bracket_frontier(d);
}

// ---- Jones ----

std::string jones_variable(int components) { return components % 2 == 1 ? "t" : "t^(1/2)"; }

LaurentPolynomial jones_from_bracket(const LaurentPolynomial& bracket, int w, int components) {
    Poly f = Poly::monomial(w % 2 == 0 ? 1 : -1, -3 * static_cast<i64>(w)) * bracket;
    const i64 step = components % 2 == 1 ? 4 : 2;
    std::vector<i64> c;
    Poly out;
    for (i64 e = f.min_degree(); e <= f.max_degree() && !f.is_zero(); ++e) {
        i64 v = f.coeff(e);
        if (v == 0) continue;
        if (e % step != 0) throw DiagramError("bracket exponents inconsistent with component count");
        out += Poly::monomial(v, -e / step);
    }
    return out;
}

LaurentPolynomial jones(const PlanarDiagram& d) {
    auto comps = components(d);
    return jones_from_bracket(kauffman_bracket(d), writhe(d), comps.count);
}

LaurentPolynomial jones_family(const BoxDiagram& b, const PlanarDiagram& expanded) {
    auto comps = components(expanded);
    return jones_from_bracket(kauffman_bracket_skein(b), writhe(expanded), comps.count);
}

LaurentPolynomial reverse_variable(const LaurentPolynomial& p) {
    if (p.is_zero()) return p;
    return p.substitute_power(-1);
}

bool equal_up_to_mirror(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a == b || a == reverse_variable(b);
}

bool equal_up_to_unit(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    Poly bs = b.shift(a.min_degree() - b.min_degree());
    return a == bs || a == -bs;
}

// ---- Goeritz-based invariants ----

i64 determinant(const PlanarDiagram& d) {
    require_connected_diagram(d);
    if (d.crossings.empty()) return 1;
    auto g = goeritz(d);
    return std::abs(determinant(g.reduced));
}

InvariantFactors double_cover_homology(const PlanarDiagram& d) {
    require_connected_diagram(d);
    if (d.crossings.empty()) return {};
    return snf(goeritz(d).reduced);
}

namespace {

// signature of a symmetric integer matrix by exact congruence diagonalization
int matrix_signature(const IntegerMatrix& m) {
    using Q = boost::multiprecision::cpp_rational;
    const int n = m.rows;
    std::vector<std::vector<Q>> a(n, std::vector<Q>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);
    int sig = 0;
    std::vector<char> gone(n, 0);
    for (int step = 0; step < n; ++step) {
        int p = -1;
        for (int i = 0; i < n && p < 0; ++i)
            if (!gone[i] && a[i][i] != 0) p = i;
        if (p < 0) {
            // all remaining diagonal entries vanish: use a_ij != 0 to make one
            int pi = -1, pj = -1;
            for (int i = 0; i < n && pi < 0; ++i)
                for (int j = 0; j < n; ++j)
                    if (!gone[i] && !gone[j] && i != j && a[i][j] != 0) { pi = i; pj = j; break; }
            if (pi < 0) break;
            for (int k = 0; k < n; ++k) a[pi][k] += a[pj][k];
            for (int k = 0; k < n; ++k) a[k][pi] += a[k][pj];
            p = pi;
        }
        Q piv = a[p][p];
        sig += piv > 0 ? 1 : -1;
        gone[p] = 1;
        for (int i = 0; i < n; ++i) {
            if (gone[i] || a[i][p] == 0) continue;
            Q f = a[i][p] / piv;
            for (int k = 0; k < n; ++k) a[i][k] -= f * a[p][k];
        }
        for (int i = 0; i < n; ++i) {
            if (gone[i]) continue;
            a[p][i] = 0;
            a[i][p] = 0;
        }
    }
    return sig;
}

}  // namespace

int signature(const PlanarDiagram& d, bool swap_colors) {
    require_connected_diagram(d);
    if (d.crossings.empty()) return 0;
    auto g = goeritz(d, swap_colors);
    return matrix_signature(g.reduced) - g.correction;
}

// ---- reports ----

InvariantReport invariant_report(const PlanarDiagram& d) {
    InvariantReport r;
    r.components = components(d).count;
    r.jones = jones(d);
    r.jones_var = jones_variable(r.components);
    if (r.components == 1) r.alexander = alexander(d);
    r.determinant = determinant(d);
    r.signature = signature(d);
    r.double_cover_homology = double_cover_homology(d);
    return r;
}

nlohmann::json polynomial_json(const LaurentPolynomial& p, const std::string& var) {
    return {{"variable", var}, {"min_degree", p.min_degree()}, {"coeffs", p.coeffs()}};
}

nlohmann::json report_json(const InvariantReport& r) {
    nlohmann::json j;
    j["components"] = r.components;
    j["jones"] = polynomial_json(r.jones, r.jones_var);
    if (r.alexander) j["alexander"] = polynomial_json(*r.alexander, "t");
    j["determinant"] = r.determinant;
    j["signature"] = r.signature;
    j["double_cover_homology"] = {{"factors", r.double_cover_homology.nontrivial()},
                                  {"free_rank", r.double_cover_homology.free_rank},
                                  {"z2_rank", r.double_cover_homology.rank_mod2()}};
    return j;
}

}  // namespace knotfam
