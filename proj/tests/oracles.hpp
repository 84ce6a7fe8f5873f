// Independent reference computations used only by the tests. Nothing here calls the
// library routine it is meant to check.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <array>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "knotfam/algebra.hpp"
#include "knotfam/diagram.hpp"

namespace oracle {

using knotfam::i64;
using PD = std::vector<std::array<int, 4>>;
using Rational = boost::multiprecision::cpp_rational;

inline knotfam::PlanarDiagram diagram(PD pd, std::string name = "") {
    knotfam::PlanarDiagram d;
    d.name = std::move(name);
    d.crossings = std::move(pd);
    for (auto& c : d.crossings)
        for (int x : c) d.arc_count = std::max(d.arc_count, x);
    return d;
}

inline knotfam::PlanarDiagram trefoil() { return diagram({{1, 5, 2, 4}, {3, 1, 4, 6}, {5, 3, 6, 2}}, "3_1"); }
inline knotfam::PlanarDiagram figure_eight() {
    return diagram({{4, 2, 5, 1}, {8, 6, 1, 5}, {6, 3, 7, 4}, {2, 7, 3, 8}}, "4_1");
}
inline knotfam::PlanarDiagram hopf() { return diagram({{4, 1, 3, 2}, {2, 3, 1, 4}}, "hopf"); }

// a + b x + ... as exponent -> coefficient
using Poly = std::map<i64, i64>;

inline Poly pmul(const Poly& a, const Poly& b) {
    Poly r;
    for (auto& [ea, ca] : a)
        for (auto& [eb, cb] : b) r[ea + eb] += ca * cb;
    for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
    return r;
}

inline Poly from(const knotfam::LaurentPolynomial& p) {
    Poly r;
    for (size_t i = 0; i < p.coeffs().size(); ++i)
        if (p.coeffs()[i]) r[p.min_degree() + static_cast<i64>(i)] = p.coeffs()[i];
    return r;
}

// Kauffman bracket by plain state enumeration. Smoothing A joins (a,b),(c,d) of the
// tuple (a,b,c,d); the other smoothing joins (b,c),(d,a).
inline Poly bracket(const PD& pd) {
    int labels = 0;
    for (auto& c : pd)
        for (int x : c) labels = std::max(labels, x);
    const int n = static_cast<int>(pd.size());
    std::map<std::pair<int, int>, i64> tally;  // (#A - #B, loops) -> count
    for (long s = 0; s < (1L << n); ++s) {
        std::vector<int> par(labels + 1);
        std::iota(par.begin(), par.end(), 0);
        std::function<int(int)> f = [&](int x) { return par[x] == x ? x : par[x] = f(par[x]); };
        int diff = 0;
        for (int i = 0; i < n; ++i) {
            auto& c = pd[i];
            if (s >> i & 1) {
                par[f(c[0])] = f(c[1]);
                par[f(c[2])] = f(c[3]);
                ++diff;
            } else {
                par[f(c[1])] = f(c[2]);
                par[f(c[3])] = f(c[0]);
                --diff;
            }
        }
        int loops = 0;
        for (int x = 1; x <= labels; ++x) loops += f(x) == x;
        tally[{diff, loops}]++;
    }
    Poly d = {{2, -1}, {-2, -1}};
    Poly out;
    for (auto& [k, cnt] : tally) {
        Poly term = {{k.first, cnt}};
        for (int l = 1; l < k.second; ++l) term = pmul(term, d);
        for (auto& [e, c] : term) out[e] += c;
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    if (n == 0) out = {{0, 1}};
    return out;
}

// Determinant by cofactor expansion along the first row.
inline i64 cofactor_det(const std::vector<std::vector<i64>>& m) {
    const size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    i64 s = 0;
    for (size_t j = 0; j < n; ++j) {
        std::vector<std::vector<i64>> sub;
        for (size_t i = 1; i < n; ++i) {
            std::vector<i64> row;
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            sub.push_back(row);
        }
        s += (j % 2 ? -1 : 1) * m[0][j] * cofactor_det(sub);
    }
    return s;
}

// Invariant factors from determinantal divisors: d_k = gcd of k x k minors, factor_k = d_k / d_{k-1}.
inline std::vector<i64> invariant_factors(const std::vector<std::vector<i64>>& m) {
    const int r = static_cast<int>(m.size()), c = r ? static_cast<int>(m[0].size()) : 0;
    std::vector<i64> divisors{1};
    for (int k = 1; k <= std::min(r, c); ++k) {
        i64 g = 0;
        std::vector<int> rows(k), cols(k);
        std::function<void(int, int)> pick_rows;
        std::function<void(int, int)> pick_cols = [&](int idx, int start) {
            if (idx == k) {
                std::vector<std::vector<i64>> sub(k, std::vector<i64>(k));
                for (int a = 0; a < k; ++a)
                    for (int b = 0; b < k; ++b) sub[a][b] = m[rows[a]][cols[b]];
                g = std::gcd(g, std::abs(cofactor_det(sub)));
                return;
            }
            for (int j = start; j < c; ++j) {
                cols[idx] = j;
                pick_cols(idx + 1, j + 1);
            }
        };
        pick_rows = [&](int idx, int start) {
            if (idx == k) {
                pick_cols(0, 0);
                return;
            }
            for (int i = start; i < r; ++i) {
                rows[idx] = i;
                pick_rows(idx + 1, i + 1);
            }
        };
        pick_rows(0, 0);
        if (g == 0) break;
        divisors.push_back(g);
    }
    std::vector<i64> f;
    for (size_t k = 1; k < divisors.size(); ++k) f.push_back(divisors[k] / divisors[k - 1]);
    return f;
}

// Euclidean continued fraction of p/q with q > 0 (floor quotients).
inline std::vector<i64> euclid(i64 p, i64 q) {
    std::vector<i64> t;
    while (q != 0) {
        i64 a = p / q;
        if ((p % q != 0) && ((p < 0) != (q < 0))) --a;
        t.push_back(a);
        i64 r = p - a * q;
        p = q;
        q = r;
    }
    return t;
}

inline Rational evaluate(const std::vector<i64>& t) {
    Rational x = t.back();
    for (int i = static_cast<int>(t.size()) - 2; i >= 0; --i) x = Rational(t[i]) + 1 / x;
    return x;
}

// Arcs of a diagram: PD labels grouped into strands running from under-pass to under-pass.
struct Arcs {
    int count = 0;
    std::vector<int> of_label;
};

inline Arcs arcs(const PD& pd) {
    int labels = 0;
    for (auto& c : pd)
        for (int x : c) labels = std::max(labels, x);
    Arcs a;
    a.of_label.assign(labels + 1, -1);
    // a strand keeps its arc through an over-crossing, so slots 1 and 3 share one
    std::vector<std::vector<int>> adj(labels + 1);
    for (auto& c : pd) {
        adj[c[1]].push_back(c[3]);
        adj[c[3]].push_back(c[1]);
    }
    for (int s = 1; s <= labels; ++s) {
        if (a.of_label[s] >= 0) continue;
        std::vector<int> stack{s};
        a.of_label[s] = a.count;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : adj[x])
                if (a.of_label[y] < 0) {
                    a.of_label[y] = a.count;
                    stack.push_back(y);
                }
        }
        ++a.count;
    }
    return a;
}

// Number of Fox n-colourings by enumeration.
inline i64 colorings(const PD& pd, i64 n) {
    auto a = arcs(pd);
    std::vector<i64> c(a.count, 0);
    i64 total = 0;
    while (true) {
        bool ok = true;
        for (auto& x : pd) {
            i64 v = 2 * c[a.of_label[x[1]]] - c[a.of_label[x[0]]] - c[a.of_label[x[2]]];
            if (((v % n) + n) % n) {
                ok = false;
                break;
            }
        }
        total += ok;
        int i = 0;
        while (i < a.count && ++c[i] == n) c[i++] = 0;
        if (i == a.count) break;
    }
    return total;
}

// Exact determinant of a rational matrix by Gaussian elimination.
inline Rational rational_det(std::vector<std::vector<Rational>> m) {
    const size_t n = m.size();
    Rational det = 1;
    for (size_t k = 0; k < n; ++k) {
        size_t p = k;
        while (p < n && m[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(m[p], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (size_t i = k + 1; i < n; ++i) {
            Rational f = m[i][k] / m[k][k];
            for (size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return det;
}

// Crossing signs from a strand walk: the over strand entering at slot 3 gives +1.
inline std::vector<int> signs(const PD& pd) {
    std::map<int, std::vector<std::pair<int, int>>> where;
    for (int c = 0; c < static_cast<int>(pd.size()); ++c)
        for (int s = 0; s < 4; ++s) where[pd[c][s]].push_back({c, s});
    std::vector<std::array<int, 4>> in(pd.size(), {0, 0, 0, 0});  // 1 when the slot is an entry
    std::map<int, bool> seen;
    for (int c0 = 0; c0 < static_cast<int>(pd.size()); ++c0) {
        int c = c0, s = 0;
        if (seen[pd[c][0]]) continue;
        while (true) {
            int l = pd[c][s];
            if (seen[l]) break;
            seen[l] = true;
            in[c][s] = 1;
            int out = pd[c][(s + 2) % 4];
            auto& w = where[out];
            auto nxt = w[0] == std::pair<int, int>{c, (s + 2) % 4} ? w[1] : w[0];
            c = nxt.first;
            s = nxt.second;
        }
    }
    std::vector<int> sg;
    for (auto& e : in) sg.push_back(e[3] ? 1 : -1);
    return sg;
}

// Alexander polynomial evaluated at t (up to a unit) from the crossing equations
// (1 - t^e) over + t^e in - out = 0, e the crossing sign, with one row and column removed.
inline Rational alexander_at(const PD& pd, Rational t) {
    auto a = arcs(pd);
    auto sg = signs(pd);
    const int n = a.count;
    std::vector<std::vector<Rational>> m(pd.size(), std::vector<Rational>(n, 0));
    for (size_t c = 0; c < pd.size(); ++c) {
        Rational te = sg[c] > 0 ? t : 1 / t;
        m[c][a.of_label[pd[c][1]]] += 1 - te;
        m[c][a.of_label[pd[c][0]]] += te;
        m[c][a.of_label[pd[c][2]]] -= 1;
    }
    std::vector<std::vector<Rational>> minor;
    for (int r = 0; r + 1 < static_cast<int>(pd.size()); ++r) minor.emplace_back(m[r].begin(), m[r].end() - 1);
    return rational_det(minor);
}

// |V(-1)| through the bracket at A = exp(i pi / 4), where A^-4 = -1.
inline i64 det_from_bracket(const PD& pd) {
    auto b = bracket(pd);
    // A^k for k mod 8 as (re, im) scaled by sqrt2 where needed: track in Z[zeta8] basis 1, z, z^2, z^3
    std::array<i64, 4> v{0, 0, 0, 0};
    for (auto& [e, c] : b) {
        i64 k = ((e % 8) + 8) % 8;
        if (k < 4) v[k] += c;
        else v[k - 4] -= c;
    }
    // |x|^2 for x = v0 + v1 z + v2 i + v3 z^3, z = (1 + i)/sqrt2
    double r2 = std::sqrt(2.0) / 2;
    double re = v[0] + r2 * v[1] - r2 * v[3];
    double im = r2 * v[1] + v[2] + r2 * v[3];
    return std::llround(std::hypot(re, im));
}

}  // namespace oracle
