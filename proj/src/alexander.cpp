#include <boost/multiprecision/cpp_int.hpp>
#include <map>

#include "knotfam/invariants.hpp"
#include "knotfam/representations.hpp"

namespace knotfam {

namespace {

using boost::multiprecision::cpp_int;

// Laurent polynomial with big coefficients; exponent -> coefficient, no zero entries.
struct BigPoly {
    std::map<i64, cpp_int> c;

    bool zero() const { return c.empty(); }
    void add(i64 e, const cpp_int& v) {
        auto& slot = c[e];
        slot += v;
        if (slot == 0) c.erase(e);
    }
};

BigPoly mul(const BigPoly& a, const BigPoly& b) {
    BigPoly r;
    for (auto& [ea, va] : a.c)
        for (auto& [eb, vb] : b.c) r.add(ea + eb, va * vb);
    return r;
}

BigPoly sub(const BigPoly& a, const BigPoly& b) {
    BigPoly r = a;
    for (auto& [e, v] : b.c) r.add(e, -v);
    return r;
}

BigPoly divide(BigPoly a, const BigPoly& d) {
    if (d.zero()) throw AlgebraError("division by zero polynomial");
    BigPoly q;
    auto [dlead, dval] = *d.c.rbegin();
    i64 dmin = d.c.begin()->first;
    while (!a.zero()) {
        auto [alead, aval] = *a.c.rbegin();
        if (alead - dlead < a.c.begin()->first - dmin || aval % dval != 0)
            throw AlgebraError("inexact polynomial division in Fox minor");
        cpp_int f = aval / dval;
        i64 e = alead - dlead;
        q.add(e, f);
        for (auto& [de, dv] : d.c) a.add(de + e, -f * dv);
    }
    return q;
}

BigPoly term(i64 coeff, i64 e) {
    BigPoly p;
    p.add(e, coeff);
    return p;
}

LaurentPolynomial to_small(const BigPoly& p) {
    if (p.zero()) return {};
    i64 lo = p.c.begin()->first, hi = p.c.rbegin()->first;
    std::vector<i64> coeffs(static_cast<size_t>(hi - lo + 1), 0);
    for (auto& [e, v] : p.c) {
        if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min())
            throw AlgebraError("Alexander coefficient overflow");
        coeffs[static_cast<size_t>(e - lo)] = static_cast<i64>(v);
    }
    return LaurentPolynomial(lo, coeffs);
}

// Bareiss determinant; entries consumed.
BigPoly bareiss(std::vector<std::vector<BigPoly>> m) {
    const size_t n = m.size();
    if (n == 0) return term(1, 0);
    BigPoly prev = term(1, 0);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].zero()) {
            size_t r = k + 1;
            while (r < n && m[r][k].zero()) ++r;
            if (r == n) return {};
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = divide(sub(mul(m[k][k], m[i][j]), mul(m[i][k], m[k][j])), prev);
            m[i][k] = {};
        }
        prev = m[k][k];
    }
    BigPoly det = m[n - 1][n - 1];
    if (sign < 0)
        for (auto& [e, v] : det.c) v = -v;
    return det;
}

}  // namespace

LaurentPolynomial normalize_alexander(const LaurentPolynomial& p) {
    if (p.is_zero()) return p;
    i64 span = p.max_degree() + p.min_degree();
    if (span % 2 != 0) throw AlgebraError("Alexander polynomial has odd span");
    LaurentPolynomial q = p.shift(-span / 2);
    i64 at_one = 0;
    for (auto c : q.coeffs()) at_one = checked_add(at_one, c);
    return at_one < 0 ? -q : q;
}

LaurentPolynomial alexander(const PlanarDiagram& d) {
    if (components(d).count != 1) throw std::invalid_argument("Alexander polynomial needs a 1-component diagram");
    if (!validate(d).connected) throw DiagramError("disconnected diagram");
    auto w = wirtinger(d);
    if (w.relations.empty()) return LaurentPolynomial::constant(1);
    const int n = w.generator_count;
    if (static_cast<int>(w.relations.size()) != n) throw AlgebraError("degenerate Wirtinger presentation");
    std::vector<std::vector<BigPoly>> fox(n, std::vector<BigPoly>(n));
    for (int r = 0; r < n; ++r) {
        auto& rel = w.relations[r];
        if (rel.sign > 0) {
            fox[r][rel.j].add(0, 1);
            fox[r][rel.j].add(1, -1);
            fox[r][rel.i].add(1, 1);
            fox[r][rel.k].add(0, -1);
        } else {
            fox[r][rel.j].add(1, 1);
            fox[r][rel.j].add(0, -1);
            fox[r][rel.i].add(0, 1);
            fox[r][rel.k].add(1, -1);
        }
    }
    std::vector<std::vector<BigPoly>> minor(n - 1);
    for (int r = 0; r + 1 < n; ++r) minor[r].assign(fox[r].begin(), fox[r].end() - 1);
    BigPoly det = bareiss(std::move(minor));
    if (det.zero()) throw AlgebraError("degenerate Wirtinger presentation");
    return normalize_alexander(to_small(det));
}

}  // namespace knotfam
