#include "knotfam/algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace knotfam {

i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw AlgebraError("integer overflow in addition");
    return r;
}

i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw AlgebraError("integer overflow in multiplication");
    return r;
}

// ---- Fraction ----

Fraction::Fraction(i64 n, i64 d) {
    if (d == 0) throw AlgebraError("zero denominator");
    if (d < 0) { n = -n; d = -d; }
    i64 g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    num = n / g;
    den = d / g;
}

Fraction Fraction::operator+(const Fraction& o) const {
    return Fraction(checked_add(checked_mul(num, o.den), checked_mul(o.num, den)), checked_mul(den, o.den));
}
Fraction Fraction::operator-(const Fraction& o) const { return *this + (-o); }
Fraction Fraction::operator*(const Fraction& o) const {
    return Fraction(checked_mul(num, o.num), checked_mul(den, o.den));
}
Fraction Fraction::operator/(const Fraction& o) const { return *this * o.inverse(); }
Fraction Fraction::inverse() const {
    if (num == 0) throw AlgebraError("zero denominator");
    return Fraction(den, num);
}
std::string Fraction::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

// ---- continued fractions ----

static std::vector<i64> truncating_expansion(Fraction f) {
    std::vector<i64> out;
    i64 a = f.num, b = f.den;
    while (true) {
        i64 q = a / b;  // truncates toward zero, so all terms share the sign of f
        i64 r = a - q * b;
        out.push_back(q);
        if (r == 0) break;
        a = b;
        b = r;
    }
    return out;
}

ContinuedFraction cf_expand(const Fraction& f, CfMode mode) {
    if (f.num == 0) throw AlgebraError("cannot expand zero");
    if (mode == CfMode::UniformSign) {
        // |f| < 1 gives a_0 = 0; every later term is nonzero with the sign of f
        return {truncating_expansion(f)};
    }
    if (std::abs(f.num) <= f.den) throw AlgebraError("odd-length expansion requires |f| > 1");
    auto t = truncating_expansion(f);
    if (t.size() % 2 == 1) {
        i64 s = t.back() > 0 ? 1 : -1;
        t.back() -= s;
        t.push_back(s);
    }
    return {t};
}

Fraction cf_evaluate(const ContinuedFraction& cf) {
    if (cf.terms.empty()) throw AlgebraError("empty continued fraction");
    for (size_t i = 1; i < cf.terms.size(); ++i)
        if (cf.terms[i] == 0) throw AlgebraError("zero term at position " + std::to_string(i));
    Fraction x(cf.terms.back());
    for (size_t k = cf.terms.size() - 1; k-- > 0;) {
        if (x.num == 0) throw AlgebraError("intermediate zero denominator at position " + std::to_string(k + 1));
        x = Fraction(cf.terms[k]) + x.inverse();
    }
    return x;
}

std::vector<std::pair<i64, i64>> cf_convergents(const ContinuedFraction& cf) {
    std::vector<std::pair<i64, i64>> out;
    i64 p0 = 1, q0 = 0, p1 = cf.terms.at(0), q1 = 1;
    out.emplace_back(p1, q1);
    for (size_t i = 1; i < cf.terms.size(); ++i) {
        i64 a = cf.terms[i];
        i64 p2 = checked_add(checked_mul(a, p1), p0);
        i64 q2 = checked_add(checked_mul(a, q1), q0);
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        out.emplace_back(p1, q1);
    }
    return out;
}

// ---- Laurent polynomials ----

LaurentPolynomial::LaurentPolynomial(i64 min_degree, std::vector<i64> coeffs)
    : min_deg_(min_degree), coeffs_(std::move(coeffs)) {
    normalize();
}

LaurentPolynomial LaurentPolynomial::monomial(i64 c, i64 deg) { return LaurentPolynomial(deg, {c}); }

void LaurentPolynomial::normalize() {
    size_t lo = 0;
    while (lo < coeffs_.size() && coeffs_[lo] == 0) ++lo;
    if (lo == coeffs_.size()) {
        coeffs_.clear();
        min_deg_ = 0;
        return;
    }
    size_t hi = coeffs_.size();
    while (coeffs_[hi - 1] == 0) --hi;
    coeffs_ = std::vector<i64>(coeffs_.begin() + lo, coeffs_.begin() + hi);
    min_deg_ += static_cast<i64>(lo);
}

i64 LaurentPolynomial::coeff(i64 deg) const {
    if (is_zero() || deg < min_deg_ || deg > max_degree()) return 0;
    return coeffs_[deg - min_deg_];
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    i64 lo = std::min(min_deg_, o.min_deg_);
    i64 hi = std::max(max_degree(), o.max_degree());
    std::vector<i64> c(hi - lo + 1, 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) c[min_deg_ - lo + i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i)
        c[o.min_deg_ - lo + i] = checked_add(c[o.min_deg_ - lo + i], o.coeffs_[i]);
    return LaurentPolynomial(lo, std::move(c));
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    auto c = coeffs_;
    for (auto& x : c) x = -x;
    return LaurentPolynomial(min_deg_, std::move(c));
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const { return *this + (-o); }

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<i64> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            c[i + j] = checked_add(c[i + j], checked_mul(coeffs_[i], o.coeffs_[j]));
    }
    return LaurentPolynomial(min_deg_ + o.min_deg_, std::move(c));
}

LaurentPolynomial LaurentPolynomial::shift(i64 k) const {
    if (is_zero()) return {};
    return LaurentPolynomial(min_deg_ + k, coeffs_);
}

LaurentPolynomial LaurentPolynomial::substitute_power(i64 k) const {
    if (k == 0) throw AlgebraError("substitute_power needs nonzero exponent");
    LaurentPolynomial out;
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) out += monomial(coeffs_[i], (min_deg_ + static_cast<i64>(i)) * k);
    return out;
}

LaurentPolynomial LaurentPolynomial::divide_exact(const LaurentPolynomial& d) const {
    if (d.is_zero()) throw AlgebraError("division by zero polynomial");
    if (is_zero()) return {};
    std::vector<i64> rem = coeffs_;
    const i64 dn = static_cast<i64>(d.coeffs_.size());
    const i64 n = static_cast<i64>(rem.size());
    if (n < dn) throw AlgebraError("inexact polynomial division");
    std::vector<i64> q(n - dn + 1, 0);
    const i64 lead = d.coeffs_.back();
    for (i64 i = n - dn; i >= 0; --i) {
        i64 top = rem[i + dn - 1];
        if (top % lead != 0) throw AlgebraError("inexact polynomial division");
        i64 c = top / lead;
        q[i] = c;
        if (c == 0) continue;
        for (i64 j = 0; j < dn; ++j) rem[i + j] = checked_add(rem[i + j], -checked_mul(c, d.coeffs_[j]));
    }
    for (auto r : rem)
        if (r != 0) throw AlgebraError("inexact polynomial division");
    return LaurentPolynomial(min_deg_ - d.min_deg_, std::move(q));
}

std::string LaurentPolynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (i64 k = max_degree(); k >= min_deg_; --k) {
        i64 c = coeff(k);
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        i64 a = std::abs(c);
        if (k == 0 || a != 1) os << a;
        if (k != 0) {
            os << var;
            if (k != 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

LaurentPolynomial poly_mul(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a * b; }

Fraction poly_eval_int(const LaurentPolynomial& p, i64 x) {
    if (x == 0) throw AlgebraError("evaluation at zero");
    Fraction acc(0);
    Fraction xf(x);
    for (i64 k = p.max_degree(); k >= p.min_degree() && !p.is_zero(); --k) acc = acc * xf + Fraction(p.coeff(k));
    if (p.is_zero()) return acc;
    // acc = sum c_k x^(k - min_degree)
    i64 m = p.min_degree();
    Fraction scale(1);
    for (i64 i = 0; i < std::abs(m); ++i) scale = scale * xf;
    return m >= 0 ? acc * scale : acc / scale;
}

// ---- integer matrices ----

IntegerMatrix::IntegerMatrix(int r, int c, std::vector<i64> e) : rows(r), cols(c), entries(std::move(e)) {
    if (entries.size() != static_cast<size_t>(r) * c) throw AlgebraError("matrix entry count mismatch");
}

IntegerMatrix IntegerMatrix::identity(int n) {
    IntegerMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& o) const {
    if (cols != o.rows) throw AlgebraError("matrix shape mismatch");
    IntegerMatrix r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k)
            for (int j = 0; j < o.cols; ++j)
                r.at(i, j) = checked_add(r.at(i, j), checked_mul(at(i, k), o.at(k, j)));
    return r;
}

i64 determinant_2x2(const IntegerMatrix& m) {
    if (m.rows != 2 || m.cols != 2) throw AlgebraError("expected a 2x2 matrix");
    return checked_add(checked_mul(m.at(0, 0), m.at(1, 1)), -checked_mul(m.at(0, 1), m.at(1, 0)));
}

i64 determinant(const IntegerMatrix& m) {
    if (m.rows != m.cols) throw AlgebraError("determinant of non-square matrix");
    const int n = m.rows;
    if (n == 0) return 1;
    std::vector<__int128> a(m.entries.begin(), m.entries.end());
    auto A = [&](int i, int j) -> __int128& { return a[static_cast<size_t>(i) * n + j]; };
    __int128 prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (A(k, k) == 0) {
            int p = k + 1;
            while (p < n && A(p, k) == 0) ++p;
            if (p == n) return 0;
            for (int j = 0; j < n; ++j) std::swap(A(k, j), A(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) A(i, j) = (A(i, j) * A(k, k) - A(i, k) * A(k, j)) / prev;
        prev = A(k, k);
    }
    __int128 d = A(n - 1, n - 1) * sign;
    if (d > INT64_MAX || d < INT64_MIN) throw AlgebraError("determinant overflow");
    return static_cast<i64>(d);
}

i64 InvariantFactors::order() const {
    i64 o = 1;
    for (auto f : factors) o = checked_mul(o, f);
    return o;
}

int InvariantFactors::rank_mod2() const {
    int r = free_rank;
    for (auto f : factors)
        if (f % 2 == 0) ++r;
    return r;
}

std::vector<i64> InvariantFactors::nontrivial() const {
    std::vector<i64> out;
    for (auto f : factors)
        if (f > 1) out.push_back(f);
    return out;
}

InvariantFactors snf(const IntegerMatrix& m) {
    IntegerMatrix a = m;
    const int R = a.rows, C = a.cols;
    std::vector<i64> diag;
    int t = 0;
    while (t < R && t < C) {
        // pivot: smallest nonzero absolute value in the remaining block
        int pi = -1, pj = -1;
        i64 best = 0;
        for (int i = t; i < R; ++i)
            for (int j = t; j < C; ++j) {
                i64 v = std::abs(a.at(i, j));
                if (v != 0 && (best == 0 || v < best)) { best = v; pi = i; pj = j; }
            }
        if (pi < 0) break;
        for (int j = 0; j < C; ++j) std::swap(a.at(t, j), a.at(pi, j));
        for (int i = 0; i < R; ++i) std::swap(a.at(i, t), a.at(i, pj));
        bool clean = false;
        while (!clean) {
            clean = true;
            i64 p = a.at(t, t);
            for (int i = t + 1; i < R; ++i) {
                i64 q = a.at(i, t) / p;
                if (q != 0)
                    for (int j = t; j < C; ++j) a.at(i, j) = checked_add(a.at(i, j), -checked_mul(q, a.at(t, j)));
            }
            for (int j = t + 1; j < C; ++j) {
                i64 q = a.at(t, j) / p;
                if (q != 0)
                    for (int i = t; i < R; ++i) a.at(i, j) = checked_add(a.at(i, j), -checked_mul(q, a.at(i, t)));
            }
            // a remainder smaller than the pivot becomes the new pivot
            int ri = -1, rj = -1;
            for (int i = t + 1; i < R && ri < 0; ++i)
                if (a.at(i, t) != 0) ri = i;
            for (int j = t + 1; j < C && rj < 0; ++j)
                if (a.at(t, j) != 0) rj = j;
            if (ri >= 0) {
                for (int j = 0; j < C; ++j) std::swap(a.at(t, j), a.at(ri, j));
                clean = false;
                continue;
            }
            if (rj >= 0) {
                for (int i = 0; i < R; ++i) std::swap(a.at(i, t), a.at(i, rj));
                clean = false;
                continue;
            }
            // divisibility: pivot must divide the rest of the block
            for (int i = t + 1; i < R && clean; ++i)
                for (int j = t + 1; j < C; ++j)
                    if (a.at(i, j) % p != 0) {
                        for (int k = t; k < C; ++k) a.at(t, k) = checked_add(a.at(t, k), a.at(i, k));
                        clean = false;
                        break;
                    }
        }
        diag.push_back(std::abs(a.at(t, t)));
        ++t;
    }
    InvariantFactors out;
    out.factors = diag;
    out.free_rank = C - static_cast<int>(diag.size());
    return out;
}

}  // namespace knotfam
