#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace knotfam {

using i64 = std::int64_t;

struct AlgebraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

i64 checked_add(i64 a, i64 b);
i64 checked_mul(i64 a, i64 b);

struct Fraction {
    i64 num = 0;
    i64 den = 1;

    Fraction() = default;
    Fraction(i64 n, i64 d = 1);

    Fraction operator+(const Fraction& o) const;
    Fraction operator-(const Fraction& o) const;
    Fraction operator*(const Fraction& o) const;
    Fraction operator/(const Fraction& o) const;
    Fraction operator-() const { return Fraction(-num, den); }
    Fraction inverse() const;
    bool operator==(const Fraction&) const = default;
    bool is_integer() const { return den == 1; }
    std::string str() const;
};

enum class CfMode { OddLength, UniformSign };

struct ContinuedFraction {
    std::vector<i64> terms;
    bool operator==(const ContinuedFraction&) const = default;
};

ContinuedFraction cf_expand(const Fraction& f, CfMode mode);
// Leading term may be zero (a tangle with |fraction| < 1); all later terms must be nonzero.
Fraction cf_evaluate(const ContinuedFraction& cf);

// p_k/q_k for every prefix of the expansion.
std::vector<std::pair<i64, i64>> cf_convergents(const ContinuedFraction& cf);

class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    LaurentPolynomial(i64 min_degree, std::vector<i64> coeffs);
    static LaurentPolynomial monomial(i64 c, i64 deg);
    static LaurentPolynomial constant(i64 c) { return monomial(c, 0); }

    bool is_zero() const { return coeffs_.empty(); }
    i64 min_degree() const { return min_deg_; }
    i64 max_degree() const { return min_deg_ + static_cast<i64>(coeffs_.size()) - 1; }
    const std::vector<i64>& coeffs() const { return coeffs_; }
    i64 coeff(i64 deg) const;

    LaurentPolynomial operator+(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-(const LaurentPolynomial& o) const;
    LaurentPolynomial operator*(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-() const;
    LaurentPolynomial& operator+=(const LaurentPolynomial& o) { return *this = *this + o; }
    bool operator==(const LaurentPolynomial&) const = default;

    LaurentPolynomial shift(i64 k) const;
    // x -> x^k for nonzero k
    LaurentPolynomial substitute_power(i64 k) const;
    // exact division; throws if the remainder is nonzero
    LaurentPolynomial divide_exact(const LaurentPolynomial& d) const;

    std::string str(const std::string& var = "t") const;

private:
    void normalize();
    i64 min_deg_ = 0;
    std::vector<i64> coeffs_;
};

LaurentPolynomial poly_mul(const LaurentPolynomial& a, const LaurentPolynomial& b);
Fraction poly_eval_int(const LaurentPolynomial& p, i64 x);

struct IntegerMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<i64> entries;

    IntegerMatrix() = default;
    IntegerMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<size_t>(r) * c, 0) {}
    IntegerMatrix(int r, int c, std::vector<i64> e);
    static IntegerMatrix identity(int n);

    i64& at(int i, int j) { return entries[static_cast<size_t>(i) * cols + j]; }
    i64 at(int i, int j) const { return entries[static_cast<size_t>(i) * cols + j]; }
    IntegerMatrix operator*(const IntegerMatrix& o) const;
    bool operator==(const IntegerMatrix&) const = default;
};

i64 determinant_2x2(const IntegerMatrix& m);
// Bareiss elimination; square input.
i64 determinant(const IntegerMatrix& m);

struct InvariantFactors {
    std::vector<i64> factors;
    int free_rank = 0;
    i64 order() const;
    int rank_mod2() const;
    // factors > 1 only
    std::vector<i64> nontrivial() const;
};

InvariantFactors snf(const IntegerMatrix& m);

}  // namespace knotfam
