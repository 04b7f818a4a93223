#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qchar {

using Int = mpz_class;

/// Thrown when an exact polynomial division has no quotient over the
/// integers. In the higher layers this always signals a bug, never a
/// data-dependent condition.
struct NonExactDivision : std::runtime_error {
    explicit NonExactDivision(const std::string& what) : std::runtime_error(what) {}
};

/// Element of Z[v, v^-1] in canonical sparse form: a map from exponent to
/// nonzero arbitrary-precision coefficient. Value semantics throughout.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
    LaurentPoly(Int constant);   // NOLINT(google-explicit-constructor)

    static LaurentPoly monomial(Int coeff, long exp);
    static LaurentPoly variable() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<long, Int>& terms() const { return coeffs_; }

    /// Smallest/largest exponent with nonzero coefficient. Pre: nonzero.
    long min_exp() const;
    long max_exp() const;
    Int coeff(long exp) const;

    bool operator==(const LaurentPoly& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const LaurentPoly& rhs) const { return !(*this == rhs); }

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);

    friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
    friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
    friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);

    /// Multiply by v^k.
    LaurentPoly shifted(long k) const;

    /// Terms in decreasing exponent order, e.g. "v^2 + 1 + v^-2".
    std::string to_string() const;

private:
    void add_term(long exp, const Int& c);

    std::map<long, Int> coeffs_;
};

/// Polynomial in v with nonnegative exponents and integer coefficients,
/// dense low-to-high. Leading coefficient of a nonzero value is nonzero.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of a nonzero polynomial; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    Int coeff(long i) const;
    const Int& leading() const;
    const std::vector<Int>& coeffs() const { return coeffs_; }

    bool operator==(const IntPoly& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const IntPoly& rhs) const { return !(*this == rhs); }

    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
    friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
    friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);

    /// Quotient under exact division; throws NonExactDivision if the
    /// quotient does not exist over Z.
    static IntPoly exact_quotient(const IntPoly& num, const IntPoly& den);

    /// Remainder mod a monic divisor (degree of result < degree of divisor).
    static IntPoly rem_monic(const IntPoly& num, const IntPoly& monic_den);

    LaurentPoly to_laurent() const;
    std::string to_string() const { return to_laurent().to_string(); }

private:
    void normalize();

    std::vector<Int> coeffs_;  // coeffs_[i] is the coefficient of v^i
};

/// Quantum integer [n] = (v^n - v^-n)/(v - v^-1) in the variable v^d.
LaurentPoly qint(long n, long d = 1);

/// Quantum factorial [n]^! = [1][2]...[n] in the variable v^d.
LaurentPoly qfact(long n, long d = 1);

/// Gaussian binomial [n][n-1]...[n-r+1] / [r]^! in the variable v^d.
/// Always a genuine Laurent polynomial; the internal division is exact.
LaurentPoly qbinom(long n, long r, long d = 1);

/// The l-th cyclotomic polynomial; monic of degree phi(l). Memoized.
IntPoly cyclotomic(long l);

/// Exact quotient a/b in Z[v, v^-1]; throws NonExactDivision if none exists.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

/// Non-throwing variant of exact_div: false when no quotient exists.
bool try_exact_div(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quot);

/// Canonical representative of p in Z[v]/(sigma_l): degree < phi(l),
/// negative exponents resolved via v^-1 == v^(l-1). Zero iff sigma_l
/// divides p in Z[v, v^-1].
IntPoly mod_cyclotomic(const LaurentPoly& p, long l);

}  // namespace qchar
