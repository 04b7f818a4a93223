#pragma once

#include <compare>
#include <map>

#include "qchar/laurent.hpp"
#include "qchar/rootsystem.hpp"

namespace qchar {

/// A finite word in the simple roots, stored as root indices. Paths order
/// lexicographically.
class Path {
public:
    Path() = default;
    explicit Path(std::vector<int> steps) : steps_(std::move(steps)) {}

    size_t length() const { return steps_.size(); }
    bool empty() const { return steps_.empty(); }
    int operator[](size_t i) const { return steps_[i]; }
    const std::vector<int>& steps() const { return steps_; }

    /// Number of occurrences of each simple root.
    RootVector height(size_t rank) const;
    Path reversed() const;
    /// Copy with the i-th step removed.
    Path without(size_t i) const;
    Path prepended(int alpha) const;

    auto operator<=>(const Path&) const = default;

    std::string to_string() const;  // "[0,1,0]"

private:
    std::vector<int> steps_;
};

/// All paths with the given height, in lexicographic order. The count is the
/// multinomial coefficient of the height.
std::vector<Path> enumerate_paths(const RootVector& nu);

/// The product over maximal constant runs of the path of the quantum
/// factorial of the run length, each in the variable of its root.
LaurentPoly path_factorial(const RootSystem& rs, const Path& p);

/// Finitely supported Z[v,v^-1]-combination of same-height paths divided by
/// a common denominator polynomial. The denominator is cleared whenever it
/// divides every numerator exactly, so integral vectors always have
/// denominator 1.
class PathVector {
public:
    PathVector() = default;

    static PathVector basis(const Path& p);
    /// p / p^!, the divided basis vector associated with p.
    static PathVector divided_basis(const RootSystem& rs, const Path& p);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Path, LaurentPoly>& terms() const { return terms_; }
    const LaurentPoly& denominator() const { return denom_; }

    PathVector& operator+=(const PathVector& rhs);
    friend PathVector operator+(PathVector lhs, const PathVector& rhs) { return lhs += rhs; }

    PathVector scaled(const LaurentPoly& c) const;
    PathVector divided_by(const LaurentPoly& c) const;

    /// Equality as vectors over the fraction field (cross-multiplied).
    bool operator==(const PathVector& rhs) const;
    bool operator!=(const PathVector& rhs) const { return !(*this == rhs); }

private:
    void add_term(const Path& p, const LaurentPoly& c);
    void normalize();

    std::map<Path, LaurentPoly> terms_;
    LaurentPoly denom_ = LaurentPoly(1);
};

/// Lowering operator for the simple root alpha at highest weight lambda:
/// deletes one alpha-step at a time, weighting position i by the quantum
/// integer of <lambda - (suffix after i), alpha^vee> in the variable v^d_alpha.
PathVector epsilon_apply(const RootSystem& rs, const Weight& lambda, int alpha,
                         const PathVector& x);

/// Raising operator: prepends n copies of alpha (coefficients unchanged).
PathVector phi_apply(int alpha, long n, const PathVector& x);

/// Divided powers: the n-fold operator divided by the quantum factorial of n.
PathVector epsilon_divided(const RootSystem& rs, const Weight& lambda, int alpha, long n,
                           const PathVector& x);
PathVector phi_divided(const RootSystem& rs, int alpha, long n, const PathVector& x);

/// True when x, read in the divided basis p/p^!, has denominator-free
/// coefficients: p^! * coeff(p) is divisible by the denominator for every p.
bool divided_coeffs_integral(const RootSystem& rs, const PathVector& x);

}  // namespace qchar
