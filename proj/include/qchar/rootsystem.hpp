#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qchar {

struct NotFiniteType : std::runtime_error {
    explicit NotFiniteType(const std::string& what) : std::runtime_error(what) {}
};

struct NotSymmetrizable : std::runtime_error {
    explicit NotSymmetrizable(const std::string& what) : std::runtime_error(what) {}
};

/// Integral weight in fundamental-weight coordinates: coords[i] is the
/// pairing with the i-th simple coroot.
struct Weight {
    std::vector<long> coords;

    Weight() = default;
    explicit Weight(std::vector<long> c) : coords(std::move(c)) {}

    size_t rank() const { return coords.size(); }
    long operator[](size_t i) const { return coords[i]; }

    bool operator==(const Weight&) const = default;
    bool operator<(const Weight& rhs) const { return coords < rhs.coords; }

    Weight& operator+=(const Weight& rhs);
    Weight& operator-=(const Weight& rhs);
    friend Weight operator+(Weight lhs, const Weight& rhs) { return lhs += rhs; }
    friend Weight operator-(Weight lhs, const Weight& rhs) { return lhs -= rhs; }
    friend Weight operator*(long k, Weight w);

    bool is_dominant() const;
    std::string to_string() const;
};

/// Element of the root lattice written in the simple-root basis. Also used
/// for the "height" multiset of a path: coeffs[i] counts the simple root
/// alpha_i.
struct RootVector {
    std::vector<long> coeffs;

    RootVector() = default;
    explicit RootVector(std::vector<long> c) : coeffs(std::move(c)) {}
    static RootVector zero(size_t rank) { return RootVector(std::vector<long>(rank, 0)); }

    size_t rank() const { return coeffs.size(); }
    long operator[](size_t i) const { return coeffs[i]; }

    bool operator==(const RootVector&) const = default;
    bool operator<(const RootVector& rhs) const { return coeffs < rhs.coeffs; }

    RootVector& operator+=(const RootVector& rhs);
    RootVector& operator-=(const RootVector& rhs);
    friend RootVector operator+(RootVector lhs, const RootVector& rhs) { return lhs += rhs; }
    friend RootVector operator-(RootVector lhs, const RootVector& rhs) { return lhs -= rhs; }
    friend RootVector operator*(long k, RootVector v);

    bool is_nonnegative() const;
    bool is_zero() const;
    long total() const;  // sum of entries
    /// Componentwise comparison: true when every entry is <= the bound's.
    bool within(const RootVector& bound) const;
    std::string to_string() const;
};

/// Finite-type root system defined by a generalized Cartan matrix
/// a[i][j] = <alpha_i, alpha_j^vee>. Construction validates symmetrizability
/// (d[i]*a[i][j] == d[j]*a[j][i] with minimal positive integer d) and
/// positive definiteness of the symmetrized matrix.
class RootSystem {
public:
    /// Built-in types: A1, A2, A3, A4, B2, B3, C3, D4, F4, G2.
    static RootSystem named(const std::string& code);
    static RootSystem from_cartan(std::vector<std::vector<long>> cartan, std::string label = "custom");
    /// Parses {"cartan": [[2,-1],[-1,2]]}.
    static RootSystem from_cartan_json(const std::string& json_text);

    size_t rank() const { return cartan_.size(); }
    const std::string& label() const { return label_; }
    long cartan(size_t i, size_t j) const { return cartan_[i][j]; }
    /// Symmetrizer entry d_i; the variable of alpha_i-indexed quantum
    /// numbers is v^(d_i).
    long sym(size_t i) const { return sym_[i]; }

    /// <mu, alpha_j^vee> for a weight mu.
    long pairing(const Weight& mu, size_t j) const { return mu.coords.at(j); }
    /// <alpha_i, alpha_j^vee> summed over a root-lattice element.
    long pairing(const RootVector& nu, size_t j) const;

    /// alpha_i written in fundamental-weight coordinates (row i of the
    /// Cartan matrix).
    Weight simple_root(size_t i) const;
    /// Weight of a root-lattice element.
    Weight weight_of(const RootVector& nu) const;

    /// Writes lambda - mu in the simple-root basis when the difference is a
    /// nonnegative integral combination; nullopt otherwise.
    std::optional<RootVector> root_decompose(const Weight& lambda, const Weight& mu) const;
    /// Dominance order: mu <= lambda.
    bool leq(const Weight& mu, const Weight& lambda) const;

    /// All positive roots in the simple-root basis, sorted.
    const std::vector<RootVector>& positive_roots() const { return positive_roots_; }

private:
    RootSystem() = default;
    void validate_and_symmetrize();
    void close_positive_roots();

    std::string label_;
    std::vector<std::vector<long>> cartan_;
    std::vector<long> sym_;
    std::vector<RootVector> positive_roots_;
};

}  // namespace qchar
