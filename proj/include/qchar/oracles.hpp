#pragma once

#include <gmpxx.h>

#include "qchar/rootsystem.hpp"

namespace qchar {

struct NotDominant : std::runtime_error {
    explicit NotDominant(const std::string& what) : std::runtime_error(what) {}
};

/// Weyl-invariant inner product on the root lattice, scaled to integers:
/// gram()[i][j] = (alpha_i, alpha_j) = cartan(i,j) * D / sym(j) with
/// D = lcm of the symmetrizers. Symmetric and positive definite; the norm
/// (alpha_j, alpha_j) equals 2D / sym(j).
class InnerProductData {
public:
    explicit InnerProductData(const RootSystem& rs);

    const std::vector<std::vector<long>>& gram() const { return gram_; }
    long scale() const { return scale_; }  // D

    /// (mu, beta) for a weight mu and a root-lattice element beta.
    long weight_root(const Weight& mu, const RootVector& beta) const;
    long root_root(const RootVector& a, const RootVector& b) const;

private:
    RootSystem rs_;
    long scale_;
    std::vector<std::vector<long>> gram_;
};

/// Weight multiplicity of the simple module over Q at q = 1, computed by
/// Freudenthal's recursion. Entirely independent of the path/pairing
/// machinery: only the root system and exact integer arithmetic.
/// Requires lambda dominant; returns 0 when mu is not below lambda.
long freudenthal_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& mu);

/// 1 when the binomial coefficient (m choose n) is nonzero mod p, else 0,
/// by comparing base-p digits.
int lucas_predictor(long p, unsigned long m, unsigned long n);

}  // namespace qchar
