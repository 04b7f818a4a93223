#pragma once

#include "qchar/coefficients.hpp"
#include "qchar/gram.hpp"

namespace qchar {

/// Weight multiplicities of one simple highest-weight module over a fixed
/// field, for all weights lambda - nu with nu inside a height box. Entries
/// are sorted by weight coordinates.
struct MultiplicityTable {
    std::string system;
    FieldSpec field;
    Weight lambda;
    RootVector height_bound;
    std::vector<std::pair<Weight, long>> entries;
};

/// Rank of the matrix specialized into K. Exact Gaussian elimination with
/// first-nonzero pivot selection, so identical inputs eliminate identically.
long matrix_rank(const Field& k, const GramMatrix& m);

/// Dimension of the mu weight space of the simple module of highest weight
/// lambda over K: the rank of the pairing matrix of the slice lambda - mu.
/// Zero when mu is not below lambda.
long weight_multiplicity(const Field& k, const RootSystem& rs, const Weight& lambda,
                         const Weight& mu);
/// Same, reusing a session's cache (the session fixes rs and lambda).
long weight_multiplicity(const Field& k, GramSession& session, const Weight& mu);

/// Multiplicities for every slice in the box [0, bound], sharing one
/// session. jobs > 1 distributes slices over threads; the result does not
/// depend on jobs.
MultiplicityTable character_table(const Field& k, const RootSystem& rs, const Weight& lambda,
                                  const RootVector& bound, int jobs = 1);

std::string multiplicity_table_json(const MultiplicityTable& t);
/// CSV with header mu_0,...,mu_{rank-1},dim.
std::string multiplicity_table_csv(const MultiplicityTable& t);

}  // namespace qchar
