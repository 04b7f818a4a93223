#pragma once

#include <mutex>

#include "qchar/laurent.hpp"
#include "qchar/pathspace.hpp"
#include "qchar/rootsystem.hpp"

namespace qchar {

struct HeightMismatch : std::invalid_argument {
    explicit HeightMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// One height slice of the pairing matrix: entries[i][j] pairs order[i]
/// with order[j]; order is lexicographic and the matrix is symmetric.
struct GramMatrix {
    std::string system;
    Weight lambda;
    RootVector height;
    std::vector<Path> order;
    std::vector<std::vector<LaurentPoly>> entries;
};

/// Evaluation context for one (root system, highest weight) pair. Caches
/// the raw pairings of path pairs; safe for concurrent use (entries may be
/// recomputed by racing threads but always agree).
class GramSession {
public:
    GramSession(RootSystem rs, Weight lambda);

    const RootSystem& system() const { return rs_; }
    const Weight& lambda() const { return lambda_; }

    /// Unnormalized pairing of two paths of equal height.
    LaurentPoly raw(const Path& delta, const Path& gamma);
    /// Normalized matrix entry raw / (delta^! * gamma^!); always exact.
    LaurentPoly entry(const Path& delta, const Path& gamma);
    /// Full symmetric matrix of the height slice nu.
    GramMatrix matrix(const RootVector& nu);

private:
    LaurentPoly raw_memo(const Path& delta, const Path& gamma);

    RootSystem rs_;
    Weight lambda_;
    std::mutex mu_;
    std::map<std::pair<Path, Path>, LaurentPoly> memo_;
};

/// Single-shot conveniences (fresh session per call).
LaurentPoly gram_raw(const RootSystem& rs, const Weight& lambda, const Path& delta,
                     const Path& gamma);
LaurentPoly gram_entry(const RootSystem& rs, const Weight& lambda, const Path& delta,
                       const Path& gamma);
GramMatrix gram_matrix(const RootSystem& rs, const Weight& lambda, const RootVector& nu);

/// Compact JSON rendering with keys system, lambda, height, paths, entries
/// (entries as polynomial strings).
std::string gram_matrix_json(const GramMatrix& m);

}  // namespace qchar
