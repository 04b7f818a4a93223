#pragma once

#include <string>
#include <vector>

#include "qchar/characters.hpp"
#include "qchar/pathspace.hpp"

namespace qchar {

enum class CheckOutcome { Pass, Fail, HypothesisUnsatisfied };

std::string to_string(CheckOutcome o);  // "pass" | "fail" | "hypothesis-unsatisfied"

/// One instance-level verification of a congruence, identity, or rank law.
/// A fail outcome always carries a witness (the offending value, rendered);
/// hypothesis-unsatisfied carries the unmet hypothesis instead.
struct CheckReport {
    std::string check;
    std::string instance;
    CheckOutcome outcome;
    std::string witness;

    bool passed() const { return outcome == CheckOutcome::Pass; }
    /// One JSON line with keys check, instance, outcome, witness.
    std::string to_json() const;
};

struct CheckSummary {
    long pass = 0;
    long fail = 0;
    long hypothesis_unsatisfied = 0;

    std::string to_json() const;
};

CheckSummary summarize(const std::vector<CheckReport>& reports);

/// The congruences below reduce mod the l-th cyclotomic polynomial. They can
/// fail as literally stated when sigma_l divides v^{d_alpha} - v^{-d_alpha}
/// for a simple root alpha, i.e. when l divides 2*d_alpha (smallest case
/// l = 2, d_alpha = 1: [3] - [1] reduces to 2, not 0). Returns true when no
/// simple root is affected; checks treat a false return as an unmet
/// hypothesis unless forced.
bool cyclotomic_hypothesis_holds(const RootSystem& rs, long l);

/// Smallest j >= 1 such that sigma_l divides the quantum integer [j] in the
/// variable v^d, namely l / gcd(l, 2d). When l divides 2d the value is 1,
/// and in that degenerate case sigma_l in fact divides no quantum integer
/// (it divides the denominator v^d - v^{-d} instead).
long qint_vanishing_period(long l, long d);

/// Per-slice validity for the matrix congruence and the rank theorem:
/// c_alpha(nu) < qint_vanishing_period(l, d_alpha) for every simple root.
/// This is sharper than the bound l > c_alpha(nu) alone: the matrix entries
/// divide by quantum factorials [c_alpha(nu)]!_alpha, and whenever some
/// [j]_alpha with j <= c_alpha(nu) is divisible by sigma_l the division can
/// strip the congruence (observed: l = 4, d = 1, nu = 2*alpha).
bool congruence_hypothesis_holds(const RootSystem& rs, long l, const RootVector& nu);

/// [<lambda + l*gamma, alpha^vee>]_alpha == [<lambda, alpha^vee>]_alpha mod
/// sigma_l, for every simple root alpha. force runs the reduction even when
/// cyclotomic_hypothesis_holds fails, recording the observed outcome.
CheckReport check_qint_periodicity(const RootSystem& rs, const Weight& lambda,
                                   const Weight& gamma, long l, bool force = false);

/// Entrywise congruence of pairing matrices: every entry of
/// A_nu(lambda + l*gamma) - A_nu(lambda) reduces to 0 mod sigma_l, under the
/// hypotheses l > c_alpha(nu) for all alpha and cyclotomic_hypothesis_holds.
/// force runs the reduction regardless and records the observed outcome.
CheckReport check_matrix_congruence(const RootSystem& rs, const Weight& lambda,
                                    const Weight& gamma, long l, const RootVector& nu,
                                    bool force = false);

/// Rank-level periodicity: dim L(lambda)_mu == dim L(lambda + l*gamma)_{mu +
/// l*gamma} over K, under the hypotheses mu <= lambda, l > c_alpha(lambda -
/// mu) for all alpha, and sigma_l(q) = 0 in K (covers both q a primitive
/// l-th root of unity and q = 1 in characteristic p with l a power of p).
/// force overrides the c_alpha bound and the cyclotomic validity filter, but
/// not the structural preconditions.
CheckReport check_periodicity_theorem(const Field& k, const RootSystem& rs,
                                      const Weight& lambda, const Weight& mu,
                                      const Weight& gamma, long l, bool force = false);

/// [a] * binom(b, c) == [a-c] * binom(b-1, c) + [a+b-c] * binom(b-1, c-1)
/// as Laurent polynomials, in the variable v^d. Requires c >= 0.
CheckReport check_qbinom_identity(long a, long b, long c, long d = 1);

/// Divided-power commutation on the basis path delta below lambda:
/// eps_alpha^(m) phi_beta^(n) delta equals phi_beta^(n) eps_alpha^(m) delta
/// when alpha != beta, and when alpha == beta equals
///   sum_{r=0}^{min(m,n)} binom(<mu, alpha^vee> + m - n, r)_alpha
///                        phi_alpha^(n-r) eps_alpha^(m-r) delta
/// with mu the weight of delta.
CheckReport check_commutation(const RootSystem& rs, const Weight& lambda, int alpha, int beta,
                              long m, long n, const Path& delta);

}  // namespace qchar
