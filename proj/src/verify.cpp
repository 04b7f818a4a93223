#include "qchar/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace qchar {

namespace {

std::string render_path_vector(const PathVector& x) {
    if (x.is_zero()) return "0";
    std::ostringstream out;
    out << "(";
    bool first = true;
    for (const auto& [path, coeff] : x.terms()) {
        if (!first) out << " + ";
        first = false;
        out << path.to_string() << "*(" << coeff.to_string() << ")";
    }
    out << ")";
    if (!(x.denominator() == LaurentPoly(1))) out << " / (" << x.denominator().to_string() << ")";
    return out.str();
}

}  // namespace

std::string to_string(CheckOutcome o) {
    switch (o) {
        case CheckOutcome::Pass: return "pass";
        case CheckOutcome::Fail: return "fail";
        case CheckOutcome::HypothesisUnsatisfied: return "hypothesis-unsatisfied";
    }
    return "?";
}

std::string CheckReport::to_json() const {
    nlohmann::json j;
    j["check"] = check;
    j["instance"] = instance;
    j["outcome"] = to_string(outcome);
    j["witness"] = witness;
    return j.dump();
}

std::string CheckSummary::to_json() const {
    nlohmann::json j;
    j["summary"]["pass"] = pass;
    j["summary"]["fail"] = fail;
    j["summary"]["hypothesis-unsatisfied"] = hypothesis_unsatisfied;
    return j.dump();
}

CheckSummary summarize(const std::vector<CheckReport>& reports) {
    CheckSummary s;
    for (const auto& r : reports) {
        switch (r.outcome) {
            case CheckOutcome::Pass: ++s.pass; break;
            case CheckOutcome::Fail: ++s.fail; break;
            case CheckOutcome::HypothesisUnsatisfied: ++s.hypothesis_unsatisfied; break;
        }
    }
    return s;
}

bool cyclotomic_hypothesis_holds(const RootSystem& rs, long l) {
    for (size_t i = 0; i < rs.rank(); ++i)
        if ((2 * rs.sym(i)) % l == 0) return false;
    return true;
}

long qint_vanishing_period(long l, long d) { return l / std::gcd(l, 2 * d); }

bool congruence_hypothesis_holds(const RootSystem& rs, long l, const RootVector& nu) {
    for (size_t i = 0; i < rs.rank(); ++i)
        if (nu[i] >= qint_vanishing_period(l, rs.sym(i))) return false;
    return true;
}

CheckReport check_qint_periodicity(const RootSystem& rs, const Weight& lambda,
                                   const Weight& gamma, long l, bool force) {
    std::ostringstream inst;
    inst << "system=" << rs.label() << " lambda=" << lambda.to_string()
         << " gamma=" << gamma.to_string() << " l=" << l;
    CheckReport report{"qint-periodicity", inst.str(), CheckOutcome::Pass, ""};

    for (size_t i = 0; i < rs.rank(); ++i) {
        LaurentPoly diff =
            qint(lambda[i] + l * gamma[i], rs.sym(i)) - qint(lambda[i], rs.sym(i));
        IntPoly residue = mod_cyclotomic(diff, l);
        if (residue.is_zero()) continue;
        std::string observed = "alpha_" + std::to_string(i) + ": [" +
                               std::to_string(lambda[i] + l * gamma[i]) + "] - [" +
                               std::to_string(lambda[i]) + "] = " + residue.to_string() +
                               " mod sigma_" + std::to_string(l);
        if (!force && !cyclotomic_hypothesis_holds(rs, l)) {
            report.outcome = CheckOutcome::HypothesisUnsatisfied;
            report.witness = "l divides 2*d_alpha for some simple root (" + observed + ")";
        } else {
            report.outcome = CheckOutcome::Fail;
            report.witness = observed;
        }
        return report;
    }
    return report;
}

CheckReport check_matrix_congruence(const RootSystem& rs, const Weight& lambda,
                                    const Weight& gamma, long l, const RootVector& nu,
                                    bool force) {
    std::ostringstream inst;
    inst << "system=" << rs.label() << " lambda=" << lambda.to_string()
         << " gamma=" << gamma.to_string() << " l=" << l << " nu=" << nu.to_string();
    CheckReport report{"matrix-congruence", inst.str(), CheckOutcome::Pass, ""};

    GramMatrix base = gram_matrix(rs, lambda, nu);
    GramMatrix shifted = gram_matrix(rs, lambda + l * gamma, nu);
    for (size_t i = 0; i < base.order.size(); ++i)
        for (size_t j = 0; j <= i; ++j) {
            IntPoly residue = mod_cyclotomic(shifted.entries[i][j] - base.entries[i][j], l);
            if (residue.is_zero()) continue;
            std::string observed = "entry (" + base.order[i].to_string() + ", " +
                                   base.order[j].to_string() + "): difference = " +
                                   residue.to_string() + " mod sigma_" + std::to_string(l);
            if (!force && !congruence_hypothesis_holds(rs, l, nu)) {
                report.outcome = CheckOutcome::HypothesisUnsatisfied;
                report.witness =
                    "c_alpha(nu) >= l / gcd(l, 2*d_alpha) for some simple root (" + observed +
                    ")";
            } else {
                report.outcome = CheckOutcome::Fail;
                report.witness = observed;
            }
            return report;
        }
    return report;
}

CheckReport check_periodicity_theorem(const Field& k, const RootSystem& rs,
                                      const Weight& lambda, const Weight& mu,
                                      const Weight& gamma, long l, bool force) {
    std::ostringstream inst;
    inst << "field=" << k.spec().to_string() << " system=" << rs.label()
         << " lambda=" << lambda.to_string() << " mu=" << mu.to_string()
         << " gamma=" << gamma.to_string() << " l=" << l;
    CheckReport report{"periodicity-theorem", inst.str(), CheckOutcome::Pass, ""};

    if (!k.is_zero(k.specialize(cyclotomic(l).to_laurent()))) {
        report.outcome = CheckOutcome::HypothesisUnsatisfied;
        report.witness = "sigma_" + std::to_string(l) + "(q) != 0 in K";
        return report;
    }
    auto decomposition = rs.root_decompose(lambda, mu);
    if (!decomposition) {
        report.outcome = CheckOutcome::HypothesisUnsatisfied;
        report.witness = "mu is not below lambda";
        return report;
    }

    long base = weight_multiplicity(k, rs, lambda, mu);
    long shifted = weight_multiplicity(k, rs, lambda + l * gamma, mu + l * gamma);
    if (base == shifted) return report;

    std::string observed = "dim at lambda = " + std::to_string(base) +
                           ", dim at lambda + l*gamma = " + std::to_string(shifted);
    // q = 1 in characteristic p needs only l > c_alpha; at a genuine root of
    // unity the sharper cyclotomic slice condition applies.
    bool hypothesis_ok = true;
    for (size_t i = 0; i < rs.rank(); ++i)
        if (l <= (*decomposition)[i]) hypothesis_ok = false;
    if (k.q_order() > 1 && !congruence_hypothesis_holds(rs, l, *decomposition))
        hypothesis_ok = false;
    if (!force && !hypothesis_ok) {
        report.outcome = CheckOutcome::HypothesisUnsatisfied;
        report.witness = "slice hypothesis on l fails for some simple root (" + observed + ")";
    } else {
        report.outcome = CheckOutcome::Fail;
        report.witness = observed;
    }
    return report;
}

CheckReport check_qbinom_identity(long a, long b, long c, long d) {
    if (c < 0) throw std::invalid_argument("check_qbinom_identity: c must be nonnegative");
    std::ostringstream inst;
    inst << "a=" << a << " b=" << b << " c=" << c << " d=" << d;
    CheckReport report{"qbinom-identity", inst.str(), CheckOutcome::Pass, ""};

    LaurentPoly lhs = qint(a, d) * qbinom(b, c, d);
    LaurentPoly rhs = qint(a - c, d) * qbinom(b - 1, c, d);
    if (c >= 1) rhs += qint(a + b - c, d) * qbinom(b - 1, c - 1, d);
    if (!(lhs == rhs)) {
        report.outcome = CheckOutcome::Fail;
        report.witness = "lhs = " + lhs.to_string() + ", rhs = " + rhs.to_string();
    }
    return report;
}

CheckReport check_commutation(const RootSystem& rs, const Weight& lambda, int alpha, int beta,
                              long m, long n, const Path& delta) {
    std::ostringstream inst;
    inst << "system=" << rs.label() << " lambda=" << lambda.to_string() << " alpha=" << alpha
         << " beta=" << beta << " m=" << m << " n=" << n << " delta=" << delta.to_string();
    CheckReport report{"commutation", inst.str(), CheckOutcome::Pass, ""};

    PathVector x = PathVector::basis(delta);
    PathVector lhs = epsilon_divided(rs, lambda, alpha, m, phi_divided(rs, beta, n, x));

    PathVector rhs;
    if (alpha != beta) {
        rhs = phi_divided(rs, beta, n, epsilon_divided(rs, lambda, alpha, m, x));
    } else {
        long mu_pairing =
            lambda[static_cast<size_t>(alpha)] - rs.pairing(delta.height(rs.rank()), alpha);
        for (long r = 0; r <= std::min(m, n); ++r) {
            PathVector term =
                phi_divided(rs, alpha, n - r, epsilon_divided(rs, lambda, alpha, m - r, x));
            rhs += term.scaled(qbinom(mu_pairing + m - n, r, rs.sym(alpha)));
        }
    }
    if (lhs != rhs) {
        report.outcome = CheckOutcome::Fail;
        report.witness =
            "lhs = " + render_path_vector(lhs) + ", rhs = " + render_path_vector(rhs);
    }
    return report;
}

}  // namespace qchar
