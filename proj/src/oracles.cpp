#include "qchar/oracles.hpp"

#include <map>
#include <numeric>

#include "qchar/laurent.hpp"

namespace qchar {

InnerProductData::InnerProductData(const RootSystem& rs) : rs_(rs) {
    const size_t n = rs.rank();
    scale_ = 1;
    for (size_t j = 0; j < n; ++j) scale_ = std::lcm(scale_, rs.sym(j));
    gram_.assign(n, std::vector<long>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) gram_[i][j] = rs.cartan(i, j) * (scale_ / rs.sym(j));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (gram_[i][j] != gram_[j][i]) throw std::logic_error("inner product not symmetric");
}

long InnerProductData::weight_root(const Weight& mu, const RootVector& beta) const {
    // (mu, alpha_j) = <mu, alpha_j^vee> * (alpha_j, alpha_j) / 2
    long s = 0;
    for (size_t j = 0; j < rs_.rank(); ++j) s += beta[j] * mu[j] * (scale_ / rs_.sym(j));
    return s;
}

long InnerProductData::root_root(const RootVector& a, const RootVector& b) const {
    long s = 0;
    for (size_t i = 0; i < rs_.rank(); ++i)
        for (size_t j = 0; j < rs_.rank(); ++j) s += a[i] * gram_[i][j] * b[j];
    return s;
}

long freudenthal_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
    if (!lambda.is_dominant())
        throw NotDominant("highest weight " + lambda.to_string() + " is not dominant");
    auto top = rs.root_decompose(lambda, mu);
    if (!top) return 0;

    InnerProductData ip(rs);
    const auto& positive = rs.positive_roots();
    std::map<RootVector, Int> memo;

    // mult(c) for mu_c = lambda - c; denominators vanish only off the module,
    // where the multiplicity is zero.
    auto mult = [&](auto&& self, const RootVector& c) -> Int {
        if (c.is_zero()) return 1;
        if (auto it = memo.find(c); it != memo.end()) return it->second;

        Weight mu_c = lambda - rs.weight_of(c);
        // (lambda + rho, lambda + rho) - (mu_c + rho, mu_c + rho)
        //   = (lambda + mu_c + 2 rho, lambda - mu_c)
        Int den = 0;
        for (size_t j = 0; j < rs.rank(); ++j)
            den += Int(c[j]) * (lambda[j] + mu_c[j] + 2) * (ip.scale() / rs.sym(j));

        Int value = 0;
        if (den > 0) {
            Int num = 0;
            for (const auto& beta : positive) {
                long mu_beta = ip.weight_root(mu_c, beta);
                long beta_sq = ip.root_root(beta, beta);
                RootVector rem = c;
                for (long k = 1;; ++k) {
                    rem -= beta;
                    if (!rem.is_nonnegative()) break;
                    Int inner = self(self, rem);
                    if (inner != 0) num += (mu_beta + k * beta_sq) * inner;
                }
            }
            num *= 2;
            Int q, r;
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            if (r != 0) throw std::logic_error("non-integral multiplicity");
            value = q;
        }
        memo.emplace(c, value);
        return value;
    };

    Int result = mult(mult, *top);
    return static_cast<long>(result.get_si());
}

int lucas_predictor(long p, unsigned long m, unsigned long n) {
    if (p < 2) throw std::invalid_argument("lucas_predictor requires p >= 2");
    while (m != 0 || n != 0) {
        if (n % p > m % p) return 0;
        m /= static_cast<unsigned long>(p);
        n /= static_cast<unsigned long>(p);
    }
    return 1;
}

}  // namespace qchar
