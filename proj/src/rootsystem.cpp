#include "qchar/rootsystem.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

namespace qchar {

namespace {

std::string bracketed(const std::vector<long>& v) {
    std::ostringstream out;
    out << '(';
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out << ',';
        out << v[i];
    }
    out << ')';
    return out.str();
}

void check_same_rank(size_t a, size_t b) {
    if (a != b) throw std::invalid_argument("rank mismatch");
}

}  // namespace

Weight& Weight::operator+=(const Weight& rhs) {
    check_same_rank(coords.size(), rhs.coords.size());
    for (size_t i = 0; i < coords.size(); ++i) coords[i] += rhs.coords[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& rhs) {
    check_same_rank(coords.size(), rhs.coords.size());
    for (size_t i = 0; i < coords.size(); ++i) coords[i] -= rhs.coords[i];
    return *this;
}

Weight operator*(long k, Weight w) {
    for (auto& c : w.coords) c *= k;
    return w;
}

bool Weight::is_dominant() const {
    return std::all_of(coords.begin(), coords.end(), [](long c) { return c >= 0; });
}

std::string Weight::to_string() const { return bracketed(coords); }

RootVector& RootVector::operator+=(const RootVector& rhs) {
    check_same_rank(coeffs.size(), rhs.coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += rhs.coeffs[i];
    return *this;
}

RootVector& RootVector::operator-=(const RootVector& rhs) {
    check_same_rank(coeffs.size(), rhs.coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= rhs.coeffs[i];
    return *this;
}

RootVector operator*(long k, RootVector v) {
    for (auto& c : v.coeffs) c *= k;
    return v;
}

bool RootVector::is_nonnegative() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](long c) { return c >= 0; });
}

bool RootVector::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](long c) { return c == 0; });
}

long RootVector::total() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0L); }

bool RootVector::within(const RootVector& bound) const {
    check_same_rank(coeffs.size(), bound.coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] > bound.coeffs[i]) return false;
    return true;
}

std::string RootVector::to_string() const { return bracketed(coeffs); }

RootSystem RootSystem::named(const std::string& code) {
    static const std::map<std::string, std::vector<std::vector<long>>> table = {
        {"A1", {{2}}},
        {"A2", {{2, -1}, {-1, 2}}},
        {"A3", {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}},
        {"A4", {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}}},
        // Convention: a[i][j] = <alpha_i, alpha_j^vee>. For B2 the first
        // simple root is long, so a[0][1] = -2.
        {"B2", {{2, -2}, {-1, 2}}},
        {"B3", {{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}},
        {"C3", {{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}},
        {"D4", {{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}}},
        {"F4", {{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}}},
        {"G2", {{2, -1}, {-3, 2}}},
    };
    auto it = table.find(code);
    if (it == table.end()) throw std::invalid_argument("unknown root system: " + code);
    return from_cartan(it->second, code);
}

RootSystem RootSystem::from_cartan(std::vector<std::vector<long>> cartan, std::string label) {
    RootSystem rs;
    rs.label_ = std::move(label);
    rs.cartan_ = std::move(cartan);
    rs.validate_and_symmetrize();
    rs.close_positive_roots();
    return rs;
}

RootSystem RootSystem::from_cartan_json(const std::string& json_text) {
    nlohmann::json doc = nlohmann::json::parse(json_text);
    if (!doc.is_object() || !doc.contains("cartan"))
        throw std::invalid_argument("expected an object with a \"cartan\" key");
    return from_cartan(doc.at("cartan").get<std::vector<std::vector<long>>>());
}

void RootSystem::validate_and_symmetrize() {
    const size_t n = cartan_.size();
    if (n == 0) throw std::invalid_argument("empty Cartan matrix");
    for (const auto& row : cartan_)
        if (row.size() != n) throw std::invalid_argument("Cartan matrix is not square");
    for (size_t i = 0; i < n; ++i) {
        if (cartan_[i][i] != 2) throw NotFiniteType("diagonal entry must be 2");
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (cartan_[i][j] > 0) throw NotFiniteType("off-diagonal entries must be <= 0");
            if ((cartan_[i][j] == 0) != (cartan_[j][i] == 0))
                throw NotSymmetrizable("zero pattern is not symmetric");
        }
    }

    // Minimal positive integral d with d[i]*a[i][j] == d[j]*a[j][i]:
    // propagate ratios over each connected component, then clear
    // denominators and divide by the common gcd.
    std::vector<mpq_class> ratio(n);
    std::vector<int> comp(n, -1);
    for (size_t start = 0; start < n; ++start) {
        if (comp[start] != -1) continue;
        comp[start] = static_cast<int>(start);
        ratio[start] = 1;
        std::vector<size_t> queue{start};
        std::vector<size_t> members;
        while (!queue.empty()) {
            size_t i = queue.back();
            queue.pop_back();
            members.push_back(i);
            for (size_t j = 0; j < n; ++j) {
                if (i == j || cartan_[i][j] == 0) continue;
                mpq_class forced = ratio[i] * cartan_[i][j] / cartan_[j][i];
                if (comp[j] == -1) {
                    comp[j] = comp[start];
                    ratio[j] = forced;
                    queue.push_back(j);
                } else if (ratio[j] != forced) {
                    throw NotSymmetrizable("inconsistent symmetrizer ratios");
                }
            }
        }
        mpz_class denom_lcm = 1;
        for (size_t i : members)
            mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), ratio[i].get_den().get_mpz_t());
        mpz_class num_gcd = 0;
        for (size_t i : members) {
            ratio[i] *= denom_lcm;
            ratio[i].canonicalize();
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), ratio[i].get_num().get_mpz_t());
        }
        for (size_t i : members) {
            ratio[i] /= num_gcd;
            ratio[i].canonicalize();
        }
    }
    sym_.resize(n);
    for (size_t i = 0; i < n; ++i) {
        if (ratio[i].get_den() != 1 || ratio[i] <= 0)
            throw NotSymmetrizable("symmetrizer is not a positive integer vector");
        sym_[i] = static_cast<long>(ratio[i].get_num().get_si());
    }

    // Finite type == the symmetrized matrix d[i]*a[i][j] is positive
    // definite: all leading principal minors positive (exact arithmetic).
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m[i][j] = sym_[i] * cartan_[i][j];
    for (size_t k = 0; k < n; ++k) {
        // After eliminating below the first k pivots, m[k][k] is the ratio
        // of consecutive leading principal minors.
        if (m[k][k] <= 0) throw NotFiniteType("symmetrized Cartan matrix is not positive definite");
        for (size_t i = k + 1; i < n; ++i) {
            mpq_class f = m[i][k] / m[k][k];
            for (size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
}

void RootSystem::close_positive_roots() {
    const size_t n = rank();
    std::set<RootVector> roots;
    std::vector<RootVector> frontier;
    for (size_t i = 0; i < n; ++i) {
        std::vector<long> e(n, 0);
        e[i] = 1;
        RootVector alpha{std::move(e)};
        roots.insert(alpha);
        frontier.push_back(alpha);
    }
    // Orbit closure under simple reflections; a reflected positive root is
    // again positive unless it was a simple root itself.
    while (!frontier.empty()) {
        RootVector beta = frontier.back();
        frontier.pop_back();
        for (size_t j = 0; j < n; ++j) {
            long p = pairing(beta, j);
            RootVector refl = beta;
            refl.coeffs[j] -= p;
            if (!refl.is_nonnegative()) continue;
            if (roots.insert(refl).second) frontier.push_back(refl);
        }
    }
    positive_roots_.assign(roots.begin(), roots.end());
}

long RootSystem::pairing(const RootVector& nu, size_t j) const {
    long s = 0;
    for (size_t i = 0; i < rank(); ++i) s += nu[i] * cartan_[i][j];
    return s;
}

Weight RootSystem::simple_root(size_t i) const { return Weight(cartan_.at(i)); }

Weight RootSystem::weight_of(const RootVector& nu) const {
    check_same_rank(nu.rank(), rank());
    std::vector<long> c(rank(), 0);
    for (size_t j = 0; j < rank(); ++j)
        for (size_t i = 0; i < rank(); ++i) c[j] += nu[i] * cartan_[i][j];
    return Weight(std::move(c));
}

std::optional<RootVector> RootSystem::root_decompose(const Weight& lambda, const Weight& mu) const {
    check_same_rank(lambda.rank(), rank());
    check_same_rank(mu.rank(), rank());
    // Solve c * A = lambda - mu exactly over the rationals (A is the Cartan
    // matrix; its determinant is positive for finite type).
    const size_t n = rank();
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n + 1));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) m[j][i] = cartan_[i][j];  // transposed
        m[i][n] = lambda[i] - mu[i];
    }
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) throw std::logic_error("singular Cartan matrix");  // finite type forbids this
        std::swap(m[piv], m[k]);
        for (size_t i = 0; i < n; ++i) {
            if (i == k || m[i][k] == 0) continue;
            mpq_class f = m[i][k] / m[k][k];
            for (size_t j = k; j <= n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    std::vector<long> c(n);
    for (size_t k = 0; k < n; ++k) {
        mpq_class x = m[k][n] / m[k][k];
        x.canonicalize();
        if (x.get_den() != 1 || x < 0) return std::nullopt;
        c[k] = static_cast<long>(x.get_num().get_si());
    }
    return RootVector(std::move(c));
}

bool RootSystem::leq(const Weight& mu, const Weight& lambda) const {
    return root_decompose(lambda, mu).has_value();
}

}  // namespace qchar
