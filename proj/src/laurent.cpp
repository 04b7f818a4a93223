#include "qchar/laurent.hpp"

#include <mutex>
#include <sstream>
#include <utility>

namespace qchar {

LaurentPoly::LaurentPoly(long constant) {
    if (constant != 0) coeffs_[0] = constant;
}

LaurentPoly::LaurentPoly(Int constant) {
    if (constant != 0) coeffs_[0] = std::move(constant);
}

LaurentPoly LaurentPoly::monomial(Int coeff, long exp) {
    LaurentPoly p;
    if (coeff != 0) p.coeffs_[exp] = std::move(coeff);
    return p;
}

long LaurentPoly::min_exp() const {
    if (is_zero()) throw std::logic_error("min_exp of zero polynomial");
    return coeffs_.begin()->first;
}

long LaurentPoly::max_exp() const {
    if (is_zero()) throw std::logic_error("max_exp of zero polynomial");
    return coeffs_.rbegin()->first;
}

Int LaurentPoly::coeff(long exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? Int(0) : it->second;
}

void LaurentPoly::add_term(long exp, const Int& c) {
    if (c == 0) return;
    auto [it, fresh] = coeffs_.emplace(exp, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.coeffs_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.coeffs_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    LaurentPoly r;
    for (const auto& [e1, c1] : lhs.coeffs_)
        for (const auto& [e2, c2] : rhs.coeffs_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

LaurentPoly LaurentPoly::shifted(long k) const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e + k] = c;
    return r;
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (first) {
            if (c < 0) out << '-';
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        Int a = abs(c);
        if (a != 1 || e == 0) {
            out << a.get_str();
            if (e != 0) out << '*';
        }
        if (e != 0) {
            out << 'v';
            if (e != 1) out << '^' << e;
        }
    }
    return out.str();
}

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Int IntPoly::coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(coeffs_.size())) return 0;
    return coeffs_[i];
}

const Int& IntPoly::leading() const {
    if (is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return IntPoly();
    std::vector<Int> r(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (size_t i = 0; i < lhs.coeffs_.size(); ++i)
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j) r[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    return IntPoly(std::move(r));
}

namespace {

// Long division by iterated leading-term elimination. Quotient coefficients
// of an exact division are forced degree-by-degree, so the first non-exact
// integer division or a nonzero final remainder proves non-divisibility.
// Returns false in that case (with *quot unspecified).
bool divide_exact(const IntPoly& num, const IntPoly& den, IntPoly* quot) {
    if (den.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (num.is_zero()) {
        *quot = IntPoly();
        return true;
    }
    if (num.degree() < den.degree()) return false;
    std::vector<Int> rem = num.coeffs();
    std::vector<Int> q(num.degree() - den.degree() + 1);
    const Int& lead = den.leading();
    for (long k = num.degree() - den.degree(); k >= 0; --k) {
        Int& top = rem[k + den.degree()];
        if (top == 0) continue;
        Int c, r;
        mpz_tdiv_qr(c.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        if (r != 0) return false;
        for (long i = 0; i <= den.degree(); ++i) rem[k + i] -= c * den.coeff(i);
        q[k] = std::move(c);
    }
    for (const Int& c : rem)
        if (c != 0) return false;
    *quot = IntPoly(std::move(q));
    return true;
}

}  // namespace

IntPoly IntPoly::exact_quotient(const IntPoly& num, const IntPoly& den) {
    IntPoly q;
    if (!divide_exact(num, den, &q))
        throw NonExactDivision("(" + num.to_string() + ") not divisible by (" + den.to_string() +
                               ")");
    return q;
}

IntPoly IntPoly::rem_monic(const IntPoly& num, const IntPoly& den) {
    if (den.is_zero() || den.leading() != 1)
        throw std::invalid_argument("rem_monic requires a monic divisor");
    std::vector<Int> rem = num.coeffs_;
    for (long k = num.degree(); k >= den.degree(); --k) {
        Int c = rem[k];
        if (c == 0) continue;
        for (long i = 0; i <= den.degree(); ++i) rem[k - den.degree() + i] -= c * den.coeff(i);
    }
    rem.resize(std::min<size_t>(rem.size(), den.degree()));
    return IntPoly(std::move(rem));
}

LaurentPoly IntPoly::to_laurent() const {
    LaurentPoly p;
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) p += LaurentPoly::monomial(coeffs_[i], static_cast<long>(i));
    return p;
}

LaurentPoly qint(long n, long d) {
    if (d <= 0) throw std::invalid_argument("qint: d must be positive");
    if (n < 0) return -qint(-n, d);
    // [n] = v^(n-1) + v^(n-3) + ... + v^(1-n), then v -> v^d.
    LaurentPoly p;
    for (long k = 0; k < n; ++k) p += LaurentPoly::monomial(1, d * (n - 1 - 2 * k));
    return p;
}

LaurentPoly qfact(long n, long d) {
    if (n < 0) throw std::invalid_argument("qfact: n must be nonnegative");
    LaurentPoly p(1);
    for (long k = 2; k <= n; ++k) p *= qint(k, d);
    return p;
}

LaurentPoly qbinom(long n, long r, long d) {
    if (r < 0) throw std::invalid_argument("qbinom: r must be nonnegative");
    LaurentPoly num(1);
    for (long k = 0; k < r; ++k) num *= qint(n - k, d);
    return exact_div(num, qfact(r, d));
}

IntPoly cyclotomic(long l) {
    if (l <= 0) throw std::invalid_argument("cyclotomic: l must be positive");
    static std::mutex mu;
    static std::map<long, IntPoly> memo;  // append-only
    std::unique_lock lock(mu);
    if (auto it = memo.find(l); it != memo.end()) return it->second;
    lock.unlock();

    // sigma_l = (v^l - 1) / prod of sigma_d over proper divisors d of l.
    IntPoly den(std::vector<Int>{1});
    for (long dv = 1; dv < l; ++dv)
        if (l % dv == 0) den = den * cyclotomic(dv);
    std::vector<Int> c(l + 1);
    c[0] = -1;
    c[l] = 1;
    IntPoly sigma = IntPoly::exact_quotient(IntPoly(std::move(c)), den);

    lock.lock();
    memo.emplace(l, sigma);
    return sigma;
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly q;
    if (!try_exact_div(a, b, q))
        throw NonExactDivision("(" + a.to_string() + ") not divisible by (" + b.to_string() + ")");
    return q;
}

bool try_exact_div(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quot) {
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (a.is_zero()) {
        quot = LaurentPoly();
        return true;
    }
    // Shift both operands to ordinary polynomials with nonzero constant
    // term; any Laurent quotient then has v-valuation zero.
    long ashift = a.min_exp(), bshift = b.min_exp();
    auto dense = [](const LaurentPoly& p, long shift) {
        std::vector<Int> c(p.max_exp() - shift + 1);
        for (const auto& [e, v] : p.terms()) c[e - shift] = v;
        return IntPoly(std::move(c));
    };
    IntPoly q;
    if (!divide_exact(dense(a, ashift), dense(b, bshift), &q)) return false;
    quot = q.to_laurent().shifted(ashift - bshift);
    return true;
}

IntPoly mod_cyclotomic(const LaurentPoly& p, long l) {
    IntPoly sigma = cyclotomic(l);
    // v^l == 1 mod sigma_l, so exponents fold into [0, l).
    std::vector<Int> folded(l);
    for (const auto& [e, c] : p.terms()) {
        long r = e % l;
        if (r < 0) r += l;
        folded[r] += c;
    }
    return IntPoly::rem_monic(IntPoly(std::move(folded)), sigma);
}

}  // namespace qchar
