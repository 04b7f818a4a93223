#include "qchar/pathspace.hpp"

#include <algorithm>
#include <sstream>

namespace qchar {

RootVector Path::height(size_t rank) const {
    std::vector<long> c(rank, 0);
    for (int s : steps_) {
        if (s < 0 || static_cast<size_t>(s) >= rank)
            throw std::out_of_range("path step outside the root system");
        ++c[s];
    }
    return RootVector(std::move(c));
}

Path Path::reversed() const {
    std::vector<int> s(steps_.rbegin(), steps_.rend());
    return Path(std::move(s));
}

Path Path::without(size_t i) const {
    std::vector<int> s = steps_;
    s.erase(s.begin() + i);
    return Path(std::move(s));
}

Path Path::prepended(int alpha) const {
    std::vector<int> s;
    s.reserve(steps_.size() + 1);
    s.push_back(alpha);
    s.insert(s.end(), steps_.begin(), steps_.end());
    return Path(std::move(s));
}

std::string Path::to_string() const {
    std::ostringstream out;
    out << '[';
    for (size_t i = 0; i < steps_.size(); ++i) {
        if (i) out << ',';
        out << steps_[i];
    }
    out << ']';
    return out.str();
}

namespace {

void enumerate_rec(std::vector<long>& remaining, std::vector<int>& prefix,
                   std::vector<Path>& out) {
    bool done = true;
    for (size_t i = 0; i < remaining.size(); ++i) {
        if (remaining[i] == 0) continue;
        done = false;
        --remaining[i];
        prefix.push_back(static_cast<int>(i));
        enumerate_rec(remaining, prefix, out);
        prefix.pop_back();
        ++remaining[i];
    }
    if (done) out.emplace_back(prefix);
}

}  // namespace

std::vector<Path> enumerate_paths(const RootVector& nu) {
    if (!nu.is_nonnegative()) throw std::invalid_argument("height must be nonnegative");
    std::vector<long> remaining = nu.coeffs;
    std::vector<int> prefix;
    std::vector<Path> out;
    enumerate_rec(remaining, prefix, out);
    return out;
}

LaurentPoly path_factorial(const RootSystem& rs, const Path& p) {
    LaurentPoly f(1);
    size_t i = 0;
    while (i < p.length()) {
        size_t j = i;
        while (j < p.length() && p[j] == p[i]) ++j;
        f *= qfact(static_cast<long>(j - i), rs.sym(p[i]));
        i = j;
    }
    return f;
}

PathVector PathVector::basis(const Path& p) {
    PathVector x;
    x.terms_.emplace(p, LaurentPoly(1));
    return x;
}

PathVector PathVector::divided_basis(const RootSystem& rs, const Path& p) {
    return basis(p).divided_by(path_factorial(rs, p));
}

void PathVector::add_term(const Path& p, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(p, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PathVector& PathVector::operator+=(const PathVector& rhs) {
    if (denom_ == rhs.denom_) {
        for (const auto& [p, c] : rhs.terms_) add_term(p, c);
    } else {
        std::map<Path, LaurentPoly> merged;
        for (const auto& [p, c] : terms_) merged[p] = c * rhs.denom_;
        for (const auto& [p, c] : rhs.terms_) {
            auto [it, fresh] = merged.emplace(p, c * denom_);
            if (!fresh) it->second += c * denom_;
        }
        std::erase_if(merged, [](const auto& kv) { return kv.second.is_zero(); });
        terms_ = std::move(merged);
        denom_ *= rhs.denom_;
    }
    normalize();
    return *this;
}

PathVector PathVector::scaled(const LaurentPoly& c) const {
    PathVector r;
    if (c.is_zero()) return r;
    r.denom_ = denom_;
    for (const auto& [p, x] : terms_) r.terms_.emplace(p, x * c);
    r.normalize();
    return r;
}

PathVector PathVector::divided_by(const LaurentPoly& c) const {
    if (c.is_zero()) throw std::invalid_argument("dividing a path vector by zero");
    PathVector r = *this;
    if (r.is_zero()) return r;
    r.denom_ *= c;
    r.normalize();
    return r;
}

void PathVector::normalize() {
    if (terms_.empty()) {
        denom_ = LaurentPoly(1);
        return;
    }
    if (denom_ == LaurentPoly(1)) return;
    std::map<Path, LaurentPoly> reduced;
    for (const auto& [p, c] : terms_) {
        LaurentPoly q;
        if (!try_exact_div(c, denom_, q)) return;
        reduced.emplace(p, std::move(q));
    }
    terms_ = std::move(reduced);
    denom_ = LaurentPoly(1);
}

bool PathVector::operator==(const PathVector& rhs) const {
    // cross-multiplied comparison; denominators are nonzero by construction
    auto it = terms_.begin();
    auto jt = rhs.terms_.begin();
    while (it != terms_.end() && jt != rhs.terms_.end()) {
        if (it->first != jt->first) return false;
        if (it->second * rhs.denom_ != jt->second * denom_) return false;
        ++it;
        ++jt;
    }
    return it == terms_.end() && jt == rhs.terms_.end();
}

PathVector epsilon_apply(const RootSystem& rs, const Weight& lambda, int alpha,
                         const PathVector& x) {
    PathVector num;
    for (const auto& [p, c] : x.terms()) {
        // value_at[i] = <lambda - delta_{i+1} - ... - delta_last, alpha^vee>,
        // accumulated from the tail of the path
        long m = rs.pairing(lambda, alpha);
        std::vector<long> value_at(p.length());
        for (size_t i = p.length(); i-- > 0;) {
            value_at[i] = m;
            m -= rs.cartan(p[i], alpha);
        }
        for (size_t i = 0; i < p.length(); ++i)
            if (p[i] == alpha)
                num += PathVector::basis(p.without(i))
                           .scaled(qint(value_at[i], rs.sym(alpha)) * c);
    }
    return num.divided_by(x.denominator());
}

PathVector phi_apply(int alpha, long n, const PathVector& x) {
    if (n < 0) throw std::invalid_argument("phi_apply: n must be nonnegative");
    PathVector num;
    for (const auto& [p, c] : x.terms()) {
        Path q = p;
        for (long k = 0; k < n; ++k) q = q.prepended(alpha);
        num += PathVector::basis(q).scaled(c);
    }
    return num.divided_by(x.denominator());
}

PathVector epsilon_divided(const RootSystem& rs, const Weight& lambda, int alpha, long n,
                           const PathVector& x) {
    if (n < 0) throw std::invalid_argument("epsilon_divided: n must be nonnegative");
    PathVector r = x;
    for (long k = 0; k < n; ++k) r = epsilon_apply(rs, lambda, alpha, r);
    return r.divided_by(qfact(n, rs.sym(alpha)));
}

PathVector phi_divided(const RootSystem& rs, int alpha, long n, const PathVector& x) {
    if (n < 0) throw std::invalid_argument("phi_divided: n must be nonnegative");
    return phi_apply(alpha, n, x).divided_by(qfact(n, rs.sym(alpha)));
}

bool divided_coeffs_integral(const RootSystem& rs, const PathVector& x) {
    LaurentPoly q;
    for (const auto& [p, c] : x.terms())
        if (!try_exact_div(c * path_factorial(rs, p), x.denominator(), q)) return false;
    return true;
}

}  // namespace qchar
