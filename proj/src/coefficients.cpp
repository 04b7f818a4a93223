#include "qchar/coefficients.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <random>
#include <sstream>

namespace qchar {

namespace {

using QKind = FieldSpec::QKind;

bool is_prime(long n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(mpz_class(n).get_mpz_t(), 40) > 0;
}

void validate_spec(const FieldSpec& spec) {
    auto fail = [&](const std::string& msg) { throw InvalidSpec("field spec " + spec.to_string() + ": " + msg); };
    if (spec.characteristic != 0 && !is_prime(spec.characteristic))
        fail("characteristic must be 0 or a prime");
    if (spec.l < 1) fail("the order of q must be positive");
    if (spec.q_kind == QKind::One && spec.l != 1) fail("q = 1 forces l = 1");
    if (spec.characteristic != 0 && spec.q_kind != QKind::One &&
        spec.l % spec.characteristic == 0)
        fail("the order of q must be coprime to the characteristic");
    if (spec.q_kind == QKind::ExplicitModulus) {
        if (spec.characteristic == 0) fail("an explicit modulus requires a finite field");
        if (spec.modulus.empty()) fail("empty explicit modulus");
    }
}

// ---------------------------------------------------------------------------
// Dense polynomial arithmetic over an abstract base field. Polynomials are
// coefficient vectors (low to high) with a nonzero leading coefficient.

struct QOps {
    using V = mpq_class;
    V norm(V x) const { return x; }
    V add(const V& a, const V& b) const { return a + b; }
    V sub(const V& a, const V& b) const { return a - b; }
    V mul(const V& a, const V& b) const { return a * b; }
    V inv(const V& a) const { return 1 / a; }
    bool is_zero(const V& a) const { return a == 0; }
    V one() const { return V(1); }
};

struct POps {
    Int p;
    using V = Int;
    V norm(Int x) const {
        Int r = x % p;
        if (r < 0) r += p;
        return r;
    }
    V add(const V& a, const V& b) const { return norm(a + b); }
    V sub(const V& a, const V& b) const { return norm(a - b); }
    V mul(const V& a, const V& b) const { return norm(a * b); }
    V inv(const V& a) const {
        Int r;
        if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
            throw std::logic_error("non-invertible residue");
        return r;
    }
    bool is_zero(const V& a) const { return a == 0; }
    V one() const { return V(1); }
};

template <class Ops>
using Poly = std::vector<typename Ops::V>;

template <class Ops>
void trim(const Ops& ops, Poly<Ops>& a) {
    while (!a.empty() && ops.is_zero(a.back())) a.pop_back();
}

template <class V>
long deg(const std::vector<V>& a) {
    return static_cast<long>(a.size()) - 1;
}

template <class Ops>
Poly<Ops> p_sub(const Ops& ops, Poly<Ops> a, const Poly<Ops>& b) {
    if (a.size() < b.size()) a.resize(b.size(), typename Ops::V(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] = ops.sub(a[i], b[i]);
    trim(ops, a);
    return a;
}

template <class Ops>
Poly<Ops> p_mul(const Ops& ops, const Poly<Ops>& a, const Poly<Ops>& b) {
    if (a.empty() || b.empty()) return {};
    Poly<Ops> r(a.size() + b.size() - 1, typename Ops::V(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = ops.add(r[i + j], ops.mul(a[i], b[j]));
    trim(ops, r);
    return r;
}

template <class Ops>
std::pair<Poly<Ops>, Poly<Ops>> p_divmod(const Ops& ops, const Poly<Ops>& a, const Poly<Ops>& b) {
    if (b.empty()) throw std::logic_error("polynomial division by zero");
    if (deg(a) < deg(b)) return {{}, a};
    Poly<Ops> rem = a;
    Poly<Ops> quot(deg(a) - deg(b) + 1, typename Ops::V(0));
    auto lead_inv = ops.inv(b.back());
    for (long k = deg(a) - deg(b); k >= 0; --k) {
        auto c = ops.mul(rem[k + deg(b)], lead_inv);
        if (ops.is_zero(c)) continue;
        quot[k] = c;
        for (long i = 0; i <= deg(b); ++i) rem[k + i] = ops.sub(rem[k + i], ops.mul(c, b[i]));
    }
    trim(ops, rem);
    trim(ops, quot);
    return {std::move(quot), std::move(rem)};
}

template <class Ops>
Poly<Ops> p_rem(const Ops& ops, const Poly<Ops>& a, const Poly<Ops>& b) {
    return p_divmod(ops, a, b).second;
}

template <class Ops>
Poly<Ops> make_monic(const Ops& ops, Poly<Ops> a) {
    if (a.empty()) return a;
    auto s = ops.inv(a.back());
    for (auto& c : a) c = ops.mul(c, s);
    return a;
}

template <class Ops>
Poly<Ops> p_gcd(const Ops& ops, Poly<Ops> a, Poly<Ops> b) {
    while (!b.empty()) {
        Poly<Ops> r = p_rem(ops, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(ops, a);
}

template <class Ops>
Poly<Ops> p_powmod(const Ops& ops, Poly<Ops> base, const Int& e, const Poly<Ops>& m) {
    Poly<Ops> r{ops.one()};
    base = p_rem(ops, base, m);
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return r;
    for (size_t i = bits; i-- > 0;) {
        r = p_rem(ops, p_mul(ops, r, r), m);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = p_rem(ops, p_mul(ops, r, base), m);
    }
    return r;
}

/// Extended Euclid: the inverse of a modulo the irreducible monic m.
template <class Ops>
Poly<Ops> p_invert(const Ops& ops, const Poly<Ops>& a, const Poly<Ops>& m) {
    Poly<Ops> r0 = m, r1 = a, s0 = {}, s1 = {ops.one()};
    while (!r1.empty()) {
        auto [q, r] = p_divmod(ops, r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly<Ops> s2 = p_sub(ops, s0, p_mul(ops, q, s1));
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (deg(r0) != 0) throw std::logic_error("modulus is not irreducible");
    auto scale = ops.inv(r0[0]);
    for (auto& c : s0) c = ops.mul(c, scale);
    return p_rem(ops, s0, m);
}

// ---------------------------------------------------------------------------
// Irreducible factors of sigma_l over F_p (gcd(p, l) == 1). All factors have
// degree d = ord of p mod l; split with Cantor-Zassenhaus equal-degree
// splitting using a fixed-seed generator, so runs are reproducible.

long order_mod(long p, long l) {
    if (l == 1) return 1;
    long d = 1;
    long x = p % l;
    while (x != 1) {
        x = (x * (p % l)) % l;
        ++d;
        if (d > l) throw std::logic_error("order computation failed");
    }
    return d;
}

Poly<POps> sigma_mod_p(const POps& ops, long l) {
    IntPoly sigma = cyclotomic(l);
    Poly<POps> f(sigma.degree() + 1);
    for (long i = 0; i <= sigma.degree(); ++i) f[i] = ops.norm(sigma.coeff(i));
    trim(ops, f);
    return f;
}

void equal_degree_split(const POps& ops, Poly<POps> f, long d, std::mt19937_64& rng,
                        std::vector<Poly<POps>>& out) {
    if (deg(f) == 0) return;
    if (deg(f) == d) {
        out.push_back(std::move(f));
        return;
    }
    const bool even = ops.p == 2;
    Int half;  // (p^d - 1) / 2 for odd p
    if (!even) {
        mpz_pow_ui(half.get_mpz_t(), ops.p.get_mpz_t(), static_cast<unsigned long>(d));
        half = (half - 1) / 2;
    }
    for (;;) {
        Poly<POps> a(deg(f), Int(0));
        for (auto& c : a) c = ops.norm(Int(rng()));
        trim(ops, a);
        if (deg(a) < 1) continue;
        Poly<POps> g = p_gcd(ops, f, a);
        if (deg(g) <= 0 || deg(g) >= deg(f)) {
            Poly<POps> b;
            if (even) {
                // trace map onto F_2: a + a^2 + a^4 + ... (d summands)
                Poly<POps> t = p_rem(ops, a, f);
                b = t;
                for (long i = 1; i < d; ++i) {
                    t = p_rem(ops, p_mul(ops, t, t), f);
                    b = p_sub(ops, b, t);  // == add over F_2
                }
            } else {
                b = p_powmod(ops, a, half, f);
                b = p_sub(ops, b, Poly<POps>{ops.one()});
            }
            g = p_gcd(ops, f, b);
            if (deg(g) <= 0 || deg(g) >= deg(f)) continue;
        }
        auto [quot, rem] = p_divmod(ops, f, g);
        if (!rem.empty()) throw std::logic_error("gcd does not divide");
        equal_degree_split(ops, std::move(g), d, rng, out);
        equal_degree_split(ops, std::move(quot), d, rng, out);
        return;
    }
}

/// Lexicographically smallest (by coefficient sequence, low to high) monic
/// irreducible factor of sigma_l mod p. This canonical choice keeps field
/// construction deterministic.
Poly<POps> canonical_factor(const POps& ops, long p, long l) {
    long d = order_mod(p, l);
    Poly<POps> f = sigma_mod_p(ops, l);
    std::vector<Poly<POps>> factors;
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ (static_cast<uint64_t>(p) << 20) ^
                        static_cast<uint64_t>(l));
    equal_degree_split(ops, f, d, rng, factors);
    return *std::min_element(factors.begin(), factors.end(),
                             [](const Poly<POps>& a, const Poly<POps>& b) {
                                 return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                                                     b.end());
                             });
}

template <class V>
std::string poly_string(const std::vector<V>& coeffs) {
    std::ostringstream out;
    bool first = true;
    for (long i = static_cast<long>(coeffs.size()) - 1; i >= 0; --i) {
        std::ostringstream cs;
        cs << coeffs[i];
        std::string c = cs.str();
        if (c == "0") continue;
        bool negative = c[0] == '-';
        if (negative) c = c.substr(1);
        out << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
        first = false;
        if (c != "1" || i == 0) {
            out << c;
            if (i != 0) out << '*';
        }
        if (i != 0) {
            out << 'v';
            if (i != 1) out << '^' << i;
        }
    }
    if (first) out << '0';
    return out.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldSpec

namespace {

struct Scanner {
    const std::string& s;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw InvalidSpec("field spec \"" + s + "\": " + msg + " at position " +
                          std::to_string(pos));
    }
    bool eat(char c) {
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool eat(const char* lit) {
        size_t n = std::strlen(lit);
        if (s.compare(pos, n, lit) == 0) {
            pos += n;
            return true;
        }
        return false;
    }
    long number(bool allow_sign = false) {
        size_t start = pos;
        if (allow_sign && pos < s.size() && s[pos] == '-') ++pos;
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected a number");
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        try {
            return std::stol(s.substr(start, pos - start));
        } catch (const std::out_of_range&) {
            fail("number out of range");
        }
    }
};

}  // namespace

FieldSpec FieldSpec::parse(const std::string& text) {
    Scanner sc{text};
    FieldSpec spec;
    if (sc.eat('Q')) {
        spec.characteristic = 0;
    } else if (sc.eat('F')) {
        spec.characteristic = sc.number();
    } else {
        sc.fail("expected 'Q' or 'F<p>'");
    }
    if (!sc.eat('@')) sc.fail("expected '@'");
    if (sc.eat("zeta")) {
        spec.q_kind = QKind::PrimitiveRoot;
        spec.l = sc.number();
        if (sc.eat('[')) {
            if (!sc.eat("g=")) sc.fail("expected 'g='");
            spec.q_kind = QKind::ExplicitModulus;
            spec.modulus.push_back(sc.number(true));
            while (sc.eat(',')) spec.modulus.push_back(sc.number(true));
            if (!sc.eat(']')) sc.fail("expected ']' or ','");
        }
    } else if (sc.eat('1')) {
        spec.q_kind = QKind::One;
        spec.l = 1;
    } else {
        sc.fail("expected '1' or 'zeta<l>'");
    }
    if (sc.pos != text.size()) sc.fail("unexpected trailing characters");
    validate_spec(spec);
    return spec;
}

std::string FieldSpec::to_string() const {
    std::ostringstream out;
    if (characteristic == 0)
        out << 'Q';
    else
        out << 'F' << characteristic;
    out << '@';
    if (q_kind == QKind::One)
        out << '1';
    else
        out << "zeta" << l;
    if (q_kind == QKind::ExplicitModulus) {
        out << "[g=";
        for (size_t i = 0; i < modulus.size(); ++i) {
            if (i) out << ',';
            out << modulus[i];
        }
        out << ']';
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Field

Field::Field(const FieldSpec& spec) : spec_(spec) {
    validate_spec(spec_);
    order_ = spec_.q_kind == QKind::One ? 1 : spec_.l;
    if (spec_.characteristic == 0)
        build_char0();
    else
        build_charp();
}

void Field::build_char0() {
    if (spec_.q_kind == QKind::One) {
        qmod_ = {mpq_class(-1), mpq_class(1)};  // v - 1
    } else {
        IntPoly sigma = cyclotomic(spec_.l);
        qmod_.resize(sigma.degree() + 1);
        for (long i = 0; i <= sigma.degree(); ++i) qmod_[i] = mpq_class(sigma.coeff(i));
    }
    degree_ = static_cast<long>(qmod_.size()) - 1;
}

void Field::build_charp() {
    POps ops{Int(spec_.characteristic)};
    switch (spec_.q_kind) {
        case QKind::One:
            pmod_ = {ops.norm(Int(-1)), Int(1)};  // v - 1
            break;
        case QKind::PrimitiveRoot:
            pmod_ = canonical_factor(ops, spec_.characteristic, spec_.l);
            break;
        case QKind::ExplicitModulus: {
            Poly<POps> g(spec_.modulus.size());
            for (size_t i = 0; i < g.size(); ++i) g[i] = ops.norm(Int(spec_.modulus[i]));
            trim(ops, g);
            if (g.empty())
                throw InvalidSpec("field spec " + spec_.to_string() + ": modulus is zero mod p");
            g = make_monic(ops, g);
            long d = order_mod(spec_.characteristic, spec_.l);
            if (deg(g) != d)
                throw InvalidSpec("field spec " + spec_.to_string() + ": modulus degree " +
                                  std::to_string(deg(g)) + " differs from ord(p mod l) = " +
                                  std::to_string(d));
            if (!p_rem(ops, sigma_mod_p(ops, spec_.l), g).empty())
                throw InvalidSpec("field spec " + spec_.to_string() +
                                  ": modulus does not divide the cyclotomic polynomial mod p");
            pmod_ = std::move(g);
            break;
        }
    }
    degree_ = static_cast<long>(pmod_.size()) - 1;
}

std::string Field::modulus_string() const {
    return spec_.characteristic == 0 ? poly_string(qmod_) : poly_string(pmod_);
}

FieldElement Field::zero() const {
    if (spec_.characteristic == 0) return FieldElement(std::vector<mpq_class>(degree_));
    return FieldElement(std::vector<Int>(degree_));
}

FieldElement Field::one() const { return from_integer(1); }

FieldElement Field::from_integer(const Int& n) const {
    if (spec_.characteristic == 0) {
        std::vector<mpq_class> c(degree_);
        c[0] = mpq_class(n);
        return FieldElement(std::move(c));
    }
    POps ops{Int(spec_.characteristic)};
    std::vector<Int> c(degree_);
    c[0] = ops.norm(n);
    return FieldElement(std::move(c));
}

FieldElement Field::q() const { return q_power(1); }

FieldElement Field::q_power(long e) const { return specialize(LaurentPoly::monomial(1, e)); }

namespace {

template <class Ops>
std::vector<typename Ops::V> fixed_width(const Ops& ops, Poly<Ops> a, long width) {
    trim(ops, a);
    a.resize(width, typename Ops::V(0));
    return a;
}

}  // namespace

FieldElement Field::specialize(const LaurentPoly& p) const {
    // v^order == 1 in K, so exponents fold into [0, order); the folded
    // polynomial is then reduced by the modulus.
    auto fold_exp = [&](long e) {
        long r = e % order_;
        return r < 0 ? r + order_ : r;
    };
    if (spec_.characteristic == 0) {
        QOps ops;
        Poly<QOps> folded(order_, mpq_class(0));
        for (const auto& [e, c] : p.terms()) folded[fold_exp(e)] += mpq_class(c);
        trim(ops, folded);
        return FieldElement(fixed_width(ops, p_rem(ops, folded, qmod_), degree_));
    }
    POps ops{Int(spec_.characteristic)};
    Poly<POps> folded(order_, Int(0));
    for (const auto& [e, c] : p.terms()) folded[fold_exp(e)] = ops.add(folded[fold_exp(e)], c);
    trim(ops, folded);
    return FieldElement(fixed_width(ops, p_rem(ops, folded, pmod_), degree_));
}

bool Field::is_zero(const FieldElement& x) const { return x == zero(); }

FieldElement Field::add(const FieldElement& x, const FieldElement& y) const {
    if (spec_.characteristic == 0) {
        QOps ops;
        const auto& a = std::get<std::vector<mpq_class>>(x.repr_);
        const auto& b = std::get<std::vector<mpq_class>>(y.repr_);
        std::vector<mpq_class> r(degree_);
        for (long i = 0; i < degree_; ++i) r[i] = ops.add(a[i], b[i]);
        return FieldElement(std::move(r));
    }
    POps ops{Int(spec_.characteristic)};
    const auto& a = std::get<std::vector<Int>>(x.repr_);
    const auto& b = std::get<std::vector<Int>>(y.repr_);
    std::vector<Int> r(degree_);
    for (long i = 0; i < degree_; ++i) r[i] = ops.add(a[i], b[i]);
    return FieldElement(std::move(r));
}

FieldElement Field::neg(const FieldElement& x) const { return sub(zero(), x); }

FieldElement Field::sub(const FieldElement& x, const FieldElement& y) const {
    if (spec_.characteristic == 0) {
        QOps ops;
        const auto& a = std::get<std::vector<mpq_class>>(x.repr_);
        const auto& b = std::get<std::vector<mpq_class>>(y.repr_);
        std::vector<mpq_class> r(degree_);
        for (long i = 0; i < degree_; ++i) r[i] = ops.sub(a[i], b[i]);
        return FieldElement(std::move(r));
    }
    POps ops{Int(spec_.characteristic)};
    const auto& a = std::get<std::vector<Int>>(x.repr_);
    const auto& b = std::get<std::vector<Int>>(y.repr_);
    std::vector<Int> r(degree_);
    for (long i = 0; i < degree_; ++i) r[i] = ops.sub(a[i], b[i]);
    return FieldElement(std::move(r));
}

FieldElement Field::mul(const FieldElement& x, const FieldElement& y) const {
    if (spec_.characteristic == 0) {
        QOps ops;
        auto a = std::get<std::vector<mpq_class>>(x.repr_);
        auto b = std::get<std::vector<mpq_class>>(y.repr_);
        trim(ops, a);
        trim(ops, b);
        return FieldElement(fixed_width(ops, p_rem(ops, p_mul(ops, a, b), qmod_), degree_));
    }
    POps ops{Int(spec_.characteristic)};
    auto a = std::get<std::vector<Int>>(x.repr_);
    auto b = std::get<std::vector<Int>>(y.repr_);
    trim(ops, a);
    trim(ops, b);
    return FieldElement(fixed_width(ops, p_rem(ops, p_mul(ops, a, b), pmod_), degree_));
}

FieldElement Field::inv(const FieldElement& x) const {
    if (is_zero(x)) throw DivisionByZero("inverting zero in " + spec_.to_string());
    if (spec_.characteristic == 0) {
        QOps ops;
        auto a = std::get<std::vector<mpq_class>>(x.repr_);
        trim(ops, a);
        return FieldElement(fixed_width(ops, p_invert(ops, a, qmod_), degree_));
    }
    POps ops{Int(spec_.characteristic)};
    auto a = std::get<std::vector<Int>>(x.repr_);
    trim(ops, a);
    return FieldElement(fixed_width(ops, p_invert(ops, a, pmod_), degree_));
}

std::string Field::to_string(const FieldElement& x) const {
    if (spec_.characteristic == 0) return poly_string(std::get<std::vector<mpq_class>>(x.repr_));
    return poly_string(std::get<std::vector<Int>>(x.repr_));
}

}  // namespace qchar
