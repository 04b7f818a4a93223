#pragma once

#include <variant>
#include <vector>

#include "qchar/laurent.hpp"

namespace qchar {

struct InvalidSpec : std::runtime_error {
    explicit InvalidSpec(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : std::runtime_error {
    explicit DivisionByZero(const std::string& what) : std::runtime_error(what) {}
};

/// Description of a coefficient field K together with the image q of v.
/// Grammar accepted by parse():
///   Q@1           rationals, q = 1
///   F<p>@1        prime field, q = 1
///   Q@zeta<l>     Q[v]/(sigma_l), q a primitive l-th root of unity
///   F<p>@zeta<l>  F_p[v]/(g) for an irreducible factor g of sigma_l mod p
///   F<p>@zeta<l>[g=c0,c1,...]   as above with g given explicitly
///                               (coefficients low to high)
struct FieldSpec {
    enum class QKind { One, PrimitiveRoot, ExplicitModulus };

    long characteristic = 0;  // 0 or a prime
    QKind q_kind = QKind::One;
    long l = 1;                  // order of q; 1 when q_kind == One
    std::vector<long> modulus;   // only for ExplicitModulus

    static FieldSpec parse(const std::string& text);
    std::string to_string() const;

    bool operator==(const FieldSpec&) const = default;
};

/// Opaque field element: dense residue coefficients, rational in
/// characteristic 0 and reduced integers mod p otherwise. Produced and
/// consumed by a Field; two elements compare equal iff they came from the
/// same field construction and represent the same residue.
class FieldElement {
public:
    FieldElement() = default;
    bool operator==(const FieldElement&) const = default;

private:
    friend class Field;
    explicit FieldElement(std::vector<mpq_class> c) : repr_(std::move(c)) {}
    explicit FieldElement(std::vector<Int> c) : repr_(std::move(c)) {}

    std::variant<std::vector<mpq_class>, std::vector<Int>> repr_;
};

/// A computable field K = k[v]/(m) with k = Q or F_p and monic m dividing
/// v^l - 1, plus the distinguished root-of-unity q = [v]. Immutable and
/// safe to share across threads after construction.
class Field {
public:
    explicit Field(const FieldSpec& spec);

    const FieldSpec& spec() const { return spec_; }
    long characteristic() const { return spec_.characteristic; }
    /// Extension degree over Q resp. F_p.
    long degree() const { return degree_; }
    /// Multiplicative order of q (1 for the q = 1 fields).
    long q_order() const { return order_; }
    /// The chosen monic modulus, as a polynomial string in v.
    std::string modulus_string() const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement q() const;
    FieldElement from_integer(const Int& n) const;

    bool is_zero(const FieldElement& x) const;
    FieldElement add(const FieldElement& x, const FieldElement& y) const;
    FieldElement sub(const FieldElement& x, const FieldElement& y) const;
    FieldElement neg(const FieldElement& x) const;
    FieldElement mul(const FieldElement& x, const FieldElement& y) const;
    /// Multiplicative inverse; throws DivisionByZero on zero input.
    FieldElement inv(const FieldElement& x) const;
    /// q^e for any integer e (negative exponents use q^l == 1).
    FieldElement q_power(long e) const;

    /// Ring homomorphism Z[v,v^-1] -> K sending v to q.
    FieldElement specialize(const LaurentPoly& p) const;

    std::string to_string(const FieldElement& x) const;

private:
    void build_char0();
    void build_charp();

    FieldSpec spec_;
    long degree_ = 1;
    long order_ = 1;
    std::vector<mpq_class> qmod_;  // monic modulus over Q (characteristic 0)
    std::vector<Int> pmod_;        // monic modulus over F_p (characteristic p)
};

}  // namespace qchar
