#include "qchar/laurent.hpp"

#include <doctest.h>

#include <random>

using namespace qchar;

namespace {

LaurentPoly v_pow(long e) { return LaurentPoly::monomial(1, e); }

LaurentPoly random_laurent(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 6);
    std::uniform_int_distribution<long> exp(-8, 8);
    std::uniform_int_distribution<long> coeff(-9, 9);
    LaurentPoly p;
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) p += LaurentPoly::monomial(coeff(rng), exp(rng));
    return p;
}

// Ordinary binomial coefficient extended to negative upper index.
Int int_binom(long n, long r) {
    Int num = 1;
    for (long k = 0; k < r; ++k) num *= Int(n - k);
    Int den;
    mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(r));
    return num / den;
}

Int coeff_sum(const LaurentPoly& p) {
    Int s = 0;
    for (const auto& [e, c] : p.terms()) s += c;
    return s;
}

long totient(long n) {
    long t = 0;
    for (long k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) ++t;
    return t;
}

}  // namespace

TEST_CASE("quantum integers: pinned values") {
    CHECK(qint(0, 1).is_zero());
    CHECK(qint(1, 1) == LaurentPoly(1));
    CHECK(qint(2, 1) == v_pow(1) + v_pow(-1));
    CHECK(qint(3, 1) == v_pow(2) + LaurentPoly(1) + v_pow(-2));
    CHECK(qint(-2, 1) == -(v_pow(1) + v_pow(-1)));
    CHECK(qint(2, 3) == v_pow(3) + v_pow(-3));
    CHECK(qint(3, 2) == v_pow(4) + LaurentPoly(1) + v_pow(-4));
}

TEST_CASE("quantum integers: negation symmetry and specialization at v=1") {
    for (long d = 1; d <= 3; ++d)
        for (long n = -12; n <= 12; ++n) {
            CHECK(qint(-n, d) == -qint(n, d));
            CHECK(coeff_sum(qint(n, d)) == n);
        }
}

TEST_CASE("quantum factorial: pinned values") {
    CHECK(qfact(0, 1) == LaurentPoly(1));
    CHECK(qfact(1, 1) == LaurentPoly(1));
    CHECK(qfact(2, 1) == qint(2, 1));
    CHECK(qfact(3, 1) == v_pow(3) + 2 * v_pow(1) + 2 * v_pow(-1) + v_pow(-3));
    CHECK(qfact(4, 2) == qint(2, 2) * qint(3, 2) * qint(4, 2));
}

TEST_CASE("Gaussian binomial: pinned values") {
    CHECK(qbinom(4, 2, 1) == v_pow(4) + v_pow(2) + LaurentPoly(2) + v_pow(-2) + v_pow(-4));
    CHECK(qbinom(-1, 2, 1) == LaurentPoly(1));
    CHECK(qbinom(5, 0, 2) == LaurentPoly(1));
    CHECK(qbinom(3, 3, 1) == LaurentPoly(1));
    CHECK(qbinom(2, 3, 1).is_zero());
    CHECK(qbinom(1, 1, 3) == LaurentPoly(1));
    CHECK(qbinom(-3, 1, 1) == -qint(3, 1));
}

TEST_CASE("Gaussian binomial: defining ratio and v=1 specialization") {
    for (long d = 1; d <= 3; ++d)
        for (long n = -10; n <= 10; ++n)
            for (long r = 0; r <= 6; ++r) {
                LaurentPoly num(1);
                for (long k = 0; k < r; ++k) num *= qint(n - k, d);
                LaurentPoly b = qbinom(n, r, d);
                CHECK(b * qfact(r, d) == num);
                CHECK(coeff_sum(b) == int_binom(n, r));
            }
}

TEST_CASE("Gaussian binomial: Pascal recurrence") {
    // [n r] = v^(d*r) [n-1 r] + v^(-d(n-r)) [n-1 r-1]
    for (long d = 1; d <= 2; ++d)
        for (long n = 1; n <= 9; ++n)
            for (long r = 1; r <= n; ++r)
                CHECK(qbinom(n, r, d) == qbinom(n - 1, r, d).shifted(d * r) +
                                             qbinom(n - 1, r - 1, d).shifted(-d * (n - r)));
}

TEST_CASE("ring axioms on random samples") {
    std::mt19937_64 rng(20240901);
    for (int i = 0; i < 400; ++i) {
        LaurentPoly a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a * LaurentPoly(1) == a);
    }
}

TEST_CASE("exact division: round trip and failures") {
    std::mt19937_64 rng(7151623);
    for (int i = 0; i < 300; ++i) {
        LaurentPoly a = random_laurent(rng), b = random_laurent(rng);
        if (b.is_zero()) continue;
        CHECK(exact_div(a * b, b) == a);
    }
    CHECK_THROWS_AS(exact_div(qint(2, 1) + 1, qint(2, 1)), NonExactDivision);
    CHECK_THROWS_AS(exact_div(LaurentPoly(3), LaurentPoly(2)), NonExactDivision);
    CHECK_THROWS_AS(exact_div(LaurentPoly(1), LaurentPoly(0)), std::invalid_argument);
    LaurentPoly q;
    CHECK_FALSE(try_exact_div(v_pow(1) + 1, LaurentPoly(2), q));
    CHECK(try_exact_div(v_pow(2) - v_pow(-2), qint(2, 1), q));
    CHECK(q == v_pow(1) - v_pow(-1));
}

TEST_CASE("exact division: unit and shift handling") {
    LaurentPoly q;
    REQUIRE(try_exact_div(qint(3, 1), v_pow(-2), q));
    CHECK(q == v_pow(4) + v_pow(2) + LaurentPoly(1));
    REQUIRE(try_exact_div(-qint(2, 2), LaurentPoly(-1), q));
    CHECK(q == qint(2, 2));
}

TEST_CASE("cyclotomic polynomials: pinned values") {
    CHECK(cyclotomic(1) == IntPoly({-1, 1}));
    CHECK(cyclotomic(2) == IntPoly({1, 1}));
    CHECK(cyclotomic(3) == IntPoly({1, 1, 1}));
    CHECK(cyclotomic(4) == IntPoly({1, 0, 1}));
    CHECK(cyclotomic(6) == IntPoly({1, -1, 1}));
    CHECK(cyclotomic(12) == IntPoly({1, 0, -1, 0, 1}));
}

TEST_CASE("cyclotomic polynomials: product over divisors, degree, monic") {
    for (long n = 1; n <= 60; ++n) {
        IntPoly prod(std::vector<Int>{1});
        for (long d = 1; d <= n; ++d)
            if (n % d == 0) prod = prod * cyclotomic(d);
        std::vector<Int> c(n + 1);
        c[0] = -1;
        c[n] = 1;
        CHECK(prod == IntPoly(std::move(c)));
        CHECK(cyclotomic(n).degree() == totient(n));
        CHECK(cyclotomic(n).leading() == 1);
    }
}

TEST_CASE("mod_cyclotomic: pinned values") {
    CHECK(mod_cyclotomic(v_pow(3), 3) == IntPoly({1}));
    CHECK(mod_cyclotomic(qint(4, 1), 4).is_zero());
    CHECK(mod_cyclotomic(v_pow(-1), 5) == IntPoly({-1, -1, -1, -1}));
    CHECK(mod_cyclotomic(LaurentPoly(0), 7).is_zero());
    // v_alpha^l == 1 mod sigma_l only on the folded exponents: [2]_1 mod sigma_2
    CHECK(mod_cyclotomic(qint(2, 1), 2) == IntPoly({-2}));
    CHECK(mod_cyclotomic(qint(3, 1) - qint(1, 1), 2) == IntPoly({2}));
}

TEST_CASE("mod_cyclotomic: multiplicativity and divisibility detection") {
    std::mt19937_64 rng(424242);
    for (long l : {1L, 2L, 3L, 4L, 5L, 6L, 12L}) {
        for (int i = 0; i < 60; ++i) {
            LaurentPoly p = random_laurent(rng), q = random_laurent(rng);
            IntPoly lhs = mod_cyclotomic(p * q, l);
            IntPoly rhs =
                mod_cyclotomic(mod_cyclotomic(p, l).to_laurent() * mod_cyclotomic(q, l).to_laurent(), l);
            CHECK(lhs == rhs);
            CHECK(mod_cyclotomic(p * cyclotomic(l).to_laurent().shifted(-1), l).is_zero());
        }
    }
}

TEST_CASE("quantum Pascal-type identity for products") {
    // [a][b over c] = [a-c][b-1 over c] + [a+b-c][b-1 over c-1]
    for (long d = 1; d <= 2; ++d)
        for (long a = -8; a <= 8; a += 2)
            for (long b = -8; b <= 8; ++b)
                for (long c = 1; c <= 4; ++c)
                    CHECK(qint(a, d) * qbinom(b, c, d) ==
                          qint(a - c, d) * qbinom(b - 1, c, d) +
                              qint(a + b - c, d) * qbinom(b - 1, c - 1, d));
}

TEST_CASE("rendering") {
    CHECK(LaurentPoly(0).to_string() == "0");
    CHECK(LaurentPoly(-7).to_string() == "-7");
    CHECK(qint(3, 1).to_string() == "v^2 + 1 + v^-2");
    CHECK(qint(-2, 1).to_string() == "-v - v^-1");
    LaurentPoly p = 2 * v_pow(3) - LaurentPoly(5) + v_pow(-1);
    CHECK(p.to_string() == "2*v^3 - 5 + v^-1");
    CHECK(cyclotomic(6).to_string() == "v^2 - v + 1");
}
