#include "qchar/oracles.hpp"

#include <doctest.h>

#include "qchar/characters.hpp"

using namespace qchar;

namespace {

long box_total(const RootSystem& rs, const Weight& lambda, const RootVector& bound) {
    long total = 0;
    RootVector c = RootVector::zero(bound.rank());
    for (;;) {
        total += freudenthal_multiplicity(rs, lambda, lambda - rs.weight_of(c));
        size_t i = 0;
        while (i < c.rank() && c.coeffs[i] == bound[i]) c.coeffs[i++] = 0;
        if (i == c.rank()) break;
        ++c.coeffs[i];
    }
    return total;
}

}  // namespace

TEST_CASE("invariant inner products of the rank-two systems") {
    InnerProductData a2(RootSystem::named("A2"));
    CHECK(a2.gram() == std::vector<std::vector<long>>({{2, -1}, {-1, 2}}));
    InnerProductData b2(RootSystem::named("B2"));
    CHECK(b2.gram() == std::vector<std::vector<long>>({{4, -2}, {-2, 2}}));
    InnerProductData g2(RootSystem::named("G2"));
    CHECK(g2.gram() == std::vector<std::vector<long>>({{2, -3}, {-3, 6}}));

    // pairing compatibility: <a_i, a_j^vee> * (a_j, a_j) == 2 (a_i, a_j)
    for (const char* code : {"A3", "B3", "C3", "D4", "F4", "G2"}) {
        RootSystem rs = RootSystem::named(code);
        InnerProductData ip(rs);
        for (size_t i = 0; i < rs.rank(); ++i)
            for (size_t j = 0; j < rs.rank(); ++j)
                CHECK(rs.cartan(i, j) * ip.gram()[j][j] == 2 * ip.gram()[i][j]);
    }
}

TEST_CASE("Freudenthal: classical dimensions") {
    RootSystem a2 = RootSystem::named("A2");
    Weight adj({1, 1});
    CHECK(freudenthal_multiplicity(a2, adj, adj) == 1);
    CHECK(freudenthal_multiplicity(a2, adj, Weight({0, 0})) == 2);
    CHECK(freudenthal_multiplicity(a2, adj, Weight({-1, 2})) == 1);
    CHECK(freudenthal_multiplicity(a2, adj, Weight({3, 0})) == 0);
    CHECK(box_total(a2, adj, RootVector({2, 2})) == 8);
    CHECK(box_total(a2, Weight({1, 0}), RootVector({1, 1})) == 3);
    CHECK(box_total(a2, Weight({2, 2}), RootVector({4, 4})) == 27);

    RootSystem b2 = RootSystem::named("B2");
    Weight b2adj({0, 2});  // highest long root
    CHECK(freudenthal_multiplicity(b2, b2adj, Weight({0, 0})) == 2);
    CHECK(box_total(b2, b2adj, RootVector({2, 4})) == 10);
    CHECK(box_total(b2, Weight({1, 0}), RootVector({2, 2})) == 5);
    CHECK(box_total(b2, Weight({0, 1}), RootVector({1, 2})) == 4);  // spin

    RootSystem g2 = RootSystem::named("G2");
    Weight g2adj({0, 1});
    CHECK(freudenthal_multiplicity(g2, g2adj, Weight({0, 0})) == 2);
    CHECK(box_total(g2, g2adj, RootVector({6, 4})) == 14);
    CHECK(box_total(g2, Weight({1, 0}), RootVector({4, 2})) == 7);

    RootSystem a1 = RootSystem::named("A1");
    for (long m = 0; m <= 8; ++m) {
        for (long n = 0; n <= m; ++n)
            CHECK(freudenthal_multiplicity(a1, Weight({m}), Weight({m - 2 * n})) == 1);
        CHECK(freudenthal_multiplicity(a1, Weight({m}), Weight({m + 2})) == 0);
        CHECK(freudenthal_multiplicity(a1, Weight({m}), Weight({-m - 2})) == 0);
    }

    CHECK_THROWS_AS(freudenthal_multiplicity(a1, Weight({-1}), Weight({-1})), NotDominant);
}

TEST_CASE("Freudenthal agrees with pairing-matrix ranks over Q at q = 1") {
    Field q1(FieldSpec::parse("Q@1"));
    for (const char* code : {"A1", "A2", "B2"}) {
        RootSystem rs = RootSystem::named(code);
        std::vector<long> top(rs.rank(), 2);
        std::vector<long> boxv(rs.rank(), 2);
        RootVector box{boxv};
        // all dominant weights with coordinates <= 2
        std::vector<long> l(rs.rank(), 0);
        for (;;) {
            Weight lam{l};
            GramSession session(rs, lam);
            RootVector c = RootVector::zero(rs.rank());
            for (;;) {
                Weight mu = lam - rs.weight_of(c);
                CHECK(weight_multiplicity(q1, session, mu) ==
                      freudenthal_multiplicity(rs, lam, mu));
                size_t i = 0;
                while (i < c.rank() && c.coeffs[i] == box[i]) c.coeffs[i++] = 0;
                if (i == c.rank()) break;
                ++c.coeffs[i];
            }
            size_t i = 0;
            while (i < l.size() && l[i] == top[i]) l[i++] = 0;
            if (i == l.size()) break;
            ++l[i];
        }
    }
}

TEST_CASE("Lucas predictor") {
    CHECK(lucas_predictor(2, 5, 2) == 0);   // 10 is even
    CHECK(lucas_predictor(5, 10, 2) == 0);  // 45 / 10 = ... (10 choose 2) = 45 = 9*5
    CHECK(lucas_predictor(3, 10, 2) == 0);
    CHECK(lucas_predictor(7, 10, 2) == 1);
    CHECK(lucas_predictor(2, 7, 3) == 1);   // 35 odd

    for (long p : {2L, 3L, 5L, 7L}) {
        for (unsigned long m = 0; m <= 64; ++m)
            for (unsigned long n = 0; n <= m; ++n) {
                Int b;
                mpz_bin_uiui(b.get_mpz_t(), m, n);
                CHECK(lucas_predictor(p, m, n) == (b % p != 0 ? 1 : 0));
            }
    }
}

TEST_CASE("Lucas matches rank-one multiplicities in characteristic p") {
    for (long p : {2L, 3L, 5L}) {
        Field k(FieldSpec::parse("F" + std::to_string(p) + "@1"));
        RootSystem a1 = RootSystem::named("A1");
        for (long m = 0; m <= 16; ++m) {
            GramSession session(a1, Weight({m}));
            for (long n = 0; n <= m; ++n)
                CHECK(weight_multiplicity(k, session, Weight({m - 2 * n})) ==
                      lucas_predictor(p, static_cast<unsigned long>(m),
                                      static_cast<unsigned long>(n)));
        }
    }
}
