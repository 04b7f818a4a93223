#include "qchar/rootsystem.hpp"

#include <doctest.h>

#include <map>
#include <random>

using namespace qchar;

TEST_CASE("symmetrizers of the built-in systems") {
    auto d_of = [](const std::string& code) {
        RootSystem rs = RootSystem::named(code);
        std::vector<long> d(rs.rank());
        for (size_t i = 0; i < rs.rank(); ++i) d[i] = rs.sym(i);
        return d;
    };
    CHECK(d_of("A1") == std::vector<long>{1});
    CHECK(d_of("A2") == std::vector<long>{1, 1});
    CHECK(d_of("A4") == std::vector<long>{1, 1, 1, 1});
    CHECK(d_of("B2") == std::vector<long>{1, 2});
    CHECK(d_of("B3") == std::vector<long>{1, 1, 2});
    CHECK(d_of("C3") == std::vector<long>{2, 2, 1});
    CHECK(d_of("D4") == std::vector<long>{1, 1, 1, 1});
    CHECK(d_of("F4") == std::vector<long>{1, 1, 2, 2});
    CHECK(d_of("G2") == std::vector<long>{3, 1});
}

TEST_CASE("symmetrizer identity d[i]a[i][j] == d[j]a[j][i]") {
    for (const char* code : {"A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "F4", "G2"}) {
        RootSystem rs = RootSystem::named(code);
        for (size_t i = 0; i < rs.rank(); ++i)
            for (size_t j = 0; j < rs.rank(); ++j)
                CHECK(rs.sym(i) * rs.cartan(i, j) == rs.sym(j) * rs.cartan(j, i));
    }
}

TEST_CASE("rejected inputs") {
    CHECK_THROWS_AS(RootSystem::named("E8"), std::invalid_argument);
    // affine A1: symmetrizable but det == 0
    CHECK_THROWS_AS(RootSystem::from_cartan({{2, -2}, {-2, 2}}), NotFiniteType);
    // indefinite
    CHECK_THROWS_AS(RootSystem::from_cartan({{2, -3}, {-2, 2}}), NotFiniteType);
    // asymmetric zero pattern
    CHECK_THROWS_AS(RootSystem::from_cartan({{2, 0}, {-1, 2}}), NotSymmetrizable);
    // positive off-diagonal entry
    CHECK_THROWS_AS(RootSystem::from_cartan({{2, 1}, {1, 2}}), NotFiniteType);
    CHECK_THROWS_AS(RootSystem::from_cartan({{3}}), NotFiniteType);
    CHECK_THROWS_AS(RootSystem::from_cartan({{2, -1}}), std::invalid_argument);
}

TEST_CASE("pairings and simple roots in weight coordinates") {
    RootSystem a2 = RootSystem::named("A2");
    CHECK(a2.simple_root(0) == Weight({2, -1}));
    CHECK(a2.simple_root(1) == Weight({-1, 2}));
    Weight lam({3, 5});
    CHECK(a2.pairing(lam, 0) == 3);
    CHECK(a2.pairing(lam, 1) == 5);

    RootSystem b2 = RootSystem::named("B2");
    CHECK(b2.simple_root(0) == Weight({2, -2}));
    CHECK(b2.simple_root(1) == Weight({-1, 2}));
    RootVector theta({1, 1});
    CHECK(b2.pairing(theta, 0) == 1);  // <alpha_0 + alpha_1, alpha_0^vee>
    CHECK(b2.pairing(theta, 1) == 0);
    CHECK(b2.weight_of(theta) == Weight({1, 0}));
}

TEST_CASE("root decomposition") {
    RootSystem a2 = RootSystem::named("A2");
    SUBCASE("pinned examples") {
        auto d = a2.root_decompose(Weight({1, 1}), Weight({0, 0}));
        REQUIRE(d.has_value());
        CHECK(*d == RootVector({1, 1}));  // alpha_0 + alpha_1 has weight (1,1)
        CHECK(a2.root_decompose(Weight({1, 1}), Weight({-1, -1})) == RootVector({2, 2}));
        CHECK(a2.root_decompose(Weight({1, 1}), Weight({1, 1})) == RootVector({0, 0}));
        CHECK_FALSE(a2.root_decompose(Weight({1, 0}), Weight({0, 0})).has_value());
        CHECK_FALSE(a2.root_decompose(Weight({1, 1}), Weight({2, 2})).has_value());
    }
    SUBCASE("round trip over random root-lattice elements") {
        std::mt19937_64 rng(99);
        std::uniform_int_distribution<long> coeff(0, 6), lamc(-5, 5);
        for (const char* code : {"A2", "B2", "G2", "D4"}) {
            RootSystem rs = RootSystem::named(code);
            for (int t = 0; t < 100; ++t) {
                std::vector<long> c(rs.rank()), l(rs.rank());
                for (auto& x : c) x = coeff(rng);
                for (auto& x : l) x = lamc(rng);
                RootVector nu{c};
                Weight lambda{l};
                Weight mu = lambda - rs.weight_of(nu);
                auto back = rs.root_decompose(lambda, mu);
                REQUIRE(back.has_value());
                CHECK(*back == nu);
                CHECK(rs.leq(mu, lambda));
            }
        }
    }
}

TEST_CASE("positive root counts") {
    const std::map<std::string, size_t> counts = {
        {"A1", 1}, {"A2", 3},  {"A3", 6},  {"A4", 10}, {"B2", 4},
        {"B3", 9}, {"C3", 9},  {"D4", 12}, {"F4", 24}, {"G2", 6},
    };
    for (const auto& [code, n] : counts) {
        RootSystem rs = RootSystem::named(code);
        CHECK(rs.positive_roots().size() == n);
        // each positive root is a nonnegative nonzero combination
        for (const auto& beta : rs.positive_roots()) {
            CHECK(beta.is_nonnegative());
            CHECK_FALSE(beta.is_zero());
        }
    }
}

TEST_CASE("G2 positive roots explicitly") {
    // alpha_0 is the short root here (sym(0) == 3 in the normalization that
    // gives short roots the larger symmetrizer entry).
    RootSystem g2 = RootSystem::named("G2");
    std::vector<RootVector> expect = {
        RootVector({0, 1}), RootVector({1, 0}), RootVector({1, 1}),
        RootVector({2, 1}), RootVector({3, 1}), RootVector({3, 2}),
    };
    CHECK(g2.positive_roots() == expect);
}

TEST_CASE("JSON loading") {
    RootSystem rs = RootSystem::from_cartan_json(R"({"cartan": [[2,-2],[-1,2]]})");
    CHECK(rs.rank() == 2);
    CHECK(rs.sym(0) == 1);
    CHECK(rs.sym(1) == 2);
    CHECK(rs.label() == "custom");
    CHECK_THROWS(RootSystem::from_cartan_json(R"({"matrix": [[2]]})"));
    CHECK_THROWS(RootSystem::from_cartan_json("not json"));
}

TEST_CASE("weight arithmetic and rendering") {
    Weight a({1, -2}), b({0, 3});
    CHECK((a + b) == Weight({1, 1}));
    CHECK((a - b) == Weight({1, -5}));
    CHECK((2 * a) == Weight({2, -4}));
    CHECK(a.to_string() == "(1,-2)");
    CHECK_FALSE(a.is_dominant());
    CHECK(Weight({0, 0}).is_dominant());
    RootVector r({1, 2});
    CHECK(r.within(RootVector({2, 2})));
    CHECK_FALSE(r.within(RootVector({2, 1})));
    CHECK(r.total() == 3);
    CHECK(r.to_string() == "(1,2)");
}
