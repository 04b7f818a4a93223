#include "qchar/characters.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <random>

using namespace qchar;

namespace {

GramMatrix constant_matrix(std::vector<std::vector<long>> vals) {
    GramMatrix m;
    const size_t n = vals.size();
    m.system = "A1";
    m.lambda = Weight({0});
    m.height = RootVector({0});
    m.order.assign(n, Path());
    m.entries.assign(n, std::vector<LaurentPoly>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m.entries[i][j] = LaurentPoly(vals[i][j]);
    return m;
}

long table_dim(const MultiplicityTable& t, const Weight& mu) {
    for (const auto& [w, d] : t.entries)
        if (w == mu) return d;
    return -1;
}

}  // namespace

TEST_CASE("matrix rank over various fields") {
    Field q1(FieldSpec::parse("Q@1"));
    Field f3(FieldSpec::parse("F3@1"));
    CHECK(matrix_rank(q1, constant_matrix({{1, 0}, {0, 1}})) == 2);
    CHECK(matrix_rank(q1, constant_matrix({{0}})) == 0);
    CHECK(matrix_rank(q1, constant_matrix({{2, 1}, {1, 2}})) == 2);
    CHECK(matrix_rank(f3, constant_matrix({{2, 1}, {1, 2}})) == 1);  // det = 3
    CHECK(matrix_rank(f3, constant_matrix({{0, 0}, {0, 0}})) == 0);
    CHECK(matrix_rank(q1, constant_matrix({{1, 2, 3}, {2, 4, 6}, {1, 1, 1}})) == 2);
}

TEST_CASE("rank respects simultaneous row and column permutations") {
    RootSystem a2 = RootSystem::named("A2");
    GramMatrix m = gram_matrix(a2, Weight({2, 2}), RootVector({2, 1}));
    Field k(FieldSpec::parse("Q@zeta3"));
    long base = matrix_rank(k, m);
    std::mt19937_64 rng(4096);
    std::vector<size_t> perm(m.order.size());
    for (int t = 0; t < 10; ++t) {
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        GramMatrix shuffled = m;
        for (size_t i = 0; i < perm.size(); ++i) {
            shuffled.order[i] = m.order[perm[i]];
            for (size_t j = 0; j < perm.size(); ++j)
                shuffled.entries[i][j] = m.entries[perm[i]][perm[j]];
        }
        CHECK(matrix_rank(k, shuffled) == base);
    }
}

TEST_CASE("highest weight space always has dimension one") {
    std::mt19937_64 rng(2718);
    std::uniform_int_distribution<long> c(0, 5);
    for (const char* field : {"Q@1", "F2@1", "Q@zeta4", "F3@zeta4"}) {
        Field k(FieldSpec::parse(field));
        for (const char* code : {"A1", "A2", "G2"}) {
            RootSystem rs = RootSystem::named(code);
            std::vector<long> l(rs.rank());
            for (auto& x : l) x = c(rng);
            Weight lam{l};
            CHECK(weight_multiplicity(k, rs, lam, lam) == 1);
        }
    }
}

TEST_CASE("pinned rank-one multiplicities") {
    RootSystem a1 = RootSystem::named("A1");
    Field q1(FieldSpec::parse("Q@1"));
    Field f2(FieldSpec::parse("F2@1"));
    Field qz3(FieldSpec::parse("Q@zeta3"));

    // generic: the full string of lambda = 2
    CHECK(weight_multiplicity(q1, a1, Weight({2}), Weight({0})) == 1);
    CHECK(weight_multiplicity(q1, a1, Weight({2}), Weight({-2})) == 1);
    // [2] = 0 in F_2: the middle weight space dies
    CHECK(weight_multiplicity(f2, a1, Weight({2}), Weight({0})) == 0);
    // [3] = 0 at a primitive cube root of unity
    CHECK(weight_multiplicity(qz3, a1, Weight({3}), Weight({1})) == 0);
    CHECK(weight_multiplicity(qz3, a1, Weight({3}), Weight({3})) == 1);
    // mu not below lambda
    CHECK(weight_multiplicity(q1, a1, Weight({2}), Weight({1})) == 0);
    CHECK(weight_multiplicity(q1, a1, Weight({2}), Weight({4})) == 0);
}

TEST_CASE("adjoint of A2: zero weight space over Q, F3, and at zeta_3") {
    RootSystem a2 = RootSystem::named("A2");
    Weight adj({1, 1});
    Weight zero({0, 0});
    CHECK(weight_multiplicity(Field(FieldSpec::parse("Q@1")), a2, adj, zero) == 2);
    CHECK(weight_multiplicity(Field(FieldSpec::parse("F3@1")), a2, adj, zero) == 1);
    CHECK(weight_multiplicity(Field(FieldSpec::parse("F2@1")), a2, adj, zero) == 2);
    CHECK(weight_multiplicity(Field(FieldSpec::parse("Q@zeta3")), a2, adj, zero) == 1);
    CHECK(weight_multiplicity(Field(FieldSpec::parse("Q@zeta5")), a2, adj, zero) == 2);
}

TEST_CASE("character table: pinned examples") {
    RootSystem a1 = RootSystem::named("A1");
    MultiplicityTable t =
        character_table(Field(FieldSpec::parse("F2@1")), a1, Weight({2}), RootVector({2}));
    REQUIRE(t.entries.size() == 3);
    CHECK(table_dim(t, Weight({2})) == 1);
    CHECK(table_dim(t, Weight({0})) == 0);
    CHECK(table_dim(t, Weight({-2})) == 1);
    CHECK(std::is_sorted(t.entries.begin(), t.entries.end()));

    RootSystem a2 = RootSystem::named("A2");
    MultiplicityTable adj = character_table(Field(FieldSpec::parse("Q@1")), a2, Weight({1, 1}),
                                            RootVector({2, 2}));
    long total = 0;
    for (const auto& [mu, d] : adj.entries) total += d;
    CHECK(total == 8);  // the adjoint representation
    CHECK(table_dim(adj, Weight({0, 0})) == 2);
    CHECK(table_dim(adj, Weight({-1, 2})) == 1);
    CHECK(table_dim(adj, Weight({-3, 3})) == 0);  // outside the module
    CHECK(table_dim(adj, Weight({-1, -1})) == 1);  // lowest weight
}

TEST_CASE("parallel table equals serial table") {
    RootSystem b2 = RootSystem::named("B2");
    Field k(FieldSpec::parse("Q@zeta4"));
    MultiplicityTable serial = character_table(k, b2, Weight({2, 1}), RootVector({3, 3}), 1);
    MultiplicityTable par = character_table(k, b2, Weight({2, 1}), RootVector({3, 3}), 4);
    CHECK(serial.entries == par.entries);
}

TEST_CASE("table serialization") {
    RootSystem a1 = RootSystem::named("A1");
    MultiplicityTable t =
        character_table(Field(FieldSpec::parse("F2@1")), a1, Weight({2}), RootVector({2}));
    auto doc = nlohmann::json::parse(multiplicity_table_json(t));
    CHECK(doc.at("system") == "A1");
    CHECK(doc.at("field") == "F2@1");
    CHECK(doc.at("lambda") == std::vector<long>({2}));
    CHECK(doc.at("bound") == std::vector<long>({2}));
    REQUIRE(doc.at("mults").size() == 3);
    CHECK(doc.at("mults")[0].at("mu") == std::vector<long>({-2}));
    CHECK(doc.at("mults")[0].at("dim") == 1);

    CHECK(multiplicity_table_csv(t) == "mu_0,dim\n-2,1\n0,0\n2,1\n");
}
