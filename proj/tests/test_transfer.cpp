#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "copieslab/oracles.hpp"
#include "copieslab/transfer.hpp"

using namespace copieslab;

namespace {
const RelationalLanguage kBinary({2});

Structure binary(int size, TupleSet rel) { return Structure(kBinary, size, {std::move(rel)}); }

Structure tournament3() { return binary(3, {{0, 1}, {0, 2}, {1, 2}}); }

// the running example: a loop at 0 plus an edge to 1
Structure looped_edge() { return binary(2, {{0, 0}, {0, 1}}); }
}  // namespace

TEST_CASE("admissible base interpretations") {
    CHECK(int_star_membership(looped_edge()));
    CHECK_FALSE(int_star_membership(binary(2, {{0, 1}})));          // no loop
    CHECK_FALSE(int_star_membership(binary(2, {{0, 0}, {1, 1}})));  // disconnected
    CHECK_THROWS_AS(int_star_membership(Structure(RelationalLanguage({1}), 2, {TupleSet{}})),
                    std::invalid_argument);

    CHECK(enumerate_int_star(1).size() == 1);
    CHECK(enumerate_int_star(2).size() == 9);
    CHECK(enumerate_int_star(3).size() == 378);
    for (const Structure& x : enumerate_int_star(2)) CHECK(int_star_membership(x));
}

TEST_CASE("rigidity certification") {
    const RigidWitness w = certify_rigid(tournament3());
    CHECK(w.certificate == std::vector<InjectionMap>{identity_map(3)});

    CHECK_THROWS_AS(certify_rigid(binary(2, {{0, 0}, {0, 1}})), std::invalid_argument);  // loop
    CHECK_THROWS_AS(certify_rigid(binary(2, {})), std::invalid_argument);  // disconnected
    // The 2-cycle is connected and irreflexive but the swap preserves it.
    CHECK_THROWS_AS(certify_rigid(binary(2, {{0, 1}, {1, 0}})), std::invalid_argument);
}

TEST_CASE("least rigid digraphs in edge-bitmap order") {
    CHECK(find_rigid_digraph(1).theta.relations[0] == TupleSet{});
    CHECK(find_rigid_digraph(2).theta.relations[0] == TupleSet{{0, 1}});
    CHECK(find_rigid_digraph(3).theta.relations[0] == TupleSet{{0, 2}, {1, 0}});
    CHECK(find_rigid_digraph(4).theta.relations[0] == TupleSet{{0, 1}, {0, 3}, {1, 2}});
    for (int m = 1; m <= 4; ++m) {
        const RigidWitness w = find_rigid_digraph(m);
        CHECK(oracles::brute_embeddings(w.theta, w.theta) ==
              std::vector<InjectionMap>{identity_map(m)});
    }
    CHECK_THROWS_AS(find_rigid_digraph(0), std::invalid_argument);
    CHECK_THROWS_AS(find_rigid_digraph(6), UnsupportedSizeError);
}

TEST_CASE("the padding construction on the worked example") {
    const RigidWitness theta = certify_rigid(tournament3());
    const Structure rho = looped_edge();

    const TransferResult same_arity = tau(rho, kBinary, theta);
    CHECK(same_arity.lambda == 2);
    CHECK(same_arity.kappa == 5);
    CHECK(same_arity.i0 == 0);
    CHECK(same_arity.tau.relations[0] ==
          TupleSet{{0, 0}, {0, 1}, {2, 3}, {2, 4}, {3, 4}});

    const TransferResult wide = tau(rho, RelationalLanguage({3}), theta);
    CHECK(wide.tau.relations[0].size() == 25);  // 5 pairs x 5 tail values
    for (int k = 0; k < 5; ++k) CHECK(wide.tau.has_tuple(0, {0, 0, k}));

    const TransferResult mixed = tau(rho, RelationalLanguage({1, 2}), theta);
    CHECK(mixed.i0 == 1);
    CHECK(mixed.tau.relations[0].empty());  // unary symbol stays empty
    CHECK(mixed.tau.relations[1].size() == 5);

    CHECK_THROWS_AS(tau(rho, RelationalLanguage({1, 1}), theta), std::invalid_argument);
    CHECK_THROWS_AS(tau(binary(2, {{0, 1}}), kBinary, theta), std::invalid_argument);
    // The digraph must outgrow the base domain.
    CHECK_THROWS_AS(tau(binary(3, {{0, 0}, {0, 1}, {1, 2}}), kBinary, theta),
                    std::invalid_argument);
}

TEST_CASE("padding without a digraph keeps the base domain") {
    const TransferResult self = tau_self(looped_edge(), RelationalLanguage({3}));
    CHECK(self.kappa == 2);
    CHECK(self.tau.relations[0] == TupleSet{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}});
    CHECK_THROWS_AS(tau_self(binary(2, {{0, 1}}), kBinary), std::invalid_argument);
}

TEST_CASE("the six transfer identities and full preservation") {
    const RigidWitness theta = certify_rigid(tournament3());
    const Structure rho = looped_edge();
    const Structure sigma = binary(2, {{0, 0}, {1, 0}});

    for (const RelationalLanguage& language :
         {RelationalLanguage({2}), RelationalLanguage({3}), RelationalLanguage({1, 2})}) {
        const TransferIdentitiesReport report =
            verify_transfer_identities(rho, sigma, language, theta);
        CHECK(report.all_hold);
        REQUIRE(report.identities.size() == 6);
        const char* names[] = {"embeddings-between", "isomorphisms-between", "copies-between",
                               "self-embeddings",    "automorphisms",        "self-copies"};
        for (std::size_t i = 0; i < 6; ++i) {
            CHECK(report.identities[i].name == names[i]);
            CHECK(report.identities[i].holds);
            CHECK(report.identities[i].transferred_count == report.identities[i].lifted_count);
        }

        const TransferPreservationReport preservation =
            verify_preservation(rho, sigma, language, theta);
        CHECK(preservation.all_match);
        REQUIRE(preservation.checks.size() == 12);
        for (const PreservationCheck& check : preservation.checks) {
            CHECK(check.base_holds == check.transferred_holds);
            const bool direct = check.relation == 0 || check.relation == 3 ||
                                check.relation == 4 || check.relation == 6 ||
                                check.relation == 8 || check.relation == 9 ||
                                check.relation == 10;
            CHECK(check.direct == direct);
        }
    }
    CHECK_THROWS_AS(
        verify_transfer_identities(looped_edge(), binary(3, {{0, 0}, {0, 1}, {1, 2}}),
                                   kBinary, theta),
        std::invalid_argument);
}

TEST_CASE("normalization brings arbitrary binary inputs into range") {
    for (const Structure& x :
         {binary(2, {}), binary(3, {{0, 1}, {1, 0}}), binary(2, {{0, 0}, {1, 1}}),
          looped_edge()}) {
        const NormalizationReport report = verify_normalization(x);
        CHECK(report.passed);
        CHECK(report.copy_sets_equal);
        CHECK(report.lifted_copies_match);
        CHECK(report.poset_isomorphic);
        CHECK(int_star_membership(report.normalized));
    }
}
