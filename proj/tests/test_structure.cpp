#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "copieslab/structure.hpp"

using namespace copieslab;

namespace {
const RelationalLanguage kBinary({2});

Structure binary(int size, TupleSet rel) { return Structure(kBinary, size, {std::move(rel)}); }
}  // namespace

TEST_CASE("language validation") {
    CHECK_THROWS_AS(RelationalLanguage({}), std::invalid_argument);
    CHECK_THROWS_AS(RelationalLanguage({0}), std::invalid_argument);
    CHECK_THROWS_AS(RelationalLanguage({2, -1}), std::invalid_argument);
    const RelationalLanguage mixed({1, 2});
    CHECK(mixed.symbol_count() == 2);
    CHECK(mixed.arity(1) == 2);
    CHECK_FALSE(mixed.all_unary());
    CHECK(RelationalLanguage({1, 1}).all_unary());
}

TEST_CASE("structure normalizes and validates its tuples") {
    const Structure x = binary(2, {{1, 0}, {0, 0}, {1, 0}});
    CHECK(x.relations[0] == TupleSet{{0, 0}, {1, 0}});  // sorted, deduplicated
    CHECK(x.has_tuple(0, {1, 0}));
    CHECK_FALSE(x.has_tuple(0, {0, 1}));
    CHECK(x.tuple_count() == 2);

    CHECK_THROWS_AS(binary(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(binary(2, {{0}}), std::invalid_argument);       // wrong arity
    CHECK_THROWS_AS(binary(2, {{0, 2}}), std::invalid_argument);    // out of domain
    CHECK_THROWS_AS(binary(2, {{-1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Structure(kBinary, 2, {}), std::invalid_argument);  // missing relation
}

TEST_CASE("injections validate and compose") {
    CHECK_THROWS_AS(InjectionMap(2, 3, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(InjectionMap(2, 3, {0, 3}), std::invalid_argument);
    CHECK_THROWS_AS(InjectionMap(2, 3, {0}), std::invalid_argument);

    const InjectionMap f(2, 3, {2, 0});
    CHECK(f(0) == 2);
    CHECK(f.image() == std::vector<int>{0, 2});

    const InjectionMap g(3, 4, {1, 3, 0});
    const InjectionMap gf = compose(g, f);
    CHECK(gf.assignment == std::vector<int>{0, 1});
    CHECK_THROWS_AS(compose(f, g), std::invalid_argument);  // sizes do not chain

    CHECK(identity_map(3).assignment == std::vector<int>{0, 1, 2});
}

TEST_CASE("right factors solve f o h = g when the images allow it") {
    const InjectionMap f(2, 4, {0, 2});
    const InjectionMap g(2, 4, {2, 0});
    InjectionMap h = identity_map(0);
    REQUIRE(solve_right_factor(f, g, h));
    CHECK(h.assignment == std::vector<int>{1, 0});
    CHECK(compose(f, h).assignment == g.assignment);

    const InjectionMap miss(2, 4, {2, 3});  // 3 is outside the image of f
    CHECK_FALSE(solve_right_factor(f, miss, h));
}

TEST_CASE("induced substructures keep original labels") {
    const Structure y = binary(3, {{0, 1}, {1, 2}, {2, 2}});
    const SubstructureResult sub = substructure(y, {1, 2});
    CHECK(sub.original_labels == std::vector<int>{1, 2});
    CHECK(sub.structure.size == 2);
    CHECK(sub.structure.relations[0] == TupleSet{{0, 1}, {1, 1}});
    CHECK_THROWS_AS(substructure(y, {}), std::invalid_argument);
}

TEST_CASE("embedding check is biconditional") {
    const Structure chain2 = binary(2, {{0, 1}});
    const Structure chain3 = binary(3, {{0, 1}, {1, 2}});
    const Structure full2 = binary(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});

    CHECK(is_embedding(InjectionMap(2, 3, {0, 1}), chain2, chain3));
    CHECK_FALSE(is_embedding(InjectionMap(2, 3, {1, 0}), chain2, chain3));  // reverses the edge
    CHECK_FALSE(is_embedding(InjectionMap(2, 3, {0, 2}), chain2, chain3));  // image lacks the edge
    // Preserving is not enough: the image of a non-edge must stay a non-edge.
    CHECK_FALSE(is_embedding(InjectionMap(2, 2, {0, 1}), chain2, full2));
}

TEST_CASE("binary helpers") {
    const Structure x = binary(2, {{0, 1}});
    CHECK(complement(x).relations[0] == TupleSet{{0, 0}, {1, 0}, {1, 1}});
    CHECK(reflexify(x).relations[0] == TupleSet{{0, 0}, {0, 1}, {1, 1}});
    CHECK(irreflexify(reflexify(x)).relations[0] == TupleSet{{0, 1}});
    CHECK_FALSE(has_loop(x));
    CHECK(has_loop(reflexify(x)));
    const Structure unary(RelationalLanguage({1}), 2, {TupleSet{{0}}});
    CHECK_THROWS_AS(complement(unary), std::invalid_argument);
}

TEST_CASE("components and connectivity") {
    const Structure two_islands = binary(4, {{0, 1}, {2, 3}});
    const Partition comps = components(two_islands);
    CHECK(comps.blocks == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
    CHECK(comps.block_of(3) == 1);
    CHECK_FALSE(is_connected(two_islands));
    CHECK(is_connected(binary(1, {})));
    CHECK(is_connected(binary(3, {{0, 1}, {1, 2}})));
}

TEST_CASE("disjoint unions shift tuples and reject bad parts") {
    const Structure loop = binary(1, {{0, 0}});
    const Structure chain2 = binary(2, {{0, 1}});
    const DisjointUnionResult u = disjoint_union({loop, chain2});
    CHECK(u.structure.size == 3);
    CHECK(u.structure.relations[0] == TupleSet{{0, 0}, {1, 2}});
    CHECK(u.blocks.blocks == std::vector<std::vector<int>>{{0}, {1, 2}});

    CHECK_THROWS_AS(disjoint_union({}), std::invalid_argument);
    CHECK_THROWS_AS(disjoint_union({binary(2, {})}), std::invalid_argument);  // disconnected part
}

TEST_CASE("unary classes group points by signature") {
    const RelationalLanguage two_unary({1, 1});
    const Structure x(two_unary, 4, {TupleSet{{0}, {1}}, TupleSet{{1}, {2}}});
    // signatures: 0 -> {first}, 1 -> {both}, 2 -> {second}, 3 -> {}
    const Partition classes = unary_classes(x);
    CHECK(classes.blocks.size() == 4);
    for (const auto& block : classes.blocks) CHECK(block.size() == 1);
    const Structure y(two_unary, 3, {TupleSet{{0}, {1}}, TupleSet{}});
    CHECK(unary_classes(y).blocks == std::vector<std::vector<int>>{{0, 1}, {2}});
}

TEST_CASE("normalization reaches a connected loop-bearing relation") {
    for (const Structure& x : {binary(3, {}), binary(4, {{0, 1}, {2, 3}}),
                               binary(2, {{0, 0}, {1, 1}}), binary(3, {{0, 1}, {1, 2}, {0, 0}})}) {
        const Structure n = normalize_to_int_star(x);
        CHECK(n.size == x.size);
        CHECK(is_connected(n));
        CHECK(has_loop(n));
    }
}

TEST_CASE("canonical relations are relabeling invariants") {
    const Structure x = binary(3, {{0, 1}, {1, 2}, {0, 0}});
    // Relabel by the cycle 0->1->2->0.
    const Structure y = binary(3, {{1, 2}, {2, 0}, {1, 1}});
    CHECK(canonical_relations(x) == canonical_relations(y));
    CHECK(canonical_relations(x) != canonical_relations(binary(3, {{0, 1}, {1, 2}})));
    CHECK_FALSE(describe(x).empty());
}
