#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "copieslab/embeddings.hpp"
#include "copieslab/oracles.hpp"
#include "copieslab/rng.hpp"
#include "copieslab/similarity.hpp"

using namespace copieslab;

namespace {
const RelationalLanguage kBinary({2});
const RelationalLanguage kUnary({1});

Structure binary(int size, TupleSet rel) { return Structure(kBinary, size, {std::move(rel)}); }

Structure random_binary(std::mt19937_64& gen, int size) {
    TupleSet rel;
    for (int a = 0; a < size; ++a)
        for (int b = 0; b < size; ++b)
            if (rng_bool(gen)) rel.push_back(Tuple{a, b});
    return binary(size, std::move(rel));
}
}  // namespace

TEST_CASE("embedding enumeration on small fixed cases") {
    const Structure chain2 = binary(2, {{0, 1}});
    CHECK(enumerate_embeddings(chain2, chain2).maps == std::vector<InjectionMap>{identity_map(2)});

    const Structure bare2 = binary(2, {});
    CHECK(enumerate_embeddings(bare2, bare2).maps.size() == 2);  // both bijections

    // Four points, one unary symbol holding {0,1}: embeddings are the
    // block-preserving bijections, 2! x 2! of them.
    const Structure marked(kUnary, 4, {TupleSet{{0}, {1}}});
    CHECK(enumerate_embeddings(marked, marked).maps.size() == 4);

    CHECK(enumerate_embeddings(binary(3, {}), bare2).maps.empty());  // no room
    CHECK_THROWS_AS(enumerate_embeddings(marked, bare2), std::invalid_argument);
}

TEST_CASE("isomorphisms are the surjective embeddings") {
    const Structure up = binary(2, {{0, 1}});
    const Structure down = binary(2, {{1, 0}});
    const auto isos = enumerate_isos(up, down).maps;
    REQUIRE(isos.size() == 1);
    CHECK(isos[0].assignment == std::vector<int>{1, 0});
    CHECK(isomorphic(up, down));
    CHECK(enumerate_isos(up, binary(3, {{0, 1}})).maps.empty());  // size mismatch
    CHECK(automorphisms(binary(3, {{0, 1}, {1, 2}})).maps == std::vector<InjectionMap>{identity_map(3)});
}

TEST_CASE("search agrees with the unpruned filter on random pairs") {
    std::mt19937_64 gen = make_rng(42, 1);
    for (int t = 0; t < 150; ++t) {
        const int nx = 1 + static_cast<int>(rng_below(gen, 3));
        const int ny = 1 + static_cast<int>(rng_below(gen, 5));
        if (nx > ny) continue;
        const Structure x = random_binary(gen, nx), y = random_binary(gen, ny);
        CHECK(enumerate_embeddings(x, y).maps == oracles::brute_embeddings(x, y));
    }
}

TEST_CASE("equimorphy") {
    const Structure up = binary(2, {{0, 1}});
    CHECK(equimorphic(up, binary(2, {{1, 0}})));
    CHECK_FALSE(equimorphic(up, binary(2, {})));
    // At a fixed finite size, mutual embeddability forces isomorphism.
    const Corpus corpus = generate_corpus(kBinary, 2);
    for (const Structure& x : corpus.interpretations)
        for (const Structure& y : corpus.interpretations)
            if (equimorphic(x, y)) CHECK(isomorphic(x, y));
}

TEST_CASE("copy sets") {
    const Structure loop = binary(1, {{0, 0}});
    const Structure two_loops = binary(2, {{0, 0}, {1, 1}});
    CHECK(copies(loop, two_loops).subsets == std::vector<std::vector<int>>{{0}, {1}});

    const Structure point = binary(1, {});
    const Structure chain2 = binary(2, {{0, 1}});
    CHECK(copies(point, chain2).subsets == std::vector<std::vector<int>>{{0}, {1}});

    // Every interpretation's only self-copy is the full domain.
    for (const Structure& x : generate_corpus(kBinary, 2).interpretations) {
        CHECK(copies(x, x).subsets == std::vector<std::vector<int>>{{0, 1}});
        CHECK(copies_poset(x, x).size() == 1);
    }

    const FinitePoset three = copies_poset(point, binary(3, {{0, 1}, {1, 2}}));
    CHECK(three == antichain(3));
}

TEST_CASE("divisibility quotient is the reversed copy poset") {
    const Structure chain2 = binary(2, {{0, 1}});
    const GreenQuotient green = green_quotient(chain2);
    CHECK(green.maps.maps == std::vector<InjectionMap>{identity_map(2)});
    CHECK(green.classes.blocks == std::vector<std::vector<int>>{{0}});
    CHECK(green.identity_class == 0);

    for (const Structure& x : generate_corpus(kBinary, 2).interpretations) {
        const GreenQuotient q = green_quotient(x);
        CHECK(q.order.size() == 1);  // all self-embeddings invert each other
        CHECK(poset_iso(reversed_poset(q.order), copies_poset(x, x)).has_value());
    }
}

TEST_CASE("copy transport follows an embedding into a host") {
    const Structure loop = binary(1, {{0, 0}});
    const Structure two_loops = binary(2, {{0, 0}, {1, 1}});
    const CopyTransport t = transport_copies(InjectionMap(1, 2, {1}), loop, two_loops);
    CHECK(t.host_copy == std::vector<int>{1});
    REQUIRE(t.pairs.size() == 1);
    CHECK(t.pairs[0].first == std::vector<int>{0});
    CHECK(t.pairs[0].second == std::vector<int>{1});
    CHECK_THROWS_AS(transport_copies(InjectionMap(2, 2, {0, 1}), binary(2, {{0, 1}}), binary(2, {})),
                    std::invalid_argument);  // not an embedding
}

TEST_CASE("embeddings of unions decompose into per-part embeddings") {
    const Structure loop = binary(1, {{0, 0}});
    const std::vector<Structure> parts{loop, loop};

    const InjectionMap swap(2, 2, {1, 0});
    const EmbeddingDecomposition d = decompose_embedding(swap, parts, parts);
    CHECK(d.block_map == std::vector<int>{1, 0});
    REQUIRE(d.component_maps.size() == 2);
    CHECK(d.component_maps[0].assignment == std::vector<int>{0});

    const Structure edge = binary(2, {{0, 1}});
    const EmbeddingDecomposition single = decompose_embedding(identity_map(2), {edge}, {edge});
    CHECK(single.block_map == std::vector<int>{0});
    CHECK(single.component_maps[0].assignment == identity_map(2).assignment);

    CHECK_THROWS_AS(decompose_embedding(identity_map(2), {binary(2, {{0, 1}})},
                                        {binary(2, {{1, 0}})}),
                    std::invalid_argument);  // the map is not an embedding of the unions

    // Direct enumeration equals assembly from block maps on a fixed instance.
    const Structure chain2 = binary(2, {{0, 1}});
    const std::vector<Structure> xs{loop, chain2};
    const std::vector<Structure> ys{loop, chain2, loop};
    auto direct = enumerate_embeddings(disjoint_union(xs).structure,
                                       disjoint_union(ys).structure).maps;
    std::sort(direct.begin(), direct.end());
    CHECK(direct == oracles::assembled_union_embeddings(xs, ys));
}
