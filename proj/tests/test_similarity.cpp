#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <stdexcept>
#include <string>

#include "copieslab/similarity.hpp"

using namespace copieslab;

namespace {
const RelationalLanguage kBinary({2});
const RelationalLanguage kUnary({1});
}  // namespace

TEST_CASE("the implication diagram is the fixed 15-edge picture") {
    const auto& edges = hierarchy_edges();
    REQUIRE(edges.size() == 15);
    const char expected[][4] = {
        // label, lower, upper
        {'a', 0, 1}, {'b', 1, 2}, {'c', 1, 3}, {'d', 2, 4}, {'e', 2, 5},
        {'f', 3, 5}, {'g', 4, 6}, {'h', 5, 6}, {'i', 5, 7}, {'j', 6, 8},
        {'k', 7, 8}, {'l', 7, 9}, {'m', 8, 10}, {'n', 9, 10}, {'o', 10, 11},
    };
    for (std::size_t i = 0; i < edges.size(); ++i) {
        CHECK(edges[i].label == expected[i][0]);
        CHECK(edges[i].lower == expected[i][1]);
        CHECK(edges[i].upper == expected[i][2]);
    }
    CHECK(hierarchy_diagram().node_count == kSimilarityCount);

    const auto& pairs = incomparable_pairs();
    REQUIRE(pairs.size() == 8);
    const int expected_pairs[][3] = {{2, 3, 1}, {3, 4, 1}, {4, 5, 2}, {4, 7, 2},
                                     {4, 9, 2}, {6, 7, 5}, {6, 9, 5}, {8, 9, 7}};
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        CHECK(pairs[i].left == expected_pairs[i][0]);
        CHECK(pairs[i].right == expected_pairs[i][1]);
        CHECK(pairs[i].meet == expected_pairs[i][2]);
    }
}

TEST_CASE("corpus enumeration and the bit budget") {
    CHECK(interpretation_bits(kBinary, 3) == 9);
    CHECK(interpretation_bits(RelationalLanguage({1, 2}), 2) == 6);
    CHECK(corpus_bit_budget() == 20);
    CHECK_THROWS_WITH_AS(generate_corpus(kBinary, 5), doctest::Contains("budget"),
                         std::invalid_argument);
    CHECK_THROWS_AS(generate_corpus(kBinary, 0), std::invalid_argument);

    CHECK(generate_corpus(kUnary, 2).interpretations.size() == 4);
    CHECK(generate_corpus(kBinary, 2).interpretations.size() == 16);
    CHECK(generate_corpus(kBinary, 3).interpretations.size() == 512);

    const Corpus orbits = generate_corpus(kUnary, 2, true);
    CHECK(orbits.interpretations.size() == 3);
    CHECK(orbits.multiplicities == std::vector<long long>{1, 2, 1});
    CHECK(generate_corpus(kBinary, 2, true).interpretations.size() == 10);

    // Interpretation i of a full corpus is the structure with bitmap i.
    const Corpus full = generate_corpus(kBinary, 2);
    for (std::size_t i = 0; i < full.interpretations.size(); ++i) {
        CHECK(interpretation_mask(full.interpretations[i]) == i);
        CHECK(full.interpretations[i] ==
              interpretation_from_mask(kBinary, 2, static_cast<std::uint64_t>(i)));
    }
    CHECK_THROWS_AS(interpretation_from_mask(kBinary, 2, 16), std::invalid_argument);
}

TEST_CASE("pair classification on fixed pairs") {
    const Structure empty2 = interpretation_from_mask(kBinary, 2, 0);
    const Structure full2 = interpretation_from_mask(kBinary, 2, 15);

    const SimilarityVector self = classify_pair(empty2, empty2);
    for (int k = 0; k < kSimilarityCount; ++k) CHECK(self.holds[static_cast<std::size_t>(k)]);

    // All-empty vs all-full: the copy-poset relations all hold (both have a
    // one-point poset of self-copies), nothing involving isomorphism or
    // embeddability does.
    const SimilarityVector across = classify_pair(empty2, full2);
    const bool expected[kSimilarityCount] = {false, false, false, false, true,  false,
                                             true,  false, true,  false, true,  true};
    for (int k = 0; k < kSimilarityCount; ++k)
        CHECK(across.holds[static_cast<std::size_t>(k)] == expected[k]);

    CHECK_THROWS_AS(classify_pair(empty2, interpretation_from_mask(kBinary, 3, 0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(classify_pair(empty2, Structure(kUnary, 2, {TupleSet{}})),
                    std::invalid_argument);

    const StructureProfile profile = profile_structure(full2);
    CHECK(profile.self_copies == std::vector<std::vector<int>>{{0, 1}});
    CHECK(profile.copies_order.size() == 1);
    CHECK(profile.quotient_order.size() == 1);
    CHECK(profile.completion_atoms == 1);
}

TEST_CASE("grids match scalar classification and ignore the job count") {
    const Corpus corpus = generate_corpus(kBinary, 2);
    const PairGrid grid = classify_grid(corpus);
    REQUIRE(grid.count == 16);
    for (int i = 0; i < grid.count; ++i)
        for (int j = 0; j < grid.count; ++j) {
            const SimilarityVector v = classify_pair(corpus.interpretations[static_cast<std::size_t>(i)],
                                                     corpus.interpretations[static_cast<std::size_t>(j)]);
            for (int k = 0; k < kSimilarityCount; ++k)
                CHECK(grid.holds(k, i, j) == v.holds[static_cast<std::size_t>(k)]);
        }
    const PairGrid parallel = classify_grid(corpus, 3);
    CHECK(parallel.masks == grid.masks);

    CHECK_THROWS_AS(classify_grid(generate_corpus(kBinary, 2, true)), std::invalid_argument);
}

TEST_CASE("hierarchy verification on the 2-point binary corpus") {
    const HierarchyReport report = verify_hierarchy(generate_corpus(kBinary, 2));
    CHECK(report.corpus_size == 16);
    CHECK(report.pair_count == 256);
    CHECK(report.symmetric);
    CHECK(report.transitive);

    const std::string proper = "adhkn";
    for (const EdgeStatus& e : report.edges) {
        const bool should_separate = proper.find(e.label) != std::string::npos;
        CHECK(e.status == (should_separate ? "proper" : "equality"));
        if (e.status == "proper") {
            CHECK(e.witness_left >= 0);
            CHECK(e.witness_right >= 0);
        }
    }
    CHECK(report.equal_groups ==
          std::vector<std::vector<int>>{{0}, {1, 2, 3, 5, 7, 9}, {4, 6, 8, 10, 11}});
    for (const IncomparabilityRecord& rec : report.incomparabilities) {
        CHECK(rec.meet_matches);
        CHECK(rec.status == "degenerate");  // no pair separates the sides here
    }
}

TEST_CASE("finite collapse on 2-point corpora") {
    const CollapseReport report = finite_collapse_check(generate_corpus(kBinary, 2));
    CHECK(report.passed);
    CHECK(report.failure.empty());
    CHECK(report.top_is_full);
    CHECK(report.middle_is_isomorphism);
    CHECK(report.equality_refinement_witness == std::pair<long long, long long>{1, 8});
    CHECK(report.isomorphism_strictness_witness == std::pair<long long, long long>{0, 15});

    CHECK(finite_collapse_check(generate_corpus(kUnary, 2)).passed);
    CHECK(finite_collapse_check(generate_corpus(RelationalLanguage({1, 1}), 2)).passed);

    CHECK_THROWS_AS(finite_collapse_check(generate_corpus(kBinary, 1)), std::invalid_argument);
    CHECK_THROWS_AS(finite_collapse_check(generate_corpus(kBinary, 2, true)),
                    std::invalid_argument);
}
