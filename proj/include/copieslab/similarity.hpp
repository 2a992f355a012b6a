#pragma once
// Twelve pairwise similarity notions on interpretations of one language over
// a fixed finite domain: equality, isomorphism, equimorphism, the full
// relation, four notions induced by the posets of self-copies (set equality,
// poset isomorphism, separative-quotient isomorphism, completion
// isomorphism), and the four stated conjunctions of those with isomorphism
// or equimorphism.  Corpus enumeration plus corpus-level verification of the
// implication diagram, its incomparabilities, and its finite collapse.

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "copieslab/orders.hpp"
#include "copieslab/structure.hpp"

namespace copieslab {

inline constexpr int kSimilarityCount = 12;

struct SimilarityVector {
    std::array<bool, kSimilarityCount> holds{};
    bool operator==(const SimilarityVector&) const = default;
};

// One implication edge: whenever the lower relation holds for a pair, the
// upper one must hold too.
struct HierarchyEdge {
    char label;
    int lower;
    int upper;
};

// The 15 labelled edges form the Hasse diagram of the implication order.
const std::vector<HierarchyEdge>& hierarchy_edges();

struct HierarchyDiagram {
    int node_count;                    // the 12 relations
    std::vector<HierarchyEdge> edges;  // Hasse edges only
};
HierarchyDiagram hierarchy_diagram();

// Pairs of relations that are incomparable in the full (infinite-scale)
// diagram, each certified by a lattice meet strictly below both sides.
struct IncomparablePair {
    int left;
    int right;
    int meet;
};
const std::vector<IncomparablePair>& incomparable_pairs();

// All interpretations of a language on a fixed domain, or canonical orbit
// representatives under domain relabelings (then with orbit sizes).
struct Corpus {
    RelationalLanguage language;
    int size = 0;
    bool up_to_iso = false;
    std::vector<Structure> interpretations;
    std::vector<long long> multiplicities;  // parallel to interpretations iff up_to_iso
};

// Number of bits needed to describe one interpretation: sum over symbols of
// size^arity.  Enumeration refuses once this exceeds the budget.
long long interpretation_bits(const RelationalLanguage& language, int size);
int corpus_bit_budget();  // 20

Corpus generate_corpus(const RelationalLanguage& language, int size, bool up_to_iso = false);

// Interpretation <-> bitmap, bit order symbol-major with tuples lexicographic
// within a symbol.  In a full corpus, interpretation i is exactly mask i.
std::uint64_t interpretation_mask(const Structure& x);
Structure interpretation_from_mask(const RelationalLanguage& language, int size,
                                   std::uint64_t mask);

// Everything about one interpretation that pair classification reuses: the
// relabeling-canonical form, the self-copy family and its poset, that
// poset's separative quotient, and the completion's atom count.
struct StructureProfile {
    Structure structure;
    std::vector<TupleSet> canonical;
    std::vector<std::vector<int>> self_copies;
    FinitePoset copies_order = antichain(0);
    FinitePoset quotient_order = antichain(0);
    int completion_atoms = 0;
};
StructureProfile profile_structure(const Structure& x);

// All twelve bits for one pair, each computed from its own definition, with
// the implication diagram asserted on the result.
SimilarityVector classify_pair(const StructureProfile& a, const StructureProfile& b);
SimilarityVector classify_pair(const Structure& x, const Structure& y);

// Bit k of masks[i*count+j] records whether relation k holds for the ordered
// pair (i, j).  Refuses up-to-iso corpora: two of the relations are not
// invariant under relabeling, so orbit representatives cannot stand in for
// their orbits.
struct PairGrid {
    int count = 0;
    std::vector<std::uint16_t> masks;
    std::uint16_t at(int i, int j) const {
        return masks[static_cast<std::size_t>(i) * static_cast<std::size_t>(count) +
                     static_cast<std::size_t>(j)];
    }
    bool holds(int k, int i, int j) const { return (at(i, j) >> k) & 1; }
};
PairGrid classify_grid(const Corpus& corpus, int jobs = 1);

struct EdgeStatus {
    char label;
    int lower;
    int upper;
    std::string status;  // "proper" | "equality" | "vacuous"
    // First pair separating upper from lower, when status == "proper".
    long long witness_left = -1;
    long long witness_right = -1;
};

struct IncomparabilityRecord {
    int left;
    int right;
    int meet;
    bool meet_matches;   // meet relation == intersection on this corpus
    std::string status;  // "derived" | "degenerate"
    std::pair<long long, long long> left_witness{-1, -1};   // in left, not in meet
    std::pair<long long, long long> right_witness{-1, -1};  // in right, not in meet
};

struct HierarchyReport {
    int corpus_size = 0;
    long long pair_count = 0;  // ordered pairs, diagonal included
    std::vector<EdgeStatus> edges;
    std::vector<std::vector<int>> equal_groups;  // relations identical on this corpus
    std::vector<IncomparabilityRecord> incomparabilities;
    bool symmetric = false;
    bool transitive = false;
};

HierarchyReport verify_hierarchy(const Corpus& corpus, int jobs = 1);
HierarchyReport verify_hierarchy(const Corpus& corpus, const PairGrid& grid);

struct CollapseReport {
    bool passed = false;
    std::vector<std::vector<int>> equal_groups;
    bool top_is_full = false;           // relations 4,6,8,10,11 hold for every pair
    bool middle_is_isomorphism = false;  // relations 1,2,5,7,9 coincide with 3
    std::pair<long long, long long> equality_refinement_witness{-1, -1};  // 1 holds, 0 fails
    std::pair<long long, long long> isomorphism_strictness_witness{-1, -1};  // 11 holds, 3 fails
    std::string failure;  // empty iff passed
};

// Requires 1 < size; checks the three-level picture exactly, including the
// all-empty vs all-full non-isomorphic pair.
CollapseReport finite_collapse_check(const Corpus& corpus, int jobs = 1);
CollapseReport finite_collapse_check(const Corpus& corpus, const PairGrid& grid);

}  // namespace copieslab
