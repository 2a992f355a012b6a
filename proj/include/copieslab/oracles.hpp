#pragma once
// Independent, definition-literal re-implementations of library operations.
// Each one trades away every optimization for directness, so agreement with
// the main code is evidence rather than tautology.  Used only by the test
// and acceptance targets; the core library must not depend on this header.

#include <cstdint>
#include <vector>

#include "copieslab/orders.hpp"
#include "copieslab/structure.hpp"

namespace copieslab::oracles {

// Every injection of the domain of x into the domain of y, in lexicographic
// assignment order, filtered through the embedding predicate.  No pruning.
std::vector<InjectionMap> brute_embeddings(const Structure& x, const Structure& y);

// Sorted, deduplicated images of brute_embeddings.
std::vector<std::vector<int>> brute_copies(const Structure& x, const Structure& y);

// For all-unary languages an injection embeds x into y exactly when every
// point keeps its symbol-membership pattern; this enumerates embeddings by
// that membership test alone, never consulting the embedding predicate.
std::vector<InjectionMap> unary_criterion_embeddings(const Structure& x, const Structure& y);

// a <=* b read off the defining quantifier: every r <= a is compatible
// with b.
FinitePreorder brute_sep_mod(const FinitePoset& p);

// Blocks of mutual <=* (ordered by least member) and the induced order on
// them, built from brute_sep_mod without the library quotient machinery.
Partition brute_sep_classes(const FinitePoset& p);
FinitePoset brute_sep_quotient_order(const FinitePoset& p);

// All subsets of the poset's domain fixed by interior-of-closure in the
// down-set topology, as bitsets sorted by popcount then value (the carrier
// order of the completion).  Pass the separative quotient to mirror the
// completion pipeline.  Refuses n > 16.
std::vector<std::uint64_t> brute_regular_open_carrier(const FinitePoset& p);

// Isomorphism by trying all bijections.  Refuses n > 8.
bool brute_poset_iso(const FinitePoset& p, const FinitePoset& q);

// Quasi-homogeneity by the raw definition with the existential on the dense
// subset outermost: some dense D subseteq P is isomorphic to a dense subset
// of every principal down-set.  (The library routine quantifies per element;
// at finite scale the two readings must agree, which is part of what tests
// check.)  Refuses n > 6.
bool brute_quasi_homogeneous(const FinitePoset& p);

// Embeddings of disjoint unions assembled from a block map plus per-part
// embeddings, with global injectivity and the cross-block no-edge condition
// checked literally instead of invoking the embedding predicate on the
// combined map.  Parts must be connected binary structures.
std::vector<InjectionMap> assembled_union_embeddings(const std::vector<Structure>& parts_x,
                                                     const std::vector<Structure>& parts_y);

}  // namespace copieslab::oracles
