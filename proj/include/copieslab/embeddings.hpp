#pragma once

#include <utility>
#include <vector>

#include "copieslab/orders.hpp"
#include "copieslab/structure.hpp"

namespace copieslab {

struct EmbeddingSet {
    Structure source;
    Structure target;
    std::vector<InjectionMap> maps;  // in ascending assignment order
};

// All embeddings of x into y, assignments ascending.  Backtracking in source
// order with per-position degree bounds and incremental biconditional checks.
EmbeddingSet enumerate_embeddings(const Structure& x, const Structure& y);
// Raw assignments without the wrapper; same order.
std::vector<std::vector<int>> enumerate_embedding_maps(const Structure& x, const Structure& y);
EmbeddingSet enumerate_isos(const Structure& x, const Structure& y);
bool isomorphic(const Structure& x, const Structure& y);
EmbeddingSet automorphisms(const Structure& x);
bool equimorphic(const Structure& x, const Structure& y);

struct CopySet {
    std::vector<std::vector<int>> subsets;  // sorted element sets, ascending
};

// Images of embeddings of x into y = subsets of y inducing a copy of x.
CopySet copies(const Structure& x, const Structure& y);
// The copy set of x in y ordered by inclusion.
FinitePoset copies_poset(const Structure& x, const Structure& y);

struct GreenQuotient {
    EmbeddingSet maps;     // Emb(x); at finite scale these are automorphisms
    Partition classes;     // over map indices, mutual divisibility
    FinitePoset order;     // induced order on classes
    int identity_class = -1;
};

// The right-divisibility preorder f <= g iff f o h = g for some self-
// embedding h, quotiented by its symmetrization.
GreenQuotient green_quotient(const Structure& x);

struct CopyTransport {
    std::vector<int> host_copy;  // image of the embedding
    std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;  // copy of x -> copy in y
};

// Pushes the self-copies of x through an embedding h: x -> y and verifies the
// push-forward is an order isomorphism onto the principal down-set of h[x]
// inside the copy poset of x in y.
CopyTransport transport_copies(const InjectionMap& h, const Structure& x, const Structure& y);

struct EmbeddingDecomposition {
    std::vector<int> block_map;               // source part -> target part
    std::vector<InjectionMap> component_maps; // per source part
};

// Splits an embedding of a disjoint union of connected parts into per-part
// embeddings plus the index map, checking the images of distinct parts stay
// unrelated.
EmbeddingDecomposition decompose_embedding(const InjectionMap& f,
                                           const std::vector<Structure>& parts_x,
                                           const std::vector<Structure>& parts_y);

}  // namespace copieslab
