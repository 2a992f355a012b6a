#pragma once
// Transfer of a binary structure into an arbitrary language with a symbol of
// arity >= 2: the base relation is merged with a disjoint rigid digraph and
// padded into that symbol, and the whole embedding calculus of the base
// structure survives the trip.  Verification helpers check the six transfer
// identities, preservation of all twelve pair similarities, and the
// normalization path for arbitrary binary inputs.

#include <string>
#include <vector>

#include "copieslab/similarity.hpp"
#include "copieslab/structure.hpp"

namespace copieslab {

// Admissible base interpretations: binary, connected, and carrying at least
// one loop.  The loop blocks embeddings of the base part into the (strictly
// irreflexive) digraph part.
bool int_star_membership(const Structure& rho);

// All loop-bearing connected binary interpretations on the given domain, in
// ascending bitmap order.
std::vector<Structure> enumerate_int_star(int size);

// A digraph whose only self-embedding is the identity, together with the
// full self-embedding enumeration that proves it.
struct RigidWitness {
    Structure theta;
    std::vector<InjectionMap> certificate;  // exactly the identity
};

// Re-proves rigidity of the given digraph by filtering every injection;
// rejects structures that are not binary, irreflexive, connected, and rigid.
RigidWitness certify_rigid(const Structure& theta);

// Least connected irreflexive rigid relation on m points, ordered by the
// ascending edge-bitmap integer (bit a*m+b for the pair (a,b)).
RigidWitness find_rigid_digraph(int m);

struct TransferResult {
    int lambda = 0;  // base domain size
    int kappa = 0;   // total domain size
    int i0 = -1;     // least symbol index of arity >= 2
    Structure tau;
};

// Merges rho with theta shifted past the base domain and pads the pairs into
// symbol i0 with every possible tail; all other symbols stay empty.
// Requires int_star_membership(rho), a non-unary target language, and
// |theta| > |rho| (the size excess keeps the digraph part from embedding
// into the base part).
TransferResult tau(const Structure& rho, const RelationalLanguage& target, const RigidWitness& theta);

// Same padding with no digraph part: the base relation itself fills symbol
// i0.  The membership requirement on rho stays in force.
TransferResult tau_self(const Structure& rho, const RelationalLanguage& target);

struct TransferIdentityCheck {
    std::string name;
    bool holds = false;
    long long transferred_count = 0;  // enumerated on the transferred pair
    long long lifted_count = 0;       // enumerated on the base pair, then lifted
};

struct TransferIdentitiesReport {
    TransferResult tau_rho;
    TransferResult tau_sigma;
    std::vector<TransferIdentityCheck> identities;  // six, fixed order
    bool all_hold = false;
};

// Checks, by independent enumeration on both levels, that embeddings,
// isomorphisms, and copies between the transferred pair -- and
// self-embeddings, automorphisms, and self-copies of the first -- are
// exactly the lifts (f extended by the identity; C extended by the digraph
// block) of their base counterparts.
TransferIdentitiesReport verify_transfer_identities(const Structure& rho, const Structure& sigma,
                                                    const RelationalLanguage& target,
                                                    const RigidWitness& theta);

struct PreservationCheck {
    int relation = -1;
    bool base_holds = false;
    bool transferred_holds = false;
    bool matches = false;
    bool direct = false;  // checked from its own definition, not via conjuncts
};

struct TransferPreservationReport {
    TransferResult tau_rho;
    TransferResult tau_sigma;
    std::vector<PreservationCheck> checks;  // all twelve relations
    bool all_match = false;
};

// rho ~k sigma iff tau_rho ~k tau_sigma, for each of the twelve relations;
// the conjunction-defined ones are marked as derived.
TransferPreservationReport verify_preservation(const Structure& rho, const Structure& sigma,
                                               const RelationalLanguage& target,
                                               const RigidWitness& theta);

struct NormalizationReport {
    Structure input;
    Structure normalized;
    TransferResult tau_normalized;
    bool copy_sets_equal = false;      // self-copies of input and normalized agree
    bool lifted_copies_match = false;  // self-copies of tau = lifted self-copies
    bool poset_isomorphic = false;     // the lift respects inclusion both ways
    bool passed = false;
};

// Arbitrary binary input: normalizes it into the admissible class, transfers
// the result (binary target, digraph one point larger than the domain), and
// checks that the copy structure is preserved at every step.
NormalizationReport verify_normalization(const Structure& rho);

}  // namespace copieslab
