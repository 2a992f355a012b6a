#pragma once

#include <cstdint>
#include <vector>

#include "copieslab/orders.hpp"

namespace copieslab {

// Completion of a finite poset: the algebra of regular-open subsets of its
// separative quotient under the down-set topology.  Elements are indices into
// `carrier`, whose bitsets (over quotient elements) are listed in a linear
// extension of inclusion: by popcount, then numeric value.
class RegularOpenAlgebra {
  public:
    RegularOpenAlgebra(FinitePoset base, QuotientPoset provenance, std::vector<std::uint64_t> carrier);

    int size() const { return static_cast<int>(carrier_.size()); }
    const std::vector<std::uint64_t>& carrier() const { return carrier_; }
    std::uint64_t element(int i) const { return carrier_[static_cast<std::size_t>(i)]; }
    const FinitePoset& base() const { return base_; }                // the separative quotient
    const QuotientPoset& provenance() const { return provenance_; }  // how it arose

    int zero() const { return 0; }
    int one() const { return size() - 1; }
    bool leq(int a, int b) const;  // inclusion
    int meet(int a, int b) const;  // intersection
    int join(int a, int b) const;  // regularized union
    int complement(int a) const;   // regularized difference from the top
    std::vector<int> atoms() const;
    int atom_count() const;

    // Regular-open sets are closed down-sets of the interior-of-closure
    // operator; exposed so the algebra can regularize arbitrary subsets.
    std::uint64_t regularize(std::uint64_t set) const;

    FinitePoset carrier_poset() const;   // all elements under inclusion
    FinitePoset positive_part() const;   // carrier minus zero, under inclusion

  private:
    int index_of(std::uint64_t set) const;

    FinitePoset base_;
    QuotientPoset provenance_;
    std::vector<std::uint64_t> carrier_;
};

// Builds ro(P) by passing to the separative quotient first; the carrier is
// exactly the family of fixed points of interior-of-closure among down-sets.
RegularOpenAlgebra regular_open(const FinitePoset& p);

// B isomorphic to every relative algebra b-down, b nonzero; checked literally
// with poset_iso on the carriers.
bool is_homogeneous_ba(const RegularOpenAlgebra& b);

// Separates B+ from its square: the sentence "every x below the top has
// exactly one incompatible partner joining to the top" holds in B+ and fails
// in B+ x B+; returns true when the two posets are non-isomorphic.
bool check_square_distinct(const RegularOpenAlgebra& b);

// Evaluates that witness sentence in any finite poset with a maximum.
bool partition_sentence_holds(const FinitePoset& p);

// Finite stand-in for forcing equivalence: isomorphic completions, i.e. equal
// atom counts.
bool forcing_equiv_finite(const FinitePoset& p, const FinitePoset& q);

}  // namespace copieslab
