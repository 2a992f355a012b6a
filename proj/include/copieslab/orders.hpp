#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "copieslab/structure.hpp"  // Partition

namespace copieslab {

// Thrown when a literal check would be exponential beyond its supported bound.
struct UnsupportedSizeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Reflexive + transitive relation on {0..n-1}, stored as a dense matrix.
class FinitePreorder {
  public:
    FinitePreorder(int n, std::vector<std::uint8_t> leq);
    int size() const { return n_; }
    bool leq(int a, int b) const { return leq_[static_cast<std::size_t>(a) * n_ + b] != 0; }
    const std::vector<std::uint8_t>& matrix() const { return leq_; }
    bool operator==(const FinitePreorder&) const = default;

  private:
    int n_;
    std::vector<std::uint8_t> leq_;
};

// Additionally antisymmetric.
class FinitePoset {
  public:
    FinitePoset(int n, std::vector<std::uint8_t> leq);
    static FinitePoset from_strict_pairs(int n, const std::vector<std::pair<int, int>>& below);
    int size() const { return n_; }
    bool leq(int a, int b) const { return leq_[static_cast<std::size_t>(a) * n_ + b] != 0; }
    bool lt(int a, int b) const { return a != b && leq(a, b); }
    const std::vector<std::uint8_t>& matrix() const { return leq_; }
    bool operator==(const FinitePoset&) const = default;

  private:
    int n_;
    std::vector<std::uint8_t> leq_;
};

FinitePoset chain(int n);
FinitePoset antichain(int n);
FinitePoset reversed_poset(const FinitePoset& p);  // same elements, order flipped

std::vector<int> down_set(const FinitePoset& p, int a);     // {b : b <= a}, sorted
std::vector<int> minimal_elements(const FinitePoset& p);
std::vector<int> maximal_elements(const FinitePoset& p);
std::optional<int> maximum_element(const FinitePoset& p);
std::optional<int> minimum_element(const FinitePoset& p);
FinitePoset restrict_poset(const FinitePoset& p, const std::vector<int>& elements);
std::vector<std::pair<int, int>> cover_pairs(const FinitePoset& p);
bool compatible(const FinitePoset& p, int a, int b);  // common lower bound exists

// p <=* q  iff every r <= p is compatible with q.
FinitePreorder sep_mod(const FinitePoset& p);
bool is_separative(const FinitePoset& p);

struct QuotientPoset {
    FinitePreorder base;         // the separative modification it quotients
    Partition classes;           // over base elements, ordered by least member
    FinitePoset order;           // induced order on classes
    std::vector<int> projection; // element -> class index
};

// Quotient of the separative modification by its symmetrization; the result
// is checked to be separative before being returned.
QuotientPoset sep_quotient(const FinitePoset& p);

// Componentwise order on the cartesian product; element (a1,..,ak) sits at
// the mixed-radix index with the first factor most significant.
FinitePoset product(const std::vector<FinitePoset>& factors);

// Deterministic first witness, or nullopt.  Backtracking with iterated
// signature refinement (down/up degrees, then neighbor colors).
std::optional<std::vector<int>> poset_iso(const FinitePoset& p, const FinitePoset& q);
std::optional<std::vector<int>> preorder_iso(const FinitePreorder& p, const FinitePreorder& q);

// Is there an automorphism of p extending pin_from -> pin_to?
bool automorphism_with_pin(const FinitePoset& p, int pin_from, int pin_to);

// Largest element exists and P is order-isomorphic to every principal down-set.
bool is_homogeneous(const FinitePoset& p);
// For each a: some dense subset of P is isomorphic to a dense subset of the
// down-set of a.  Literal search; refuses n > quasi_homogeneity_bound().
bool is_quasi_homogeneous(const FinitePoset& p);
int quasi_homogeneity_bound();
// Any two elements can be made compatible by an automorphism.
bool is_weakly_homogeneous(const FinitePoset& p);

// D is dense iff below every element of P lies an element of D.
bool is_dense_subset(const FinitePoset& p, const std::vector<int>& d);

struct SurjectionTransferResult {
    bool hypotheses_hold = false;
    int failed_hypothesis = 0;               // 1 = order, 2 = incompatibility
    std::pair<int, int> failed_pair{-1, -1};
    std::vector<int> class_map;              // sq(P) class -> sq(Q) class when hypotheses hold
};

// For a surjection f: P ->> Q that carries <= into <=* and preserves
// incompatibility, [p] -> [f(p)] is an isomorphism sq(P) -> sq(Q); this
// verifies the hypotheses, builds the map, and checks it really is one.
SurjectionTransferResult sq_surjection_transfer(const FinitePoset& p, const FinitePoset& q,
                                                const std::vector<int>& f);

// All labeled posets on {0..n-1}, one callback each; deterministic order.
void for_each_poset(int n, const std::function<void(const FinitePoset&)>& fn);
// Random order: each pair i<j becomes an edge with probability 1/2, then
// transitive closure.
FinitePoset random_poset(std::mt19937_64& gen, int n);
FinitePoset relabel_poset(const FinitePoset& p, const std::vector<int>& perm);
std::vector<std::uint8_t> canonical_poset_key(const FinitePoset& p);

}  // namespace copieslab
