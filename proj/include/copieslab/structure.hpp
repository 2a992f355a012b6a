#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace copieslab {

using Tuple = std::vector<int>;
// Relation interpretations are kept sorted lexicographically and
// duplicate-free; every algorithm in the library relies on that canonical
// order for determinism.
using TupleSet = std::vector<Tuple>;

struct RelationalLanguage {
    std::vector<int> arities;

    explicit RelationalLanguage(std::vector<int> a);
    int symbol_count() const { return static_cast<int>(arities.size()); }
    int arity(int i) const { return arities.at(static_cast<std::size_t>(i)); }
    bool all_unary() const;
    bool operator==(const RelationalLanguage&) const = default;
};

// Finite relational structure over domain {0, ..., size-1}.
struct Structure {
    RelationalLanguage language;
    int size = 0;
    std::vector<TupleSet> relations;  // one sorted tuple set per symbol

    Structure(RelationalLanguage lang, int n, std::vector<TupleSet> rels);
    bool has_tuple(int symbol, const Tuple& t) const;
    long long tuple_count() const;
    bool operator==(const Structure&) const = default;
};

// Total injection {0..source_size-1} -> {0..target_size-1}.
struct InjectionMap {
    int source_size = 0;
    int target_size = 0;
    std::vector<int> assignment;

    InjectionMap(int source, int target, std::vector<int> a);
    int operator()(int x) const { return assignment[static_cast<std::size_t>(x)]; }
    std::vector<int> image() const;  // sorted
    bool operator==(const InjectionMap&) const = default;
    bool operator<(const InjectionMap& o) const { return assignment < o.assignment; }
};

// g after f: (compose(g, f))(x) = g(f(x)).
InjectionMap compose(const InjectionMap& g, const InjectionMap& f);
// Solves f o h = g for h; empty if some g(x) lies outside the image of f.
bool solve_right_factor(const InjectionMap& f, const InjectionMap& g, InjectionMap& h);
InjectionMap identity_map(int n);

struct Partition {
    std::vector<std::vector<int>> blocks;  // each sorted; blocks ordered by least member
    int block_of(int x) const;
};

struct SubstructureResult {
    Structure structure;
    std::vector<int> original_labels;  // new index -> original element
};

// Induced substructure on a non-empty element set.
SubstructureResult substructure(const Structure& y, const std::vector<int>& elements);

// Biconditional preservation: t in rho_i  <=>  f(t) in sigma_i, for every
// tuple t over X's domain, every symbol i.
bool is_embedding(const InjectionMap& f, const Structure& x, const Structure& y);

// The remaining operations are for structures over the one-binary-symbol
// language <2> unless stated otherwise.
Structure complement(const Structure& x);
Structure reflexify(const Structure& x);
Structure irreflexify(const Structure& x);
bool has_loop(const Structure& x);

struct DisjointUnionResult {
    Structure structure;
    Partition blocks;
};
// Parts must be connected binary structures over one shared language.
DisjointUnionResult disjoint_union(const std::vector<Structure>& parts);

// Blocks of the reflexive-symmetric-transitive closure of the binary relation.
Partition components(const Structure& x);
bool is_connected(const Structure& x);

// For all-unary languages: x ~ y iff x and y lie in exactly the same symbols.
Partition unary_classes(const Structure& x);

// Rewrites a binary structure into one that is connected and carries a loop,
// without changing its self-embedding monoid: reflexify if connected and
// loop-free, otherwise pass to the complement first.
Structure normalize_to_int_star(const Structure& x);

// Canonical form under relabeling: the lexicographically least relation list
// over all permutations of the domain.  Used for up-to-iso corpus dedup.
std::vector<TupleSet> canonical_relations(const Structure& x);

std::string describe(const Structure& x);  // one-line summary for messages

}  // namespace copieslab
