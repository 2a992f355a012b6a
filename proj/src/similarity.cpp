#include "copieslab/similarity.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>
#include <string>

#include "copieslab/embeddings.hpp"
#include "copieslab/parallel.hpp"
#include "copieslab/regular_open.hpp"

namespace copieslab {

const std::vector<HierarchyEdge>& hierarchy_edges() {
    static const std::vector<HierarchyEdge> edges = {
        {'a', 0, 1}, {'b', 1, 2}, {'c', 1, 3}, {'d', 2, 4}, {'e', 2, 5},
        {'f', 3, 5}, {'g', 4, 6}, {'h', 5, 6}, {'i', 5, 7}, {'j', 6, 8},
        {'k', 7, 8}, {'l', 7, 9}, {'m', 8, 10}, {'n', 9, 10}, {'o', 10, 11},
    };
    return edges;
}

HierarchyDiagram hierarchy_diagram() { return {kSimilarityCount, hierarchy_edges()}; }

const std::vector<IncomparablePair>& incomparable_pairs() {
    static const std::vector<IncomparablePair> pairs = {
        {2, 3, 1}, {3, 4, 1}, {4, 5, 2}, {4, 7, 2},
        {4, 9, 2}, {6, 7, 5}, {6, 9, 5}, {8, 9, 7},
    };
    return pairs;
}

long long interpretation_bits(const RelationalLanguage& language, int size) {
    long long total = 0;
    for (int s = 0; s < language.symbol_count(); ++s) {
        long long cell = 1;
        for (int i = 0; i < language.arity(s); ++i) cell *= size;
        total += cell;
    }
    return total;
}

int corpus_bit_budget() { return 20; }

namespace {

// Fixed slot order for interpretation bitmaps: symbol-major, tuples in
// lexicographic order within a symbol.
std::vector<std::pair<int, Tuple>> tuple_slots(const RelationalLanguage& language, int size) {
    std::vector<std::pair<int, Tuple>> slots;
    for (int s = 0; s < language.symbol_count(); ++s) {
        const int ar = language.arity(s);
        Tuple t(static_cast<std::size_t>(ar), 0);
        for (;;) {
            slots.emplace_back(s, t);
            int i = ar - 1;
            while (i >= 0 && t[static_cast<std::size_t>(i)] == size - 1) {
                t[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
            ++t[static_cast<std::size_t>(i)];
        }
    }
    return slots;
}

Structure structure_from_mask(const RelationalLanguage& language, int size,
                              const std::vector<std::pair<int, Tuple>>& slots,
                              std::uint64_t mask) {
    std::vector<TupleSet> rels(static_cast<std::size_t>(language.symbol_count()));
    for (std::size_t b = 0; b < slots.size(); ++b)
        if ((mask >> b) & 1u) rels[static_cast<std::size_t>(slots[b].first)].push_back(slots[b].second);
    return Structure(language, size, std::move(rels));
}

}  // namespace

Corpus generate_corpus(const RelationalLanguage& language, int size, bool up_to_iso) {
    if (size < 1) throw std::invalid_argument("generate_corpus: domain must be non-empty");
    const long long bits = interpretation_bits(language, size);
    if (bits > corpus_bit_budget())
        throw std::invalid_argument("generate_corpus: " + std::to_string(bits) +
                                    " tuple slots (2^" + std::to_string(bits) +
                                    " interpretations) exceed the budget of " +
                                    std::to_string(corpus_bit_budget()) + " slots");
    if (up_to_iso && size > 8)
        throw std::invalid_argument("generate_corpus: relabeling canonicalization is bounded to domains of size 8");

    const auto slots = tuple_slots(language, size);
    const std::uint64_t total = std::uint64_t{1} << bits;
    Corpus corpus{language, size, up_to_iso, {}, {}};

    if (!up_to_iso) {
        corpus.interpretations.reserve(static_cast<std::size_t>(total));
        for (std::uint64_t mask = 0; mask < total; ++mask)
            corpus.interpretations.push_back(structure_from_mask(language, size, slots, mask));
        return corpus;
    }

    std::map<std::vector<TupleSet>, long long> orbits;
    for (std::uint64_t mask = 0; mask < total; ++mask)
        ++orbits[canonical_relations(structure_from_mask(language, size, slots, mask))];
    long long seen = 0;
    for (auto& [canon, count] : orbits) {
        corpus.interpretations.emplace_back(language, size, canon);
        corpus.multiplicities.push_back(count);
        seen += count;
    }
    assert(seen == static_cast<long long>(total));
    return corpus;
}

std::uint64_t interpretation_mask(const Structure& x) {
    const long long bits = interpretation_bits(x.language, x.size);
    if (bits > 63) throw std::invalid_argument("interpretation_mask: more than 63 tuple slots");
    const auto slots = tuple_slots(x.language, x.size);
    std::uint64_t mask = 0;
    for (std::size_t b = 0; b < slots.size(); ++b)
        if (x.has_tuple(slots[b].first, slots[b].second)) mask |= std::uint64_t{1} << b;
    return mask;
}

Structure interpretation_from_mask(const RelationalLanguage& language, int size,
                                   std::uint64_t mask) {
    const long long bits = interpretation_bits(language, size);
    if (bits > 63) throw std::invalid_argument("interpretation_from_mask: more than 63 tuple slots");
    if (bits < 63 && (mask >> bits) != 0)
        throw std::invalid_argument("interpretation_from_mask: mask has bits beyond the slot count");
    return structure_from_mask(language, size, tuple_slots(language, size), mask);
}

StructureProfile profile_structure(const Structure& x) {
    StructureProfile p{x, canonical_relations(x), copies(x, x).subsets, antichain(0), antichain(0), 0};
    p.copies_order = copies_poset(x, x);
    p.quotient_order = sep_quotient(p.copies_order).order;
    p.completion_atoms = regular_open(p.copies_order).atom_count();
    return p;
}

SimilarityVector classify_pair(const StructureProfile& a, const StructureProfile& b) {
    if (!(a.structure.language == b.structure.language) || a.structure.size != b.structure.size)
        throw std::invalid_argument("classify_pair: interpretations must share language and domain");

    SimilarityVector v;
    v.holds[0] = a.structure.relations == b.structure.relations;
    v.holds[3] = a.canonical == b.canonical;
    v.holds[9] = equimorphic(a.structure, b.structure);
    v.holds[4] = a.self_copies == b.self_copies;
    v.holds[6] = poset_iso(a.copies_order, b.copies_order).has_value();
    v.holds[8] = poset_iso(a.quotient_order, b.quotient_order).has_value();
    v.holds[10] = a.completion_atoms == b.completion_atoms;
    v.holds[1] = v.holds[4] && v.holds[3];
    v.holds[2] = v.holds[4] && v.holds[9];
    v.holds[5] = v.holds[6] && v.holds[9];
    v.holds[7] = v.holds[8] && v.holds[9];
    v.holds[11] = true;

    for (const HierarchyEdge& e : hierarchy_edges())
        if (v.holds[static_cast<std::size_t>(e.lower)] && !v.holds[static_cast<std::size_t>(e.upper)])
            throw std::logic_error(std::string("classify_pair: edge ") + e.label +
                                   " violated; the diagram is unsound for this pair");
    return v;
}

SimilarityVector classify_pair(const Structure& x, const Structure& y) {
    return classify_pair(profile_structure(x), profile_structure(y));
}

PairGrid classify_grid(const Corpus& corpus, int jobs) {
    if (corpus.up_to_iso)
        throw std::invalid_argument(
            "classify_grid: needs the full labeled corpus; equality and copy-set equality are not "
            "relabeling-invariant");
    const int n = static_cast<int>(corpus.interpretations.size());
    if (n > 4096) throw UnsupportedSizeError("classify_grid: corpus larger than 4096 interpretations");

    const Structure placeholder(
        corpus.language, 1,
        std::vector<TupleSet>(static_cast<std::size_t>(corpus.language.symbol_count())));
    std::vector<StructureProfile> profiles(static_cast<std::size_t>(n),
                                           StructureProfile{placeholder, {}, {}});
    parallel_for(static_cast<std::size_t>(n), jobs, [&](std::size_t i) {
        profiles[i] = profile_structure(corpus.interpretations[i]);
    });

    PairGrid grid;
    grid.count = n;
    grid.masks.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    parallel_for(static_cast<std::size_t>(n), jobs, [&](std::size_t i) {
        for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
            const SimilarityVector v = classify_pair(profiles[i], profiles[j]);
            std::uint16_t mask = 0;
            for (int k = 0; k < kSimilarityCount; ++k)
                if (v.holds[static_cast<std::size_t>(k)]) mask |= static_cast<std::uint16_t>(1u << k);
            grid.masks[i * static_cast<std::size_t>(n) + j] = mask;
        }
    });
    return grid;
}

namespace {

// Relations identical as pair sets on this grid, grouped in index order.
std::vector<std::vector<int>> relation_groups(const PairGrid& grid) {
    std::vector<std::vector<int>> groups;
    for (int k = 0; k < kSimilarityCount; ++k) {
        bool placed = false;
        for (auto& group : groups) {
            const int r = group.front();
            bool same = true;
            for (const std::uint16_t mask : grid.masks)
                if ((((mask >> k) ^ (mask >> r)) & 1u) != 0) {
                    same = false;
                    break;
                }
            if (same) {
                group.push_back(k);
                placed = true;
                break;
            }
        }
        if (!placed) groups.push_back({k});
    }
    return groups;
}

std::pair<long long, long long> first_pair_with(const PairGrid& grid, int held, int failed) {
    for (int i = 0; i < grid.count; ++i)
        for (int j = 0; j < grid.count; ++j)
            if (grid.holds(held, i, j) && !grid.holds(failed, i, j)) return {i, j};
    return {-1, -1};
}

}  // namespace

HierarchyReport verify_hierarchy(const Corpus& corpus, const PairGrid& grid) {
    HierarchyReport report;
    report.corpus_size = static_cast<int>(corpus.interpretations.size());
    report.pair_count = static_cast<long long>(grid.count) * grid.count;
    if (grid.count != report.corpus_size)
        throw std::invalid_argument("verify_hierarchy: grid does not match corpus");

    for (const HierarchyEdge& e : hierarchy_edges()) {
        EdgeStatus status{e.label, e.lower, e.upper, "vacuous", -1, -1};
        if (grid.count > 0) {
            const auto witness = first_pair_with(grid, e.upper, e.lower);
            if (witness.first >= 0) {
                status.status = "proper";
                status.witness_left = witness.first;
                status.witness_right = witness.second;
            } else {
                status.status = "equality";
            }
        }
        report.edges.push_back(status);
    }

    report.equal_groups = relation_groups(grid);

    for (const IncomparablePair& pr : incomparable_pairs()) {
        IncomparabilityRecord rec{pr.left, pr.right, pr.meet, true, "degenerate", {-1, -1}, {-1, -1}};
        for (const std::uint16_t mask : grid.masks) {
            const bool l = (mask >> pr.left) & 1u, r = (mask >> pr.right) & 1u, m = (mask >> pr.meet) & 1u;
            if (m != (l && r)) rec.meet_matches = false;
        }
        rec.left_witness = first_pair_with(grid, pr.left, pr.meet);
        rec.right_witness = first_pair_with(grid, pr.right, pr.meet);
        // Both sides strictly above their meet force incomparability.
        if (rec.meet_matches && rec.left_witness.first >= 0 && rec.right_witness.first >= 0)
            rec.status = "derived";
        report.incomparabilities.push_back(rec);
    }

    report.symmetric = true;
    for (int i = 0; i < grid.count && report.symmetric; ++i)
        for (int j = 0; j < grid.count; ++j)
            if (grid.at(i, j) != grid.at(j, i)) {
                report.symmetric = false;
                break;
            }

    report.transitive = true;
    const int words = (grid.count + 63) / 64;
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(grid.count) * static_cast<std::size_t>(words));
    for (int k = 0; k < kSimilarityCount && report.transitive; ++k) {
        std::fill(rows.begin(), rows.end(), 0);
        for (int i = 0; i < grid.count; ++i)
            for (int j = 0; j < grid.count; ++j)
                if (grid.holds(k, i, j))
                    rows[static_cast<std::size_t>(i) * words + static_cast<std::size_t>(j / 64)] |=
                        std::uint64_t{1} << (j % 64);
        for (int i = 0; i < grid.count && report.transitive; ++i)
            for (int j = 0; j < grid.count && report.transitive; ++j) {
                if (!grid.holds(k, i, j)) continue;
                for (int w = 0; w < words; ++w)
                    if (rows[static_cast<std::size_t>(j) * words + w] &
                        ~rows[static_cast<std::size_t>(i) * words + w]) {
                        report.transitive = false;
                        break;
                    }
            }
    }
    return report;
}

HierarchyReport verify_hierarchy(const Corpus& corpus, int jobs) {
    return verify_hierarchy(corpus, classify_grid(corpus, jobs));
}

CollapseReport finite_collapse_check(const Corpus& corpus, const PairGrid& grid) {
    if (corpus.size <= 1)
        throw std::invalid_argument("finite_collapse_check: needs a domain with more than one element");
    if (corpus.up_to_iso)
        throw std::invalid_argument("finite_collapse_check: needs the full labeled corpus");
    if (grid.count != static_cast<int>(corpus.interpretations.size()))
        throw std::invalid_argument("finite_collapse_check: grid does not match corpus");

    CollapseReport report;
    report.equal_groups = relation_groups(grid);

    report.top_is_full = true;
    report.middle_is_isomorphism = true;
    for (const std::uint16_t mask : grid.masks) {
        for (const int k : {4, 6, 8, 10, 11})
            if (!((mask >> k) & 1u)) report.top_is_full = false;
        const bool iso = (mask >> 3) & 1u;
        for (const int k : {1, 2, 5, 7, 9})
            if (static_cast<bool>((mask >> k) & 1u) != iso) report.middle_is_isomorphism = false;
    }

    report.equality_refinement_witness = first_pair_with(grid, 1, 0);

    // The all-empty and all-full interpretations are never isomorphic.
    long long empty_index = -1, full_index = -1;
    const long long bits = interpretation_bits(corpus.language, corpus.size);
    for (std::size_t i = 0; i < corpus.interpretations.size(); ++i) {
        const long long tuples = corpus.interpretations[i].tuple_count();
        if (tuples == 0) empty_index = static_cast<long long>(i);
        if (tuples == bits) full_index = static_cast<long long>(i);
    }
    if (empty_index >= 0 && full_index >= 0 &&
        grid.holds(11, static_cast<int>(empty_index), static_cast<int>(full_index)) &&
        !grid.holds(3, static_cast<int>(empty_index), static_cast<int>(full_index)))
        report.isomorphism_strictness_witness = {empty_index, full_index};

    if (!report.top_is_full)
        report.failure = "some pair misses one of the relations 4, 6, 8, 10, 11";
    else if (!report.middle_is_isomorphism)
        report.failure = "relations 1, 2, 5, 7, 9 do not all coincide with isomorphism";
    else if (report.equality_refinement_witness.first < 0)
        report.failure = "no pair separates relation 1 from equality";
    else if (report.isomorphism_strictness_witness.first < 0)
        report.failure = "the all-empty vs all-full pair does not separate the top level from isomorphism";
    report.passed = report.failure.empty();

    if (report.passed) {
        const std::vector<std::vector<int>> expected = {{0}, {1, 2, 3, 5, 7, 9}, {4, 6, 8, 10, 11}};
        assert(report.equal_groups == expected);
    }
    return report;
}

CollapseReport finite_collapse_check(const Corpus& corpus, int jobs) {
    return finite_collapse_check(corpus, classify_grid(corpus, jobs));
}

}  // namespace copieslab
