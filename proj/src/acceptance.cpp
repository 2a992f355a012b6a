#include "copieslab/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "copieslab/embeddings.hpp"
#include "copieslab/oracles.hpp"
#include "copieslab/orders.hpp"
#include "copieslab/regular_open.hpp"
#include "copieslab/rng.hpp"
#include "copieslab/similarity.hpp"
#include "copieslab/structure.hpp"
#include "copieslab/transfer.hpp"

namespace copieslab::acceptance {

namespace {

struct Outcome {
    bool passed = false;
    std::string detail;
};

Outcome pass(std::string detail) { return {true, std::move(detail)}; }
Outcome fail(std::string detail) { return {false, std::move(detail)}; }

const RelationalLanguage kUnary({1});
const RelationalLanguage kBinary({2});

std::string pair_text(const std::pair<long long, long long>& w) {
    std::ostringstream s;
    s << "(" << w.first << "," << w.second << ")";
    return s.str();
}

// A random relation on `size` points, redrawn until connected; falls back to
// the complete relation, which always is.
Structure random_connected_binary(std::mt19937_64& gen, int size) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        TupleSet rel;
        for (int a = 0; a < size; ++a)
            for (int b = 0; b < size; ++b)
                if (rng_bool(gen)) rel.push_back(Tuple{a, b});
        Structure x(kBinary, size, {std::move(rel)});
        if (is_connected(x)) return x;
    }
    TupleSet rel;
    for (int a = 0; a < size; ++a)
        for (int b = 0; b < size; ++b) rel.push_back(Tuple{a, b});
    return Structure(kBinary, size, {std::move(rel)});
}

Structure random_binary(std::mt19937_64& gen, int size) {
    TupleSet rel;
    for (int a = 0; a < size; ++a)
        for (int b = 0; b < size; ++b)
            if (rng_bool(gen)) rel.push_back(Tuple{a, b});
    return Structure(kBinary, size, {std::move(rel)});
}

std::vector<int> random_permutation(std::mt19937_64& gen, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[static_cast<std::size_t>(i)],
                  perm[static_cast<std::size_t>(rng_below(gen, static_cast<std::uint64_t>(i) + 1))]);
    return perm;
}

// Every labeled poset on n points up to isomorphism, one representative each.
std::vector<FinitePoset> poset_representatives(int n) {
    std::vector<FinitePoset> reps;
    std::set<std::vector<std::uint8_t>> seen;
    for_each_poset(n, [&](const FinitePoset& p) {
        if (seen.insert(canonical_poset_key(p)).second) reps.push_back(p);
    });
    return reps;
}

Outcome criterion_finite_collapse(int jobs) {
    struct Case {
        RelationalLanguage language;
        int size;
    };
    const std::vector<Case> cases{{kBinary, 3}, {kUnary, 2}, {kUnary, 3}, {kUnary, 4}};
    long long pairs = 0;
    std::string witness_equality, witness_strictness;
    for (const Case& c : cases) {
        const Corpus corpus = generate_corpus(c.language, c.size);
        const PairGrid grid = classify_grid(corpus, jobs);
        pairs += static_cast<long long>(grid.count) * grid.count;
        const CollapseReport report = finite_collapse_check(corpus, grid);
        if (!report.passed) {
            std::ostringstream s;
            s << "corpus arity-" << c.language.arity(0) << " size " << c.size << ": "
              << report.failure;
            return fail(s.str());
        }
        const HierarchyReport hier = verify_hierarchy(corpus, grid);
        if (!hier.symmetric || !hier.transitive)
            return fail("similarity relations not all equivalences on a corpus");
        if (c.language == kBinary) {
            witness_equality = pair_text(report.equality_refinement_witness);
            witness_strictness = pair_text(report.isomorphism_strictness_witness);
        }
    }
    std::ostringstream s;
    s << cases.size() << " corpora, " << pairs
      << " ordered pairs; iso-beyond-equality witness " << witness_equality
      << ", full-beyond-iso witness " << witness_strictness;
    return pass(s.str());
}

Outcome criterion_equality_threshold(int jobs) {
    long long witnesses = 0;
    std::string sample;
    for (const RelationalLanguage& language : {kUnary, kBinary}) {
        const Corpus one = generate_corpus(language, 1);
        const PairGrid grid_one = classify_grid(one, jobs);
        for (int i = 0; i < grid_one.count; ++i)
            for (int j = 0; j < grid_one.count; ++j)
                if (grid_one.holds(0, i, j) != grid_one.holds(1, i, j))
                    return fail("one-point domain: equality and its refinement differ");

        const Corpus two = generate_corpus(language, 2);
        const PairGrid grid_two = classify_grid(two, jobs);
        bool separated = false;
        for (int i = 0; i < grid_two.count && !separated; ++i)
            for (int j = 0; j < grid_two.count && !separated; ++j)
                if (grid_two.holds(1, i, j) && !grid_two.holds(0, i, j)) {
                    separated = true;
                    ++witnesses;
                    std::ostringstream s;
                    s << "arity-" << language.arity(0) << " pair (" << i << "," << j << ")";
                    sample = s.str();
                }
        if (!separated)
            return fail("two-point domain: no pair separates the refinement from equality");
    }
    std::ostringstream s;
    s << "coincide on every 1-point pair; separated on 2 points, e.g. " << sample;
    return pass(s.str());
}

Outcome criterion_green_duality(int) {
    const Corpus corpus = generate_corpus(kBinary, 3);
    for (std::size_t i = 0; i < corpus.interpretations.size(); ++i) {
        const Structure& x = corpus.interpretations[i];
        const GreenQuotient green = green_quotient(x);
        const FinitePoset cp = copies_poset(x, x);
        if (!poset_iso(reversed_poset(green.order), cp)) {
            std::ostringstream s;
            s << "interpretation " << i << ": reversed divisibility order not isomorphic to "
              << "the copy poset";
            return fail(s.str());
        }
    }
    std::ostringstream s;
    s << corpus.interpretations.size()
      << " interpretations: reversed divisibility quotient = copy poset";
    return pass(s.str());
}

Outcome criterion_unary_block(int) {
    const std::vector<RelationalLanguage> languages{RelationalLanguage({1}),
                                                    RelationalLanguage({1, 1})};
    long long compared = 0, self_copy_checks = 0;
    for (const RelationalLanguage& language : languages) {
        std::vector<Corpus> by_size;
        for (int n = 1; n <= 4; ++n) by_size.push_back(generate_corpus(language, n));
        for (const Corpus& corpus : by_size)
            for (const Structure& x : corpus.interpretations) {
                std::vector<int> full(static_cast<std::size_t>(x.size));
                std::iota(full.begin(), full.end(), 0);
                if (copies(x, x).subsets != std::vector<std::vector<int>>{full})
                    return fail("a unary structure has self-copies besides the full domain");
                ++self_copy_checks;
            }
        for (int a = 1; a <= 4; ++a)
            for (int b = a; b <= 4; ++b)
                for (const Structure& x : by_size[static_cast<std::size_t>(a - 1)].interpretations)
                    for (const Structure& y :
                         by_size[static_cast<std::size_t>(b - 1)].interpretations) {
                        const auto lib = enumerate_embeddings(x, y).maps;
                        const auto blocks = oracles::unary_criterion_embeddings(x, y);
                        const auto brute = oracles::brute_embeddings(x, y);
                        if (lib != blocks || lib != brute)
                            return fail("block criterion, search, and brute filter disagree");
                        ++compared;
                    }
    }
    std::ostringstream s;
    s << compared << " pairs: block criterion = search = brute filter; " << self_copy_checks
      << " structures with only the full self-copy";
    return pass(s.str());
}

Outcome criterion_equimorphy(int) {
    long long equimorphic_pairs = 0, checked = 0;
    for (const RelationalLanguage& language : {kUnary, kBinary})
        for (int n = 1; n <= 3; ++n) {
            const Corpus corpus = generate_corpus(language, n);
            const int count = static_cast<int>(corpus.interpretations.size());
            for (int i = 0; i < count; ++i)
                for (int j = i + 1; j < count; ++j) {
                    ++checked;
                    const Structure& x = corpus.interpretations[static_cast<std::size_t>(i)];
                    const Structure& y = corpus.interpretations[static_cast<std::size_t>(j)];
                    if (!equimorphic(x, y)) continue;
                    ++equimorphic_pairs;
                    if (!isomorphic(x, y)) {
                        std::ostringstream s;
                        s << "equimorphic non-isomorphic pair (" << i << "," << j << "), arity-"
                          << language.arity(0) << " size " << n;
                        return fail(s.str());
                    }
                }
        }
    std::ostringstream s;
    s << checked << " pairs, " << equimorphic_pairs << " equimorphic, all isomorphic";
    return pass(s.str());
}

Outcome run_order_oracles(const FinitePoset& p, std::string& error) {
    const FinitePreorder star = sep_mod(p);
    if (!(star == oracles::brute_sep_mod(p))) {
        error = "separative modification differs from the quantifier evaluation";
        return fail(error);
    }
    const QuotientPoset quotient = sep_quotient(p);
    if (quotient.classes.blocks != oracles::brute_sep_classes(p).blocks) {
        error = "quotient classes differ from the mutual-order blocks";
        return fail(error);
    }
    if (!(quotient.order == oracles::brute_sep_quotient_order(p))) {
        error = "quotient order differs from the representative-order evaluation";
        return fail(error);
    }
    const RegularOpenAlgebra algebra = regular_open(p);
    if (algebra.carrier() != oracles::brute_regular_open_carrier(quotient.order)) {
        error = "completion carrier differs from the fixed-point enumeration";
        return fail(error);
    }
    const auto minimal = minimal_elements(quotient.order);
    if (algebra.atom_count() != static_cast<int>(minimal.size()) ||
        algebra.size() != (1 << minimal.size())) {
        error = "completion size is not 2^(minimal class count)";
        return fail(error);
    }
    return pass("");
}

Outcome criterion_order_oracles(std::uint64_t seed) {
    long long exhaustive = 0, randomized = 0;
    std::string error;
    for (int n = 1; n <= 5; ++n)
        for (const FinitePoset& p : poset_representatives(n)) {
            if (!run_order_oracles(p, error).passed) return fail(error);
            ++exhaustive;
        }
    std::mt19937_64 gen = make_rng(seed, 600);
    for (int t = 0; t < 1000; ++t) {
        const int n = 1 + static_cast<int>(rng_below(gen, 7));
        const FinitePoset p = random_poset(gen, n);
        if (!run_order_oracles(p, error).passed) return fail(error);
        ++randomized;
    }
    std::ostringstream s;
    s << exhaustive << " posets up to iso (n<=5) + " << randomized
      << " random (n<=7): modification, quotient, carrier, and atom count all match";
    return pass(s.str());
}

Outcome criterion_invariance_chain(std::uint64_t seed) {
    std::mt19937_64 gen = make_rng(seed, 700);
    for (int t = 0; t < 1000; ++t) {
        const int n = 1 + static_cast<int>(rng_below(gen, 7));
        const FinitePoset p = random_poset(gen, n);
        const FinitePoset q = relabel_poset(p, random_permutation(gen, n));
        if (!preorder_iso(sep_mod(p), sep_mod(q)))
            return fail("isomorphic posets with non-isomorphic separative modifications");
        if (!poset_iso(sep_quotient(p).order, sep_quotient(q).order))
            return fail("isomorphic posets with non-isomorphic separative quotients");
        const RegularOpenAlgebra bp = regular_open(p), bq = regular_open(q);
        if (!forcing_equiv_finite(p, q))
            return fail("isomorphic posets with different completion atom counts");
        if (bp.atom_count() <= 4 && !poset_iso(bp.carrier_poset(), bq.carrier_poset()))
            return fail("isomorphic posets with non-isomorphic completion carriers");
    }
    for (int t = 0; t < 1000; ++t) {
        const int a = 1 + static_cast<int>(rng_below(gen, 7));
        const int b = 1 + static_cast<int>(rng_below(gen, 7));
        const FinitePoset p = random_poset(gen, a), q = random_poset(gen, b);
        const FinitePoset direct = sep_quotient(product({p, q})).order;
        const FinitePoset factored = product({sep_quotient(p).order, sep_quotient(q).order});
        if (!poset_iso(direct, factored))
            return fail("quotient of a product differs from the product of quotients");
    }
    return pass("1000 relabeled pairs (n<=7): modification/quotient/completion isomorphism "
                "carried over; 1000 products: quotient commutes with the product");
}

Outcome criterion_homogeneity_transfer(int) {
    long long total = 0, quasi = 0;
    for (int n = 1; n <= 6; ++n)
        for_each_poset(n, [&](const FinitePoset& p) {
            ++total;
            if (!is_quasi_homogeneous(p)) return;
            ++quasi;
            if (!is_quasi_homogeneous(sep_quotient(p).order))
                throw std::logic_error("quasi-homogeneity lost by the separative quotient");
            if (!is_homogeneous_ba(regular_open(p)))
                throw std::logic_error("quasi-homogeneous poset with inhomogeneous completion");
        });
    if (quasi == 0) return fail("no quasi-homogeneous posets found (enumeration broken)");
    std::ostringstream s;
    s << total << " labeled posets (n<=6), " << quasi
      << " quasi-homogeneous: all keep the property in the quotient and have homogeneous "
         "completions";
    return pass(s.str());
}

Outcome criterion_surjection_transfer(int) {
    long long total = 0;
    for (int n = 1; n <= 6; ++n)
        for_each_poset(n, [&](const FinitePoset& p) {
            const QuotientPoset quotient = sep_quotient(p);
            const SurjectionTransferResult result =
                sq_surjection_transfer(p, quotient.order, quotient.projection);
            if (!result.hypotheses_hold)
                throw std::logic_error("canonical projection rejected by the hypothesis check");
            ++total;
        });
    std::ostringstream s;
    s << total << " labeled posets (n<=6): canonical projection passes both hypotheses and "
      << "induces the quotient isomorphism";
    return pass(s.str());
}

Outcome criterion_square_separation(int) {
    std::ostringstream s;
    for (int atoms = 2; atoms <= 4; ++atoms) {
        const RegularOpenAlgebra algebra = regular_open(antichain(atoms));
        if (algebra.atom_count() != atoms) return fail("antichain completion has wrong atom count");
        const FinitePoset positive = algebra.positive_part();
        const FinitePoset square = product({positive, positive});
        if (!partition_sentence_holds(positive))
            return fail("pairing sentence fails in the positive part");
        if (partition_sentence_holds(square))
            return fail("pairing sentence holds in the square");
        if (poset_iso(positive, square)) return fail("positive part isomorphic to its square");
        if (!check_square_distinct(algebra)) return fail("square-separation check rejected");
        s << (atoms > 2 ? ", " : "") << "2^" << atoms << ": |B+|=" << positive.size()
          << " vs |B+xB+|=" << square.size();
    }
    return pass("sentence true in B+, false in its square, posets non-isomorphic (" + s.str() +
                ")");
}

Outcome criterion_complement_connectivity(int) {
    long long checked = 0;
    for (int n : {3, 4}) {
        const Corpus corpus = generate_corpus(kBinary, n);
        for (const Structure& x : corpus.interpretations) {
            if (!is_connected(x) && !is_connected(complement(x)))
                return fail("a relation and its complement are both disconnected");
            ++checked;
        }
    }
    std::ostringstream s;
    s << checked << " binary relations on 3 and 4 points: relation or complement connected";
    return pass(s.str());
}

Outcome criterion_union_assembly(std::uint64_t seed) {
    std::mt19937_64 gen = make_rng(seed, 1200);
    long long instances = 0, matched_maps = 0;
    for (int t = 0; t < 200; ++t) {
        const int nx = 1 + static_cast<int>(rng_below(gen, 3));
        const int ny = 1 + static_cast<int>(rng_below(gen, 3));
        std::vector<Structure> parts_x, parts_y;
        for (int i = 0; i < nx; ++i)
            parts_x.push_back(random_connected_binary(gen, 1 + static_cast<int>(rng_below(gen, 3))));
        for (int j = 0; j < ny; ++j)
            parts_y.push_back(random_connected_binary(gen, 1 + static_cast<int>(rng_below(gen, 3))));
        DisjointUnionResult ux = disjoint_union(parts_x);
        DisjointUnionResult uy = disjoint_union(parts_y);
        if (ux.structure.size > uy.structure.size) {
            std::swap(parts_x, parts_y);
            std::swap(ux, uy);
        }
        std::vector<InjectionMap> direct = enumerate_embeddings(ux.structure, uy.structure).maps;
        std::sort(direct.begin(), direct.end());
        const std::vector<InjectionMap> assembled =
            oracles::assembled_union_embeddings(parts_x, parts_y);
        if (direct != assembled)
            return fail("direct union embeddings differ from the assembled families");
        for (const InjectionMap& f : direct) decompose_embedding(f, parts_x, parts_y);
        ++instances;
        matched_maps += static_cast<long long>(direct.size());
    }
    std::ostringstream s;
    s << instances << " random unions: assembled families = direct enumeration ("
      << matched_maps << " embeddings), all decompositions verified";
    return pass(s.str());
}

Outcome criterion_copy_transport(std::uint64_t seed) {
    std::mt19937_64 gen = make_rng(seed, 1300);
    long long transported = 0;
    for (int t = 0; t < 200; ++t) {
        const int nx = 1 + static_cast<int>(rng_below(gen, 3));
        const int ny = nx + static_cast<int>(rng_below(gen, static_cast<std::uint64_t>(5 - nx) + 1));
        const Structure x = random_binary(gen, nx);
        std::vector<int> targets = random_permutation(gen, ny);
        targets.resize(static_cast<std::size_t>(nx));
        const InjectionMap h(nx, ny, targets);
        // Host structure: the image carries exactly the relation of x; tuples
        // touching a point outside the image are free.
        std::vector<char> in_image(static_cast<std::size_t>(ny), 0);
        for (int v : targets) in_image[static_cast<std::size_t>(v)] = 1;
        TupleSet rel;
        for (const Tuple& tup : x.relations[0]) rel.push_back(Tuple{h(tup[0]), h(tup[1])});
        for (int a = 0; a < ny; ++a)
            for (int b = 0; b < ny; ++b) {
                if (in_image[static_cast<std::size_t>(a)] && in_image[static_cast<std::size_t>(b)])
                    continue;
                if (rng_bool(gen)) rel.push_back(Tuple{a, b});
            }
        const Structure y(kBinary, ny, {std::move(rel)});
        const CopyTransport transport = transport_copies(h, x, y);
        transported += static_cast<long long>(transport.pairs.size());
    }
    std::ostringstream s;
    s << "200 random hosts: push-forward is an order-isomorphism onto the principal down-set ("
      << transported << " copies moved)";
    return pass(s.str());
}

Outcome criterion_transfer_identities(std::uint64_t seed) {
    const RigidWitness theta3 =
        certify_rigid(Structure(kBinary, 3, {TupleSet{{0, 1}, {0, 2}, {1, 2}}}));
    const std::vector<RelationalLanguage> languages{RelationalLanguage({2}),
                                                    RelationalLanguage({3}),
                                                    RelationalLanguage({1, 2})};
    const std::vector<Structure> base2 = enumerate_int_star(2);
    long long exhaustive = 0;
    for (const RelationalLanguage& language : languages)
        for (const Structure& rho : base2)
            for (const Structure& sigma : base2) {
                const TransferIdentitiesReport identities =
                    verify_transfer_identities(rho, sigma, language, theta3);
                if (!identities.all_hold) {
                    for (const TransferIdentityCheck& check : identities.identities)
                        if (!check.holds) return fail("identity '" + check.name + "' failed");
                }
                const TransferPreservationReport preservation =
                    verify_preservation(rho, sigma, language, theta3);
                if (!preservation.all_match)
                    return fail("a similarity changed truth value across the transfer");
                ++exhaustive;
            }

    const RigidWitness theta4 = find_rigid_digraph(4);
    const std::vector<Structure> base3 = enumerate_int_star(3);
    std::mt19937_64 gen = make_rng(seed, 1400);
    long long sampled = 0;
    for (int t = 0; t < 12; ++t) {
        const Structure& rho = base3[static_cast<std::size_t>(rng_below(gen, base3.size()))];
        const Structure& sigma = base3[static_cast<std::size_t>(rng_below(gen, base3.size()))];
        const RelationalLanguage& language = languages[static_cast<std::size_t>(t % 3)];
        if (!verify_transfer_identities(rho, sigma, language, theta4).all_hold)
            return fail("an identity failed on a sampled 3-point base pair");
        if (!verify_preservation(rho, sigma, language, theta4).all_match)
            return fail("preservation failed on a sampled 3-point base pair");
        ++sampled;
    }
    std::ostringstream s;
    s << exhaustive << " exhaustive 2-point pairs across " << languages.size()
      << " target languages + " << sampled
      << " sampled 3-point pairs: all six identities hold and all twelve "
      << "similarities transfer";
    return pass(s.str());
}

Outcome criterion_rigidity(int) {
    std::ostringstream s;
    for (int m = 1; m <= 4; ++m) {
        const RigidWitness witness = find_rigid_digraph(m);
        const auto brute = oracles::brute_embeddings(witness.theta, witness.theta);
        if (brute.size() != 1 || !(brute.front() == identity_map(m)))
            return fail("brute filter found a non-identity self-embedding");
        if (witness.certificate != brute) return fail("certificate differs from the brute filter");
        s << (m > 1 ? ", " : "") << "m=" << m << ": "
          << witness.theta.relations[0].size() << " edges";
    }
    return pass("least rigid digraphs re-proved by the unpruned filter (" + s.str() + ")");
}

}  // namespace

SuiteResult run_all(std::ostream& out, std::uint64_t seed, int jobs) {
    struct Entry {
        int number;
        const char* name;
        std::function<Outcome()> run;
        double limit_ms;  // 0 = no budget
    };
    const std::vector<Entry> entries{
        {1, "finite-collapse", [&] { return criterion_finite_collapse(jobs); }, 180000},
        {2, "equality-vs-isomorphism-threshold",
         [&] { return criterion_equality_threshold(jobs); }, 0},
        {3, "green-order-duality", [&] { return criterion_green_duality(jobs); }, 0},
        {4, "unary-block-criterion", [&] { return criterion_unary_block(jobs); }, 0},
        {5, "equimorphism-implies-isomorphism", [&] { return criterion_equimorphy(jobs); }, 0},
        {6, "order-toolkit-oracles", [&] { return criterion_order_oracles(seed); }, 120000},
        {7, "invariance-chain-and-products", [&] { return criterion_invariance_chain(seed); }, 0},
        {8, "homogeneity-transfer", [&] { return criterion_homogeneity_transfer(jobs); }, 0},
        {9, "surjection-quotient-transfer", [&] { return criterion_surjection_transfer(jobs); }, 0},
        {10, "completion-square-separation", [&] { return criterion_square_separation(jobs); }, 0},
        {11, "complement-connectivity", [&] { return criterion_complement_connectivity(jobs); },
         60000},
        {12, "union-embedding-assembly", [&] { return criterion_union_assembly(seed); }, 0},
        {13, "copy-transport", [&] { return criterion_copy_transport(seed); }, 0},
        {14, "padding-transfer-identities", [&] { return criterion_transfer_identities(seed); },
         300000},
        {15, "rigid-digraph-search", [&] { return criterion_rigidity(jobs); }, 0},
    };

    SuiteResult suite;
    suite.all_passed = true;
    for (const Entry& entry : entries) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = entry.run();
        } catch (const std::exception& e) {
            outcome = fail(std::string("exception: ") + e.what());
        }
        const auto stop = std::chrono::steady_clock::now();
        const double ms = std::chrono::duration<double, std::milli>(stop - start).count();
        if (outcome.passed && entry.limit_ms > 0 && ms > entry.limit_ms) {
            std::ostringstream s;
            s << "correct but over the " << entry.limit_ms / 1000 << " s budget";
            outcome = fail(s.str());
        }
        CriterionResult result{entry.number, entry.name, outcome.passed, outcome.detail, ms};
        out << (result.passed ? "[PASS] " : "[FAIL] ") << (result.number < 10 ? "0" : "")
            << result.number << " " << result.name << ": " << result.detail << " ("
            << static_cast<long long>(ms + 0.5) << " ms)\n";
        out.flush();
        suite.all_passed = suite.all_passed && result.passed;
        suite.criteria.push_back(std::move(result));
    }
    int passed = 0;
    for (const CriterionResult& r : suite.criteria) passed += r.passed ? 1 : 0;
    out << "acceptance: " << passed << "/" << suite.criteria.size() << " criteria passed\n";
    return suite;
}

}  // namespace copieslab::acceptance
