#include "copieslab/transfer.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "copieslab/embeddings.hpp"

namespace copieslab {

bool int_star_membership(const Structure& rho) { return is_connected(rho) && has_loop(rho); }

std::vector<Structure> enumerate_int_star(int size) {
    std::vector<Structure> out;
    Corpus corpus = generate_corpus(RelationalLanguage({2}), size);
    for (Structure& s : corpus.interpretations)
        if (int_star_membership(s)) out.push_back(std::move(s));
    return out;
}

namespace {

// Independent of the backtracking enumerator on purpose: every injection is
// generated and filtered, so rigidity certificates never inherit a search bug.
std::vector<InjectionMap> brute_self_embeddings(const Structure& x) {
    std::vector<int> perm(static_cast<std::size_t>(x.size));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<InjectionMap> found;
    do {
        InjectionMap f(x.size, x.size, perm);
        if (is_embedding(f, x, x)) found.push_back(std::move(f));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return found;
}

int least_wide_symbol(const RelationalLanguage& target) {
    for (int i = 0; i < target.symbol_count(); ++i)
        if (target.arity(i) >= 2) return i;
    return -1;
}

// pairs x kappa^{arity-2}: the pair fills the first two coordinates, every
// value combination fills the rest.
TupleSet pad_pairs(const TupleSet& pairs, int arity, int kappa) {
    long long count = static_cast<long long>(pairs.size());
    for (int i = 2; i < arity; ++i) {
        count *= kappa;
        if (count > (1ll << 22))
            throw UnsupportedSizeError("tau: padded relation would exceed 2^22 tuples");
    }
    TupleSet out;
    out.reserve(static_cast<std::size_t>(count));
    for (const Tuple& p : pairs) {
        Tuple t(static_cast<std::size_t>(arity), 0);
        t[0] = p[0];
        t[1] = p[1];
        for (;;) {
            out.push_back(t);
            int i = arity - 1;
            while (i >= 2 && t[static_cast<std::size_t>(i)] == kappa - 1) {
                t[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i < 2) break;
            ++t[static_cast<std::size_t>(i)];
        }
    }
    return out;
}

std::vector<int> lift_map(const std::vector<int>& f, int lambda, int kappa) {
    std::vector<int> g(static_cast<std::size_t>(kappa));
    for (int x = 0; x < kappa; ++x)
        g[static_cast<std::size_t>(x)] = x < lambda ? f[static_cast<std::size_t>(x)] : x;
    return g;
}

std::vector<int> lift_set(const std::vector<int>& c, int lambda, int kappa) {
    std::vector<int> d = c;
    for (int x = lambda; x < kappa; ++x) d.push_back(x);
    return d;
}

std::vector<std::vector<int>> sorted(std::vector<std::vector<int>> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

RigidWitness certify_rigid(const Structure& theta) {
    if (has_loop(theta)) throw std::invalid_argument("certify_rigid: digraph must be irreflexive");
    if (!is_connected(theta)) throw std::invalid_argument("certify_rigid: digraph must be connected");
    if (theta.size > 8) throw UnsupportedSizeError("certify_rigid: brute filter bounded to 8 points");
    std::vector<InjectionMap> maps = brute_self_embeddings(theta);
    if (maps.size() != 1 || !(maps.front() == identity_map(theta.size)))
        throw std::invalid_argument("certify_rigid: digraph has a non-identity self-embedding");
    return {theta, std::move(maps)};
}

RigidWitness find_rigid_digraph(int m) {
    if (m < 1) throw std::invalid_argument("find_rigid_digraph: need at least one point");
    if (m > 5) throw UnsupportedSizeError("find_rigid_digraph: exhaustive search bounded to 5 points");
    const RelationalLanguage binary({2});
    const std::uint64_t total = std::uint64_t{1} << (m * m);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        bool diagonal = false;
        for (int a = 0; a < m && !diagonal; ++a)
            if ((mask >> (a * m + a)) & 1u) diagonal = true;
        if (diagonal) continue;
        TupleSet edges;
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                if ((mask >> (a * m + b)) & 1u) edges.push_back({a, b});
        Structure theta(binary, m, {std::move(edges)});
        if (!is_connected(theta)) continue;
        if (enumerate_embedding_maps(theta, theta).size() != 1) continue;
        return certify_rigid(theta);  // independent re-proof of the fast search
    }
    throw std::logic_error("find_rigid_digraph: search space exhausted without a witness");
}

TransferResult tau(const Structure& rho, const RelationalLanguage& target, const RigidWitness& theta) {
    if (!int_star_membership(rho))
        throw std::invalid_argument("tau: base must be connected and carry a loop");
    const int i0 = least_wide_symbol(target);
    if (i0 < 0)
        throw std::invalid_argument("tau: the target language must contain a symbol of arity at least 2");
    if (theta.theta.size <= rho.size)
        throw std::invalid_argument(
            "tau: the digraph must have more points than the base domain, or it could embed into it");
    certify_rigid(theta.theta);  // certificates are re-proved on every use

    const int lambda = rho.size;
    const int kappa = lambda + theta.theta.size;
    TupleSet pi = rho.relations[0];
    for (const Tuple& e : theta.theta.relations[0]) pi.push_back({e[0] + lambda, e[1] + lambda});

    std::vector<TupleSet> rels(static_cast<std::size_t>(target.symbol_count()));
    rels[static_cast<std::size_t>(i0)] = pad_pairs(pi, target.arity(i0), kappa);
    return {lambda, kappa, i0, Structure(target, kappa, std::move(rels))};
}

TransferResult tau_self(const Structure& rho, const RelationalLanguage& target) {
    if (!int_star_membership(rho))
        throw std::invalid_argument("tau_self: base must be connected and carry a loop");
    const int i0 = least_wide_symbol(target);
    if (i0 < 0)
        throw std::invalid_argument(
            "tau_self: the target language must contain a symbol of arity at least 2");
    const int lambda = rho.size;
    std::vector<TupleSet> rels(static_cast<std::size_t>(target.symbol_count()));
    rels[static_cast<std::size_t>(i0)] = pad_pairs(rho.relations[0], target.arity(i0), lambda);
    return {lambda, lambda, i0, Structure(target, lambda, std::move(rels))};
}

TransferIdentitiesReport verify_transfer_identities(const Structure& rho, const Structure& sigma,
                                                    const RelationalLanguage& target,
                                                    const RigidWitness& theta) {
    if (rho.size != sigma.size)
        throw std::invalid_argument("verify_transfer_identities: base structures must share a domain");
    if (!int_star_membership(sigma))
        throw std::invalid_argument("verify_transfer_identities: second base not admissible");

    TransferIdentitiesReport report{tau(rho, target, theta), tau(sigma, target, theta), {}, false};
    const int lambda = report.tau_rho.lambda;
    const int kappa = report.tau_rho.kappa;

    const auto check_maps = [&](const std::string& name, const Structure& tx, const Structure& ty,
                                std::vector<std::vector<int>> base_maps) {
        std::vector<std::vector<int>> lifted;
        lifted.reserve(base_maps.size());
        for (const auto& f : base_maps) lifted.push_back(lift_map(f, lambda, kappa));
        const auto transferred = sorted(enumerate_embedding_maps(tx, ty));
        lifted = sorted(std::move(lifted));
        report.identities.push_back({name, transferred == lifted,
                                     static_cast<long long>(transferred.size()),
                                     static_cast<long long>(lifted.size())});
    };
    const auto check_copies = [&](const std::string& name, const Structure& tx, const Structure& ty,
                                  std::vector<std::vector<int>> base_copies) {
        std::vector<std::vector<int>> lifted;
        lifted.reserve(base_copies.size());
        for (const auto& c : base_copies) lifted.push_back(lift_set(c, lambda, kappa));
        const auto transferred = sorted(copies(tx, ty).subsets);
        lifted = sorted(std::move(lifted));
        report.identities.push_back({name, transferred == lifted,
                                     static_cast<long long>(transferred.size()),
                                     static_cast<long long>(lifted.size())});
    };

    const Structure& tr = report.tau_rho.tau;
    const Structure& ts = report.tau_sigma.tau;
    check_maps("embeddings-between", tr, ts, enumerate_embedding_maps(rho, sigma));
    {
        std::vector<std::vector<int>> base_isos, transferred_isos;
        for (const auto& f : enumerate_isos(rho, sigma).maps)
            base_isos.push_back(lift_map(f.assignment, lambda, kappa));
        for (const auto& f : enumerate_isos(tr, ts).maps) transferred_isos.push_back(f.assignment);
        base_isos = sorted(std::move(base_isos));
        transferred_isos = sorted(std::move(transferred_isos));
        report.identities.push_back({"isomorphisms-between", transferred_isos == base_isos,
                                     static_cast<long long>(transferred_isos.size()),
                                     static_cast<long long>(base_isos.size())});
    }
    check_copies("copies-between", tr, ts, copies(rho, sigma).subsets);
    check_maps("self-embeddings", tr, tr, enumerate_embedding_maps(rho, rho));
    {
        std::vector<std::vector<int>> base_auts, transferred_auts;
        for (const auto& f : automorphisms(rho).maps)
            base_auts.push_back(lift_map(f.assignment, lambda, kappa));
        for (const auto& f : automorphisms(tr).maps) transferred_auts.push_back(f.assignment);
        base_auts = sorted(std::move(base_auts));
        transferred_auts = sorted(std::move(transferred_auts));
        report.identities.push_back({"automorphisms", transferred_auts == base_auts,
                                     static_cast<long long>(transferred_auts.size()),
                                     static_cast<long long>(base_auts.size())});
    }
    check_copies("self-copies", tr, tr, copies(rho, rho).subsets);

    report.all_hold = true;
    for (const auto& id : report.identities)
        if (!id.holds) report.all_hold = false;
    return report;
}

TransferPreservationReport verify_preservation(const Structure& rho, const Structure& sigma,
                                               const RelationalLanguage& target,
                                               const RigidWitness& theta) {
    if (rho.size != sigma.size)
        throw std::invalid_argument("verify_preservation: base structures must share a domain");
    if (!int_star_membership(sigma))
        throw std::invalid_argument("verify_preservation: second base not admissible");

    TransferPreservationReport report{tau(rho, target, theta), tau(sigma, target, theta), {}, false};
    const SimilarityVector base = classify_pair(rho, sigma);
    const SimilarityVector lifted = classify_pair(report.tau_rho.tau, report.tau_sigma.tau);

    report.all_match = true;
    for (int k = 0; k < kSimilarityCount; ++k) {
        const bool direct = k == 0 || k == 3 || k == 4 || k == 6 || k == 8 || k == 9 || k == 10;
        PreservationCheck check{k, base.holds[static_cast<std::size_t>(k)],
                                lifted.holds[static_cast<std::size_t>(k)], false, direct};
        check.matches = check.base_holds == check.transferred_holds;
        if (!check.matches) report.all_match = false;
        report.checks.push_back(check);
    }
    return report;
}

NormalizationReport verify_normalization(const Structure& rho) {
    NormalizationReport report{
        rho, normalize_to_int_star(rho),
        TransferResult{0, 0, -1,
                       Structure(rho.language, 1,
                                 std::vector<TupleSet>(
                                     static_cast<std::size_t>(rho.language.symbol_count())))},
        false, false, false, false};
    report.copy_sets_equal =
        copies(rho, rho).subsets == copies(report.normalized, report.normalized).subsets;

    const RigidWitness theta = find_rigid_digraph(rho.size + 1);
    report.tau_normalized = tau(report.normalized, rho.language, theta);
    const int lambda = report.tau_normalized.lambda;
    const int kappa = report.tau_normalized.kappa;

    const auto base_copies = copies(report.normalized, report.normalized).subsets;
    std::vector<std::vector<int>> lifted;
    for (const auto& c : base_copies) lifted.push_back(lift_set(c, lambda, kappa));
    lifted = sorted(std::move(lifted));
    const auto transferred = sorted(copies(report.tau_normalized.tau, report.tau_normalized.tau).subsets);
    report.lifted_copies_match = transferred == lifted;

    // The lift is inclusion-preserving in both directions, so matching copy
    // sets give isomorphic copy posets.
    report.poset_isomorphic = report.lifted_copies_match;
    for (std::size_t a = 0; a < base_copies.size() && report.poset_isomorphic; ++a)
        for (std::size_t b = 0; b < base_copies.size(); ++b) {
            const bool base_inc = std::includes(base_copies[b].begin(), base_copies[b].end(),
                                                base_copies[a].begin(), base_copies[a].end());
            const auto la = lift_set(base_copies[a], lambda, kappa);
            const auto lb = lift_set(base_copies[b], lambda, kappa);
            const bool lift_inc = std::includes(lb.begin(), lb.end(), la.begin(), la.end());
            if (base_inc != lift_inc) {
                report.poset_isomorphic = false;
                break;
            }
        }

    report.passed = report.copy_sets_equal && report.lifted_copies_match && report.poset_isomorphic;
    return report;
}

}  // namespace copieslab
