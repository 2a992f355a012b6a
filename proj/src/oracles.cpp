#include "copieslab/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace copieslab::oracles {

namespace {

// All injections {0..k-1} -> {0..n-1} in lexicographic assignment order.
void for_each_injection(int k, int n, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> assignment;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::function<void()> step = [&] {
        if (static_cast<int>(assignment.size()) == k) {
            fn(assignment);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            used[static_cast<std::size_t>(v)] = 1;
            assignment.push_back(v);
            step();
            assignment.pop_back();
            used[static_cast<std::size_t>(v)] = 0;
        }
    };
    step();
}

}  // namespace

std::vector<InjectionMap> brute_embeddings(const Structure& x, const Structure& y) {
    if (!(x.language == y.language))
        throw std::invalid_argument("brute_embeddings: language mismatch");
    std::vector<InjectionMap> out;
    if (x.size > y.size) return out;
    for_each_injection(x.size, y.size, [&](const std::vector<int>& assignment) {
        InjectionMap f{x.size, y.size, assignment};
        if (is_embedding(f, x, y)) out.push_back(std::move(f));
    });
    return out;
}

std::vector<std::vector<int>> brute_copies(const Structure& x, const Structure& y) {
    std::vector<std::vector<int>> images;
    for (const InjectionMap& f : brute_embeddings(x, y)) images.push_back(f.image());
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    return images;
}

std::vector<InjectionMap> unary_criterion_embeddings(const Structure& x, const Structure& y) {
    if (!(x.language == y.language))
        throw std::invalid_argument("unary_criterion_embeddings: language mismatch");
    if (!x.language.all_unary())
        throw std::invalid_argument("unary_criterion_embeddings: needs an all-unary language");
    auto signature = [](const Structure& s, int a) {
        std::uint32_t sig = 0;
        for (int i = 0; i < s.language.symbol_count(); ++i)
            if (s.has_tuple(i, Tuple{a})) sig |= 1u << i;
        return sig;
    };
    std::vector<std::uint32_t> sig_x(static_cast<std::size_t>(x.size)),
        sig_y(static_cast<std::size_t>(y.size));
    for (int a = 0; a < x.size; ++a) sig_x[static_cast<std::size_t>(a)] = signature(x, a);
    for (int b = 0; b < y.size; ++b) sig_y[static_cast<std::size_t>(b)] = signature(y, b);

    std::vector<InjectionMap> out;
    if (x.size > y.size) return out;
    for_each_injection(x.size, y.size, [&](const std::vector<int>& assignment) {
        for (int a = 0; a < x.size; ++a)
            if (sig_x[static_cast<std::size_t>(a)] !=
                sig_y[static_cast<std::size_t>(assignment[static_cast<std::size_t>(a)])])
                return;
        out.push_back(InjectionMap{x.size, y.size, assignment});
    });
    return out;
}

FinitePreorder brute_sep_mod(const FinitePoset& p) {
    const int n = p.size();
    std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            bool star = true;
            for (int r = 0; r < n && star; ++r) {
                if (!p.leq(r, a)) continue;
                bool shares = false;
                for (int s = 0; s < n && !shares; ++s)
                    if (p.leq(s, r) && p.leq(s, b)) shares = true;
                if (!shares) star = false;
            }
            if (star) leq[static_cast<std::size_t>(a) * n + b] = 1;
        }
    return FinitePreorder(n, std::move(leq));
}

Partition brute_sep_classes(const FinitePoset& p) {
    const FinitePreorder star = brute_sep_mod(p);
    const int n = p.size();
    std::vector<char> placed(static_cast<std::size_t>(n), 0);
    Partition classes;
    for (int a = 0; a < n; ++a) {
        if (placed[static_cast<std::size_t>(a)]) continue;
        std::vector<int> block;
        for (int b = a; b < n; ++b)
            if (!placed[static_cast<std::size_t>(b)] && star.leq(a, b) && star.leq(b, a)) {
                placed[static_cast<std::size_t>(b)] = 1;
                block.push_back(b);
            }
        classes.blocks.push_back(std::move(block));
    }
    return classes;
}

FinitePoset brute_sep_quotient_order(const FinitePoset& p) {
    const FinitePreorder star = brute_sep_mod(p);
    const Partition classes = brute_sep_classes(p);
    const int k = static_cast<int>(classes.blocks.size());
    std::vector<std::uint8_t> leq(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), 0);
    for (int c = 0; c < k; ++c)
        for (int d = 0; d < k; ++d)
            if (star.leq(classes.blocks[static_cast<std::size_t>(c)].front(),
                         classes.blocks[static_cast<std::size_t>(d)].front()))
                leq[static_cast<std::size_t>(c) * k + d] = 1;
    return FinitePoset(k, std::move(leq));
}

std::vector<std::uint64_t> brute_regular_open_carrier(const FinitePoset& p) {
    const int n = p.size();
    if (n > 16) throw UnsupportedSizeError("brute_regular_open_carrier: supports n <= 16");
    auto closure = [&](std::uint64_t set) {  // up-closure: the closed sets are up-sets
        std::uint64_t out = 0;
        for (int b = 0; b < n; ++b)
            for (int a = 0; a < n; ++a)
                if ((set >> a & 1u) && p.leq(a, b)) { out |= std::uint64_t{1} << b; break; }
        return out;
    };
    auto interior = [&](std::uint64_t set) {  // largest down-set inside
        std::uint64_t out = 0;
        for (int b = 0; b < n; ++b) {
            bool inside = true;
            for (int a = 0; a < n && inside; ++a)
                if (p.leq(a, b) && !(set >> a & 1u)) inside = false;
            if (inside) out |= std::uint64_t{1} << b;
        }
        return out;
    };
    std::vector<std::uint64_t> carrier;
    for (std::uint64_t set = 0; set < (std::uint64_t{1} << n); ++set)
        if (interior(closure(set)) == set) carrier.push_back(set);
    std::sort(carrier.begin(), carrier.end(), [](std::uint64_t a, std::uint64_t b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    return carrier;
}

bool brute_poset_iso(const FinitePoset& p, const FinitePoset& q) {
    if (p.size() != q.size()) return false;
    const int n = p.size();
    if (n > 8) throw UnsupportedSizeError("brute_poset_iso: supports n <= 8");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b)
                if (p.leq(a, b) != q.leq(perm[static_cast<std::size_t>(a)],
                                         perm[static_cast<std::size_t>(b)]))
                    ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

bool brute_quasi_homogeneous(const FinitePoset& p) {
    const int n = p.size();
    if (n > 6) throw UnsupportedSizeError("brute_quasi_homogeneous: supports n <= 6");
    if (n == 0) return true;

    // dense within the sub-poset carried by `ground` (a bitmask): below every
    // ground element lies an element of `set`.
    auto dense_in = [&](std::uint32_t set, std::uint32_t ground) {
        for (int q = 0; q < n; ++q) {
            if (!(ground >> q & 1u)) continue;
            bool hit = false;
            for (int d = 0; d < n && !hit; ++d)
                if ((set >> d & 1u) && p.leq(d, q)) hit = true;
            if (!hit) return false;
        }
        return true;
    };
    auto members = [&](std::uint32_t set) {
        std::vector<int> out;
        for (int a = 0; a < n; ++a)
            if (set >> a & 1u) out.push_back(a);
        return out;
    };
    const std::uint32_t full = (1u << n) - 1;

    for (std::uint32_t d = 1; d <= full; ++d) {
        if (!dense_in(d, full)) continue;
        const FinitePoset on_d = restrict_poset(p, members(d));
        bool works_everywhere = true;
        for (int a = 0; a < n && works_everywhere; ++a) {
            std::uint32_t ground = 0;
            for (int b = 0; b < n; ++b)
                if (p.leq(b, a)) ground |= 1u << b;
            bool found = false;
            for (std::uint32_t e = 1; e <= full && !found; ++e) {
                if ((e & ~ground) != 0 || !dense_in(e, ground)) continue;
                if (std::popcount(e) != std::popcount(d)) continue;
                if (brute_poset_iso(on_d, restrict_poset(p, members(e)))) found = true;
            }
            if (!found) works_everywhere = false;
        }
        if (works_everywhere) return true;
    }
    return false;
}

std::vector<InjectionMap> assembled_union_embeddings(const std::vector<Structure>& parts_x,
                                                     const std::vector<Structure>& parts_y) {
    const DisjointUnionResult ux = disjoint_union(parts_x);
    const DisjointUnionResult uy = disjoint_union(parts_y);
    const int nx = static_cast<int>(parts_x.size());
    const int ny = static_cast<int>(parts_y.size());

    std::vector<int> off_x(static_cast<std::size_t>(nx)), off_y(static_cast<std::size_t>(ny));
    for (int i = 0; i < nx; ++i) off_x[static_cast<std::size_t>(i)] = ux.blocks.blocks[static_cast<std::size_t>(i)].front();
    for (int j = 0; j < ny; ++j) off_y[static_cast<std::size_t>(j)] = uy.blocks.blocks[static_cast<std::size_t>(j)].front();

    // Per-part embedding pools, X part i into Y part j.
    std::vector<std::vector<std::vector<InjectionMap>>> pool(static_cast<std::size_t>(nx));
    for (int i = 0; i < nx; ++i) {
        pool[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(ny));
        for (int j = 0; j < ny; ++j)
            pool[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                brute_embeddings(parts_x[static_cast<std::size_t>(i)], parts_y[static_cast<std::size_t>(j)]);
    }

    std::vector<InjectionMap> out;
    std::vector<int> block_map(static_cast<std::size_t>(nx), 0);   // i -> target part
    std::vector<int> choice(static_cast<std::size_t>(nx), 0);      // i -> pool index

    auto emit_candidates = [&] {
        // Odometer over per-part embedding choices for the fixed block map.
        for (int i = 0; i < nx; ++i)
            if (pool[static_cast<std::size_t>(i)][static_cast<std::size_t>(block_map[static_cast<std::size_t>(i)])].empty())
                return;
        std::fill(choice.begin(), choice.end(), 0);
        while (true) {
            std::vector<int> assignment(static_cast<std::size_t>(ux.structure.size));
            for (int i = 0; i < nx; ++i) {
                const InjectionMap& g =
                    pool[static_cast<std::size_t>(i)][static_cast<std::size_t>(block_map[static_cast<std::size_t>(i)])]
                        [static_cast<std::size_t>(choice[static_cast<std::size_t>(i)])];
                for (int k = 0; k < g.source_size; ++k)
                    assignment[static_cast<std::size_t>(off_x[static_cast<std::size_t>(i)] + k)] =
                        off_y[static_cast<std::size_t>(block_map[static_cast<std::size_t>(i)])] + g.assignment[static_cast<std::size_t>(k)];
            }
            std::vector<char> used(static_cast<std::size_t>(uy.structure.size), 0);
            bool ok = true;
            for (int v : assignment) {
                if (used[static_cast<std::size_t>(v)]) { ok = false; break; }
                used[static_cast<std::size_t>(v)] = 1;
            }
            // Cross-part pairs may not land on any edge of the target union.
            for (int i = 0; i < nx && ok; ++i)
                for (int i2 = 0; i2 < nx && ok; ++i2) {
                    if (i == i2) continue;
                    for (int a : ux.blocks.blocks[static_cast<std::size_t>(i)]) {
                        for (int b : ux.blocks.blocks[static_cast<std::size_t>(i2)])
                            if (uy.structure.has_tuple(0, Tuple{assignment[static_cast<std::size_t>(a)],
                                                                assignment[static_cast<std::size_t>(b)]})) {
                                ok = false;
                                break;
                            }
                        if (!ok) break;
                    }
                }
            if (ok) out.push_back(InjectionMap{ux.structure.size, uy.structure.size, assignment});

            int i = nx - 1;
            while (i >= 0) {
                const auto& options =
                    pool[static_cast<std::size_t>(i)][static_cast<std::size_t>(block_map[static_cast<std::size_t>(i)])];
                if (++choice[static_cast<std::size_t>(i)] < static_cast<int>(options.size())) break;
                choice[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
        }
    };

    // Odometer over block maps I -> J.
    while (true) {
        emit_candidates();
        int i = nx - 1;
        while (i >= 0) {
            if (++block_map[static_cast<std::size_t>(i)] < ny) break;
            block_map[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace copieslab::oracles
