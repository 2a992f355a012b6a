#include "copieslab/embeddings.hpp"

#include <algorithm>
#include <stdexcept>

namespace copieslab {

namespace {

// Backtracking over partial injections in source order.  A candidate target
// must dominate the source element's per-position tuple counts (embeddings
// never decrease them), and every tuple that becomes fully assigned is
// checked biconditionally right away.
class EmbeddingEnumerator {
  public:
    EmbeddingEnumerator(const Structure& x, const Structure& y) : x_(x), y_(y) {
        if (!(x.language == y.language))
            throw std::invalid_argument("enumerate_embeddings: structures over different languages");
        degx_ = degrees(x_);
        degy_ = degrees(y_);
    }

    std::vector<std::vector<int>> all() {
        run(false);
        return std::move(found_);
    }

    bool any() {
        run(true);
        return !found_.empty();
    }

  private:
    static std::vector<std::vector<std::vector<int>>> degrees(const Structure& s) {
        std::vector<std::vector<std::vector<int>>> deg(s.relations.size());
        for (std::size_t sym = 0; sym < s.relations.size(); ++sym) {
            deg[sym].assign(static_cast<std::size_t>(s.language.arity(static_cast<int>(sym))),
                            std::vector<int>(static_cast<std::size_t>(s.size), 0));
            for (const Tuple& t : s.relations[sym])
                for (std::size_t pos = 0; pos < t.size(); ++pos)
                    ++deg[sym][pos][static_cast<std::size_t>(t[pos])];
        }
        return deg;
    }

    bool dominated(int a, int b) const {
        for (std::size_t sym = 0; sym < degx_.size(); ++sym)
            for (std::size_t pos = 0; pos < degx_[sym].size(); ++pos)
                if (degx_[sym][pos][static_cast<std::size_t>(a)] >
                    degy_[sym][pos][static_cast<std::size_t>(b)])
                    return false;
        return true;
    }

    // Biconditional over the tuples whose last unassigned coordinate was k.
    bool consistent(int k) const {
        const int base = k + 1;
        for (int sym = 0; sym < x_.language.symbol_count(); ++sym) {
            const int ar = x_.language.arity(sym);
            Tuple t(static_cast<std::size_t>(ar), 0), ft(static_cast<std::size_t>(ar), 0);
            for (;;) {
                bool fresh = false;
                for (int i = 0; i < ar; ++i)
                    if (t[static_cast<std::size_t>(i)] == k) fresh = true;
                if (fresh) {
                    for (int i = 0; i < ar; ++i)
                        ft[static_cast<std::size_t>(i)] = map_[static_cast<std::size_t>(t[static_cast<std::size_t>(i)])];
                    if (x_.has_tuple(sym, t) != y_.has_tuple(sym, ft)) return false;
                }
                int i = ar - 1;
                while (i >= 0 && t[static_cast<std::size_t>(i)] == base - 1) {
                    t[static_cast<std::size_t>(i)] = 0;
                    --i;
                }
                if (i < 0) break;
                ++t[static_cast<std::size_t>(i)];
            }
        }
        return true;
    }

    bool extend(int k, bool stop_at_first) {
        if (k == x_.size) {
            found_.push_back(map_);
            return stop_at_first;
        }
        for (int b = 0; b < y_.size; ++b) {
            if (used_[static_cast<std::size_t>(b)] || !dominated(k, b)) continue;
            map_[static_cast<std::size_t>(k)] = b;
            used_[static_cast<std::size_t>(b)] = 1;
            if (consistent(k) && extend(k + 1, stop_at_first)) return true;
            used_[static_cast<std::size_t>(b)] = 0;
        }
        map_[static_cast<std::size_t>(k)] = -1;
        return false;
    }

    void run(bool stop_at_first) {
        found_.clear();
        if (x_.size > y_.size) return;
        map_.assign(static_cast<std::size_t>(x_.size), -1);
        used_.assign(static_cast<std::size_t>(y_.size), 0);
        extend(0, stop_at_first);
    }

    const Structure& x_;
    const Structure& y_;
    std::vector<std::vector<std::vector<int>>> degx_, degy_;
    std::vector<int> map_;
    std::vector<char> used_;
    std::vector<std::vector<int>> found_;
};

}  // namespace

std::vector<std::vector<int>> enumerate_embedding_maps(const Structure& x, const Structure& y) {
    return EmbeddingEnumerator(x, y).all();
}

EmbeddingSet enumerate_embeddings(const Structure& x, const Structure& y) {
    EmbeddingSet out{x, y, {}};
    for (auto& a : enumerate_embedding_maps(x, y))
        out.maps.emplace_back(x.size, y.size, std::move(a));
    return out;
}

EmbeddingSet enumerate_isos(const Structure& x, const Structure& y) {
    EmbeddingSet out{x, y, {}};
    if (x.size != y.size) return out;  // only bijections can be isomorphisms
    for (auto& a : enumerate_embedding_maps(x, y))
        out.maps.emplace_back(x.size, y.size, std::move(a));
    return out;
}

bool isomorphic(const Structure& x, const Structure& y) {
    if (x.size != y.size || !(x.language == y.language)) return false;
    return EmbeddingEnumerator(x, y).any();
}

EmbeddingSet automorphisms(const Structure& x) { return enumerate_isos(x, x); }

bool equimorphic(const Structure& x, const Structure& y) {
    return EmbeddingEnumerator(x, y).any() && EmbeddingEnumerator(y, x).any();
}

CopySet copies(const Structure& x, const Structure& y) {
    CopySet out;
    for (const auto& a : enumerate_embedding_maps(x, y)) {
        std::vector<int> image = a;
        std::sort(image.begin(), image.end());
        out.subsets.push_back(std::move(image));
    }
    std::sort(out.subsets.begin(), out.subsets.end());
    out.subsets.erase(std::unique(out.subsets.begin(), out.subsets.end()), out.subsets.end());

#ifndef NDEBUG
    {
        // Cross-check against the other characterization: subsets of y whose
        // induced substructure is isomorphic to x.
        std::vector<std::vector<int>> expected;
        std::vector<int> pick;
        auto choose = [&](auto&& self, int from) -> void {
            if (static_cast<int>(pick.size()) == x.size) {
                if (isomorphic(x, substructure(y, pick).structure)) expected.push_back(pick);
                return;
            }
            for (int v = from; v < y.size; ++v) {
                pick.push_back(v);
                self(self, v + 1);
                pick.pop_back();
            }
        };
        if (x.size <= y.size) choose(choose, 0);
        if (expected != out.subsets)
            throw std::logic_error("copies: image route and substructure route disagree");
    }
#endif
    return out;
}

FinitePoset copies_poset(const Structure& x, const Structure& y) {
    const CopySet cs = copies(x, y);
    const int n = static_cast<int>(cs.subsets.size());
    std::vector<std::uint8_t> m(static_cast<std::size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            m[static_cast<std::size_t>(a) * n + b] =
                std::includes(cs.subsets[static_cast<std::size_t>(b)].begin(),
                              cs.subsets[static_cast<std::size_t>(b)].end(),
                              cs.subsets[static_cast<std::size_t>(a)].begin(),
                              cs.subsets[static_cast<std::size_t>(a)].end())
                    ? 1
                    : 0;
    return FinitePoset(n, std::move(m));
}

GreenQuotient green_quotient(const Structure& x) {
    GreenQuotient out{enumerate_embeddings(x, x), {}, antichain(0), -1};
    const auto& maps = out.maps.maps;
    const int n = static_cast<int>(maps.size());
    if (n == 0) throw std::logic_error("green_quotient: identity embedding missing");

    // f <= g iff g factors through f on the right; the factor is f^{-1} o g
    // when it exists, and must itself embed.
    std::vector<std::uint8_t> below(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            InjectionMap h = identity_map(0);
            if (solve_right_factor(maps[static_cast<std::size_t>(i)], maps[static_cast<std::size_t>(j)], h) &&
                is_embedding(h, x, x))
                below[static_cast<std::size_t>(i) * n + j] = 1;
        }

    std::vector<int> proj(static_cast<std::size_t>(n), -1);
    std::vector<int> rep;
    for (int i = 0; i < n; ++i) {
        if (proj[static_cast<std::size_t>(i)] >= 0) continue;
        int c = static_cast<int>(rep.size());
        proj[static_cast<std::size_t>(i)] = c;
        rep.push_back(i);
        for (int j = i + 1; j < n; ++j)
            if (proj[static_cast<std::size_t>(j)] < 0 && below[static_cast<std::size_t>(i) * n + j] &&
                below[static_cast<std::size_t>(j) * n + i])
                proj[static_cast<std::size_t>(j)] = c;
    }
    const int k = static_cast<int>(rep.size());
    std::vector<std::uint8_t> m(static_cast<std::size_t>(k) * k, 0);
    for (int c = 0; c < k; ++c)
        for (int d = 0; d < k; ++d)
            m[static_cast<std::size_t>(c) * k + d] =
                below[static_cast<std::size_t>(rep[static_cast<std::size_t>(c)]) * n +
                      rep[static_cast<std::size_t>(d)]];
    out.order = FinitePoset(k, std::move(m));  // antisymmetry of the quotient

    out.classes.blocks.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < n; ++i)
        out.classes.blocks[static_cast<std::size_t>(proj[static_cast<std::size_t>(i)])].push_back(i);

    const InjectionMap id = identity_map(x.size);
    for (int i = 0; i < n; ++i)
        if (maps[static_cast<std::size_t>(i)] == id) out.identity_class = proj[static_cast<std::size_t>(i)];
    if (out.identity_class < 0) throw std::logic_error("green_quotient: identity embedding missing");
    for (int c = 0; c < k; ++c)
        if (!out.order.leq(c, out.identity_class))
            throw std::logic_error("green_quotient: identity class not the maximum");
    return out;
}

CopyTransport transport_copies(const InjectionMap& h, const Structure& x, const Structure& y) {
    if (!is_embedding(h, x, y))
        throw std::invalid_argument("transport_copies: the map is not an embedding");
    const CopySet self_copies = copies(x, x);
    const CopySet host_copies = copies(x, y);

    CopyTransport out;
    out.host_copy = h.image();
    for (const auto& a : self_copies.subsets) {
        std::vector<int> fa;
        fa.reserve(a.size());
        for (int v : a) fa.push_back(h(v));
        std::sort(fa.begin(), fa.end());
        out.pairs.emplace_back(a, std::move(fa));
    }

    // The push-forward must biject onto the principal down-set of h[x] and
    // match inclusion in both directions.
    std::vector<std::vector<int>> images;
    for (const auto& pr : out.pairs) images.push_back(pr.second);
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end())
        throw std::logic_error("transport_copies: push-forward not injective");
    std::vector<std::vector<int>> down;
    for (const auto& c : host_copies.subsets)
        if (std::includes(out.host_copy.begin(), out.host_copy.end(), c.begin(), c.end()))
            down.push_back(c);
    if (images != down)
        throw std::logic_error("transport_copies: image is not the principal down-set");
    for (const auto& [a1, f1] : out.pairs)
        for (const auto& [a2, f2] : out.pairs) {
            const bool inc_src = std::includes(a2.begin(), a2.end(), a1.begin(), a1.end());
            const bool inc_img = std::includes(f2.begin(), f2.end(), f1.begin(), f1.end());
            if (inc_src != inc_img)
                throw std::logic_error("transport_copies: inclusion not preserved both ways");
        }
    return out;
}

EmbeddingDecomposition decompose_embedding(const InjectionMap& f,
                                           const std::vector<Structure>& parts_x,
                                           const std::vector<Structure>& parts_y) {
    const DisjointUnionResult ux = disjoint_union(parts_x);
    const DisjointUnionResult uy = disjoint_union(parts_y);
    if (!is_embedding(f, ux.structure, uy.structure))
        throw std::invalid_argument("decompose_embedding: the map does not embed the union");

    std::vector<int> offset_x(parts_x.size()), offset_y(parts_y.size());
    for (std::size_t i = 0; i < parts_x.size(); ++i) offset_x[i] = ux.blocks.blocks[i].front();
    for (std::size_t j = 0; j < parts_y.size(); ++j) offset_y[j] = uy.blocks.blocks[j].front();

    EmbeddingDecomposition out;
    for (std::size_t i = 0; i < parts_x.size(); ++i) {
        int target_block = -1;
        std::vector<int> local(static_cast<std::size_t>(parts_x[i].size));
        for (int v = 0; v < parts_x[i].size; ++v) {
            const int image = f(offset_x[i] + v);
            const int j = uy.blocks.block_of(image);
            if (target_block < 0) target_block = j;
            if (j != target_block)
                throw std::logic_error("decompose_embedding: one part split across components");
            local[static_cast<std::size_t>(v)] = image - offset_y[static_cast<std::size_t>(j)];
        }
        out.block_map.push_back(target_block);
        InjectionMap g(parts_x[i].size, parts_y[static_cast<std::size_t>(target_block)].size,
                       std::move(local));
        if (!is_embedding(g, parts_x[i], parts_y[static_cast<std::size_t>(target_block)]))
            throw std::logic_error("decompose_embedding: restriction fails to embed");
        out.component_maps.push_back(std::move(g));
    }

    // Images of distinct parts must stay unrelated in the target union.
    for (std::size_t i = 0; i < parts_x.size(); ++i)
        for (std::size_t i2 = 0; i2 < parts_x.size(); ++i2) {
            if (i == i2) continue;
            for (int v = 0; v < parts_x[i].size; ++v)
                for (int w = 0; w < parts_x[i2].size; ++w) {
                    const Tuple t{f(offset_x[i] + v), f(offset_x[i2] + w)};
                    if (uy.structure.has_tuple(0, t))
                        throw std::logic_error("decompose_embedding: images of distinct parts touch");
                }
        }
    return out;
}

}  // namespace copieslab
