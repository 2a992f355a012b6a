#include "copieslab/structure.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace copieslab {

RelationalLanguage::RelationalLanguage(std::vector<int> a) : arities(std::move(a)) {
    if (arities.empty()) throw std::invalid_argument("language: needs at least one symbol");
    for (int n : arities)
        if (n < 1) throw std::invalid_argument("language: arities must be positive");
}

bool RelationalLanguage::all_unary() const {
    return std::all_of(arities.begin(), arities.end(), [](int n) { return n == 1; });
}

Structure::Structure(RelationalLanguage lang, int n, std::vector<TupleSet> rels)
    : language(std::move(lang)), size(n), relations(std::move(rels)) {
    if (size < 1) throw std::invalid_argument("structure: domain must be non-empty");
    if (static_cast<int>(relations.size()) != language.symbol_count())
        throw std::invalid_argument("structure: one relation per language symbol required");
    for (int i = 0; i < language.symbol_count(); ++i) {
        auto& rel = relations[static_cast<std::size_t>(i)];
        for (const Tuple& t : rel) {
            if (static_cast<int>(t.size()) != language.arity(i))
                throw std::invalid_argument("structure: tuple length differs from symbol arity");
            for (int v : t)
                if (v < 0 || v >= size)
                    throw std::invalid_argument("structure: tuple entry outside the domain");
        }
        std::sort(rel.begin(), rel.end());
        rel.erase(std::unique(rel.begin(), rel.end()), rel.end());
    }
}

bool Structure::has_tuple(int symbol, const Tuple& t) const {
    const TupleSet& rel = relations[static_cast<std::size_t>(symbol)];
    return std::binary_search(rel.begin(), rel.end(), t);
}

long long Structure::tuple_count() const {
    long long total = 0;
    for (const auto& rel : relations) total += static_cast<long long>(rel.size());
    return total;
}

InjectionMap::InjectionMap(int source, int target, std::vector<int> a)
    : source_size(source), target_size(target), assignment(std::move(a)) {
    if (source < 0 || target < 0 || static_cast<int>(assignment.size()) != source)
        throw std::invalid_argument("injection: assignment length differs from source size");
    std::vector<char> used(static_cast<std::size_t>(target), 0);
    for (int v : assignment) {
        if (v < 0 || v >= target) throw std::invalid_argument("injection: value outside target");
        if (used[static_cast<std::size_t>(v)]) throw std::invalid_argument("injection: not injective");
        used[static_cast<std::size_t>(v)] = 1;
    }
}

std::vector<int> InjectionMap::image() const {
    std::vector<int> im = assignment;
    std::sort(im.begin(), im.end());
    return im;
}

InjectionMap compose(const InjectionMap& g, const InjectionMap& f) {
    if (f.target_size != g.source_size)
        throw std::invalid_argument("compose: inner target differs from outer source");
    std::vector<int> a(static_cast<std::size_t>(f.source_size));
    for (int x = 0; x < f.source_size; ++x) a[static_cast<std::size_t>(x)] = g(f(x));
    return InjectionMap(f.source_size, g.target_size, std::move(a));
}

bool solve_right_factor(const InjectionMap& f, const InjectionMap& g, InjectionMap& h) {
    if (f.target_size != g.target_size || f.source_size > g.target_size) return false;
    std::vector<int> inverse(static_cast<std::size_t>(f.target_size), -1);
    for (int x = 0; x < f.source_size; ++x) inverse[static_cast<std::size_t>(f(x))] = x;
    std::vector<int> a(static_cast<std::size_t>(g.source_size));
    for (int x = 0; x < g.source_size; ++x) {
        int pre = inverse[static_cast<std::size_t>(g(x))];
        if (pre < 0) return false;  // g(x) misses the image of f
        a[static_cast<std::size_t>(x)] = pre;
    }
    h = InjectionMap(g.source_size, f.source_size, std::move(a));
    return true;
}

InjectionMap identity_map(int n) {
    std::vector<int> a(static_cast<std::size_t>(n));
    std::iota(a.begin(), a.end(), 0);
    return InjectionMap(n, n, std::move(a));
}

int Partition::block_of(int x) const {
    for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
        if (std::binary_search(blocks[static_cast<std::size_t>(b)].begin(),
                               blocks[static_cast<std::size_t>(b)].end(), x))
            return b;
    return -1;
}

SubstructureResult substructure(const Structure& y, const std::vector<int>& elements) {
    if (elements.empty()) throw std::invalid_argument("substructure: empty element set");
    std::vector<int> labels = elements;
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    if (labels.size() != elements.size())
        throw std::invalid_argument("substructure: repeated element");
    if (labels.front() < 0 || labels.back() >= y.size)
        throw std::invalid_argument("substructure: element outside the domain");

    std::vector<int> position(static_cast<std::size_t>(y.size), -1);
    for (int i = 0; i < static_cast<int>(labels.size()); ++i)
        position[static_cast<std::size_t>(labels[static_cast<std::size_t>(i)])] = i;

    std::vector<TupleSet> rels(y.relations.size());
    for (std::size_t s = 0; s < y.relations.size(); ++s) {
        for (const Tuple& t : y.relations[s]) {
            Tuple mapped;
            mapped.reserve(t.size());
            bool inside = true;
            for (int v : t) {
                int p = position[static_cast<std::size_t>(v)];
                if (p < 0) { inside = false; break; }
                mapped.push_back(p);
            }
            if (inside) rels[s].push_back(std::move(mapped));
        }
    }
    return SubstructureResult{Structure(y.language, static_cast<int>(labels.size()), std::move(rels)),
                              std::move(labels)};
}

bool is_embedding(const InjectionMap& f, const Structure& x, const Structure& y) {
    if (!(x.language == y.language))
        throw std::invalid_argument("is_embedding: structures over different languages");
    if (f.source_size != x.size || f.target_size != y.size)
        throw std::invalid_argument("is_embedding: map endpoints differ from the structures");

    for (int s = 0; s < x.language.symbol_count(); ++s) {
        const int ar = x.language.arity(s);
        Tuple t(static_cast<std::size_t>(ar), 0), ft(static_cast<std::size_t>(ar), 0);
        // Odometer over all |X|^ar tuples; the biconditional must hold on each.
        for (;;) {
            for (int k = 0; k < ar; ++k)
                ft[static_cast<std::size_t>(k)] = f(t[static_cast<std::size_t>(k)]);
            if (x.has_tuple(s, t) != y.has_tuple(s, ft)) return false;
            int k = ar - 1;
            while (k >= 0 && t[static_cast<std::size_t>(k)] == x.size - 1) {
                t[static_cast<std::size_t>(k)] = 0;
                --k;
            }
            if (k < 0) break;
            ++t[static_cast<std::size_t>(k)];
        }
    }
    return true;
}

namespace {

void require_single_binary(const Structure& x, const char* who) {
    if (x.language.arities != std::vector<int>{2})
        throw std::invalid_argument(std::string(who) + ": needs the one-binary-symbol language");
}

}  // namespace

Structure complement(const Structure& x) {
    require_single_binary(x, "complement");
    TupleSet rel;
    for (int a = 0; a < x.size; ++a)
        for (int b = 0; b < x.size; ++b) {
            Tuple t{a, b};
            if (!x.has_tuple(0, t)) rel.push_back(std::move(t));
        }
    return Structure(x.language, x.size, {std::move(rel)});
}

Structure reflexify(const Structure& x) {
    require_single_binary(x, "reflexify");
    TupleSet rel = x.relations[0];
    for (int a = 0; a < x.size; ++a) rel.push_back(Tuple{a, a});
    return Structure(x.language, x.size, {std::move(rel)});
}

Structure irreflexify(const Structure& x) {
    require_single_binary(x, "irreflexify");
    TupleSet rel;
    for (const Tuple& t : x.relations[0])
        if (t[0] != t[1]) rel.push_back(t);
    return Structure(x.language, x.size, {std::move(rel)});
}

bool has_loop(const Structure& x) {
    require_single_binary(x, "has_loop");
    for (const Tuple& t : x.relations[0])
        if (t[0] == t[1]) return true;
    return false;
}

Partition components(const Structure& x) {
    require_single_binary(x, "components");
    std::vector<int> parent(static_cast<std::size_t>(x.size));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            a = parent[static_cast<std::size_t>(a)];
        }
        return a;
    };
    for (const Tuple& t : x.relations[0]) {
        int ra = find(t[0]), rb = find(t[1]);
        if (ra != rb) parent[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
    }
    std::vector<std::vector<int>> by_root(static_cast<std::size_t>(x.size));
    for (int a = 0; a < x.size; ++a) by_root[static_cast<std::size_t>(find(a))].push_back(a);
    Partition p;
    for (auto& block : by_root)
        if (!block.empty()) p.blocks.push_back(std::move(block));
    return p;
}

bool is_connected(const Structure& x) { return components(x).blocks.size() == 1; }

DisjointUnionResult disjoint_union(const std::vector<Structure>& parts) {
    if (parts.empty()) throw std::invalid_argument("disjoint_union: needs at least one part");
    int total = 0;
    Partition blocks;
    TupleSet rel;
    for (const Structure& part : parts) {
        require_single_binary(part, "disjoint_union");
        if (!(part.language == parts.front().language))
            throw std::invalid_argument("disjoint_union: parts over different languages");
        if (!is_connected(part))
            throw std::invalid_argument("disjoint_union: parts must be connected");
        std::vector<int> block(static_cast<std::size_t>(part.size));
        std::iota(block.begin(), block.end(), total);
        blocks.blocks.push_back(std::move(block));
        for (const Tuple& t : part.relations[0]) rel.push_back({t[0] + total, t[1] + total});
        total += part.size;
    }
    return DisjointUnionResult{Structure(parts.front().language, total, {std::move(rel)}), std::move(blocks)};
}

Partition unary_classes(const Structure& x) {
    if (!x.language.all_unary())
        throw std::invalid_argument("unary_classes: needs an all-unary language");
    std::vector<std::vector<char>> key(static_cast<std::size_t>(x.size),
                                       std::vector<char>(x.relations.size(), 0));
    for (std::size_t s = 0; s < x.relations.size(); ++s)
        for (const Tuple& t : x.relations[s]) key[static_cast<std::size_t>(t[0])][s] = 1;
    Partition p;
    std::vector<char> placed(static_cast<std::size_t>(x.size), 0);
    for (int a = 0; a < x.size; ++a) {
        if (placed[static_cast<std::size_t>(a)]) continue;
        std::vector<int> block{a};
        placed[static_cast<std::size_t>(a)] = 1;
        for (int b = a + 1; b < x.size; ++b)
            if (!placed[static_cast<std::size_t>(b)] &&
                key[static_cast<std::size_t>(a)] == key[static_cast<std::size_t>(b)]) {
                block.push_back(b);
                placed[static_cast<std::size_t>(b)] = 1;
            }
        p.blocks.push_back(std::move(block));
    }
    return p;
}

Structure normalize_to_int_star(const Structure& x) {
    require_single_binary(x, "normalize_to_int_star");
    if (is_connected(x)) {
        if (has_loop(x)) return x;
        // Connected and loop-free: adding the diagonal keeps the
        // self-embedding monoid and lands in the connected-with-loop class.
        return reflexify(x);
    }
    Structure c = complement(x);  // complement of a disconnected relation is connected
    if (has_loop(c)) return c;
    return reflexify(c);
}

std::vector<TupleSet> canonical_relations(const Structure& x) {
    std::vector<int> perm(static_cast<std::size_t>(x.size));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<TupleSet> best;
    bool first = true;
    do {
        std::vector<TupleSet> rels(x.relations.size());
        for (std::size_t s = 0; s < x.relations.size(); ++s) {
            rels[s].reserve(x.relations[s].size());
            for (const Tuple& t : x.relations[s]) {
                Tuple m(t.size());
                for (std::size_t k = 0; k < t.size(); ++k)
                    m[k] = perm[static_cast<std::size_t>(t[k])];
                rels[s].push_back(std::move(m));
            }
            std::sort(rels[s].begin(), rels[s].end());
        }
        if (first || rels < best) {
            best = std::move(rels);
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::string describe(const Structure& x) {
    std::ostringstream out;
    out << "structure(domain " << x.size << ", arities";
    for (int a : x.language.arities) out << ' ' << a;
    out << ", " << x.tuple_count() << " tuples)";
    return out.str();
}

}  // namespace copieslab
