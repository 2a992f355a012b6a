#include "copieslab/orders.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "copieslab/rng.hpp"

namespace copieslab {

namespace {

void validate_preorder(int n, const std::vector<std::uint8_t>& m, bool antisymmetric,
                       const char* who) {
    if (n < 0 || m.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw std::invalid_argument(std::string(who) + ": matrix size differs from n*n");
    auto at = [&](int a, int b) { return m[static_cast<std::size_t>(a) * n + b] != 0; };
    for (int a = 0; a < n; ++a)
        if (!at(a, a)) throw std::invalid_argument(std::string(who) + ": not reflexive");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (antisymmetric && a != b && at(a, b) && at(b, a))
                throw std::invalid_argument(std::string(who) + ": not antisymmetric");
            if (!at(a, b)) continue;
            for (int c = 0; c < n; ++c)
                if (at(b, c) && !at(a, c))
                    throw std::invalid_argument(std::string(who) + ": not transitive");
        }
}

}  // namespace

FinitePreorder::FinitePreorder(int n, std::vector<std::uint8_t> leq) : n_(n), leq_(std::move(leq)) {
    validate_preorder(n_, leq_, false, "preorder");
}

FinitePoset::FinitePoset(int n, std::vector<std::uint8_t> leq) : n_(n), leq_(std::move(leq)) {
    validate_preorder(n_, leq_, true, "poset");
}

FinitePoset FinitePoset::from_strict_pairs(int n, const std::vector<std::pair<int, int>>& below) {
    std::vector<std::uint8_t> m(static_cast<std::size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a) m[static_cast<std::size_t>(a) * n + a] = 1;
    for (auto [a, b] : below) {
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw std::invalid_argument("poset: pair entry outside the domain");
        m[static_cast<std::size_t>(a) * n + b] = 1;
    }
    for (int c = 0; c < n; ++c)  // Warshall closure
        for (int a = 0; a < n; ++a)
            if (m[static_cast<std::size_t>(a) * n + c])
                for (int b = 0; b < n; ++b)
                    if (m[static_cast<std::size_t>(c) * n + b]) m[static_cast<std::size_t>(a) * n + b] = 1;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (m[static_cast<std::size_t>(a) * n + b] && m[static_cast<std::size_t>(b) * n + a])
                throw std::invalid_argument("poset: strict pairs close into a cycle");
    return FinitePoset(n, std::move(m));
}

FinitePoset chain(int n) {
    std::vector<std::uint8_t> m(static_cast<std::size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) m[static_cast<std::size_t>(a) * n + b] = 1;
    return FinitePoset(n, std::move(m));
}

FinitePoset antichain(int n) {
    std::vector<std::uint8_t> m(static_cast<std::size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a) m[static_cast<std::size_t>(a) * n + a] = 1;
    return FinitePoset(n, std::move(m));
}

FinitePoset reversed_poset(const FinitePoset& p) {
    const int n = p.size();
    std::vector<std::uint8_t> m(static_cast<std::size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (p.leq(b, a)) m[static_cast<std::size_t>(a) * n + b] = 1;
    return FinitePoset(n, std::move(m));
}

std::vector<int> down_set(const FinitePoset& p, int a) {
    std::vector<int> d;
    for (int b = 0; b < p.size(); ++b)
        if (p.leq(b, a)) d.push_back(b);
    return d;
}

std::vector<int> minimal_elements(const FinitePoset& p) {
    std::vector<int> out;
    for (int a = 0; a < p.size(); ++a) {
        bool minimal = true;
        for (int b = 0; b < p.size() && minimal; ++b)
            if (p.lt(b, a)) minimal = false;
        if (minimal) out.push_back(a);
    }
    return out;
}

std::vector<int> maximal_elements(const FinitePoset& p) {
    std::vector<int> out;
    for (int a = 0; a < p.size(); ++a) {
        bool maximal = true;
        for (int b = 0; b < p.size() && maximal; ++b)
            if (p.lt(a, b)) maximal = false;
        if (maximal) out.push_back(a);
    }
    return out;
}

std::optional<int> maximum_element(const FinitePoset& p) {
    for (int a = 0; a < p.size(); ++a) {
        bool top = true;
        for (int b = 0; b < p.size() && top; ++b)
            if (!p.leq(b, a)) top = false;
        if (top) return a;
    }
    return std::nullopt;
}

std::optional<int> minimum_element(const FinitePoset& p) {
    for (int a = 0; a < p.size(); ++a) {
        bool bottom = true;
        for (int b = 0; b < p.size() && bottom; ++b)
            if (!p.leq(a, b)) bottom = false;
        if (bottom) return a;
    }
    return std::nullopt;
}

FinitePoset restrict_poset(const FinitePoset& p, const std::vector<int>& elements) {
    const int k = static_cast<int>(elements.size());
    std::vector<std::uint8_t> m(static_cast<std::size_t>(k) * k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            m[static_cast<std::size_t>(i) * k + j] =
                p.leq(elements[static_cast<std::size_t>(i)], elements[static_cast<std::size_t>(j)]) ? 1 : 0;
    return FinitePoset(k, std::move(m));
}

std::vector<std::pair<int, int>> cover_pairs(const FinitePoset& p) {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b) {
            if (!p.lt(a, b)) continue;
            bool cover = true;
            for (int c = 0; c < p.size() && cover; ++c)
                if (p.lt(a, c) && p.lt(c, b)) cover = false;
            if (cover) out.emplace_back(a, b);
        }
    return out;
}

bool compatible(const FinitePoset& p, int a, int b) {
    for (int s = 0; s < p.size(); ++s)
        if (p.leq(s, a) && p.leq(s, b)) return true;
    return false;
}

FinitePreorder sep_mod(const FinitePoset& p) {
    const int n = p.size();
    std::vector<std::uint8_t> compat(static_cast<std::size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            compat[static_cast<std::size_t>(a) * n + b] = compatible(p, a, b) ? 1 : 0;
    std::vector<std::uint8_t> m(static_cast<std::size_t>(n) * n, 1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int r = 0; r < n; ++r)
                if (p.leq(r, a) && !compat[static_cast<std::size_t>(r) * n + b]) {
                    m[static_cast<std::size_t>(a) * n + b] = 0;
                    break;
                }
    return FinitePreorder(n, std::move(m));
}

bool is_separative(const FinitePoset& p) {
    // p not <= q must be witnessed by some r <= p incompatible with q
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b) {
            if (p.leq(a, b)) continue;
            bool witnessed = false;
            for (int r = 0; r < p.size() && !witnessed; ++r)
                if (p.leq(r, a) && !compatible(p, r, b)) witnessed = true;
            if (!witnessed) return false;
        }
    return true;
}

QuotientPoset sep_quotient(const FinitePoset& p) {
    const int n = p.size();
    FinitePreorder sm = sep_mod(p);
    std::vector<int> proj(static_cast<std::size_t>(n), -1);
    std::vector<int> rep;
    for (int a = 0; a < n; ++a) {
        if (proj[static_cast<std::size_t>(a)] >= 0) continue;
        int c = static_cast<int>(rep.size());
        proj[static_cast<std::size_t>(a)] = c;
        rep.push_back(a);
        for (int b = a + 1; b < n; ++b)
            if (proj[static_cast<std::size_t>(b)] < 0 && sm.leq(a, b) && sm.leq(b, a))
                proj[static_cast<std::size_t>(b)] = c;
    }
    const int k = static_cast<int>(rep.size());
    std::vector<std::uint8_t> m(static_cast<std::size_t>(k) * k, 0);
    for (int c = 0; c < k; ++c)
        for (int d = 0; d < k; ++d)
            m[static_cast<std::size_t>(c) * k + d] =
                sm.leq(rep[static_cast<std::size_t>(c)], rep[static_cast<std::size_t>(d)]) ? 1 : 0;
    FinitePoset order(k, std::move(m));  // constructor proves antisymmetry

    for (int a = 0; a < n; ++a)  // representative independence
        for (int b = 0; b < n; ++b)
            if (sm.leq(a, b) != order.leq(proj[static_cast<std::size_t>(a)], proj[static_cast<std::size_t>(b)]))
                throw std::logic_error("sep_quotient: order not class-invariant");
    if (!is_separative(order)) throw std::logic_error("sep_quotient: quotient fails separativity");

    Partition classes;
    classes.blocks.resize(static_cast<std::size_t>(k));
    for (int a = 0; a < n; ++a) classes.blocks[static_cast<std::size_t>(proj[static_cast<std::size_t>(a)])].push_back(a);
    return QuotientPoset{std::move(sm), std::move(classes), std::move(order), std::move(proj)};
}

FinitePoset product(const std::vector<FinitePoset>& factors) {
    if (factors.empty()) throw std::invalid_argument("product: needs at least one factor");
    long long total = 1;
    for (const auto& f : factors) {
        total *= f.size();
        if (total > (1 << 20)) throw UnsupportedSizeError("product: carrier too large");
    }
    const int n = static_cast<int>(total);
    auto decode = [&](int idx, std::vector<int>& digits) {
        for (int i = static_cast<int>(factors.size()) - 1; i >= 0; --i) {
            digits[static_cast<std::size_t>(i)] = idx % factors[static_cast<std::size_t>(i)].size();
            idx /= factors[static_cast<std::size_t>(i)].size();
        }
    };
    std::vector<std::uint8_t> m(static_cast<std::size_t>(n) * n, 0);
    std::vector<int> da(factors.size()), db(factors.size());
    for (int a = 0; a < n; ++a) {
        decode(a, da);
        for (int b = 0; b < n; ++b) {
            decode(b, db);
            bool le = true;
            for (std::size_t i = 0; i < factors.size() && le; ++i)
                if (!factors[i].leq(da[i], db[i])) le = false;
            m[static_cast<std::size_t>(a) * n + b] = le ? 1 : 0;
        }
    }
    return FinitePoset(n, std::move(m));
}

namespace {

// Shared backtracking isomorphism search over two n x n relation matrices.
class IsoSearch {
  public:
    IsoSearch(int n, const std::uint8_t* a, const std::uint8_t* b) : n_(n), a_(a), b_(b) {}

    std::optional<std::vector<int>> run(int pin_from = -1, int pin_to = -1) {
        if (n_ == 0) return std::vector<int>{};
        if (!refine()) return std::nullopt;
        if (pin_from >= 0 && ca_[static_cast<std::size_t>(pin_from)] != cb_[static_cast<std::size_t>(pin_to)])
            return std::nullopt;
        order_.resize(static_cast<std::size_t>(n_));
        std::iota(order_.begin(), order_.end(), 0);
        std::vector<int> class_size(static_cast<std::size_t>(n_), 0);
        for (int x = 0; x < n_; ++x) ++class_size[static_cast<std::size_t>(ca_[static_cast<std::size_t>(x)])];
        std::stable_sort(order_.begin(), order_.end(), [&](int x, int y) {
            return class_size[static_cast<std::size_t>(ca_[static_cast<std::size_t>(x)])] <
                   class_size[static_cast<std::size_t>(ca_[static_cast<std::size_t>(y)])];
        });
        if (pin_from >= 0) {
            auto it = std::find(order_.begin(), order_.end(), pin_from);
            std::rotate(order_.begin(), it, it + 1);
        }
        map_.assign(static_cast<std::size_t>(n_), -1);
        used_.assign(static_cast<std::size_t>(n_), 0);
        if (pin_from >= 0) {
            map_[static_cast<std::size_t>(pin_from)] = pin_to;
            used_[static_cast<std::size_t>(pin_to)] = 1;
            if (!extend(1)) return std::nullopt;
        } else if (!extend(0)) {
            return std::nullopt;
        }
        return map_;
    }

  private:
    bool at_a(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j] != 0; }
    bool at_b(int i, int j) const { return b_[static_cast<std::size_t>(i) * n_ + j] != 0; }

    // Iterated color refinement; false when the color multisets diverge.
    bool refine() {
        ca_.assign(static_cast<std::size_t>(n_), 0);
        cb_.assign(static_cast<std::size_t>(n_), 0);
        int colors = 1;
        for (;;) {
            using Sig = std::vector<long long>;
            auto signatures = [&](const std::uint8_t* m, const std::vector<int>& c) {
                std::vector<Sig> sig(static_cast<std::size_t>(n_));
                for (int x = 0; x < n_; ++x) {
                    Sig s{c[static_cast<std::size_t>(x)]};
                    std::vector<long long> neigh;
                    neigh.reserve(static_cast<std::size_t>(n_));
                    for (int y = 0; y < n_; ++y) {
                        if (y == x) continue;
                        long long rel = (m[static_cast<std::size_t>(x) * n_ + y] != 0 ? 2 : 0) +
                                        (m[static_cast<std::size_t>(y) * n_ + x] != 0 ? 1 : 0);
                        neigh.push_back(c[static_cast<std::size_t>(y)] * 4 + rel);
                    }
                    std::sort(neigh.begin(), neigh.end());
                    s.insert(s.end(), neigh.begin(), neigh.end());
                    sig[static_cast<std::size_t>(x)] = std::move(s);
                }
                return sig;
            };
            auto sa = signatures(a_, ca_), sb = signatures(b_, cb_);
            std::vector<Sig> all;
            all.reserve(sa.size() + sb.size());
            all.insert(all.end(), sa.begin(), sa.end());
            all.insert(all.end(), sb.begin(), sb.end());
            std::sort(all.begin(), all.end());
            all.erase(std::unique(all.begin(), all.end()), all.end());
            auto id_of = [&](const Sig& s) {
                return static_cast<int>(std::lower_bound(all.begin(), all.end(), s) - all.begin());
            };
            for (int x = 0; x < n_; ++x) {
                ca_[static_cast<std::size_t>(x)] = id_of(sa[static_cast<std::size_t>(x)]);
                cb_[static_cast<std::size_t>(x)] = id_of(sb[static_cast<std::size_t>(x)]);
            }
            std::vector<int> ha = ca_, hb = cb_;
            std::sort(ha.begin(), ha.end());
            std::sort(hb.begin(), hb.end());
            if (ha != hb) return false;
            int now = static_cast<int>(all.size());
            if (now == colors) return true;
            colors = now;
        }
    }

    bool extend(int k) {
        if (k == n_) return true;
        const int x = order_[static_cast<std::size_t>(k)];
        for (int y = 0; y < n_; ++y) {
            if (used_[static_cast<std::size_t>(y)] ||
                cb_[static_cast<std::size_t>(y)] != ca_[static_cast<std::size_t>(x)])
                continue;
            bool ok = true;
            for (int j = 0; j < k && ok; ++j) {
                int x2 = order_[static_cast<std::size_t>(j)];
                int y2 = map_[static_cast<std::size_t>(x2)];
                if (at_a(x, x2) != at_b(y, y2) || at_a(x2, x) != at_b(y2, y)) ok = false;
            }
            if (!ok) continue;
            map_[static_cast<std::size_t>(x)] = y;
            used_[static_cast<std::size_t>(y)] = 1;
            if (extend(k + 1)) return true;
            map_[static_cast<std::size_t>(x)] = -1;
            used_[static_cast<std::size_t>(y)] = 0;
        }
        return false;
    }

    int n_;
    const std::uint8_t* a_;
    const std::uint8_t* b_;
    std::vector<int> ca_, cb_, order_, map_;
    std::vector<char> used_;
};

}  // namespace

std::optional<std::vector<int>> poset_iso(const FinitePoset& p, const FinitePoset& q) {
    if (p.size() != q.size()) return std::nullopt;
    return IsoSearch(p.size(), p.matrix().data(), q.matrix().data()).run();
}

std::optional<std::vector<int>> preorder_iso(const FinitePreorder& p, const FinitePreorder& q) {
    if (p.size() != q.size()) return std::nullopt;
    return IsoSearch(p.size(), p.matrix().data(), q.matrix().data()).run();
}

bool automorphism_with_pin(const FinitePoset& p, int pin_from, int pin_to) {
    return IsoSearch(p.size(), p.matrix().data(), p.matrix().data()).run(pin_from, pin_to).has_value();
}

bool is_homogeneous(const FinitePoset& p) {
    if (!maximum_element(p)) return false;
    for (int a = 0; a < p.size(); ++a)
        if (!poset_iso(p, restrict_poset(p, down_set(p, a)))) return false;
    return true;
}

int quasi_homogeneity_bound() { return 10; }

bool is_dense_subset(const FinitePoset& p, const std::vector<int>& d) {
    for (int q = 0; q < p.size(); ++q) {
        bool hit = false;
        for (int x : d)
            if (p.leq(x, q)) { hit = true; break; }
        if (!hit) return false;
    }
    return true;
}

namespace {

// Subsets of `pool` unioned with `core`, emitted in increasing size so that
// callers probing for a small witness terminate early.
std::vector<std::vector<int>> supersets_by_size(const std::vector<int>& core,
                                                const std::vector<int>& pool) {
    std::vector<std::uint32_t> masks;
    masks.reserve(1u << pool.size());
    for (std::uint32_t m = 0; m < (1u << pool.size()); ++m) masks.push_back(m);
    std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        return __builtin_popcount(a) < __builtin_popcount(b);
    });
    std::vector<std::vector<int>> out;
    out.reserve(masks.size());
    for (std::uint32_t m : masks) {
        std::vector<int> set = core;
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (m & (1u << i)) set.push_back(pool[i]);
        std::sort(set.begin(), set.end());
        out.push_back(std::move(set));
    }
    return out;
}

}  // namespace

bool is_quasi_homogeneous(const FinitePoset& p) {
    if (p.size() > quasi_homogeneity_bound()) {
        std::ostringstream msg;
        msg << "is_quasi_homogeneous: literal dense-subset search supports n <= "
            << quasi_homogeneity_bound() << ", got n = " << p.size();
        throw UnsupportedSizeError(msg.str());
    }
    // A finite dense set must contain every minimal element, and any superset
    // of the minimal elements is dense; so dense sets = supersets of Min.
    const std::vector<int> min_p = minimal_elements(p);
    std::vector<int> pool_p;
    for (int a = 0; a < p.size(); ++a)
        if (!std::binary_search(min_p.begin(), min_p.end(), a)) pool_p.push_back(a);
    const auto dense_p = supersets_by_size(min_p, pool_p);

    // Probe minimal elements first: with two or more minimal elements they
    // fail immediately, which is the common rejection path.
    std::vector<int> probe = min_p;
    for (int a = 0; a < p.size(); ++a)
        if (!std::binary_search(min_p.begin(), min_p.end(), a)) probe.push_back(a);

    for (int a : probe) {
        const std::vector<int> da = down_set(p, a);
        std::vector<int> min_a, pool_a;
        for (int b : da) {
            if (std::binary_search(min_p.begin(), min_p.end(), b))
                min_a.push_back(b);  // minimal in the down-set iff minimal in p
            else
                pool_a.push_back(b);
        }
        const auto dense_a = supersets_by_size(min_a, pool_a);
        bool found = false;
        for (const auto& d : dense_p) {
            for (const auto& e : dense_a) {
                if (d.size() != e.size()) continue;
                if (poset_iso(restrict_poset(p, d), restrict_poset(p, e))) {
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        if (!found) return false;
    }
    return true;
}

bool is_weakly_homogeneous(const FinitePoset& p) {
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b) {
            bool linked = false;
            for (int c = 0; c < p.size() && !linked; ++c)
                if (compatible(p, c, b) && automorphism_with_pin(p, a, c)) linked = true;
            if (!linked) return false;
        }
    return true;
}

SurjectionTransferResult sq_surjection_transfer(const FinitePoset& p, const FinitePoset& q,
                                                const std::vector<int>& f) {
    if (f.size() != static_cast<std::size_t>(p.size()))
        throw std::invalid_argument("sq_surjection_transfer: map length differs from |P|");
    std::vector<char> hit(static_cast<std::size_t>(q.size()), 0);
    for (int v : f) {
        if (v < 0 || v >= q.size())
            throw std::invalid_argument("sq_surjection_transfer: value outside Q");
        hit[static_cast<std::size_t>(v)] = 1;
    }
    if (std::find(hit.begin(), hit.end(), 0) != hit.end())
        throw std::invalid_argument("sq_surjection_transfer: map is not onto Q");

    SurjectionTransferResult res;
    FinitePreorder smq = sep_mod(q);
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b) {
            if (p.leq(a, b) && !smq.leq(f[static_cast<std::size_t>(a)], f[static_cast<std::size_t>(b)])) {
                res.failed_hypothesis = 1;
                res.failed_pair = {a, b};
                return res;
            }
            if (!compatible(p, a, b) &&
                compatible(q, f[static_cast<std::size_t>(a)], f[static_cast<std::size_t>(b)])) {
                res.failed_hypothesis = 2;
                res.failed_pair = {a, b};
                return res;
            }
        }

    QuotientPoset sp = sep_quotient(p), sq = sep_quotient(q);
    std::vector<int> cmap(static_cast<std::size_t>(sp.order.size()), -1);
    for (int a = 0; a < p.size(); ++a) {
        int from = sp.projection[static_cast<std::size_t>(a)];
        int to = sq.projection[static_cast<std::size_t>(f[static_cast<std::size_t>(a)])];
        if (cmap[static_cast<std::size_t>(from)] < 0)
            cmap[static_cast<std::size_t>(from)] = to;
        else if (cmap[static_cast<std::size_t>(from)] != to)
            throw std::logic_error("sq_surjection_transfer: induced map not class-invariant");
    }
    if (sp.order.size() != sq.order.size())
        throw std::logic_error("sq_surjection_transfer: quotients have different sizes");
    std::vector<char> used(static_cast<std::size_t>(sq.order.size()), 0);
    for (int v : cmap) {
        if (v < 0 || used[static_cast<std::size_t>(v)])
            throw std::logic_error("sq_surjection_transfer: induced map not bijective");
        used[static_cast<std::size_t>(v)] = 1;
    }
    for (int c = 0; c < sp.order.size(); ++c)
        for (int d = 0; d < sp.order.size(); ++d)
            if (sp.order.leq(c, d) != sq.order.leq(cmap[static_cast<std::size_t>(c)], cmap[static_cast<std::size_t>(d)]))
                throw std::logic_error("sq_surjection_transfer: induced map not an order isomorphism");

    res.hypotheses_hold = true;
    res.class_map = std::move(cmap);
    return res;
}

namespace {

void extend_posets(int n, int k, std::vector<std::uint8_t>& cur,
                   const std::function<void(const FinitePoset&)>& fn) {
    if (k == n) {
        fn(FinitePoset(n, cur));
        return;
    }
    auto at = [&](int a, int b) { return cur[static_cast<std::size_t>(a) * n + b] != 0; };
    std::vector<std::uint32_t> downs(static_cast<std::size_t>(k), 0), ups(static_cast<std::size_t>(k), 0);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            if (at(b, a)) downs[static_cast<std::size_t>(a)] |= 1u << b;
            if (at(a, b)) ups[static_cast<std::size_t>(a)] |= 1u << b;
        }
    // Strict predecessors D and strict successors U of the new element k:
    // D down-closed, U up-closed, disjoint, and D x U already inside <=.
    // Every labeled poset on k+1 points arises from exactly one such pair.
    for (std::uint32_t d = 0; d < (1u << k); ++d) {
        bool down_closed = true;
        for (int a = 0; a < k && down_closed; ++a)
            if (((d >> a) & 1u) && (downs[static_cast<std::size_t>(a)] & ~d)) down_closed = false;
        if (!down_closed) continue;
        const std::uint32_t rest = ~d & ((1u << k) - 1);
        for (std::uint32_t u = rest;; u = (u - 1) & rest) {
            bool ok = true;
            for (int a = 0; a < k && ok; ++a) {
                if ((u >> a) & 1u) {
                    if (ups[static_cast<std::size_t>(a)] & ~u) ok = false;  // up-closure
                } else if ((d >> a) & 1u) {
                    if (u & ~ups[static_cast<std::size_t>(a)]) ok = false;  // d < k < u needs d < u
                }
            }
            if (ok) {
                for (int a = 0; a < k; ++a) {
                    cur[static_cast<std::size_t>(a) * n + k] = (d >> a) & 1u;
                    cur[static_cast<std::size_t>(k) * n + a] = (u >> a) & 1u;
                }
                cur[static_cast<std::size_t>(k) * n + k] = 1;
                extend_posets(n, k + 1, cur, fn);
                for (int a = 0; a < k; ++a) {
                    cur[static_cast<std::size_t>(a) * n + k] = 0;
                    cur[static_cast<std::size_t>(k) * n + a] = 0;
                }
                cur[static_cast<std::size_t>(k) * n + k] = 0;
            }
            if (u == 0) break;
        }
    }
}

}  // namespace

void for_each_poset(int n, const std::function<void(const FinitePoset&)>& fn) {
    if (n < 0 || n > 16) throw UnsupportedSizeError("for_each_poset: supports 0 <= n <= 16");
    if (n == 0) return;
    std::vector<std::uint8_t> cur(static_cast<std::size_t>(n) * n, 0);
    cur[0] = 1;
    extend_posets(n, 1, cur, fn);
}

FinitePoset random_poset(std::mt19937_64& gen, int n) {
    std::vector<std::pair<int, int>> below;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (rng_bool(gen)) below.emplace_back(a, b);
    return FinitePoset::from_strict_pairs(n, below);
}

FinitePoset relabel_poset(const FinitePoset& p, const std::vector<int>& perm) {
    const int n = p.size();
    std::vector<std::uint8_t> m(static_cast<std::size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (p.leq(a, b))
                m[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)]) * n +
                  perm[static_cast<std::size_t>(b)]] = 1;
    return FinitePoset(n, std::move(m));
}

std::vector<std::uint8_t> canonical_poset_key(const FinitePoset& p) {
    const int n = p.size();
    if (n > 8) throw UnsupportedSizeError("canonical_poset_key: supports n <= 8");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint8_t> best;
    bool first = true;
    do {
        std::vector<std::uint8_t> m(static_cast<std::size_t>(n) * n, 0);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (p.leq(a, b))
                    m[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)]) * n +
                      perm[static_cast<std::size_t>(b)]] = 1;
        if (first || m < best) {
            best = std::move(m);
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace copieslab
