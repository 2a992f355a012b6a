#include "copieslab/regular_open.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace copieslab {

namespace {

std::uint64_t up_closure(const FinitePoset& q, std::uint64_t set) {
    std::uint64_t out = 0;
    for (int p = 0; p < q.size(); ++p)
        for (int a = 0; a < q.size(); ++a)
            if ((set >> a) & 1ULL)
                if (q.leq(a, p)) {
                    out |= 1ULL << p;
                    break;
                }
    return out;
}

std::uint64_t interior(const FinitePoset& q, std::uint64_t set) {
    std::uint64_t out = 0;
    for (int p = 0; p < q.size(); ++p) {
        bool inside = true;
        for (int r = 0; r < q.size() && inside; ++r)
            if (q.leq(r, p) && !((set >> r) & 1ULL)) inside = false;
        if (inside) out |= 1ULL << p;
    }
    return out;
}

}  // namespace

RegularOpenAlgebra::RegularOpenAlgebra(FinitePoset base, QuotientPoset provenance,
                                       std::vector<std::uint64_t> carrier)
    : base_(std::move(base)), provenance_(std::move(provenance)), carrier_(std::move(carrier)) {
    if (carrier_.empty()) throw std::invalid_argument("regular-open algebra: empty carrier");
    if (!std::is_sorted(carrier_.begin(), carrier_.end(), [](std::uint64_t a, std::uint64_t b) {
            return std::pair(std::popcount(a), a) < std::pair(std::popcount(b), b);
        }))
        throw std::invalid_argument("regular-open algebra: carrier not in inclusion order");
}

std::uint64_t RegularOpenAlgebra::regularize(std::uint64_t set) const {
    return interior(base_, up_closure(base_, set));
}

int RegularOpenAlgebra::index_of(std::uint64_t set) const {
    auto key = [](std::uint64_t s) { return std::pair(std::popcount(s), s); };
    auto it = std::lower_bound(carrier_.begin(), carrier_.end(), set,
                               [&](std::uint64_t a, std::uint64_t b) { return key(a) < key(b); });
    if (it == carrier_.end() || *it != set)
        throw std::logic_error("regular-open algebra: operation left the carrier");
    return static_cast<int>(it - carrier_.begin());
}

bool RegularOpenAlgebra::leq(int a, int b) const {
    return (element(a) & ~element(b)) == 0;
}

int RegularOpenAlgebra::meet(int a, int b) const { return index_of(element(a) & element(b)); }

int RegularOpenAlgebra::join(int a, int b) const {
    return index_of(regularize(element(a) | element(b)));
}

int RegularOpenAlgebra::complement(int a) const {
    return index_of(regularize(element(one()) & ~element(a)));
}

std::vector<int> RegularOpenAlgebra::atoms() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i) {
        if (i == zero()) continue;
        bool atom = true;
        for (int j = 0; j < size() && atom; ++j)
            if (j != zero() && j != i && leq(j, i)) atom = false;
        if (atom) out.push_back(i);
    }
    return out;
}

int RegularOpenAlgebra::atom_count() const { return static_cast<int>(atoms().size()); }

FinitePoset RegularOpenAlgebra::carrier_poset() const {
    const int n = size();
    std::vector<std::uint8_t> m(static_cast<std::size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) m[static_cast<std::size_t>(a) * n + b] = leq(a, b) ? 1 : 0;
    return FinitePoset(n, std::move(m));
}

FinitePoset RegularOpenAlgebra::positive_part() const {
    const int n = size() - 1;
    std::vector<std::uint8_t> m(static_cast<std::size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) m[static_cast<std::size_t>(a) * n + b] = leq(a + 1, b + 1) ? 1 : 0;
    return FinitePoset(n, std::move(m));
}

RegularOpenAlgebra regular_open(const FinitePoset& p) {
    QuotientPoset quotient = sep_quotient(p);
    const FinitePoset& q = quotient.order;
    if (q.size() > 63) throw UnsupportedSizeError("regular_open: quotient exceeds 63 elements");

    const std::vector<int> min = minimal_elements(q);
    if (min.size() > 16) throw UnsupportedSizeError("regular_open: more than 16 minimal classes");

    // A regular-open down-set is determined by the minimal classes it
    // contains: interior-of-closure of A is {p : every minimal class below p
    // lies in A}.  Enumerating those families gives the carrier directly.
    std::vector<std::uint64_t> min_below(static_cast<std::size_t>(q.size()), 0);
    for (int a = 0; a < q.size(); ++a)
        for (std::size_t i = 0; i < min.size(); ++i)
            if (q.leq(min[i], a)) min_below[static_cast<std::size_t>(a)] |= 1ULL << i;

    std::vector<std::uint64_t> carrier;
    carrier.reserve(1u << min.size());
    for (std::uint64_t s = 0; s < (1ULL << min.size()); ++s) {
        std::uint64_t set = 0;
        for (int a = 0; a < q.size(); ++a)
            if ((min_below[static_cast<std::size_t>(a)] & ~s) == 0) set |= 1ULL << a;
        carrier.push_back(set);
    }
    std::sort(carrier.begin(), carrier.end(), [](std::uint64_t a, std::uint64_t b) {
        return std::pair(std::popcount(a), a) < std::pair(std::popcount(b), b);
    });
    carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());

    // Copy the order out first: `quotient` is moved in the same call, and the
    // argument evaluation order must not be allowed to matter.
    FinitePoset base = q;
    RegularOpenAlgebra algebra(std::move(base), std::move(quotient), std::move(carrier));
    for (std::uint64_t set : algebra.carrier())  // each member really is a fixed point
        if (algebra.regularize(set) != set)
            throw std::logic_error("regular_open: carrier member not regular-open");
    return algebra;
}

bool is_homogeneous_ba(const RegularOpenAlgebra& b) {
    const FinitePoset whole = b.carrier_poset();
    for (int e = 0; e < b.size(); ++e) {
        if (e == b.zero()) continue;
        std::vector<int> below;
        for (int c = 0; c < b.size(); ++c)
            if (b.leq(c, e)) below.push_back(c);
        if (!poset_iso(whole, restrict_poset(whole, below))) return false;
    }
    return true;
}

bool partition_sentence_holds(const FinitePoset& p) {
    const auto top = maximum_element(p);
    if (!top) return false;
    for (int x = 0; x < p.size(); ++x) {
        if (x == *top) continue;
        int partners = 0;
        for (int y = 0; y < p.size(); ++y) {
            if (compatible(p, x, y)) continue;
            // join(x, y) = top iff the top is their only common upper bound
            bool only_top = true;
            for (int z = 0; z < p.size() && only_top; ++z)
                if (z != *top && p.leq(x, z) && p.leq(y, z)) only_top = false;
            if (only_top) ++partners;
        }
        if (partners != 1) return false;
    }
    return true;
}

bool check_square_distinct(const RegularOpenAlgebra& b) {
    if (b.size() <= 2)
        throw std::invalid_argument("check_square_distinct: needs an algebra beyond {0,1}");
    const FinitePoset pos = b.positive_part();
    const FinitePoset square = product({pos, pos});
    const bool on_positive = partition_sentence_holds(pos);
    const bool on_square = partition_sentence_holds(square);
    const bool isomorphic = poset_iso(pos, square).has_value();
    if (isomorphic && on_positive != on_square)
        throw std::logic_error("check_square_distinct: sentence disagrees on isomorphic posets");
    return on_positive && !on_square && !isomorphic;
}

bool forcing_equiv_finite(const FinitePoset& p, const FinitePoset& q) {
    return regular_open(p).atom_count() == regular_open(q).atom_count();
}

}  // namespace copieslab
