#include "lsfactor/abelian_group.hpp"

#include <algorithm>
#include <stdexcept>

namespace lsfactor {

namespace {

struct GroupView {
    std::vector<long> elements;
    std::function<long(long, long)> op;
    long identity;
};

long view_order(const GroupView& g, long a) {
    long x = a, n = 1;
    while (x != g.identity) {
        x = g.op(x, a);
        ++n;
    }
    return n;
}

long view_power(const GroupView& g, long a, long e) {
    long acc = g.identity, x = a;
    if (e < 0) {
        long o = view_order(g, a);
        e = ((e % o) + o) % o;
    }
    while (e > 0) {
        if (e & 1) acc = g.op(acc, x);
        x = g.op(x, x);
        e >>= 1;
    }
    return acc;
}

// returns basis elements with orders, largest order first
void decompose(const GroupView& g, std::vector<long>& basis, std::vector<long>& orders) {
    if (g.elements.size() == 1) return;
    // an element of maximal order generates a direct summand
    long best = g.identity, best_ord = 1;
    for (long a : g.elements) {
        long o = view_order(g, a);
        if (o > best_ord) {
            best = a;
            best_ord = o;
        }
    }
    basis.push_back(best);
    orders.push_back(best_ord);

    // cyclic subgroup generated by best
    std::vector<long> cyc;
    {
        long x = g.identity;
        do {
            cyc.push_back(x);
            x = g.op(x, best);
        } while (x != g.identity);
    }
    std::sort(cyc.begin(), cyc.end());

    // quotient: canonical representative of each coset is its least element
    std::unordered_map<long, long> rep;
    for (long a : g.elements) {
        if (rep.count(a)) continue;
        std::vector<long> coset;
        for (long c : cyc) coset.push_back(g.op(a, c));
        long r = *std::min_element(coset.begin(), coset.end());
        for (long x : coset) rep[x] = r;
    }
    std::vector<long> qelems;
    for (auto& [x, r] : rep)
        if (x == r) qelems.push_back(r);
    std::sort(qelems.begin(), qelems.end());
    if (qelems.size() == 1) return;

    GroupView q{qelems, [g, rep](long a, long b) { return rep.at(g.op(a, b)); },
                rep.at(g.identity)};
    std::vector<long> qbasis, qorders;
    decompose(q, qbasis, qorders);

    // lift each quotient generator to an element of the same order
    for (size_t i = 0; i < qbasis.size(); ++i) {
        long x = qbasis[i], k = qorders[i];
        long xk = view_power(g, x, k);  // lies in <best>
        // find a with best^a = xk
        long a = 0, y = g.identity;
        while (y != xk) {
            y = g.op(y, best);
            ++a;
        }
        if (a % k != 0) throw std::logic_error("abelian decomposition: lift failed");
        long lift = g.op(x, view_power(g, best, best_ord - a / k));
        basis.push_back(lift);
        orders.push_back(k);
    }
}

}  // namespace

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<long> elements,
                                       std::function<long(long, long)> op, long identity)
    : elements_(std::move(elements)), op_(std::move(op)), identity_(identity) {
    GroupView g{elements_, op_, identity_};
    decompose(g, basis_, invariants_);

    // verify the decomposition covers the group exactly once and fill the
    // coordinate table
    std::vector<long> idx(invariants_.size(), 0);
    size_t count = 0;
    while (true) {
        long x = identity_;
        for (size_t i = 0; i < basis_.size(); ++i) x = op_(x, power(basis_[i], idx[i]));
        if (coord_table_.count(x)) throw std::logic_error("abelian decomposition: not direct");
        coord_table_[x] = idx;
        ++count;
        size_t i = 0;
        for (; i < idx.size(); ++i) {
            if (++idx[i] < invariants_[i]) break;
            idx[i] = 0;
        }
        if (i == idx.size()) break;
    }
    if (count != elements_.size()) throw std::logic_error("abelian decomposition: wrong size");
}

long FiniteAbelianGroup::inverse(long a) const {
    return power(a, order(a) - 1);
}

long FiniteAbelianGroup::power(long a, long e) const {
    GroupView g{elements_, op_, identity_};
    return view_power(g, a, e);
}

long FiniteAbelianGroup::order(long a) const {
    GroupView g{elements_, op_, identity_};
    return view_order(g, a);
}

long FiniteAbelianGroup::exponent() const {
    return invariants_.empty() ? 1 : invariants_.front();
}

const std::vector<long>& FiniteAbelianGroup::coords(long x) const {
    auto it = coord_table_.find(x);
    if (it == coord_table_.end()) throw std::domain_error("coords: not a group element");
    return it->second;
}

long FiniteAbelianGroup::from_coords(const std::vector<long>& c) const {
    long x = identity_;
    for (size_t i = 0; i < basis_.size(); ++i) x = op_(x, power(basis_[i], c[i]));
    return x;
}

std::vector<std::vector<long>> all_character_exponents(const std::vector<long>& invariants) {
    std::vector<std::vector<long>> out;
    std::vector<long> idx(invariants.size(), 0);
    while (true) {
        out.push_back(idx);
        size_t i = 0;
        for (; i < idx.size(); ++i) {
            if (++idx[i] < invariants[i]) break;
            idx[i] = 0;
        }
        if (i == idx.size()) break;
    }
    return out;
}

CycScalar character_value(const CycContextPtr& ctx, const FiniteAbelianGroup& g,
                          const std::vector<long>& exponents, long x) {
    const auto& c = g.coords(x);
    CycScalar v = ctx->one();
    for (size_t i = 0; i < exponents.size(); ++i) {
        long n = g.invariants()[i];
        v = v * ctx->root_of_unity(n, (exponents[i] * c[i]) % n);
    }
    return v;
}

}  // namespace lsfactor
