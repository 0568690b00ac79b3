#pragma once

#include <functional>
#include <unordered_map>
#include <vector>

#include "lsfactor/cyclotomic.hpp"

namespace lsfactor {

/// A finite abelian group on labels 0..n-1 with a supplied operation.  On
/// construction a basis is computed, so every element gets coordinates in
/// Z/n_1 x ... x Z/n_r and the full character group is available.
class FiniteAbelianGroup {
public:
    FiniteAbelianGroup(std::vector<long> elements, std::function<long(long, long)> op,
                       long identity);

    long size() const { return static_cast<long>(elements_.size()); }
    long identity() const { return identity_; }
    const std::vector<long>& elements() const { return elements_; }

    long op(long a, long b) const { return op_(a, b); }
    long inverse(long a) const;
    long power(long a, long e) const;
    long order(long a) const;
    long exponent() const;

    /// Invariant factors n_1, ..., n_r of the basis (n_{i+1} | n_i).
    const std::vector<long>& invariants() const { return invariants_; }
    const std::vector<long>& basis() const { return basis_; }
    /// Coordinates of x with respect to the basis.
    const std::vector<long>& coords(long x) const;
    /// Element with the given coordinates.
    long from_coords(const std::vector<long>& c) const;

private:
    std::vector<long> elements_;
    std::function<long(long, long)> op_;
    long identity_;
    std::vector<long> invariants_;
    std::vector<long> basis_;
    std::unordered_map<long, std::vector<long>> coord_table_;
};

/// Iterate over all character exponent tuples (a_i mod n_i); the character
/// value on coords (x_i) is prod_i zeta_{n_i}^{a_i x_i}.
std::vector<std::vector<long>> all_character_exponents(const std::vector<long>& invariants);

/// Evaluate the character with the given exponents at group element x.
CycScalar character_value(const CycContextPtr& ctx, const FiniteAbelianGroup& g,
                          const std::vector<long>& exponents, long x);

}  // namespace lsfactor
