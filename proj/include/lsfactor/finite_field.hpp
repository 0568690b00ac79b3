#pragma once

#include <memory>
#include <vector>

#include "lsfactor/cyclotomic.hpp"

namespace lsfactor {

class FiniteField;
using FiniteFieldPtr = std::shared_ptr<const FiniteField>;

/// F_p[x]/(m(x)) with m irreducible of degree n.  Elements are integers in
/// [0, p^n) encoding coefficient vectors in base p (constant digit first).
class FiniteField {
public:
    /// Uses the lexicographically first monic irreducible of degree n.
    static FiniteFieldPtr create(long p, long n);

    long p() const { return p_; }
    long deg() const { return n_; }
    long size() const { return size_; }
    /// Coefficients of the modulus, ascending, length n+1.
    const std::vector<long>& modulus() const { return modulus_; }

    long add(long a, long b) const;
    long sub(long a, long b) const;
    long neg(long a) const;
    long mul(long a, long b) const;
    long inv(long a) const;
    long pow(long a, long e) const;
    /// x -> x^p
    long frobenius(long a) const { return pow(a, p_); }
    /// Embedding of F_p.
    long from_prime_field(long c) const;
    long scalar_mul(long c, long a) const;

    /// A fixed generator of the multiplicative group.
    long generator() const { return generator_; }
    /// Multiplicative order of a nonzero element.
    long mult_order(long a) const;
    /// Discrete log base generator(); a must be nonzero.
    long dlog(long a) const;

    /// Absolute trace and norm down to F_p.
    long abs_trace(long a) const;
    long abs_norm(long a) const;

    std::vector<long> digits(long a) const;
    long from_digits(const std::vector<long>& d) const;

private:
    FiniteField() = default;
    long p_ = 0, n_ = 0, size_ = 0;
    std::vector<long> modulus_;
    long generator_ = 0;
    std::vector<long> log_table_;  // dlog of each nonzero element
    std::vector<long> exp_table_;  // generator^k
};

/// Embedding of a field of size p^m into one of size p^n, m | n, defined by a
/// chosen root of the small modulus.  image/preimage are total on the image.
class FFEmbedding {
public:
    FFEmbedding(FiniteFieldPtr sub, FiniteFieldPtr super);

    const FiniteFieldPtr& sub() const { return sub_; }
    const FiniteFieldPtr& super() const { return super_; }
    long image(long a) const;
    /// Throws if b is not in the image.
    long preimage(long b) const;
    bool in_image(long b) const;

    /// Trace and norm from the big field down to the small one.
    long rel_trace(long b) const;
    long rel_norm(long b) const;

private:
    FiniteFieldPtr sub_, super_;
    long root_ = 0;  // image of x
    std::vector<long> image_table_;     // indexed by sub element
    std::vector<long> preimage_table_;  // indexed by super element, -1 if absent
};

}  // namespace lsfactor
