#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "lsfactor/cyclotomic.hpp"

namespace lsfactor {

/// Polynomial in Z with CycScalar coefficients, ascending order.
class Poly {
public:
    Poly() = default;
    Poly(CycContextPtr ctx, std::vector<CycScalar> coeffs);
    static Poly constant(const CycScalar& c);
    static Poly zero(const CycContextPtr& ctx);
    static Poly one(const CycContextPtr& ctx);
    /// c * Z^k, k >= 0
    static Poly monomial(const CycScalar& c, long k);

    const CycContextPtr& context() const { return ctx_; }
    const std::vector<CycScalar>& coeffs() const { return coeffs_; }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }
    CycScalar coeff(long i) const;
    CycScalar lead() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const CycScalar& c) const;
    /// Euclidean division; returns {quotient, remainder}.
    std::pair<Poly, Poly> divmod(const Poly& o) const;
    /// Monic gcd.
    static Poly gcd(Poly a, Poly b);
    Poly monic() const;

    /// p(c * Z^e) for e >= 1.
    Poly subst(const CycScalar& c, long e) const;
    CycScalar eval(const CycScalar& z) const;
    std::complex<double> eval(std::complex<double> z) const;
    /// index of the lowest nonzero coefficient (valuation at Z = 0).
    long low_order() const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    CycContextPtr ctx_;
    std::vector<CycScalar> coeffs_;
    void trim();
};

/// Monomial c * Z^k with integer (possibly negative) exponent; the shape of
/// every epsilon-factor.
struct Monomial {
    CycScalar coeff;
    long z_exponent = 0;
};

/// Decomposition g = coeff * Z^exponent * numerator / denominator with
/// numerator(0) = denominator(0) = 1.
struct NormalizedParts {
    CycScalar coeff;
    long z_exponent = 0;
    Poly numerator;
    Poly denominator;
};

/// Rational function in Z = q^{-s} over Q(zeta_M), kept in coprime canonical
/// form: numerator/denominator have no common factor and the denominator is
/// normalized so that its lowest nonzero coefficient is 1.
class RatFunc {
public:
    RatFunc() = default;
    RatFunc(Poly num, Poly den);
    static RatFunc from_poly(Poly p);
    static RatFunc constant(const CycScalar& c);
    static RatFunc one(const CycContextPtr& ctx);
    static RatFunc zero(const CycContextPtr& ctx);
    /// c * Z^k, any integer k.
    static RatFunc monomial(const CycScalar& c, long k);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const CycContextPtr& context() const { return num_.context(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator*(const CycScalar& c) const;
    RatFunc inv() const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc pow(long e) const;

    /// Z -> c * Z^e, e any nonzero integer.  subst_double is (1, 2); the
    /// substitution realizing 1-s is (q^{-1}, -1).
    RatFunc subst(const CycScalar& c, long e) const;
    /// Z -> Z^2, realizing s -> 2s.
    RatFunc subst_double() const;
    /// Z -> c Z, realizing the unramified twist s -> s + s0 with q^{-s0} = c.
    RatFunc subst_scale(const CycScalar& c) const;
    /// Z -> q^{-1} Z^{-1}, realizing s -> 1 - s over a field with residue
    /// cardinality qv.
    RatFunc subst_one_minus_s(const Rational& qv) const;
    /// Apply conjugation zeta -> zeta^{-1} to every coefficient.
    RatFunc conj_coeffs() const;

    CycScalar eval(const CycScalar& z) const;
    std::complex<double> eval(std::complex<double> z) const;

    bool is_monomial() const;
    /// Throws unless the function is c * Z^k.
    Monomial as_monomial() const;
    /// g = coeff * Z^k * P / Q with P(0) = Q(0) = 1; throws on zero input.
    NormalizedParts normalized_parts() const;

    bool operator==(const RatFunc& o) const;
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    Poly num_, den_;
    void canonicalize();
};

}  // namespace lsfactor
