#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lsfactor {

using Rational = mpq_class;

class CycScalar;

/// Arithmetic context for the cyclotomic field Q(zeta_M) together with a
/// designated square root of q = p^f.  M must be divisible by 4p and by
/// q-1 so that sqrt(q) and all residue characters of F_q live in the field.
class CycContext : public std::enable_shared_from_this<CycContext> {
public:
    // extra_orders: additional root-of-unity orders that must divide M
    // (e.g. orders of character values appearing in a computation).
    static std::shared_ptr<const CycContext> create(long p, long f,
                                                    const std::vector<long>& extra_orders = {});

    long order() const { return M_; }
    long degree() const { return phi_; }
    long p() const { return p_; }
    long f() const { return f_; }
    long q() const { return q_; }

    CycScalar zero() const;
    CycScalar one() const;
    CycScalar from_rational(const Rational& r) const;
    CycScalar from_long(long n) const;
    /// zeta_M^k
    CycScalar zeta_pow(long k) const;
    /// Primitive n-th root of unity to the k-th power; n must divide M.
    CycScalar root_of_unity(long n, long k) const;
    /// The designated square root of q (fixed by conjugation, squares to q).
    CycScalar sqrt_q() const;
    /// sqrt_q^e for possibly negative e.
    CycScalar sqrt_q_pow(long e) const;
    /// The designated square root of p.
    CycScalar sqrt_p() const;
    /// (p^fdeg)^{e2/2}: half-integer powers of any p-power residue size,
    /// e.g. fdeg = 2f handles the quadratic unramified extension.
    CycScalar half_power(long fdeg, long e2) const;

    const std::vector<Rational>& power_basis_rep(long k) const { return zeta_powers_[k]; }

private:
    CycContext() = default;

    long M_ = 0, phi_ = 0;
    long p_ = 0, f_ = 0, q_ = 0;
    // x^(phi+i) reduced mod Phi_M, 0 <= i < phi-1
    std::vector<std::vector<Rational>> reduction_rows_;
    // zeta_M^k in the power basis for all 0 <= k < M
    std::vector<std::vector<Rational>> zeta_powers_;
    std::vector<Rational> sqrt_q_coeffs_;
    std::vector<Rational> sqrt_p_coeffs_;

    friend class CycScalar;
};

using CycContextPtr = std::shared_ptr<const CycContext>;

/// An element of Q(zeta_M) in the power basis modulo the M-th cyclotomic
/// polynomial.  Immutable value semantics; all operations are exact.
class CycScalar {
public:
    CycScalar() = default;
    CycScalar(CycContextPtr ctx, std::vector<Rational> coeffs);

    const CycContextPtr& context() const { return ctx_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// Throws unless the element is rational.
    Rational to_rational() const;

    CycScalar operator-() const;
    CycScalar operator+(const CycScalar& o) const;
    CycScalar operator-(const CycScalar& o) const;
    CycScalar operator*(const CycScalar& o) const;
    CycScalar operator*(const Rational& r) const;
    CycScalar inv() const;
    CycScalar operator/(const CycScalar& o) const;
    /// The automorphism zeta -> zeta^{-1} (complex conjugation).
    CycScalar conj() const;
    CycScalar pow(long e) const;

    bool operator==(const CycScalar& o) const;
    bool operator!=(const CycScalar& o) const { return !(*this == o); }

    /// Numerical value under zeta_M -> exp(2 pi i / M).
    std::complex<double> to_complex() const;

    std::string to_string() const;

private:
    CycContextPtr ctx_;
    std::vector<Rational> coeffs_;  // size phi(M), reduced

    void check_same(const CycScalar& o) const;
};

/// Phi_n as an integer-coefficient polynomial (ascending coefficients).
std::vector<mpz_class> cyclotomic_polynomial(long n);

long euler_phi(long n);

}  // namespace lsfactor
