#pragma once

#include <optional>

#include "lsfactor/abelian.hpp"

namespace lsfactor {

enum class GroupKind { GL, SOodd, Sp, SOeven, Ueven, Uodd };

/// Quasi-split group bookkeeping for a Siegel Levi: the rank parameter n
/// (GL carries the pair (n1, n2) of a maximal Levi) and, for the unitary
/// variants, the quadratic algebra E.
struct GroupTag {
    GroupKind kind = GroupKind::Sp;
    long n = 1;
    long n2 = 0;     // GL only
    QuadEtalePtr E;  // unitary variants only

    static GroupTag gl(long n1, long n2);
    static GroupTag so_odd(long n);
    static GroupTag sp(long n);
    static GroupTag so_even(long n);
    static GroupTag u_even(long n, QuadEtalePtr E);
    static GroupTag u_odd(long n, QuadEtalePtr E);
};

/// One inducing block: a character chi, a twist |.|^{u2/2} given by the
/// doubled exponent u2, and a segment length a.  A block with a > 1 stands
/// for the shifted characters chi |.|^{u2/2 + (a-1)/2 - i}, 0 <= i < a.
struct InducingBlock {
    MulChar chi;
    long u2 = 0;
    long a = 1;
};

struct InducingDatum {
    std::vector<InducingBlock> blocks;
    /// U_odd only: a character of E^x extending one of the norm-one group
    /// (see hilbert90_extend and hilbert90_extend_split).
    std::optional<MulChar> nu;
};

/// Expands the blocks into the list of shifted characters.
std::vector<MulChar> expand_datum(const InducingDatum& d);

/// The datum of the contragredient: every character inverted, twist
/// exponents negated, segment lengths kept.
InducingDatum dual_datum(const InducingDatum& d);

/// Local coefficient of a rank-one group.  GL(1,1): gamma(s, chi1 chi2);
/// SO_odd(1): gamma(s, chi^2); Sp(1) = SL_2: gamma(s, chi); U_even(1):
/// gamma(s, chi|_F); U_odd(1): lambda(E/F, psi-bar) gamma_E(s, chi nu)
/// gamma(2s, eta chi|_F).  Everything is returned in the base-field
/// variable Z = q^{-s}.
RatFunc rank_one_coefficient(const GroupTag& G, const InducingDatum& d, const AddChar& psi);

/// gamma(s, pi1 x pi2, psi) = prod_{i,j} gamma(s, chi_i mu_j, psi) over the
/// expanded characters of the two data (both over the field of psi).
RatFunc rankin_selberg_gamma(const InducingDatum& d1, const InducingDatum& d2,
                             const AddChar& psi);

/// Local coefficient of the Siegel Levi of a classical or unitary group on
/// principal-series data, as a product of abelian gamma-factors:
///   SO_odd:  prod gamma(s, chi_i^2) prod_{i<j} gamma(s, chi_i chi_j)
///   Sp:      prod gamma(s, chi_i)   prod_{i<j} gamma(2s, chi_i chi_j)
///   SO_even: prod_{i<j} gamma(s, chi_i chi_j)
///   U_even:  prod gamma(s, chi_i|_F) prod_{i<j} gamma_E(s, chi_i chi_j^conj)
///   U_odd:   lambda(E/F, psi-bar)^n prod gamma_E(s, chi_i nu)
///            gamma(2s, eta chi_i|_F) prod_{i<j} gamma_E(2s, chi_i chi_j^conj)
/// with every E-side factor converted to the F-variable.
RatFunc classical_coefficient(const GroupTag& G, const InducingDatum& d, const AddChar& psi);

/// lambda(E/F, psi-bar)^n for U_odd, 1 for every other group.
CycScalar lambda_normalization(const GroupTag& G, const AddChar& psi);

/// The s- and 2s-groupings of the coefficient of Sp(n) or U_odd(n); gamma2
/// is given in the s-variable, so that
///   classical = lambda_normalization * gamma1 * gamma2(2s).
struct GammaPair {
    RatFunc gamma1;
    RatFunc gamma2;
};
GammaPair gamma_pair(const GroupTag& G, const InducingDatum& d, const AddChar& psi);

/// Recomputes classical_coefficient with psi replaced by psi^a and asserts
/// the result against the prediction obtained by applying the abelian
/// scaling law to every factor in the product (torus-conjugation constant
/// fixed to 1: only psi-generic data is instantiated).  Returns the
/// recomputed coefficient.
RatFunc psi_dependence(const GroupTag& G, const InducingDatum& d, const AddChar& psi,
                       const LaurentElem& a);

struct LocalFactors {
    RatFunc L;
    RatFunc L_dual;  // L(1-s) of the dual datum, in the s-variable
    Monomial epsilon;
};

/// L- and epsilon-factors from gamma.  gammas and dual_gammas list the
/// per-block gamma-factors of a datum and of its dual (a single entry holds
/// the full product).  Tempered data: L is the inverse of the normalized
/// numerator of the total product.  Non-tempered data: L is assembled as
/// the product of the per-entry extractions, so the caller splits the
/// product into its shifted unitary blocks.  epsilon = gamma L / L_dual is
/// asserted to be a monomial.  qv is the residue cardinality of the
/// variable's field.
LocalFactors local_factors_from_gamma(const std::vector<RatFunc>& gammas,
                                      const std::vector<RatFunc>& dual_gammas,
                                      const Rational& qv, bool tempered);

}  // namespace lsfactor
