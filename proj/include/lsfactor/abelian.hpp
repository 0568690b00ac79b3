#pragma once

#include "lsfactor/characters.hpp"
#include "lsfactor/ratfunc.hpp"

namespace lsfactor {

/// eta_{E/F} as a character of F^x (trivial for split E).
MulChar eta_char(const QuadEtalePtr& E, const CycContextPtr& ctx);

/// L(s, chi) in the variable Z = q^{-s} of the character's own field:
/// (1 - chi(pi) Z)^{-1} unramified, 1 ramified.  Split pairs multiply the
/// component factors (both components share the F-variable).
RatFunc l_factor(const MulChar& chi);

/// gamma(s, chi, psi) = int chi^{-1}(x) |x|^{-s} psi(x) dmu_psi(x), computed
/// exactly shell by shell; the result lives in the variable Z = q^{-s} of the
/// field carrying chi and psi.  For ramified chi every shell except j = l - N
/// must vanish; this is asserted.  Split pairs multiply component gammas.
RatFunc gauss_gamma(const MulChar& chi, const AddChar& psi);

/// Independent recomputation of gamma through Tate's functional equation
/// zeta(1-s, chi^{-1}, Fourier(f)) = gamma zeta(s, chi, f) with
/// f = 1_{1+p^N}, cross-checked against f = 1_O; throws if the two test
/// functions disagree.
RatFunc zeta_oracle_gamma(const MulChar& chi, const AddChar& psi);

/// epsilon(s, chi, psi) = gamma L(s,chi)/L(1-s,chi^{-1}); throws if the
/// result is not a monomial.
Monomial epsilon_factor(const MulChar& chi, const AddChar& psi);

struct AbelianFactorSet {
    RatFunc gamma;
    RatFunc L;
    RatFunc L_dual;  // L(1-s, chi^{-1}) in the same variable
    Monomial epsilon;
};
AbelianFactorSet abelian_factors(const MulChar& chi, const AddChar& psi);

/// lambda(E/F, psi) = I/|I| with I = int eta(x) psi(x) dmu_psi^x(x); the
/// absolute value is extracted exactly by factoring I conj(I) = a^2 q^b.
/// Split algebras return 1.
CycScalar lambda_factor(const QuadEtalePtr& E, const AddChar& psi);

/// gamma / L of chi over E, rewritten in the F-side variable Z = q^{-s}
/// (unramified E: Z_E = Z^2; ramified and split: same variable).  chi must
/// be tagged with E (or be a split pair over E).
RatFunc gamma_etale_F(const MulChar& chi, const QuadEtalePtr& E, const AddChar& psi_F);
RatFunc l_factor_etale_F(const MulChar& chi, const QuadEtalePtr& E);

/// Checks lambda(E/F,psi) gamma_E(s, chi o N, psi_E) =
/// gamma(s, chi, psi) gamma(s, eta chi, psi), both sides in the F-variable.
bool base_change_identity_check(const MulChar& chi, const QuadEtalePtr& E, const AddChar& psi);

/// Step functions: finite combinations of coeff * 1_{center + p^depth},
/// the test-function space of the zeta-integral oracle.
struct StepTerm {
    CycScalar coeff;
    LaurentElem center;
    long depth = 0;
};
using StepFunction = std::vector<StepTerm>;

/// Exact Fourier transform with respect to psi and its self-dual measure.
StepFunction fourier_transform(const StepFunction& f, const AddChar& psi);

/// zeta_psi(s, chi, f) = int f(x) chi(x) |x|^s dmu_psi^x(x) as a RatFunc.
RatFunc zeta_integral(const StepFunction& f, const MulChar& chi, const AddChar& psi);

}  // namespace lsfactor
