#pragma once

#include <optional>

#include "lsfactor/abelian.hpp"
#include "lsfactor/fqpoly.hpp"
#include "lsfactor/lscoeff.hpp"

namespace lsfactor {

/// Finite-order idele-class character of the rational function field over
/// F_q, presented by Dirichlet data: a monic modulus m and a multiplicative
/// value table on (F_q[t]/m)^x, extended by zero off the coprime residues.
class HeckeChar {
public:
    /// values indexed by base-q residue code; validated: multiplicative,
    /// nonzero exactly on the coprime residues.
    static HeckeChar from_values(FiniteFieldPtr k, FqPoly modulus, CycContextPtr ctx,
                                 std::vector<CycScalar> values);

    const FiniteFieldPtr& constant_field() const { return k_; }
    const FqPoly& modulus() const { return m_; }
    const CycContextPtr& context() const { return ctx_; }

    /// chi(f mod m); zero when gcd(f, m) != 1.
    CycScalar eval(const FqPoly& f) const;
    bool is_trivial() const;
    /// Trivial on the constants; equivalently unramified at infinity.
    bool is_even() const;
    /// Smallest monic divisor of m the character factors through.
    const FqPoly& conductor() const { return cond_; }
    bool is_primitive() const { return cond_ == m_; }

    HeckeChar conj() const;
    /// Pointwise product; requires a common modulus and context.
    HeckeChar operator*(const HeckeChar& o) const;

private:
    HeckeChar() = default;
    FiniteFieldPtr k_;
    FqPoly m_;
    CycContextPtr ctx_;
    std::vector<CycScalar> values_;
    FqPoly cond_;
};

/// Every Dirichlet character mod m, through the unit group of F_q[t]/m.  A
/// null context is replaced by one containing the group exponent.
std::vector<HeckeChar> all_characters(const FiniteFieldPtr& k, const FqPoly& m,
                                      CycContextPtr ctx = nullptr);

/// The character mod its own conductor inducing chi.
HeckeChar primitive_part(const HeckeChar& chi);

/// D_d = sum of chi over the monic polynomials of degree d.
CycScalar dirichlet_sum(const HeckeChar& chi, long d);
/// sum_d D_d Z^d; the sums vanish from deg m on (asserted two degrees out).
Poly finite_L(const HeckeChar& chi);
/// finite_L times the factor 1/(1-Z) at infinity for even characters;
/// asserts the result is a polynomial (chi primitive nontrivial).
RatFunc completed_L(const HeckeChar& chi);

/// Field embedding given by an explicit image table, with optional value
/// constraints selecting among the conjugate embeddings.
struct ResEmbedding {
    FiniteFieldPtr sub, super;
    std::vector<long> img;  // by sub code
    std::vector<long> pre;  // by super code, -1 off the image

    long image(long a) const { return img[static_cast<size_t>(a)]; }
    bool in_image(long b) const { return pre[static_cast<size_t>(b)] >= 0; }
    long preimage(long b) const;
};
ResEmbedding make_embedding(const FiniteFieldPtr& sub, const FiniteFieldPtr& super,
                            const std::vector<std::pair<long, long>>& constraints = {});

/// Completion of the function field at a monic irreducible P (or infinity):
/// tau is the image of t, satisfying P(tau) = pi exactly to the working
/// precision (infinity: tau = 1/pi), and dtau = dtau/dpi, whose residue
/// pairing realizes the local component of the differential dt.
struct Completion {
    FqPoly P;  // empty at infinity
    LocalFieldCtxPtr F;
    ResEmbedding emb;  // constants into the residue field
    LaurentElem tau;
    LaurentElem dtau;
    long prec = 0;
    bool infinite = false;
    FiniteFieldPtr cf;

    /// f(tau), truncated to the working precision at finite places.
    LaurentElem transport(const FqPoly& f) const;
};

/// Fv must have residue degree deg(cf) * deg(P).  The root of P in the
/// residue field and the constant embedding may be prescribed; they pin the
/// transport among its conjugates.
Completion complete_at(const FiniteFieldPtr& cf, const FqPoly& P, LocalFieldCtxPtr Fv, long prec,
                       std::optional<long> root = std::nullopt,
                       std::optional<ResEmbedding> emb = std::nullopt);
/// The place at infinity: uniformizer 1/t, dtau = -pi^{-2}.
Completion complete_infinity(const FiniteFieldPtr& cf, LocalFieldCtxPtr Fv,
                             std::optional<ResEmbedding> emb = std::nullopt);

/// psi_v of the global differential dt: level 0 at finite places, 2 at
/// infinity (the levels of a differential sum to -2 on a genus-0 field).
AddChar differential_psi(const Completion& c, const CycContextPtr& ctx);

/// Local component of the idele-class character at the completion's place:
/// unramified with w = chi(P) away from the modulus; at P | m the table is
/// the inverse of the character pulled back through the transport, and the
/// uniformizer value comes from the product formula.
MulChar local_component(const HeckeChar& chi, const Completion& c);
/// Raw local data for wrapping over an etale algebra: table level 0 means
/// unramified with the stored w.
struct LocalCharData {
    long level = 0;
    std::vector<CycScalar> table;
    CycScalar w;
};
LocalCharData local_component_data(const HeckeChar& chi, const Completion& c);

/// Component at infinity, solved from the product formula: the unit values
/// come from the constants, the uniformizer value from the monic linear
/// generators; consistency across all generators is asserted.  Fv needs
/// residue cardinality q.
MulChar infinity_component(const HeckeChar& chi, const LocalFieldCtxPtr& Fv,
                           std::optional<ResEmbedding> emb = std::nullopt);

/// prod_v chi_v(f) = 1 over all places, tested for every constant and every
/// monic f of degree <= 2; exercises every transport.
bool product_formula_check(const HeckeChar& chi);

/// Product of local epsilon factors against the differential character, in
/// the global variable Z = q^{-s}.  Scaling psi by the principal idele
/// num/den (nonzero polynomials) must leave the result unchanged.
Monomial global_epsilon(const HeckeChar& chi, const FqPoly& num = {1}, const FqPoly& den = {1});

/// completed_L(chi) == global_epsilon(chi) completed_L(conj chi)|_{1-s}.
bool functional_equation_check(const HeckeChar& chi);

/// Partial L: the Euler factors at infinity and at S_fin removed; chi
/// primitive (trivial chi gives the zeta of the affine line).  eta_twist
/// multiplies the place values by (-1)^deg, the quadratic character of the
/// constant-field extension.
RatFunc partial_L(const HeckeChar& chi, bool eta_twist, const std::vector<FqPoly>& S_fin);

enum class CrudeCase { SL2, SO3, GL11, U2, U3 };

/// Exact global check of the crude functional equation
///   prod_i L^S(is) = prod_{v in S} C_v(s) prod_i L^S(1-is, dual)
/// on abelian data: SL2 and SO3 take one character, GL11 two over a common
/// modulus, U2/U3 one character over the quadratic constant-field extension
/// (places split iff their degree is even; nu is trivial).  S is the set of
/// places under the moduli, plus infinity, plus extra_S.
bool crude_fe_check(CrudeCase kind, const std::vector<HeckeChar>& data,
                    const std::vector<FqPoly>& extra_S = {});

}  // namespace lsfactor
