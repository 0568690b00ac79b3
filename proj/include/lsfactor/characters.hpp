#pragma once

#include <functional>
#include <optional>

#include "lsfactor/abelian_group.hpp"
#include "lsfactor/local_field.hpp"
#include "lsfactor/ratfunc.hpp"

namespace lsfactor {

/// Additive character psi = psi_std^a where psi_std(x) =
/// zeta_p^{Tr(coefficient of pi^{-1} in x)}, trace down to the prime field.
/// The level l is -ord(a): psi is trivial on p^l, nontrivial on p^{l-1}.
class AddChar {
public:
    AddChar(LocalFieldCtxPtr F, CycContextPtr ctx, LaurentElem a);
    static AddChar standard(LocalFieldCtxPtr F, CycContextPtr ctx);
    static AddChar of_level(LocalFieldCtxPtr F, CycContextPtr ctx, long level);

    const LocalFieldCtxPtr& field() const { return F_; }
    const CycContextPtr& context() const { return ctx_; }
    const LaurentElem& scale() const { return a_; }
    long level() const { return level_; }

    CycScalar eval(const LaurentElem& x) const;
    /// psi^c = x -> psi(c x).
    AddChar scaled(const LaurentElem& c) const;

private:
    LocalFieldCtxPtr F_;
    CycContextPtr ctx_;
    LaurentElem a_;
    long level_;
};

/// psi_E = psi o Tr_{E/F} as an additive character of the coordinate field of
/// E (split: apply the result per component).
AddChar transfer_add_char(const QuadEtalePtr& E, const AddChar& psi);

/// Multiplicative character of F^x or E^x.  Field cases: a value table on
/// (O/p^m)^x together with the value w at the uniformizer.  Split E: a pair
/// of F-characters.  The conductor exponent is computed from the table.
class MulChar {
public:
    static MulChar trivial(LocalFieldCtxPtr F, CycContextPtr ctx);
    static MulChar unramified(LocalFieldCtxPtr F, CycContextPtr ctx, CycScalar w);
    /// table indexed by unit class id at level m; validated as a homomorphism.
    static MulChar from_table(LocalFieldCtxPtr F, CycContextPtr ctx, long m,
                              std::vector<CycScalar> table, CycScalar w);
    /// Field-E character: same data, tagged with the algebra.
    static MulChar over_etale(QuadEtalePtr E, CycContextPtr ctx, long m,
                              std::vector<CycScalar> table, CycScalar w);
    static MulChar split_pair(QuadEtalePtr E, MulChar chi1, MulChar chi2);

    bool is_split_pair() const { return !comps_.empty(); }
    const MulChar& comp(int i) const { return comps_[static_cast<size_t>(i)]; }
    /// The field carrying the table (F, or ext() of the algebra).
    const LocalFieldCtxPtr& field() const { return fld_; }
    const QuadEtalePtr& etale() const { return etale_; }  // null for plain F
    const CycContextPtr& context() const { return ctx_; }
    long table_level() const { return m_; }
    const CycScalar& w() const { return w_; }

    /// Conductor exponent: least m' with trivial restriction to 1+p^{m'}
    /// (0 = unramified).  Split: max of the components.
    long conductor() const;
    bool is_ramified() const { return conductor() > 0; }

    CycScalar eval(const LaurentElem& x) const;  // field cases
    CycScalar eval_etale(const EtaleElem& x) const;
    CycScalar eval_unit_class(long id) const;

    MulChar operator*(const MulChar& o) const;
    MulChar inv() const;
    MulChar square() const;
    /// Twist by |.|^{k} with k given as a doubled integer k2 = 2k:
    /// multiplies w by sqrt_q^{-k2} (q the residue size of the table field).
    MulChar twist_half(long k2) const;
    /// Galois conjugate: chi^conj(x) = chi(x-bar).  Identity on plain
    /// F-characters; swaps the components of a split pair.
    MulChar galois_conj() const;
    /// Complex conjugate values (= inverse, since all values are unitary
    /// only when w is a root of unity; implemented as coefficientwise
    /// conjugation on table and w).
    MulChar value_conj() const;

    bool operator==(const MulChar& o) const;

private:
    MulChar() = default;
    QuadEtalePtr etale_;       // null for an F-character
    LocalFieldCtxPtr fld_;     // table field (empty for split pairs)
    CycContextPtr ctx_;
    long m_ = 0;
    std::vector<CycScalar> table_;
    CycScalar w_;
    long cond_ = 0;
    std::vector<MulChar> comps_;  // split case

    void compute_conductor();
    MulChar lifted(long m) const;  // re-tabulate at a higher level
};

/// chi o N_{E/F} as a character of E^x; split gives the pair (chi, chi).
MulChar base_change(const MulChar& chi, const QuadEtalePtr& E);

/// Restriction of an E-character to F^x along the embedding.
MulChar restrict_to_F(const MulChar& chi);

/// The norm-one subgroup E^1 truncated at level m: unit classes of the
/// coordinate field whose norm is a 1-unit of depth m'.  Split case is
/// handled separately (E^1 = {(z, z^{-1})}).
struct NormOneClasses {
    QuadEtalePtr E;
    long m = 0;
    std::shared_ptr<FiniteAbelianGroup> group;  // elements are unit class ids
};
NormOneClasses norm_one_classes(const QuadEtalePtr& E, long m);

/// Character of E^1 given by exponents against the basis of the class group.
struct E1Char {
    NormOneClasses dom;
    CycContextPtr ctx;
    std::vector<long> exponents;

    CycScalar eval_class(long id) const;
};

/// Extension of nu' on E^1 to E^x by nu(z) = nu'(z-bar z^{-1}).
MulChar hilbert90_extend(const E1Char& nu_prime);
/// Split case: nu((x, y)) = nu0^{-1}(x) nu0(y).
MulChar hilbert90_extend_split(const QuadEtalePtr& E, const MulChar& nu0);

/// Unit class group of (O/p^m)^x of a field, for character enumeration.
struct UnitClassGroup {
    LocalFieldCtxPtr F;
    long m = 0;
    std::shared_ptr<FiniteAbelianGroup> group;

    static UnitClassGroup create(LocalFieldCtxPtr F, long m);
    long exponent() const { return group->exponent(); }
    /// Character with the given exponent tuple and uniformizer value w.
    MulChar make_char(const CycContextPtr& ctx, const std::vector<long>& exponents,
                      const CycScalar& w) const;
};

}  // namespace lsfactor
