#pragma once

#include <memory>
#include <vector>

#include "lsfactor/cyclotomic.hpp"
#include "lsfactor/finite_field.hpp"

namespace lsfactor {

/// A nonzero element is pi^val * (digits[0] + digits[1] pi + ...) with digits
/// in the residue field and digits[0] != 0.  Zero has empty digits.  Only
/// finite expansions occur: every computation in the library reduces to
/// finite sums over coset representatives.
struct LaurentElem {
    long val = 0;
    std::vector<long> digits;

    bool is_zero() const { return digits.empty(); }
    bool operator==(const LaurentElem& o) const { return val == o.val && digits == o.digits; }
    bool operator!=(const LaurentElem& o) const { return !(*this == o); }
};

class LocalFieldCtx;
using LocalFieldCtxPtr = std::shared_ptr<const LocalFieldCtx>;

/// The local field k((pi)) for a finite residue field k.
class LocalFieldCtx {
public:
    static LocalFieldCtxPtr create(FiniteFieldPtr residue);

    const FiniteFieldPtr& residue_field() const { return k_; }
    long q() const { return k_->size(); }
    long p() const { return k_->p(); }

    LaurentElem zero() const { return {}; }
    LaurentElem one() const { return from_residue(1); }
    /// c * pi^val for a residue field element c.
    LaurentElem from_residue(long c, long val = 0) const;
    LaurentElem uniformizer(long e = 1) const;
    LaurentElem from_digits(long val, std::vector<long> digits) const;

    /// Valuation; throws on zero.
    long ord(const LaurentElem& x) const;
    /// Coefficient of pi^k.
    long coeff(const LaurentElem& x, long k) const;

    LaurentElem add(const LaurentElem& a, const LaurentElem& b) const;
    LaurentElem sub(const LaurentElem& a, const LaurentElem& b) const;
    LaurentElem neg(const LaurentElem& a) const;
    LaurentElem mul(const LaurentElem& a, const LaurentElem& b) const;
    /// Truncate modulo pi^N.
    LaurentElem truncate(const LaurentElem& a, long N) const;
    /// Inverse of a modulo pi^{ord(a^{-1}) + prec}; exact when the expansion
    /// terminates within the precision window.
    LaurentElem inv_mod(const LaurentElem& a, long prec) const;
    LaurentElem pow(const LaurentElem& a, long e) const;

    /// Unit classes of (O/pi^m O)^x, m >= 1; m = 0 gives the single class.
    long unit_class_count(long m) const;
    long unit_class_of(const LaurentElem& x, long m) const;  // of the unit part
    LaurentElem unit_class_rep(long id, long m) const;

private:
    LocalFieldCtx() = default;
    FiniteFieldPtr k_;
    void normalize(LaurentElem& x) const;
};

enum class EtaleKind { Split, Unramified, Ramified };

/// Element of a quadratic etale algebra over F.  Split: the pair (a, b) with
/// both components in F.  Field cases: a alone, living in the extension's own
/// LocalFieldCtx (unramified: residue field of size q^2, same uniformizer;
/// ramified: same residue field, uniformizer u with u^2 = pi).
struct EtaleElem {
    LaurentElem a, b;
};

class QuadEtale;
using QuadEtalePtr = std::shared_ptr<const QuadEtale>;

/// Quadratic etale algebra E/F with conjugation, trace, norm, the quadratic
/// character eta attached to E/F by class field theory, and the Haar measure
/// ratio between the self-dual measure on E and the product measure.
/// Ramified requires odd residue characteristic.
class QuadEtale {
public:
    static QuadEtalePtr create(LocalFieldCtxPtr F, EtaleKind kind);

    EtaleKind kind() const { return kind_; }
    bool is_split() const { return kind_ == EtaleKind::Split; }
    const LocalFieldCtxPtr& base() const { return F_; }
    /// Coordinate field: F itself for split, the extension field otherwise.
    const LocalFieldCtxPtr& ext() const { return E_; }
    /// Residue field embedding F_q -> F_{q^2} (unramified only).
    const FFEmbedding& residue_embedding() const;

    EtaleElem embed(const LaurentElem& x) const;
    EtaleElem conj(const EtaleElem& x) const;
    EtaleElem add(const EtaleElem& x, const EtaleElem& y) const;
    EtaleElem mul(const EtaleElem& x, const EtaleElem& y) const;
    LaurentElem trace(const EtaleElem& x) const;
    LaurentElem norm(const EtaleElem& x) const;

    bool is_zero_divisor(const EtaleElem& x) const;
    /// |x|_E as an exponent of q: |x|_E = q^{abs_q_exp(x)}.
    long abs_q_exp(const EtaleElem& x) const;

    /// eta_{E/F}(x) for nonzero x in F: +1 on norms, -1 otherwise.
    int eta(const LaurentElem& x) const;

    /// Haar constant c = q^{haar_exp2()/2} relating the self-dual measure on
    /// E to the product measure (0 for split and unramified, -1 for ramified).
    long haar_exp2() const { return haar_exp2_; }
    /// Level of psi_E = psi o Tr given the level of psi on F.
    long psi_level(long l_F) const;
    /// An element with E = F[beta], conj(beta) = -beta (trace zero) in the
    /// field cases; (1, -1) for split.
    EtaleElem beta() const;

private:
    QuadEtale() = default;
    EtaleKind kind_ = EtaleKind::Split;
    LocalFieldCtxPtr F_, E_;
    std::shared_ptr<FFEmbedding> res_emb_;
    long haar_exp2_ = 0;
    int legendre(long c) const;  // on the residue field of F
};

}  // namespace lsfactor
