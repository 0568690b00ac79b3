#include "lsfactor/lscoeff.hpp"

#include <stdexcept>

namespace lsfactor {

namespace {

CycScalar hq(const CycContextPtr& ctx, const LocalFieldCtxPtr& fld, long e) {
    return ctx->half_power(fld->residue_field()->deg(), e);
}

// One abelian factor of a coefficient product: a character, the field it
// lives over, and whether it enters at s or at 2s.
struct FactorTerm {
    MulChar chi;
    bool over_E = false;
    long s_mult = 1;
};

void check_plain(const MulChar& chi, const AddChar& psi, const char* who) {
    if (chi.is_split_pair() || chi.etale() || chi.field() != psi.field())
        throw std::invalid_argument(std::string(who) + ": expected a character of the base field");
}

void check_over(const MulChar& chi, const QuadEtalePtr& E, const char* who) {
    if (chi.etale() != E)
        throw std::invalid_argument(std::string(who) + ": character not over the group's algebra");
}

std::vector<FactorTerm> coefficient_terms(const GroupTag& G, const InducingDatum& d,
                                          const AddChar& psi) {
    auto chars = expand_datum(d);
    if (static_cast<long>(chars.size()) != G.n)
        throw std::invalid_argument("coefficient: datum degree does not match the group rank");
    const auto& ctx = psi.context();
    bool unitary = G.kind == GroupKind::Ueven || G.kind == GroupKind::Uodd;
    for (const auto& c : chars) {
        if (unitary)
            check_over(c, G.E, "coefficient");
        else
            check_plain(c, psi, "coefficient");
    }

    std::vector<FactorTerm> out;
    long n = G.n;
    switch (G.kind) {
        case GroupKind::GL:
            throw std::invalid_argument("coefficient: use rankin_selberg_gamma for GL");
        case GroupKind::SOodd:
            for (long i = 0; i < n; ++i) out.push_back({chars[i].square(), false, 1});
            for (long i = 0; i < n; ++i)
                for (long j = i + 1; j < n; ++j) out.push_back({chars[i] * chars[j], false, 1});
            break;
        case GroupKind::Sp:
            for (long i = 0; i < n; ++i) out.push_back({chars[i], false, 1});
            for (long i = 0; i < n; ++i)
                for (long j = i + 1; j < n; ++j) out.push_back({chars[i] * chars[j], false, 2});
            break;
        case GroupKind::SOeven:
            for (long i = 0; i < n; ++i)
                for (long j = i + 1; j < n; ++j) out.push_back({chars[i] * chars[j], false, 1});
            break;
        case GroupKind::Ueven:
            for (long i = 0; i < n; ++i) out.push_back({restrict_to_F(chars[i]), false, 1});
            for (long i = 0; i < n; ++i)
                for (long j = i + 1; j < n; ++j)
                    out.push_back({chars[i] * chars[j].galois_conj(), true, 1});
            break;
        case GroupKind::Uodd: {
            if (!d.nu) throw std::invalid_argument("coefficient: U_odd datum requires nu");
            const auto& nu = *d.nu;
            check_over(nu, G.E, "coefficient (nu)");
            auto eta = eta_char(G.E, ctx);
            for (long i = 0; i < n; ++i) {
                out.push_back({chars[i] * nu, true, 1});
                out.push_back({eta * restrict_to_F(chars[i]), false, 2});
            }
            for (long i = 0; i < n; ++i)
                for (long j = i + 1; j < n; ++j)
                    out.push_back({chars[i] * chars[j].galois_conj(), true, 2});
            break;
        }
    }
    return out;
}

RatFunc term_gamma(const FactorTerm& t, const GroupTag& G, const AddChar& psi) {
    auto g = t.over_E ? gamma_etale_F(t.chi, G.E, psi) : gauss_gamma(t.chi, psi);
    return t.s_mult == 2 ? g.subst_double() : g;
}

}  // namespace

GroupTag GroupTag::gl(long n1, long n2) { return {GroupKind::GL, n1, n2, nullptr}; }
GroupTag GroupTag::so_odd(long n) { return {GroupKind::SOodd, n, 0, nullptr}; }
GroupTag GroupTag::sp(long n) { return {GroupKind::Sp, n, 0, nullptr}; }
GroupTag GroupTag::so_even(long n) { return {GroupKind::SOeven, n, 0, nullptr}; }
GroupTag GroupTag::u_even(long n, QuadEtalePtr E) {
    return {GroupKind::Ueven, n, 0, std::move(E)};
}
GroupTag GroupTag::u_odd(long n, QuadEtalePtr E) {
    return {GroupKind::Uodd, n, 0, std::move(E)};
}

std::vector<MulChar> expand_datum(const InducingDatum& d) {
    std::vector<MulChar> out;
    for (const auto& b : d.blocks) {
        if (b.a < 1) throw std::invalid_argument("expand_datum: segment length must be >= 1");
        for (long i = 0; i < b.a; ++i) {
            long k2 = b.u2 + (b.a - 1) - 2 * i;
            out.push_back(k2 == 0 ? b.chi : b.chi.twist_half(k2));
        }
    }
    return out;
}

InducingDatum dual_datum(const InducingDatum& d) {
    InducingDatum out;
    for (const auto& b : d.blocks) out.blocks.push_back({b.chi.inv(), -b.u2, b.a});
    if (d.nu) out.nu = d.nu->inv();
    return out;
}

RatFunc rank_one_coefficient(const GroupTag& G, const InducingDatum& d, const AddChar& psi) {
    if (G.kind == GroupKind::GL) {
        if (G.n != 1 || G.n2 != 1)
            throw std::invalid_argument("rank_one_coefficient: GL rank must be (1,1)");
        auto chars = expand_datum(d);
        if (chars.size() != 2)
            throw std::invalid_argument("rank_one_coefficient: GL(1,1) needs two characters");
        check_plain(chars[0], psi, "rank_one_coefficient");
        check_plain(chars[1], psi, "rank_one_coefficient");
        return gauss_gamma(chars[0] * chars[1], psi);
    }
    if (G.kind == GroupKind::SOeven)
        throw std::invalid_argument("rank_one_coefficient: SO_even has no rank-one case");
    if (G.n != 1) throw std::invalid_argument("rank_one_coefficient: rank must be one");
    return classical_coefficient(G, d, psi);
}

RatFunc rankin_selberg_gamma(const InducingDatum& d1, const InducingDatum& d2,
                             const AddChar& psi) {
    auto c1 = expand_datum(d1);
    auto c2 = expand_datum(d2);
    if (c1.empty() || c2.empty())
        throw std::invalid_argument("rankin_selberg_gamma: empty datum");
    auto out = RatFunc::one(psi.context());
    for (const auto& a : c1) {
        check_plain(a, psi, "rankin_selberg_gamma");
        for (const auto& b : c2) {
            check_plain(b, psi, "rankin_selberg_gamma");
            out = out * gauss_gamma(a * b, psi);
        }
    }
    return out;
}

CycScalar lambda_normalization(const GroupTag& G, const AddChar& psi) {
    if (G.kind != GroupKind::Uodd) return psi.context()->one();
    auto conj_psi = psi.scaled(psi.field()->neg(psi.field()->one()));
    return lambda_factor(G.E, conj_psi).pow(G.n);
}

RatFunc classical_coefficient(const GroupTag& G, const InducingDatum& d, const AddChar& psi) {
    auto terms = coefficient_terms(G, d, psi);
    auto out = RatFunc::constant(lambda_normalization(G, psi));
    for (const auto& t : terms) out = out * term_gamma(t, G, psi);
    return out;
}

GammaPair gamma_pair(const GroupTag& G, const InducingDatum& d, const AddChar& psi) {
    if (G.kind != GroupKind::Sp && G.kind != GroupKind::Uodd)
        throw std::invalid_argument("gamma_pair: only Sp and U_odd split into two factors");
    auto terms = coefficient_terms(G, d, psi);
    GammaPair out{RatFunc::one(psi.context()), RatFunc::one(psi.context())};
    for (const auto& t : terms) {
        auto g = t.over_E ? gamma_etale_F(t.chi, G.E, psi) : gauss_gamma(t.chi, psi);
        (t.s_mult == 1 ? out.gamma1 : out.gamma2) = (t.s_mult == 1 ? out.gamma1 : out.gamma2) * g;
    }
    return out;
}

RatFunc psi_dependence(const GroupTag& G, const InducingDatum& d, const AddChar& psi,
                       const LaurentElem& a) {
    if (a.is_zero()) throw std::invalid_argument("psi_dependence: a must be nonzero");
    auto F = psi.field();
    const auto& ctx = psi.context();
    long v = F->ord(a);

    auto base = classical_coefficient(G, d, psi);
    auto scaled = classical_coefficient(G, d, psi.scaled(a));

    // Per-factor scaling law: an F-factor at ks picks up chi(a) sqrt_q^v Z^{kv},
    // an E-factor at ks (in the F-variable) picks up chi(a_E) q^v Z^{2kv}.
    auto predicted = base;
    for (const auto& t : coefficient_terms(G, d, psi)) {
        CycScalar c;
        long ze;
        if (!t.over_E) {
            c = t.chi.eval(a) * hq(ctx, F, v);
            ze = t.s_mult * v;
        } else {
            CycScalar val = t.chi.is_split_pair()
                                ? t.chi.comp(0).eval(a) * t.chi.comp(1).eval(a)
                                : t.chi.eval(G.E->embed(a).a);
            c = val * hq(ctx, F, 2 * v);
            ze = 2 * t.s_mult * v;
        }
        predicted = predicted * RatFunc::monomial(c, ze);
    }
    if (G.kind == GroupKind::Uodd) {
        // lambda(E/F, psi-bar^a) = eta(a) lambda(E/F, psi-bar)
        auto etaval = eta_char(G.E, ctx).eval(a);
        predicted = predicted * RatFunc::constant(etaval.pow(G.n));
    }
    if (scaled != predicted)
        throw std::logic_error("psi_dependence: recomputation disagrees with the prediction");
    return scaled;
}

LocalFactors local_factors_from_gamma(const std::vector<RatFunc>& gammas,
                                      const std::vector<RatFunc>& dual_gammas,
                                      const Rational& qv, bool tempered) {
    if (gammas.empty() || gammas.size() != dual_gammas.size())
        throw std::invalid_argument("local_factors_from_gamma: mismatched factor lists");
    const auto& ctx = gammas[0].context();
    auto extract = [](const RatFunc& g) {
        auto parts = g.normalized_parts();
        return RatFunc::from_poly(parts.numerator).inv();
    };

    auto total = RatFunc::one(ctx);
    auto total_dual = RatFunc::one(ctx);
    for (const auto& g : gammas) total = total * g;
    for (const auto& g : dual_gammas) total_dual = total_dual * g;

    LocalFactors out;
    if (tempered) {
        out.L = extract(total);
        out.L_dual = extract(total_dual).subst_one_minus_s(qv);
    } else {
        auto L = RatFunc::one(ctx);
        auto Ld = RatFunc::one(ctx);
        for (const auto& g : gammas) L = L * extract(g);
        for (const auto& g : dual_gammas) Ld = Ld * extract(g);
        out.L = L;
        out.L_dual = Ld.subst_one_minus_s(qv);
    }
    auto eps = total * out.L / out.L_dual;
    if (!eps.is_monomial())
        throw std::logic_error("local_factors_from_gamma: epsilon is not a monomial");
    out.epsilon = eps.as_monomial();
    return out;
}

}  // namespace lsfactor
