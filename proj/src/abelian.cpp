#include "lsfactor/abelian.hpp"

#include <stdexcept>

namespace lsfactor {

namespace {

// sqrt(q_fld)^e as a scalar
CycScalar hq(const CycContextPtr& ctx, const LocalFieldCtxPtr& fld, long e) {
    return ctx->half_power(fld->residue_field()->deg(), e);
}

RatFunc z_poly(const CycContextPtr& ctx, long k) {
    return RatFunc::monomial(ctx->one(), k);
}

}  // namespace

MulChar eta_char(const QuadEtalePtr& E, const CycContextPtr& ctx) {
    auto F = E->base();
    switch (E->kind()) {
        case EtaleKind::Split:
            return MulChar::trivial(F, ctx);
        case EtaleKind::Unramified:
            return MulChar::unramified(F, ctx, -ctx->one());
        case EtaleKind::Ramified: {
            long n = F->unit_class_count(1);
            std::vector<CycScalar> table;
            table.reserve(static_cast<size_t>(n));
            for (long id = 0; id < n; ++id) {
                auto r = F->unit_class_rep(id, 1);
                table.push_back(E->eta(r) == 1 ? ctx->one() : -ctx->one());
            }
            CycScalar w = E->eta(F->uniformizer()) == 1 ? ctx->one() : -ctx->one();
            return MulChar::from_table(F, ctx, 1, std::move(table), w);
        }
    }
    throw std::logic_error("unreachable");
}

RatFunc l_factor(const MulChar& chi) {
    const auto& ctx = chi.context();
    if (chi.is_split_pair()) return l_factor(chi.comp(0)) * l_factor(chi.comp(1));
    if (chi.conductor() > 0) return RatFunc::one(ctx);
    auto one = RatFunc::one(ctx);
    return (one - RatFunc::monomial(chi.w(), 1)).inv();
}

RatFunc gauss_gamma(const MulChar& chi, const AddChar& psi) {
    if (chi.is_split_pair())
        return gauss_gamma(chi.comp(0), psi) * gauss_gamma(chi.comp(1), psi);
    auto F = chi.field();
    if (F != psi.field()) throw std::invalid_argument("gauss_gamma: field mismatch");
    const auto& ctx = chi.context();
    long l = psi.level();
    long N = chi.conductor();
    long Neff = std::max(N, 1L);
    long q = F->q();

    RatFunc total = RatFunc::zero(ctx);
    auto chibar = chi.inv();
    for (long j = l - Neff; j < l; ++j) {
        CycScalar S = ctx->zero();
        auto tj = F->uniformizer(j);
        for (long id = 0; id < F->unit_class_count(Neff); ++id) {
            auto u = F->unit_class_rep(id, Neff);
            S = S + chibar.eval(u) * psi.eval(F->mul(tj, u));
        }
        if (S.is_zero()) continue;
        if (N >= 1 && j != l - N)
            throw std::logic_error("gauss_gamma: interior shell did not vanish");
        CycScalar c = chi.w().pow(-j) * hq(ctx, F, l - 2 * (j + Neff)) * S;
        total = total + z_poly(ctx, -j) * c;
    }
    if (N == 0) {
        // tail over j >= l: (q-1) q^{l/2-1} (q w Z)^{1-l} / (q w Z - 1)
        auto qwZ = RatFunc::monomial(chi.w() * ctx->from_long(q), 1);
        auto tail = qwZ.pow(1 - l) / (qwZ - RatFunc::one(ctx));
        total = total + tail * (hq(ctx, F, l - 2) * Rational(q - 1));
    }
    if (total.is_zero()) throw std::logic_error("gauss_gamma: vanishing result");
    return total;
}

StepFunction fourier_transform(const StepFunction& f, const AddChar& psi) {
    auto F = psi.field();
    const auto& ctx = psi.context();
    long l = psi.level();
    StepFunction out;
    for (const auto& term : f) {
        long j = term.depth;
        CycScalar base = term.coeff * hq(ctx, F, l - 2 * j);
        const auto& a = term.center;
        if (a.is_zero() || F->ord(a) >= j) {
            // psi(a x) = 1 on the support ball p^{l-j}
            out.push_back({base, F->zero(), l - j});
            continue;
        }
        long va = F->ord(a);
        // subdivide p^{l-j} into cosets of p^{l-va}, where psi(a .) is constant
        long digits = j - va;
        std::vector<long> idx(static_cast<size_t>(digits), 0);
        for (;;) {
            LaurentElem r = F->zero();
            for (long i = 0; i < digits; ++i)
                if (idx[static_cast<size_t>(i)] != 0)
                    r = F->add(r, F->from_residue(idx[static_cast<size_t>(i)], l - j + i));
            out.push_back({base * psi.eval(F->mul(a, r)), r, l - va});
            long i = 0;
            for (; i < digits; ++i) {
                if (++idx[static_cast<size_t>(i)] < F->q()) break;
                idx[static_cast<size_t>(i)] = 0;
            }
            if (i == digits) break;
        }
    }
    return out;
}

RatFunc zeta_integral(const StepFunction& f, const MulChar& chi, const AddChar& psi) {
    auto F = chi.field();
    if (F != psi.field()) throw std::invalid_argument("zeta_integral: field mismatch");
    const auto& ctx = chi.context();
    long l = psi.level();
    long N = chi.conductor();
    long q = F->q();
    RatFunc total = RatFunc::zero(ctx);
    auto one = RatFunc::one(ctx);
    for (const auto& term : f) {
        const auto& a = term.center;
        long j = term.depth;
        if (a.is_zero() || F->ord(a) >= j) {
            // ball p^j: geometric tail, zero for ramified chi
            if (N > 0) continue;
            auto wZ = RatFunc::monomial(chi.w(), 1);
            total = total + wZ.pow(j) / (one - wZ) * (term.coeff * hq(ctx, F, l));
            continue;
        }
        long v = F->ord(a);
        long jj = std::max(j, v + N);  // depth at which chi is constant
        // coset a + p^jj has multiplicative volume q/(q-1) * q^{l/2-jj+v}
        CycScalar volc = hq(ctx, F, l - 2 * jj + 2 * v) * Rational(q, q - 1);
        if (jj == j) {
            total = total + z_poly(ctx, v) * (term.coeff * chi.eval(a) * volc);
            continue;
        }
        // subdivide a + p^j into cosets of p^jj
        long digits = jj - j;
        std::vector<long> idx(static_cast<size_t>(digits), 0);
        for (;;) {
            LaurentElem x = a;
            for (long i = 0; i < digits; ++i)
                if (idx[static_cast<size_t>(i)] != 0)
                    x = F->add(x, F->from_residue(idx[static_cast<size_t>(i)], j + i));
            total = total + z_poly(ctx, v) * (term.coeff * chi.eval(x) * volc);
            long i = 0;
            for (; i < digits; ++i) {
                if (++idx[static_cast<size_t>(i)] < F->q()) break;
                idx[static_cast<size_t>(i)] = 0;
            }
            if (i == digits) break;
        }
    }
    return total;
}

RatFunc zeta_oracle_gamma(const MulChar& chi, const AddChar& psi) {
    if (chi.is_split_pair())
        return zeta_oracle_gamma(chi.comp(0), psi) * zeta_oracle_gamma(chi.comp(1), psi);
    auto F = chi.field();
    const auto& ctx = chi.context();
    long Neff = std::max(chi.conductor(), 1L);
    Rational qv(F->q());
    auto chibar = chi.inv();

    StepFunction f1 = {{ctx->one(), F->one(), Neff}};
    auto A1 = zeta_integral(fourier_transform(f1, psi), chibar, psi).subst_one_minus_s(qv);
    auto B1 = zeta_integral(f1, chi, psi);
    if (B1.is_zero()) throw std::logic_error("zeta_oracle_gamma: vanishing test integral");
    auto gamma = A1 / B1;

    StepFunction f0 = {{ctx->one(), F->zero(), 0}};
    auto A0 = zeta_integral(fourier_transform(f0, psi), chibar, psi).subst_one_minus_s(qv);
    auto B0 = zeta_integral(f0, chi, psi);
    if (A0 != gamma * B0)
        throw std::logic_error("zeta_oracle_gamma: test functions disagree");
    return gamma;
}

Monomial epsilon_factor(const MulChar& chi, const AddChar& psi) {
    auto g = gauss_gamma(chi, psi);
    auto L = l_factor(chi);
    auto Ldual = l_factor(chi.inv()).subst_one_minus_s(Rational(chi.field()->q()));
    auto eps = g * L / Ldual;
    if (!eps.is_monomial()) throw std::logic_error("epsilon_factor: not a monomial");
    return eps.as_monomial();
}

AbelianFactorSet abelian_factors(const MulChar& chi, const AddChar& psi) {
    AbelianFactorSet out;
    out.gamma = gauss_gamma(chi, psi);
    out.L = l_factor(chi);
    out.L_dual = l_factor(chi.inv()).subst_one_minus_s(Rational(chi.field()->q()));
    out.epsilon = epsilon_factor(chi, psi);
    return out;
}

CycScalar lambda_factor(const QuadEtalePtr& E, const AddChar& psi) {
    const auto& ctx = psi.context();
    if (E->is_split()) return ctx->one();
    auto F = E->base();
    auto eta = eta_char(E, ctx);
    auto g = gauss_gamma(eta, psi);
    Rational qv(F->q());
    // I = (q/(q-1)) * gamma evaluated at Z = 1/q
    Rational qm1 = qv - 1;
    auto I = g.eval(ctx->from_rational(Rational(1, F->q()))) * (qv / qm1);
    auto r = I * I.conj();
    if (!r.is_rational()) throw std::logic_error("lambda_factor: |I|^2 not rational");
    Rational r0 = r.to_rational();
    if (r0 <= 0) throw std::logic_error("lambda_factor: |I|^2 not positive");
    auto is_square = [](const mpz_class& z) { return mpz_perfect_square_p(z.get_mpz_t()) != 0; };
    for (long b = 0; b <= 1; ++b) {
        Rational s = b == 0 ? r0 : r0 / qv;
        s.canonicalize();
        if (is_square(s.get_num()) && is_square(s.get_den())) {
            mpz_class sn, sd;
            mpz_sqrt(sn.get_mpz_t(), s.get_num().get_mpz_t());
            mpz_sqrt(sd.get_mpz_t(), s.get_den().get_mpz_t());
            CycScalar absI = ctx->from_rational(Rational(sn, sd)) * ctx->sqrt_q_pow(b);
            return I / absI;
        }
    }
    throw std::logic_error("lambda_factor: |I|^2 is not a^2 q^b");
}

RatFunc gamma_etale_F(const MulChar& chi, const QuadEtalePtr& E, const AddChar& psi_F) {
    if (E->is_split()) {
        if (!chi.is_split_pair()) throw std::invalid_argument("gamma_etale_F: expected pair");
        return gauss_gamma(chi.comp(0), psi_F) * gauss_gamma(chi.comp(1), psi_F);
    }
    auto psiE = transfer_add_char(E, psi_F);
    auto g = gauss_gamma(chi, psiE);
    if (E->kind() == EtaleKind::Unramified) return g.subst_double();
    return g;
}

RatFunc l_factor_etale_F(const MulChar& chi, const QuadEtalePtr& E) {
    auto L = l_factor(chi);
    if (!E->is_split() && E->kind() == EtaleKind::Unramified) return L.subst_double();
    return L;
}

bool base_change_identity_check(const MulChar& chi, const QuadEtalePtr& E, const AddChar& psi) {
    const auto& ctx = chi.context();
    auto bc = base_change(chi, E);
    auto lhs = gamma_etale_F(bc, E, psi) * lambda_factor(E, psi);
    auto rhs = gauss_gamma(chi, psi) * gauss_gamma(eta_char(E, ctx) * chi, psi);
    return lhs == rhs;
}

}  // namespace lsfactor
