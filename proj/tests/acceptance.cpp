// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.
#include <atomic>
#include <chrono>
#include <complex>
#include <cstdio>
#include <cstring>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <thread>
#include <vector>

#include "lsfactor/hecke.hpp"
#include "lsfactor/satake.hpp"

using namespace lsfactor;

namespace {

struct Tally {
    long cases = 0;
    long failures = 0;
    void check(bool ok) {
        ++cases;
        if (!ok) ++failures;
    }
};

struct Report {
    int number;
    std::string title;
    Tally tally;
    double seconds = 0;
    bool error = false;
    std::string what;
};

AddChar conj_psi(const AddChar& psi) {
    auto F = psi.field();
    return psi.scaled(F->neg(F->one()));
}

LaurentElem random_elem(const LocalFieldCtxPtr& F, std::mt19937_64& rng, bool nonzero) {
    for (;;) {
        long val = static_cast<long>(rng() % 5) - 2;
        std::vector<long> d(1 + rng() % 3);
        for (auto& c : d) c = static_cast<long>(rng() % static_cast<unsigned long>(F->q()));
        auto x = F->from_digits(val, d);
        if (!nonzero || !x.is_zero()) return x;
    }
}

InducingBlock block(MulChar chi) { return {std::move(chi), 0, 1}; }

MulChar etale_char(const QuadEtalePtr& E, const UnitClassGroup& UE, const CycContextPtr& ctx,
                   const std::vector<long>& e, const CycScalar& w) {
    std::vector<CycScalar> tb;
    for (long id = 0; id < E->ext()->unit_class_count(UE.m); ++id)
        tb.push_back(character_value(ctx, *UE.group, e, id));
    return MulChar::over_etale(E, ctx, UE.m, std::move(tb), w);
}

MulChar unram_etale(const QuadEtalePtr& E, const CycContextPtr& ctx, const CycScalar& w) {
    long n = E->ext()->unit_class_count(1);
    std::vector<CycScalar> tb(static_cast<size_t>(n), ctx->one());
    return MulChar::over_etale(E, ctx, 1, std::move(tb), w);
}

// Roots of a polynomial by Durand-Kerner on the complex embedding.
std::vector<std::complex<double>> poly_roots(const Poly& p) {
    long deg = p.degree();
    std::vector<std::complex<double>> c(static_cast<size_t>(deg) + 1);
    for (long i = 0; i <= deg; ++i) c[static_cast<size_t>(i)] = p.coeff(i).to_complex();
    for (auto& x : c) x /= c.back();
    std::vector<std::complex<double>> r(static_cast<size_t>(deg));
    std::complex<double> seed(0.4, 0.9);
    for (long i = 0; i < deg; ++i) r[static_cast<size_t>(i)] = std::pow(seed, i + 1);
    for (int it = 0; it < 500; ++it) {
        for (long i = 0; i < deg; ++i) {
            std::complex<double> horner = 0;
            for (long k = deg; k >= 0; --k)
                horner = horner * r[static_cast<size_t>(i)] + c[static_cast<size_t>(k)];
            std::complex<double> den = 1;
            for (long j = 0; j < deg; ++j)
                if (j != i) den *= r[static_cast<size_t>(i)] - r[static_cast<size_t>(j)];
            r[static_cast<size_t>(i)] -= horner / den;
        }
    }
    return r;
}

// Exact equality of step functions via refinement to a common coset depth.
bool step_equal(const LocalFieldCtxPtr& F, const StepFunction& f, const StepFunction& g) {
    long q = F->q();
    long D = 0, Vmin = 0;
    bool any = false;
    auto scan = [&](const StepFunction& h) {
        for (const auto& t : h) {
            long v = t.center.is_zero() ? t.depth : std::min(F->ord(t.center), t.depth);
            if (!any) {
                D = t.depth;
                Vmin = v;
                any = true;
            } else {
                D = std::max(D, t.depth);
                Vmin = std::min(Vmin, v);
            }
        }
    };
    scan(f);
    scan(g);
    if (!any) return true;
    Vmin = std::min(Vmin, D);
    std::map<std::vector<long>, CycScalar> acc;
    auto add = [&](const StepFunction& h, bool negate) {
        for (const auto& t : h) {
            long span = D - t.depth;
            if (span > 12) throw std::logic_error("step_equal: refinement too deep");
            std::vector<long> digits(static_cast<size_t>(span), 0);
            for (;;) {
                auto x = F->truncate(t.center, t.depth);
                for (long k = 0; k < span; ++k)
                    if (digits[static_cast<size_t>(k)] != 0)
                        x = F->add(x, F->from_residue(digits[static_cast<size_t>(k)],
                                                      t.depth + k));
                std::vector<long> key;
                for (long k = Vmin; k < D; ++k)
                    key.push_back(x.is_zero() ? 0 : F->coeff(x, k));
                auto val = negate ? -t.coeff : t.coeff;
                auto it = acc.find(key);
                if (it == acc.end())
                    acc.emplace(std::move(key), val);
                else
                    it->second = it->second + val;
                long k = 0;
                for (; k < span; ++k) {
                    if (++digits[static_cast<size_t>(k)] < q) break;
                    digits[static_cast<size_t>(k)] = 0;
                }
                if (k == span) break;
            }
        }
    };
    add(f, false);
    add(g, true);
    for (const auto& [k, v] : acc)
        if (!v.is_zero()) return false;
    return true;
}

// ---------------------------------------------------------------- criteria 1+2

void run_abelian(Tally& t1, Tally& t2) {
    std::mt19937_64 rng(20260823);
    for (auto [p, f] : {std::pair<long, long>{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
        auto F = LocalFieldCtx::create(FiniteField::create(p, f));
        Rational qv(F->q());

        auto one_case = [&](const MulChar& chi, const CycContextPtr& ctx, long level) {
            auto psi = AddChar::of_level(F, ctx, level);
            auto g = gauss_gamma(chi, psi);
            t2.check(zeta_oracle_gamma(chi, psi) == g);
            bool ok = true;
            // inversion
            auto gbar = gauss_gamma(chi.inv(), conj_psi(psi)).subst_one_minus_s(qv);
            ok = ok && (g * gbar).is_one();
            // scaling under psi -> psi^a
            auto a = random_elem(F, rng, true);
            long v = F->ord(a);
            ok = ok && gauss_gamma(chi, psi.scaled(a)) ==
                           g * RatFunc::monomial(chi.eval(a) * ctx->sqrt_q_pow(v), v);
            // epsilon pairing and epsilon scaling
            auto eps = epsilon_factor(chi, psi);
            auto dual = epsilon_factor(chi.inv(), conj_psi(psi));
            ok = ok && (RatFunc::monomial(eps.coeff, eps.z_exponent) *
                        RatFunc::monomial(dual.coeff, dual.z_exponent).subst_one_minus_s(qv))
                           .is_one();
            auto epsa = epsilon_factor(chi, psi.scaled(a));
            ok = ok && epsa.z_exponent == eps.z_exponent + v &&
                 epsa.coeff == eps.coeff * chi.eval(a) * ctx->sqrt_q_pow(v);
            // unramified closed form at level 0
            if (!chi.is_ramified() && level == 0)
                ok = ok && g == l_factor(chi.inv()).subst_one_minus_s(qv) / l_factor(chi);
            t1.check(ok);
        };

        // unramified characters
        {
            auto ctx = CycContext::create(p, f);
            for (int rep = 0; rep < 20; ++rep) {
                auto chi = MulChar::unramified(F, ctx, ctx->zeta_pow(rng() % ctx->order()));
                one_case(chi, ctx, rep % 2 == 0 ? 0 : static_cast<long>(rng() % 5) - 2);
            }
        }
        // ramified characters, conductor exponents up to 3
        for (long m : {1L, 2L, 3L}) {
            long quota = m == 3 ? 40 : 70;
            auto U = UnitClassGroup::create(F, m);
            auto ctx = CycContext::create(p, f, {U.exponent()});
            auto exps = all_character_exponents(U.group->invariants());
            for (long rep = 0; rep < quota; ++rep) {
                auto chi = U.make_char(ctx, exps[rng() % exps.size()],
                                       ctx->zeta_pow(rng() % ctx->order()));
                one_case(chi, ctx, static_cast<long>(rng() % 5) - 2);
            }
        }
        // Fourier round trip on random step functions
        {
            auto ctx = CycContext::create(p, f);
            auto psi0 = AddChar::standard(F, ctx);
            long vmax = F->q() >= 4 ? 1 : 2;
            for (int rep = 0; rep < 25; ++rep) {
                StepFunction fn;
                long nterms = 1 + rng() % 3;
                for (long i = 0; i < nterms; ++i) {
                    auto center = rng() % 4 == 0 ? F->zero() : random_elem(F, rng, false);
                    fn.push_back({ctx->zeta_pow(rng() % ctx->order()), center,
                                  static_cast<long>(rng() % 3)});
                }
                auto unit = [&]() {
                    return F->from_residue(1 + rng() % static_cast<unsigned long>(F->q() - 1),
                                           static_cast<long>(rng() % (2 * vmax + 1)) - vmax);
                };
                auto a = unit();
                auto b = unit();
                auto lhs = fourier_transform(fourier_transform(fn, psi0.scaled(b)),
                                             psi0.scaled(a));
                auto c = F->neg(F->mul(a, F->inv_mod(b, 4)));
                auto cinv = F->inv_mod(c, 4);
                long vc = F->ord(c);
                auto scalar = ctx->sqrt_q_pow(F->ord(b) - F->ord(a));
                StepFunction rhs;
                for (const auto& t : fn)
                    rhs.push_back({t.coeff * scalar, F->mul(cinv, t.center), t.depth - vc});
                t1.check(step_equal(F, lhs, rhs));
            }
        }
    }
}

// ------------------------------------------------------------------ criterion 3

void run_lambda(Tally& t) {
    std::mt19937_64 rng(3);
    for (long p : {3L, 5L}) {
        auto F = LocalFieldCtx::create(FiniteField::create(p, 1));
        auto U = UnitClassGroup::create(F, 1);
        auto ctx = CycContext::create(p, 1, {U.exponent()});
        auto exps = all_character_exponents(U.group->invariants());
        auto rand_char = [&]() {
            return U.make_char(ctx, exps[rng() % exps.size()],
                               ctx->zeta_pow(rng() % ctx->order()));
        };
        // unitarity across levels
        for (long l : {-2L, -1L, 0L, 1L, 2L}) {
            auto psi = AddChar::of_level(F, ctx, l);
            t.check(lambda_factor(QuadEtale::create(F, EtaleKind::Split), psi).is_one());
            for (auto kind : {EtaleKind::Unramified, EtaleKind::Ramified}) {
                auto E = QuadEtale::create(F, kind);
                auto lam = lambda_factor(E, psi);
                t.check((lam * lambda_factor(E, conj_psi(psi))).is_one() &&
                        (lam * lam.conj()).is_one());
            }
        }
        for (auto kind : {EtaleKind::Split, EtaleKind::Unramified, EtaleKind::Ramified}) {
            auto E = QuadEtale::create(F, kind);
            // base-change identity, 50 characters per algebra
            for (int rep = 0; rep < 50; ++rep) {
                auto chi = rand_char();
                auto psi = AddChar::of_level(F, ctx, static_cast<long>(rep % 3) - 1);
                t.check(base_change_identity_check(chi, E, psi));
            }
            // lambda recovered from the base-change identity is the same
            // constant for every character
            auto psi = AddChar::standard(F, ctx);
            auto lamref = RatFunc::constant(lambda_factor(E, psi));
            auto eta = eta_char(E, ctx);
            for (int rep = 0; rep < 5; ++rep) {
                auto chi = rand_char();
                auto lrec = gauss_gamma(chi, psi) * gauss_gamma(eta * chi, psi) /
                            gamma_etale_F(base_change(chi, E), E, psi);
                t.check(lrec == lamref);
            }
        }
    }
}

// ------------------------------------------------------------------ criterion 4

void run_rank_one(Tally& t) {
    auto F = LocalFieldCtx::create(FiniteField::create(3, 1));
    auto U = UnitClassGroup::create(F, 2);
    auto Eu = QuadEtale::create(F, EtaleKind::Unramified);
    auto Er = QuadEtale::create(F, EtaleKind::Ramified);
    auto Es = QuadEtale::create(F, EtaleKind::Split);
    auto UEu = UnitClassGroup::create(Eu->ext(), 1);
    auto UEr = UnitClassGroup::create(Er->ext(), 1);
    auto N1u = norm_one_classes(Eu, 1);
    auto N1r = norm_one_classes(Er, 1);
    auto ctx = CycContext::create(3, 1, {U.exponent(), UEu.exponent(), UEr.exponent(),
                                         N1u.group->exponent(), N1r.group->exponent()});
    auto psi = AddChar::standard(F, ctx);
    std::mt19937_64 rng(4);
    auto exps = all_character_exponents(U.group->invariants());
    auto rand_char = [&]() {
        return U.make_char(ctx, exps[rng() % exps.size()], ctx->zeta_pow(rng() % ctx->order()));
    };

    for (int rep = 0; rep < 8; ++rep) {
        auto chi = rand_char();
        auto chi2 = rand_char();
        auto nu0 = rand_char();
        InducingDatum d1{{block(chi)}, {}};
        // closed forms of the five rank-one cases
        t.check(rank_one_coefficient(GroupTag::sp(1), d1, psi) == gauss_gamma(chi, psi));
        t.check(rank_one_coefficient(GroupTag::so_odd(1), d1, psi) ==
                gauss_gamma(chi.square(), psi));
        t.check(rank_one_coefficient(GroupTag::gl(1, 1), {{block(chi), block(chi2)}, {}},
                                     psi) == gauss_gamma(chi * chi2, psi));
        auto pair = MulChar::split_pair(Es, chi, chi2);
        t.check(rank_one_coefficient(GroupTag::u_even(1, Es), {{block(pair)}, {}}, psi) ==
                gauss_gamma(chi * chi2, psi));
        InducingDatum dsp{{block(pair)}, hilbert90_extend_split(Es, nu0)};
        t.check(rank_one_coefficient(GroupTag::u_odd(1, Es), dsp, psi) ==
                gauss_gamma(chi * nu0.inv(), psi) * gauss_gamma(chi2 * nu0, psi) *
                    gauss_gamma(chi * chi2, psi).subst_double());
        // rank-one coefficient equals the assembled coefficient at n = 1
        t.check(rank_one_coefficient(GroupTag::sp(1), d1, psi) ==
                classical_coefficient(GroupTag::sp(1), d1, psi));
        t.check(rank_one_coefficient(GroupTag::so_odd(1), d1, psi) ==
                classical_coefficient(GroupTag::so_odd(1), d1, psi));
        t.check(rank_one_coefficient(GroupTag::gl(1, 1), {{block(chi), block(chi2)}, {}},
                                     psi) ==
                rankin_selberg_gamma({{block(chi)}, {}}, {{block(chi2)}, {}}, psi));
        t.check(rank_one_coefficient(GroupTag::u_even(1, Es), {{block(pair)}, {}}, psi) ==
                classical_coefficient(GroupTag::u_even(1, Es), {{block(pair)}, {}}, psi));
        t.check(rank_one_coefficient(GroupTag::u_odd(1, Es), dsp, psi) ==
                classical_coefficient(GroupTag::u_odd(1, Es), dsp, psi));
    }

    // unitary rank one over the field algebras
    for (const auto& [E, UE, N1] : {std::tuple{Eu, UEu, N1u}, std::tuple{Er, UEr, N1r}}) {
        auto eexps = all_character_exponents(UE.group->invariants());
        auto nexps = all_character_exponents(N1.group->invariants());
        for (int rep = 0; rep < 6; ++rep) {
            auto c1 = etale_char(E, UE, ctx, eexps[rng() % eexps.size()],
                                 ctx->zeta_pow(rng() % ctx->order()));
            auto c2 = etale_char(E, UE, ctx, eexps[rng() % eexps.size()],
                                 ctx->zeta_pow(rng() % ctx->order()));
            auto nu = hilbert90_extend({N1, ctx, nexps[rng() % nexps.size()]});
            InducingDatum da{{block(c1)}, nu};
            InducingDatum db{{block(c2)}, nu};
            auto G1 = GroupTag::u_odd(1, E);
            t.check(rank_one_coefficient(G1, da, psi) == classical_coefficient(G1, da, psi));
            t.check(rank_one_coefficient(GroupTag::u_even(1, E), {{block(c1)}, {}}, psi) ==
                    classical_coefficient(GroupTag::u_even(1, E), {{block(c1)}, {}}, psi));
            // rank-one pieces of the s/2s grouping match the closed forms
            auto p1 = gamma_pair(G1, da, psi);
            t.check(p1.gamma1 == gamma_etale_F(c1 * nu, E, psi) &&
                    p1.gamma2 == gauss_gamma(eta_char(E, ctx) * restrict_to_F(c1), psi));
            // rank two assembled from two rank-one parts and the cross term
            InducingDatum d2{{block(c1), block(c2)}, nu};
            auto G2 = GroupTag::u_odd(2, E);
            auto C2 = classical_coefficient(G2, d2, psi);
            t.check(C2 == classical_coefficient(G1, da, psi) *
                              classical_coefficient(G1, db, psi) *
                              gamma_etale_F(c1 * c2.galois_conj(), E, psi).subst_double());
            // the grouping reassembles the coefficient
            auto pr = gamma_pair(G2, d2, psi);
            t.check(C2 == pr.gamma1 * pr.gamma2.subst_double() *
                              RatFunc::constant(lambda_normalization(G2, psi)));
        }
    }

    // rank three from lower-rank parts plus cross terms
    for (int rep = 0; rep < 8; ++rep) {
        auto c1 = rand_char();
        auto c2 = rand_char();
        auto c3 = rand_char();
        InducingDatum d3{{block(c1), block(c2), block(c3)}, {}};
        InducingDatum da{{block(c1)}, {}};
        InducingDatum db{{block(c2), block(c3)}, {}};
        auto cross_s = gauss_gamma(c1 * c2, psi) * gauss_gamma(c1 * c3, psi);
        t.check(classical_coefficient(GroupTag::sp(3), d3, psi) ==
                classical_coefficient(GroupTag::sp(1), da, psi) *
                    classical_coefficient(GroupTag::sp(2), db, psi) *
                    cross_s.subst_double());
        t.check(classical_coefficient(GroupTag::so_odd(3), d3, psi) ==
                classical_coefficient(GroupTag::so_odd(1), da, psi) *
                    classical_coefficient(GroupTag::so_odd(2), db, psi) * cross_s);
        t.check(classical_coefficient(GroupTag::so_even(3), d3, psi) ==
                classical_coefficient(GroupTag::so_even(2), db, psi) * cross_s);
        // the s/2s grouping reassembles the Sp coefficient
        auto p = gamma_pair(GroupTag::sp(3), d3, psi);
        t.check(p.gamma1 * p.gamma2.subst_double() ==
                classical_coefficient(GroupTag::sp(3), d3, psi));
    }

    // split-place reduction: U_even(2) over the split algebra is the
    // Rankin-Selberg product of the component data
    for (int rep = 0; rep < 4; ++rep) {
        MulChar c11 = rand_char(), c12 = rand_char(), c21 = rand_char(), c22 = rand_char();
        InducingDatum d{{block(MulChar::split_pair(Es, c11, c21)),
                         block(MulChar::split_pair(Es, c12, c22))},
                        {}};
        t.check(classical_coefficient(GroupTag::u_even(2, Es), d, psi) ==
                rankin_selberg_gamma({{block(c11), block(c12)}, {}},
                                     {{block(c21), block(c22)}, {}}, psi));
    }
}

// ------------------------------------------------------------------ criterion 5

void run_local_fe(Tally& t) {
    auto F = LocalFieldCtx::create(FiniteField::create(3, 1));
    auto U = UnitClassGroup::create(F, 1);
    auto Eu = QuadEtale::create(F, EtaleKind::Unramified);
    auto Er = QuadEtale::create(F, EtaleKind::Ramified);
    auto UEu = UnitClassGroup::create(Eu->ext(), 1);
    auto UEr = UnitClassGroup::create(Er->ext(), 1);
    auto N1u = norm_one_classes(Eu, 1);
    auto N1r = norm_one_classes(Er, 1);
    auto ctx = CycContext::create(3, 1, {U.exponent(), UEu.exponent(), UEr.exponent(),
                                         N1u.group->exponent(), N1r.group->exponent()});
    auto psi = AddChar::standard(F, ctx);
    auto psibar = conj_psi(psi);
    Rational qv(3);
    std::mt19937_64 rng(5);
    auto exps = all_character_exponents(U.group->invariants());
    auto rand_char = [&]() {
        return U.make_char(ctx, exps[rng() % exps.size()], ctx->zeta_pow(rng() % ctx->order()));
    };
    auto rand_datum = [&](long n) {
        InducingDatum d;
        for (long i = 0; i < n; ++i) d.blocks.push_back(block(rand_char()));
        return d;
    };
    auto twist_all = [](InducingDatum d, long delta) {
        for (auto& b : d.blocks) b.u2 += delta;
        return d;
    };
    auto rand_delta = [&]() { return static_cast<long>(rng() % 5) - 2; };

    for (int rep = 0; rep < 100; ++rep) {
        long n = 1 + static_cast<long>(rng() % 3);
        long delta = rand_delta();
        auto scale1 = ctx->sqrt_q_pow(-delta);
        auto scale2 = ctx->sqrt_q_pow(-2 * delta);

        // GL: two factors of total rank <= 3
        {
            auto d1 = rand_datum(1 + static_cast<long>(rng() % 2));
            auto d2 = rand_datum(1);
            auto fwd = rankin_selberg_gamma(d1, d2, psi);
            auto bwd = rankin_selberg_gamma(dual_datum(d1), dual_datum(d2), psibar)
                           .subst_one_minus_s(qv);
            bool ok = (fwd * bwd).is_one();
            ok = ok && rankin_selberg_gamma(twist_all(d1, delta), d2, psi) ==
                           fwd.subst_scale(scale1);
            t.check(ok);
        }
        // SO_odd and SO_even
        for (auto G : {GroupTag::so_odd(n), GroupTag::so_even(std::max(n, 2L))}) {
            auto d = rand_datum(G.n);
            auto fwd = classical_coefficient(G, d, psi);
            bool ok = (fwd * classical_coefficient(G, dual_datum(d), psibar)
                                 .subst_one_minus_s(qv))
                          .is_one();
            ok = ok && classical_coefficient(G, twist_all(d, delta), psi) ==
                           fwd.subst_scale(scale2);
            t.check(ok);
        }
        // Sp: functional equation and twist per grouping
        {
            auto G = GroupTag::sp(n);
            auto d = rand_datum(n);
            auto p = gamma_pair(G, d, psi);
            auto pd = gamma_pair(G, dual_datum(d), psibar);
            bool ok = (p.gamma1 * pd.gamma1.subst_one_minus_s(qv)).is_one() &&
                      (p.gamma2 * pd.gamma2.subst_one_minus_s(qv)).is_one();
            auto pt = gamma_pair(G, twist_all(d, delta), psi);
            ok = ok && pt.gamma1 == p.gamma1.subst_scale(scale1) &&
                 pt.gamma2 == p.gamma2.subst_scale(scale2);
            t.check(ok);
        }
        // unitary variants over both field algebras
        {
            const auto& E = rep % 2 == 0 ? Eu : Er;
            const auto& UE = rep % 2 == 0 ? UEu : UEr;
            const auto& N1 = rep % 2 == 0 ? N1u : N1r;
            auto eexps = all_character_exponents(UE.group->invariants());
            auto nexps = all_character_exponents(N1.group->invariants());
            InducingDatum d;
            for (long i = 0; i < n; ++i)
                d.blocks.push_back(block(etale_char(E, UE, ctx, eexps[rng() % eexps.size()],
                                                    ctx->zeta_pow(rng() % ctx->order()))));
            auto Ge = GroupTag::u_even(n, E);
            auto fwd = classical_coefficient(Ge, d, psi);
            bool ok = (fwd * classical_coefficient(Ge, dual_datum(d), psibar)
                                 .subst_one_minus_s(qv))
                          .is_one();
            ok = ok && classical_coefficient(Ge, twist_all(d, delta), psi) ==
                           fwd.subst_scale(scale2);
            t.check(ok);

            d.nu = hilbert90_extend({N1, ctx, nexps[rng() % nexps.size()]});
            auto Go = GroupTag::u_odd(n, E);
            auto p = gamma_pair(Go, d, psi);
            auto pd = gamma_pair(Go, dual_datum(d), psibar);
            ok = (p.gamma1 * pd.gamma1.subst_one_minus_s(qv)).is_one() &&
                 (p.gamma2 * pd.gamma2.subst_one_minus_s(qv)).is_one();
            auto pt = gamma_pair(Go, twist_all(d, delta), psi);
            ok = ok && pt.gamma1 == p.gamma1.subst_scale(scale1) &&
                 pt.gamma2 == p.gamma2.subst_scale(scale2);
            t.check(ok);
        }
        // the psi-scaling recomputation asserts its prediction internally
        if (rep % 10 == 0) {
            auto d = rand_datum(2);
            auto a = random_elem(F, rng, true);
            for (auto G : {GroupTag::so_odd(2), GroupTag::sp(2)})
                t.check(psi_dependence(G, d, psi, a) ==
                        classical_coefficient(G, d, psi.scaled(a)));
        }
    }
}

// ------------------------------------------------------------------ criterion 6

void run_unramified(Tally& t) {
    std::mt19937_64 rng(6);
    for (auto [p, f] : {std::pair<long, long>{2, 1}, {3, 1}}) {
        auto F = LocalFieldCtx::create(FiniteField::create(p, f));
        auto ctx = CycContext::create(p, f);
        auto psi = AddChar::standard(F, ctx);
        auto rand_w = [&]() { return ctx->zeta_pow(rng() % ctx->order()); };
        auto datum = [&](long n) {
            InducingDatum d;
            for (long i = 0; i < n; ++i)
                d.blocks.push_back(block(MulChar::unramified(F, ctx, rand_w())));
            return d;
        };
        for (int rep = 0; rep < 34; ++rep) {
            for (long n : {1L, 2L, 3L}) {
                t.check(unramified_identity_check(GroupTag::so_odd(n), datum(n), psi));
                t.check(unramified_identity_check(GroupTag::sp(n), datum(n), psi));
                if (n >= 2)
                    t.check(unramified_identity_check(GroupTag::so_even(n), datum(n), psi));
            }
            t.check(unramified_identity_check(GroupTag::gl(1, 1), datum(2), psi));
            t.check(unramified_identity_check(GroupTag::gl(1, 2), datum(3), psi));
            t.check(unramified_identity_check(GroupTag::gl(2, 1), datum(3), psi));
        }
        for (auto kind : {EtaleKind::Split, EtaleKind::Unramified}) {
            auto E = QuadEtale::create(F, kind);
            auto rand_echar = [&]() {
                if (E->is_split())
                    return MulChar::split_pair(E, MulChar::unramified(F, ctx, rand_w()),
                                               MulChar::unramified(F, ctx, rand_w()));
                return unram_etale(E, ctx, rand_w());
            };
            auto rand_nu = [&]() {
                if (E->is_split())
                    return hilbert90_extend_split(E, MulChar::unramified(F, ctx, rand_w()));
                return unram_etale(E, ctx, rand_w());
            };
            // higher ranks cost a literal determinant per inert class, so the
            // bulk of the quota sits at rank one
            for (long n : {1L, 2L, 3L}) {
                long reps = n == 1 ? 25 : n == 2 ? 10 : 3;
                for (long rep = 0; rep < reps; ++rep) {
                    InducingDatum d;
                    for (long i = 0; i < n; ++i) d.blocks.push_back(block(rand_echar()));
                    t.check(unramified_identity_check(GroupTag::u_even(n, E), d, psi));
                    d.nu = rand_nu();
                    t.check(unramified_identity_check(GroupTag::u_odd(n, E), d, psi));
                }
            }
        }
    }
    // twisted Asai determinant against the block closed form, up to rank 4
    {
        auto ctx = CycContext::create(3, 1);
        auto one = RatFunc::one(ctx);
        for (long n : {1L, 2L, 3L, 4L}) {
            long reps = n <= 2 ? 3 : n == 3 ? 2 : 1;
            for (long rep = 0; rep < reps; ++rep) {
                SatakeClass cls;
                cls.frob_twist = true;
                for (long i = 0; i < n; ++i) {
                    cls.x.push_back(ctx->zeta_pow(1 + rng() % (ctx->order() - 1)));
                    cls.y.push_back(ctx->zeta_pow(1 + rng() % (ctx->order() - 1)));
                }
                auto closed = one;
                for (long i = 0; i < n; ++i) {
                    auto xi = cls.x[static_cast<size_t>(i)];
                    auto yi = cls.y[static_cast<size_t>(i)];
                    closed = closed * (one - RatFunc::monomial(xi * yi, 1));
                    for (long j = i + 1; j < n; ++j) {
                        auto xj = cls.x[static_cast<size_t>(j)];
                        auto yj = cls.y[static_cast<size_t>(j)];
                        closed = closed * (one - RatFunc::monomial(xi * xj * yi * yj, 2));
                    }
                }
                t.check(unramified_L(cls, SatakeRep::Asai) == closed.inv());
                cls.frob_twist = false;
                t.check(unramified_L(cls, SatakeRep::Asai) ==
                        unramified_L(cls, SatakeRep::Tensor));
            }
        }
    }
}

// ------------------------------------------------------------------ criterion 7

void run_tempered(Tally& t) {
    auto F = LocalFieldCtx::create(FiniteField::create(3, 1));
    auto U = UnitClassGroup::create(F, 1);
    auto Eu = QuadEtale::create(F, EtaleKind::Unramified);
    auto UEu = UnitClassGroup::create(Eu->ext(), 1);
    auto ctx = CycContext::create(3, 1, {U.exponent(), UEu.exponent()});
    auto psi = AddChar::standard(F, ctx);
    auto psibar = conj_psi(psi);
    Rational qv(3);
    std::mt19937_64 rng(7);
    auto exps = all_character_exponents(U.group->invariants());
    auto eexps = all_character_exponents(UEu.group->invariants());
    auto rand_char = [&]() {
        return U.make_char(ctx, exps[rng() % exps.size()], ctx->zeta_pow(rng() % ctx->order()));
    };
    auto roots_ok = [&](const LocalFactors& lf) {
        const auto& den = lf.L.den();
        if (den.degree() < 1) return true;
        for (const auto& r : poly_roots(den))
            if (!(std::abs(r) > 1.0 - 1e-6)) return false;
        return true;
    };
    for (int rep = 0; rep < 25; ++rep) {
        InducingDatum d{{block(rand_char()), block(rand_char())}, {}};
        auto dd = dual_datum(d);
        for (auto G : {GroupTag::so_odd(2), GroupTag::so_even(2)}) {
            auto g = classical_coefficient(G, d, psi);
            auto gd = classical_coefficient(G, dd, psibar);
            t.check(roots_ok(local_factors_from_gamma({g}, {gd}, qv, true)));
        }
        // unitary even, unramified algebra
        {
            InducingDatum de{{block(etale_char(Eu, UEu, ctx, eexps[rng() % eexps.size()],
                                               ctx->zeta_pow(rng() % ctx->order()))),
                              block(etale_char(Eu, UEu, ctx, eexps[rng() % eexps.size()],
                                               ctx->zeta_pow(rng() % ctx->order())))},
                             {}};
            auto Ge = GroupTag::u_even(2, Eu);
            auto g = classical_coefficient(Ge, de, psi);
            auto gd = classical_coefficient(Ge, dual_datum(de), psibar);
            t.check(roots_ok(local_factors_from_gamma({g}, {gd}, qv, true)));
        }
        // GL pair
        {
            InducingDatum d1{{block(rand_char()), block(rand_char())}, {}};
            InducingDatum d2{{block(rand_char())}, {}};
            auto g = rankin_selberg_gamma(d1, d2, psi);
            auto gd = rankin_selberg_gamma(dual_datum(d1), dual_datum(d2), psibar);
            t.check(roots_ok(local_factors_from_gamma({g}, {gd}, qv, true)));
        }
    }
}

// ------------------------------------------------------------------ criterion 8

void run_global_fe(Tally& t) {
    std::vector<std::pair<FiniteFieldPtr, FqPoly>> jobs;
    auto k2 = FiniteField::create(2, 1);
    auto k3 = FiniteField::create(3, 1);
    for (long d = 1; d <= 4; ++d)
        for (const auto& m : fq_monics(k2, d)) jobs.emplace_back(k2, m);
    for (long d = 1; d <= 3; ++d)
        for (const auto& m : fq_monics(k3, d)) jobs.emplace_back(k3, m);

    std::atomic<size_t> next{0};
    std::mutex mu;
    long cases = 0, failures = 0;
    auto work = [&]() {
        long c = 0, bad = 0;
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= jobs.size()) break;
            const auto& [k, m] = jobs[i];
            for (const auto& chi : all_characters(k, m)) {
                if (chi.is_trivial() || !chi.is_primitive()) continue;
                ++c;
                bool ok = functional_equation_check(chi);
                // completed L of a primitive nontrivial character is a polynomial
                if (ok) ok = completed_L(chi).den().degree() == 0;
                if (!ok) ++bad;
            }
        }
        std::lock_guard<std::mutex> g(mu);
        cases += c;
        failures += bad;
    };
    unsigned nthreads = std::min(8u, std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    t.cases += cases;
    t.failures += failures;
}

// ------------------------------------------------------------------ criterion 9

void run_crude(Tally& t) {
    auto k2 = FiniteField::create(2, 1);
    auto k3 = FiniteField::create(3, 1);

    // SL_2 side: every nontrivial character of every cubic modulus over F_2
    for (const auto& m : fq_monics(k2, 3))
        for (const auto& c : all_characters(k2, m)) {
            if (c.is_trivial()) continue;
            t.check(crude_fe_check(CrudeCase::SL2, {c}));
        }

    // symmetric square side: quadratic moduli over F_3, square nontrivial
    long so3 = 0;
    for (const auto& m : fq_monics(k3, 2))
        for (const auto& c : all_characters(k3, m)) {
            if (c.is_trivial() || (c * c).is_trivial()) continue;
            t.check(crude_fe_check(CrudeCase::SO3, {c}));
            ++so3;
        }
    t.check(so3 >= 20);

    // GL(1) x GL(1) pairs over a common modulus
    {
        long done = 0;
        auto chars = all_characters(k2, fq_parse(k2, "t^3+t+1"));
        for (const auto& c1 : chars) {
            for (const auto& c2 : chars) {
                if (c1.is_trivial() || (c1 * c2).is_trivial()) continue;
                t.check(crude_fe_check(CrudeCase::GL11, {c1, c2}));
                if (++done == 12) break;
            }
            if (done == 12) break;
        }
        auto chars2 = all_characters(k2, fq_parse(k2, "t^3"));
        for (const auto& c1 : chars2)
            for (const auto& c2 : chars2) {
                if (c1.is_trivial() || (c1 * c2).is_trivial()) continue;
                t.check(crude_fe_check(CrudeCase::GL11, {c1, c2}));
            }
    }

    // unitary cases over the quadratic constant-field extensions
    {
        auto K4 = FiniteField::create(2, 2);
        FqPoly m{K4->mul(2, 1), 1};  // t + beta with beta outside F_2
        m = fq_mul(K4, m, fq_parse(K4, "t+1"));
        long uchars = 0;
        for (const auto& c : all_characters(K4, m)) {
            if (c.is_trivial()) continue;
            t.check(crude_fe_check(CrudeCase::U2, {c}));
            t.check(crude_fe_check(CrudeCase::U3, {c}));
            ++uchars;
        }
        auto K9 = FiniteField::create(3, 2);
        FqPoly m9{3, 1};  // t + beta with beta a generator image
        m9 = fq_mul(K9, m9, fq_parse(K9, "t+1"));
        long done = 0;
        for (const auto& c : all_characters(K9, m9)) {
            if (c.is_trivial()) continue;
            t.check(crude_fe_check(CrudeCase::U2, {c}));
            t.check(crude_fe_check(CrudeCase::U3, {c}));
            ++uchars;
            if (++done == 3) break;
        }
        t.check(uchars >= 10);
    }
}

// ----------------------------------------------------------------- criterion 10

void run_segments(Tally& t) {
    std::mt19937_64 rng(10);
    for (auto [p, f] : {std::pair<long, long>{2, 1}, {3, 1}}) {
        auto F = LocalFieldCtx::create(FiniteField::create(p, f));
        auto ctx = CycContext::create(p, f);
        auto psi = AddChar::standard(F, ctx);
        Rational qv(F->q());
        auto one = RatFunc::one(ctx);
        for (long a = 1; a <= 3; ++a)
            for (long b = 1; b <= 3; ++b)
                for (int rep = 0; rep < 2; ++rep) {
                    auto chi = MulChar::unramified(F, ctx, ctx->zeta_pow(rng() % ctx->order()));
                    auto mu = MulChar::unramified(F, ctx, ctx->zeta_pow(rng() % ctx->order()));
                    InducingDatum d1{{{chi, 0, a}}, {}};
                    InducingDatum d2{{{mu, 0, b}}, {}};
                    auto g = rankin_selberg_gamma(d1, d2, psi);
                    auto gd = rankin_selberg_gamma(dual_datum(d1), dual_datum(d2),
                                                   conj_psi(psi));
                    auto lf = local_factors_from_gamma({g}, {gd}, qv, true);
                    auto w = chi.w() * mu.w();
                    auto expect = one;
                    for (long j = 0; j < std::min(a, b); ++j)
                        expect = expect *
                                 (one - RatFunc::monomial(
                                            w * ctx->sqrt_q_pow(-(a + b - 2 - 2 * j)), 1));
                    t.check(lf.L == expect.inv() && lf.L.den().degree() == std::min(a, b));
                }
    }
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> only;
    for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
    auto wanted = [&](int n) { return only.empty() || only.count(n) > 0; };

    std::vector<Report> reports;
    auto run = [&](int number, const std::string& title, auto&& fn) {
        Report r{number, title, {}, 0, false, {}};
        if (wanted(number)) {
            auto start = std::chrono::steady_clock::now();
            try {
                fn(r.tally);
            } catch (const std::exception& e) {
                r.error = true;
                r.what = e.what();
            }
            r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                            .count();
            reports.push_back(std::move(r));
        }
    };

    Tally oracle;  // filled alongside criterion 1
    run(1, "abelian gamma/epsilon identities and Fourier round trip",
        [&](Tally& t) { run_abelian(t, oracle); });
    run(2, "zeta-integral oracle matches the shell computation", [&](Tally& t) {
        if (oracle.cases > 0) {
            t = oracle;
            return;
        }
        Tally scratch;
        run_abelian(scratch, t);
    });
    run(3, "lambda factors: unitarity, constancy, base-change identity", run_lambda);
    run(4, "rank-one closed forms, multiplicativity, pair regrouping", run_rank_one);
    run(5, "local functional equation and unramified twist law", run_local_fe);
    run(6, "unramified identities and the Asai closed form", run_unramified);
    run(7, "tempered L-factors holomorphic for Re(s) > 0", run_tempered);
    run(8, "global functional equation, all primitive characters", run_global_fe);
    run(9, "crude functional equation: SL2, SO3, GL(1,1), U2, U3", run_crude);
    run(10, "segment L-factors match the closed form", run_segments);

    bool all_ok = true;
    for (const auto& r : reports) {
        bool ok = !r.error && r.tally.failures == 0 && r.tally.cases > 0;
        all_ok = all_ok && ok;
        if (r.error)
            std::printf("criterion %2d: FAIL  %s (error: %s)\n", r.number, r.title.c_str(),
                        r.what.c_str());
        else
            std::printf("criterion %2d: %s  %s (%ld cases, %ld failed, %.1fs)\n", r.number,
                        ok ? "PASS" : "FAIL", r.title.c_str(), r.tally.cases,
                        r.tally.failures, r.seconds);
    }
    std::printf("%s\n", all_ok ? "acceptance: all criteria passed" : "acceptance: FAILURES");
    return all_ok ? 0 : 1;
}
