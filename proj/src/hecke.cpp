#include "lsfactor/hecke.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace lsfactor {

namespace {

long residue_count(const FiniteFieldPtr& k, const FqPoly& m) {
    long n = 1;
    for (long i = 0; i < fq_deg(m); ++i) n *= k->size();
    return n;
}

std::vector<long> coprime_codes(const FiniteFieldPtr& k, const FqPoly& m) {
    std::vector<long> out;
    long n = residue_count(k, m);
    for (long c = 0; c < n; ++c)
        if (fq_coprime(k, fq_from_code(k, c), m)) out.push_back(c);
    return out;
}

LocalFieldCtxPtr completion_field(const FiniteFieldPtr& k, long d) {
    return LocalFieldCtx::create(FiniteField::create(k->p(), k->deg() * d));
}

MulChar trivial_etale(const QuadEtalePtr& E, const CycContextPtr& ctx) {
    if (E->is_split())
        return MulChar::split_pair(E, MulChar::trivial(E->base(), ctx),
                                   MulChar::trivial(E->base(), ctx));
    long n = E->ext()->unit_class_count(1);
    return MulChar::over_etale(E, ctx, 1, std::vector<CycScalar>(static_cast<size_t>(n), ctx->one()),
                               ctx->one());
}

}  // namespace

HeckeChar HeckeChar::from_values(FiniteFieldPtr k, FqPoly modulus, CycContextPtr ctx,
                                 std::vector<CycScalar> values) {
    modulus = fq_trim(std::move(modulus));
    if (!fq_is_monic(modulus)) throw std::invalid_argument("HeckeChar: modulus must be monic");
    if (static_cast<long>(values.size()) != residue_count(k, modulus))
        throw std::invalid_argument("HeckeChar: table size mismatch");
    auto cop = coprime_codes(k, modulus);
    std::vector<char> isc(values.size(), 0);
    for (long c : cop) isc[static_cast<size_t>(c)] = 1;
    for (size_t i = 0; i < values.size(); ++i)
        if (isc[i] ? values[i].is_zero() : !values[i].is_zero())
            throw std::invalid_argument("HeckeChar: support must be the coprime residues");
    for (long a : cop)
        for (long b : cop) {
            long ab = fq_code(k, fq_mulmod(k, fq_from_code(k, a), fq_from_code(k, b), modulus));
            if (values[static_cast<size_t>(ab)] !=
                values[static_cast<size_t>(a)] * values[static_cast<size_t>(b)])
                throw std::invalid_argument("HeckeChar: table is not multiplicative");
        }

    HeckeChar out;
    out.k_ = std::move(k);
    out.m_ = std::move(modulus);
    out.ctx_ = std::move(ctx);
    out.values_ = std::move(values);

    // conductor: per prime, the least exponent whose congruence kernel the
    // character kills
    out.cond_ = fq_one();
    if (fq_deg(out.m_) > 0) {
        for (const auto& [P, e] : fq_factor(out.k_, out.m_)) {
            auto rest = fq_divmod(out.k_, out.m_, fq_pow(out.k_, P, e)).first;
            for (long a = 0; a <= e; ++a) {
                auto md = fq_mul(out.k_, fq_pow(out.k_, P, a), rest);
                bool trivial = true;
                for (long c : cop) {
                    auto r = fq_from_code(out.k_, c);
                    if (!fq_mod(out.k_, fq_sub(out.k_, r, fq_one()), md).empty()) continue;
                    if (!out.values_[static_cast<size_t>(c)].is_one()) {
                        trivial = false;
                        break;
                    }
                }
                if (trivial) {
                    out.cond_ = fq_mul(out.k_, out.cond_, fq_pow(out.k_, P, a));
                    break;
                }
            }
        }
    }
    return out;
}

CycScalar HeckeChar::eval(const FqPoly& f) const {
    if (fq_deg(m_) == 0) return ctx_->one();
    return values_[static_cast<size_t>(fq_code(k_, fq_mod(k_, f, m_)))];
}

bool HeckeChar::is_trivial() const {
    for (const auto& v : values_)
        if (!v.is_zero() && !v.is_one()) return false;
    return true;
}

bool HeckeChar::is_even() const {
    for (long c = 1; c < k_->size(); ++c)
        if (!eval(fq_constant(c)).is_one()) return false;
    return true;
}

HeckeChar HeckeChar::conj() const {
    auto vals = values_;
    for (auto& v : vals) v = v.conj();
    return from_values(k_, m_, ctx_, std::move(vals));
}

HeckeChar HeckeChar::operator*(const HeckeChar& o) const {
    if (k_ != o.k_ || m_ != o.m_ || ctx_ != o.ctx_)
        throw std::invalid_argument("HeckeChar: product needs a common modulus");
    auto vals = values_;
    for (size_t i = 0; i < vals.size(); ++i) vals[i] = vals[i] * o.values_[i];
    return from_values(k_, m_, ctx_, std::move(vals));
}

std::vector<HeckeChar> all_characters(const FiniteFieldPtr& k, const FqPoly& m, CycContextPtr ctx) {
    auto mm = fq_trim(m);
    if (!fq_is_monic(mm)) throw std::invalid_argument("all_characters: modulus must be monic");
    auto cop = coprime_codes(k, mm);
    FiniteAbelianGroup g(
        cop,
        [k, mm](long a, long b) {
            return fq_code(k, fq_mulmod(k, fq_from_code(k, a), fq_from_code(k, b), mm));
        },
        fq_code(k, fq_mod(k, fq_one(), mm)));
    if (!ctx) ctx = CycContext::create(k->p(), k->deg(), {g.exponent()});
    std::vector<HeckeChar> out;
    long n = residue_count(k, mm);
    for (const auto& exps : all_character_exponents(g.invariants())) {
        std::vector<CycScalar> vals(static_cast<size_t>(n), ctx->zero());
        for (long c : cop) vals[static_cast<size_t>(c)] = character_value(ctx, g, exps, c);
        out.push_back(HeckeChar::from_values(k, mm, ctx, std::move(vals)));
    }
    return out;
}

HeckeChar primitive_part(const HeckeChar& chi) {
    const auto& k = chi.constant_field();
    auto m0 = chi.conductor();
    if (m0 == chi.modulus()) return chi;
    std::vector<CycScalar> vals(static_cast<size_t>(residue_count(k, m0)), chi.context()->zero());
    auto fac = fq_factor(k, chi.modulus());
    for (long c : coprime_codes(k, m0)) {
        auto r = fq_from_code(k, c);
        std::vector<FqPoly> rs, ms;
        for (const auto& [P, e] : fac) {
            auto Pe = fq_pow(k, P, e);
            bool in_cond = fq_deg(m0) > 0 && fq_mod(k, m0, P).empty();
            rs.push_back(in_cond ? fq_mod(k, r, Pe) : fq_one());
            ms.push_back(Pe);
        }
        auto lift = rs.empty() ? fq_one() : fq_crt(k, rs, ms);
        vals[static_cast<size_t>(c)] = chi.eval(lift);
    }
    return HeckeChar::from_values(k, m0, chi.context(), std::move(vals));
}

CycScalar dirichlet_sum(const HeckeChar& chi, long d) {
    if (d < 0) throw std::invalid_argument("dirichlet_sum: negative degree");
    const auto& k = chi.constant_field();
    auto out = chi.context()->zero();
    for (const auto& f : fq_monics(k, d)) out = out + chi.eval(f);
    return out;
}

Poly finite_L(const HeckeChar& chi) {
    if (chi.is_trivial()) throw std::invalid_argument("finite_L: trivial character has a pole");
    long dm = fq_deg(chi.modulus());
    std::vector<CycScalar> coeffs;
    for (long d = 0; d < dm; ++d) coeffs.push_back(dirichlet_sum(chi, d));
    for (long d = dm; d < dm + 2; ++d)
        if (!dirichlet_sum(chi, d).is_zero())
            throw std::logic_error("finite_L: series fails to terminate");
    return Poly(chi.context(), std::move(coeffs));
}

RatFunc completed_L(const HeckeChar& chi) {
    if (chi.is_trivial()) throw std::invalid_argument("completed_L: trivial character");
    if (!chi.is_primitive()) throw std::invalid_argument("completed_L: character must be primitive");
    const auto& ctx = chi.context();
    auto L = RatFunc::from_poly(finite_L(chi));
    if (chi.is_even())
        L = L / RatFunc::from_poly(Poly::one(ctx) - Poly::monomial(ctx->one(), 1));
    if (L.den().degree() != 0)
        throw std::logic_error("completed_L: completed function is not a polynomial");
    return L;
}

long ResEmbedding::preimage(long b) const {
    long p = pre[static_cast<size_t>(b)];
    if (p < 0) throw std::invalid_argument("ResEmbedding: element off the image");
    return p;
}

ResEmbedding make_embedding(const FiniteFieldPtr& sub, const FiniteFieldPtr& super,
                            const std::vector<std::pair<long, long>>& constraints) {
    if (sub->p() != super->p() || super->deg() % sub->deg() != 0)
        throw std::invalid_argument("make_embedding: no embedding exists");
    auto finish = [&](std::vector<long> img) -> std::optional<ResEmbedding> {
        for (const auto& [x, y] : constraints)
            if (img[static_cast<size_t>(x)] != y) return std::nullopt;
        std::vector<long> pre(static_cast<size_t>(super->size()), -1);
        for (long a = 0; a < sub->size(); ++a) pre[static_cast<size_t>(img[static_cast<size_t>(a)])] = a;
        return ResEmbedding{sub, super, std::move(img), std::move(pre)};
    };
    if (sub->deg() == 1) {
        std::vector<long> img;
        for (long a = 0; a < sub->size(); ++a) img.push_back(super->from_prime_field(a));
        auto r = finish(std::move(img));
        if (!r) throw std::invalid_argument("make_embedding: constraints unsatisfiable");
        return *r;
    }
    auto eval_mod = [&](long r) {
        long v = 0;
        const auto& mod = sub->modulus();
        for (auto it = mod.rbegin(); it != mod.rend(); ++it)
            v = super->add(super->mul(v, r), super->from_prime_field(*it));
        return v;
    };
    // candidate roots of the small modulus; the canonical generator first so
    // that sub == super yields the identity
    std::vector<long> cands;
    long xself = sub == super ? sub->from_digits({0, 1}) : -1;
    if (xself >= 0) cands.push_back(xself);
    for (long r = 0; r < super->size(); ++r)
        if (r != xself && eval_mod(r) == 0) cands.push_back(r);
    for (long r : cands) {
        if (eval_mod(r) != 0) continue;
        std::vector<long> img;
        for (long a = 0; a < sub->size(); ++a) {
            auto dig = sub->digits(a);
            long v = 0;
            for (auto it = dig.rbegin(); it != dig.rend(); ++it)
                v = super->add(super->mul(v, r), super->from_prime_field(*it));
            img.push_back(v);
        }
        if (auto out = finish(std::move(img))) return *out;
    }
    throw std::invalid_argument("make_embedding: constraints unsatisfiable");
}

LaurentElem Completion::transport(const FqPoly& f) const {
    auto out = F->zero();
    for (auto it = f.rbegin(); it != f.rend(); ++it) {
        out = F->add(F->mul(out, tau), F->from_residue(emb.image(*it)));
        if (!infinite) out = F->truncate(out, prec);
    }
    return out;
}

Completion complete_at(const FiniteFieldPtr& cf, const FqPoly& P, LocalFieldCtxPtr Fv, long prec,
                       std::optional<long> root, std::optional<ResEmbedding> emb) {
    auto Pm = fq_trim(P);
    if (!fq_is_monic(Pm) || fq_deg(Pm) < 1 || !fq_irreducible(cf, Pm))
        throw std::invalid_argument("complete_at: place must be monic irreducible");
    auto res = Fv->residue_field();
    if (res->p() != cf->p() || res->deg() != cf->deg() * fq_deg(Pm))
        throw std::invalid_argument("complete_at: residue degree mismatch");
    auto e = emb ? std::move(*emb) : make_embedding(cf, res);
    if (e.sub != cf || e.super != res)
        throw std::invalid_argument("complete_at: embedding field mismatch");
    if (prec < 2) prec = 2;

    auto eval_res = [&](long a) {
        long r = 0;
        for (auto it = Pm.rbegin(); it != Pm.rend(); ++it) r = res->add(res->mul(r, a), e.image(*it));
        return r;
    };
    long alpha = -1;
    if (root) {
        if (eval_res(*root) != 0)
            throw std::invalid_argument("complete_at: prescribed value is not a root");
        alpha = *root;
    } else {
        for (long a = 0; a < res->size() && alpha < 0; ++a)
            if (eval_res(a) == 0) alpha = a;
        if (alpha < 0) throw std::logic_error("complete_at: no root in the residue field");
    }

    auto eval_ser = [&](const FqPoly& g, const LaurentElem& x) {
        auto out = Fv->zero();
        for (auto it = g.rbegin(); it != g.rend(); ++it) {
            out = Fv->add(Fv->mul(out, x), Fv->from_residue(e.image(*it)));
            out = Fv->truncate(out, prec + 1);
        }
        return out;
    };
    auto Pd = fq_derivative(cf, Pm);
    auto tau = Fv->from_residue(alpha);
    for (int it = 0; it < 64; ++it) {
        auto err = Fv->sub(eval_ser(Pm, tau), Fv->uniformizer());
        if (err.is_zero() || Fv->ord(err) >= prec) break;
        auto corr = Fv->mul(err, Fv->inv_mod(eval_ser(Pd, tau), prec + 1));
        tau = Fv->truncate(Fv->sub(tau, corr), prec);
    }
    auto err = Fv->sub(eval_ser(Pm, tau), Fv->uniformizer());
    if (!(err.is_zero() || Fv->ord(err) >= prec))
        throw std::logic_error("complete_at: lift iteration failed to converge");

    Completion c;
    c.dtau = Fv->inv_mod(eval_ser(Pd, tau), prec);
    c.P = std::move(Pm);
    c.F = std::move(Fv);
    c.emb = std::move(e);
    c.tau = std::move(tau);
    c.prec = prec;
    c.infinite = false;
    c.cf = cf;
    return c;
}

Completion complete_infinity(const FiniteFieldPtr& cf, LocalFieldCtxPtr Fv,
                             std::optional<ResEmbedding> emb) {
    auto res = Fv->residue_field();
    if (res->p() != cf->p() || res->deg() != cf->deg())
        throw std::invalid_argument("complete_infinity: residue field must match the constants");
    Completion c;
    c.F = std::move(Fv);
    c.emb = emb ? std::move(*emb) : make_embedding(cf, res);
    c.tau = c.F->uniformizer(-1);
    c.dtau = c.F->neg(c.F->uniformizer(-2));
    c.prec = 64;
    c.infinite = true;
    c.cf = cf;
    return c;
}

AddChar differential_psi(const Completion& c, const CycContextPtr& ctx) {
    return AddChar(c.F, ctx, c.dtau);
}

LocalCharData local_component_data(const HeckeChar& chi, const Completion& c) {
    if (c.infinite) throw std::invalid_argument("local_component: use infinity_component");
    const auto& k = chi.constant_field();
    if (c.cf != k) throw std::invalid_argument("local_component: constant field mismatch");
    const auto& ctx = chi.context();
    long e = fq_deg(chi.modulus()) > 0 ? fq_mult(k, chi.modulus(), c.P) : 0;
    if (e == 0) return {0, {}, chi.eval(c.P)};
    if (c.prec < e + 1) throw std::invalid_argument("local_component: precision too low");

    auto Pe = fq_pow(k, c.P, e);
    auto rest = fq_divmod(k, chi.modulus(), Pe).first;
    long nclass = c.F->unit_class_count(e);
    std::vector<CycScalar> table(static_cast<size_t>(nclass), ctx->zero());
    long filled = 0;
    for (long code = 0; code < residue_count(k, Pe); ++code) {
        auto g = fq_from_code(k, code);
        if (!fq_coprime(k, g, c.P)) continue;
        long id = c.F->unit_class_of(c.transport(g), e);
        auto lift = fq_deg(rest) == 0 ? g : fq_crt(k, {g, fq_one()}, {Pe, rest});
        auto val = chi.eval(lift).inv();
        auto& slot = table[static_cast<size_t>(id)];
        if (slot.is_zero()) {
            slot = val;
            ++filled;
        } else if (slot != val) {
            throw std::logic_error("local_component: transport is not well defined");
        }
    }
    if (filled != nclass) throw std::logic_error("local_component: transport misses unit classes");

    auto w = ctx->one();
    if (fq_deg(rest) > 0) w = chi.eval(fq_crt(k, {fq_one(), fq_mod(k, c.P, rest)}, {Pe, rest}));
    return {e, std::move(table), w};
}

MulChar local_component(const HeckeChar& chi, const Completion& c) {
    auto d = local_component_data(chi, c);
    if (d.level == 0) return MulChar::unramified(c.F, chi.context(), d.w);
    return MulChar::from_table(c.F, chi.context(), d.level, std::move(d.table), d.w);
}

namespace {

struct RamifiedPlaces {
    std::vector<Completion> comps;
    std::vector<MulChar> locs;
};

RamifiedPlaces ramified_places(const HeckeChar& chi, long extra_prec = 0) {
    RamifiedPlaces out;
    const auto& k = chi.constant_field();
    if (fq_deg(chi.modulus()) == 0) return out;
    for (const auto& [P, e] : fq_factor(k, chi.modulus())) {
        out.comps.push_back(complete_at(k, P, completion_field(k, fq_deg(P)), e + 6 + extra_prec));
        out.locs.push_back(local_component(chi, out.comps.back()));
    }
    return out;
}

// product of the finite local components over P | m and P | f
CycScalar finite_component_product(const HeckeChar& chi, const RamifiedPlaces& ram,
                                   const FqPoly& f) {
    const auto& k = chi.constant_field();
    auto out = chi.context()->one();
    for (size_t i = 0; i < ram.comps.size(); ++i)
        out = out * ram.locs[i].eval(ram.comps[i].transport(f));
    if (fq_deg(f) >= 1)
        for (const auto& [P, e] : fq_factor(k, f)) {
            if (fq_deg(chi.modulus()) > 0 && fq_mult(k, chi.modulus(), P) > 0) continue;
            out = out * chi.eval(P).pow(e);
        }
    return out;
}

}  // namespace

MulChar infinity_component(const HeckeChar& chi, const LocalFieldCtxPtr& Fv,
                           std::optional<ResEmbedding> emb) {
    const auto& k = chi.constant_field();
    const auto& ctx = chi.context();
    auto cinf = complete_infinity(k, Fv, std::move(emb));
    auto ram = ramified_places(chi);

    long nclass = Fv->unit_class_count(1);
    std::vector<CycScalar> table(static_cast<size_t>(nclass), ctx->zero());
    for (long id = 0; id < nclass; ++id) {
        long digit = Fv->coeff(Fv->unit_class_rep(id, 1), 0);
        long c = cinf.emb.preimage(digit);
        table[static_cast<size_t>(id)] = finite_component_product(chi, ram, fq_constant(c)).inv();
    }
    std::optional<CycScalar> w;
    for (long cc = 0; cc < k->size(); ++cc) {
        FqPoly f{cc, 1};
        long id = Fv->unit_class_of(cinf.transport(f), 1);
        auto cand = finite_component_product(chi, ram, f) * table[static_cast<size_t>(id)];
        if (!w)
            w = cand;
        else if (*w != cand)
            throw std::logic_error("infinity_component: generators disagree");
    }
    return MulChar::from_table(Fv, ctx, 1, std::move(table), *w);
}

bool product_formula_check(const HeckeChar& chi) {
    const auto& k = chi.constant_field();
    const auto& ctx = chi.context();
    auto Finf = LocalFieldCtx::create(k);
    auto cinf = complete_infinity(k, Finf);
    auto inf = infinity_component(chi, Finf);
    auto ram = ramified_places(chi, 4);

    std::map<long, std::pair<Completion, MulChar>> cache;
    auto place = [&](const FqPoly& P) -> std::pair<Completion, MulChar>& {
        long code = fq_code(k, P);
        auto it = cache.find(code);
        if (it == cache.end()) {
            auto c = complete_at(k, P, completion_field(k, fq_deg(P)), 8);
            auto loc = local_component(chi, c);
            it = cache.emplace(code, std::make_pair(std::move(c), std::move(loc))).first;
        }
        return it->second;
    };

    std::vector<FqPoly> fs;
    for (long c = 1; c < k->size(); ++c) fs.push_back(fq_constant(c));
    for (long d = 1; d <= 2; ++d)
        for (auto& f : fq_monics(k, d)) fs.push_back(std::move(f));

    for (const auto& f : fs) {
        auto prod = ctx->one();
        std::set<long> seen;
        for (size_t i = 0; i < ram.comps.size(); ++i) {
            prod = prod * ram.locs[i].eval(ram.comps[i].transport(f));
            seen.insert(fq_code(k, ram.comps[i].P));
        }
        if (fq_deg(f) >= 1)
            for (const auto& [P, e] : fq_factor(k, f)) {
                if (seen.count(fq_code(k, P))) continue;
                auto& [c, loc] = place(P);
                prod = prod * loc.eval(c.transport(f));
            }
        prod = prod * inf.eval(cinf.transport(f));
        if (!prod.is_one()) return false;
    }
    return true;
}

Monomial global_epsilon(const HeckeChar& chi, const FqPoly& num, const FqPoly& den) {
    const auto& k = chi.constant_field();
    const auto& ctx = chi.context();
    auto n = fq_trim(num), dn = fq_trim(den);
    if (n.empty() || dn.empty()) throw std::invalid_argument("global_epsilon: zero idele");
    long shift = fq_deg(n) + fq_deg(dn);

    Monomial out{ctx->one(), 0};
    auto add_place = [&](const Completion& c, const MulChar& loc, long d) {
        auto psi = differential_psi(c, ctx);
        if (shift > 0 || n != fq_one() || dn != fq_one()) {
            auto s = c.F->mul(c.transport(n),
                              c.F->inv_mod(c.transport(dn), c.prec + 2 * shift + 2));
            psi = psi.scaled(s);
        }
        auto m = epsilon_factor(loc, psi);
        out.coeff = out.coeff * m.coeff;
        out.z_exponent += d * m.z_exponent;
    };

    std::map<long, FqPoly> places;
    auto add_primes = [&](const FqPoly& f) {
        if (fq_deg(f) < 1) return;
        for (const auto& [P, e] : fq_factor(k, f)) places[fq_code(k, P)] = P;
    };
    add_primes(chi.modulus());
    add_primes(n);
    add_primes(dn);
    for (const auto& [code, P] : places) {
        long d = fq_deg(P);
        long e = fq_deg(chi.modulus()) > 0 ? fq_mult(k, chi.modulus(), P) : 0;
        auto c = complete_at(k, P, completion_field(k, d), e + 2 * shift + 8);
        add_place(c, local_component(chi, c), d);
    }
    auto Finf = LocalFieldCtx::create(k);
    auto cinf = complete_infinity(k, Finf);
    add_place(cinf, infinity_component(chi, Finf), 1);
    return out;
}

bool functional_equation_check(const HeckeChar& chi) {
    auto Lam = completed_L(chi);
    auto Lamd = completed_L(chi.conj());
    auto eps = global_epsilon(chi);
    Rational qv(chi.constant_field()->size());
    auto rhs = RatFunc::monomial(eps.coeff, eps.z_exponent) * Lamd.subst_one_minus_s(qv);
    return Lam == rhs;
}

RatFunc partial_L(const HeckeChar& chi, bool eta_twist, const std::vector<FqPoly>& S_fin) {
    if (!chi.is_primitive()) throw std::invalid_argument("partial_L: character must be primitive");
    const auto& ctx = chi.context();
    const auto& k = chi.constant_field();
    RatFunc L;
    if (chi.is_trivial()) {
        // zeta of the affine line
        L = RatFunc::from_poly(Poly::one(ctx) - Poly::monomial(ctx->from_long(k->size()), 1)).inv();
    } else {
        L = RatFunc::from_poly(finite_L(chi));
    }
    if (eta_twist) L = L.subst(-ctx->one(), 1);
    std::set<long> seen;
    for (const auto& Praw : S_fin) {
        auto P = fq_trim(Praw);
        if (!fq_is_monic(P) || !fq_irreducible(k, P))
            throw std::invalid_argument("partial_L: places must be monic irreducible");
        if (!seen.insert(fq_code(k, P)).second) continue;
        if (fq_deg(chi.modulus()) > 0 && fq_mult(k, chi.modulus(), P) > 0) continue;
        long d = fq_deg(P);
        auto w = chi.eval(P);
        if (eta_twist && d % 2 == 1) w = -w;
        L = L * RatFunc::from_poly(Poly::one(ctx) - Poly::monomial(w, d));
    }
    return L;
}

namespace {

RatFunc to_global(const RatFunc& g, long d) {
    return d == 1 ? g : g.subst(g.context()->one(), d);
}

bool crude_fe_abelian(CrudeCase kind, const std::vector<HeckeChar>& data,
                      const std::vector<FqPoly>& extra_S) {
    size_t need = kind == CrudeCase::GL11 ? 2 : 1;
    if (data.size() != need) throw std::invalid_argument("crude_fe_check: wrong datum count");
    const auto& k = data[0].constant_field();
    const auto& ctx = data[0].context();
    auto T = kind == CrudeCase::SL2   ? data[0]
             : kind == CrudeCase::SO3 ? data[0] * data[0]
                                      : data[0] * data[1];
    auto T0 = primitive_part(T);
    if (T0.is_trivial()) throw std::invalid_argument("crude_fe_check: product character is trivial");

    std::map<long, FqPoly> S;
    auto add_primes = [&](const FqPoly& f) {
        if (fq_deg(f) < 1) return;
        for (const auto& [P, e] : fq_factor(k, f)) S[fq_code(k, P)] = P;
    };
    add_primes(data[0].modulus());
    for (const auto& Praw : extra_S) {
        auto P = fq_trim(Praw);
        if (!fq_is_monic(P) || !fq_irreducible(k, P))
            throw std::invalid_argument("crude_fe_check: extra places must be monic irreducible");
        S[fq_code(k, P)] = P;
    }
    std::vector<FqPoly> Sv;
    for (const auto& [code, P] : S) Sv.push_back(P);

    auto coeff_at = [&](const std::vector<MulChar>& comps, const AddChar& psi) {
        InducingDatum dd;
        GroupTag g = GroupTag::sp(1);
        switch (kind) {
            case CrudeCase::SL2:
                dd.blocks.push_back({comps[0], 0, 1});
                break;
            case CrudeCase::SO3:
                g = GroupTag::so_odd(1);
                dd.blocks.push_back({comps[0], 0, 1});
                break;
            default:
                g = GroupTag::gl(1, 1);
                dd.blocks.push_back({comps[0], 0, 1});
                dd.blocks.push_back({comps[1], 0, 1});
                break;
        }
        return rank_one_coefficient(g, dd, psi);
    };

    auto C = RatFunc::one(ctx);
    for (const auto& P : Sv) {
        long d = fq_deg(P);
        long e = 0;
        for (const auto& x : data)
            if (fq_deg(x.modulus()) > 0) e = std::max(e, fq_mult(k, x.modulus(), P));
        auto c = complete_at(k, P, completion_field(k, d), e + 6);
        std::vector<MulChar> comps;
        for (const auto& x : data) comps.push_back(local_component(x, c));
        C = C * to_global(coeff_at(comps, differential_psi(c, ctx)), d);
    }
    auto Finf = LocalFieldCtx::create(k);
    auto cinf = complete_infinity(k, Finf);
    std::vector<MulChar> icomps;
    for (const auto& x : data) icomps.push_back(infinity_component(x, Finf));
    C = C * coeff_at(icomps, differential_psi(cinf, ctx));

    Rational qv(k->size());
    auto lhs = partial_L(T0, false, Sv);
    auto rhs = C * partial_L(T0.conj(), false, Sv).subst_one_minus_s(qv);
    return lhs == rhs;
}

bool crude_fe_unitary(CrudeCase kind, const std::vector<HeckeChar>& data,
                      const std::vector<FqPoly>& extra_S) {
    if (data.size() != 1) throw std::invalid_argument("crude_fe_check: unitary case takes one datum");
    const auto& X = data[0];
    const auto& K = X.constant_field();
    if (K->deg() % 2 != 0)
        throw std::invalid_argument("crude_fe_check: constants must be a quadratic extension");
    auto k = FiniteField::create(K->p(), K->deg() / 2);
    auto embK = make_embedding(k, K);
    const auto& ctx = X.context();
    long q = k->size();

    auto emb_poly = [&](const FqPoly& f) {
        FqPoly out;
        for (long c : f) out.push_back(embK.image(c));
        return out;
    };

    struct PlaceInfo {
        FqPoly P;
        long d = 0;
        bool split = false;
        std::vector<std::pair<FqPoly, long>> above;  // extension primes, modulus multiplicity
        long e = 1;
    };
    std::map<long, PlaceInfo> S;
    auto add_place = [&](const FqPoly& P) {
        auto& info = S[fq_code(k, P)];
        if (!info.P.empty()) return;
        info.P = P;
        info.d = fq_deg(P);
        for (const auto& [Q, eq] : fq_factor(K, emb_poly(P))) {
            long mult = fq_deg(X.modulus()) > 0 ? fq_mult(K, X.modulus(), Q) : 0;
            info.above.push_back({Q, mult});
            info.e = std::max(info.e, mult);
        }
        info.split = info.above.size() == 2;
        if (!info.split && info.above.size() != 1)
            throw std::logic_error("crude_fe_check: unexpected splitting");
    };
    auto below_of = [&](const FqPoly& Q) -> FqPoly {
        long dq = fq_deg(Q);
        for (long d : {dq, 2 * dq})
            for (const auto& P : fq_monic_irreducibles(k, d))
                if (fq_mod(K, emb_poly(P), Q).empty()) return P;
        throw std::logic_error("crude_fe_check: no place below");
    };
    if (fq_deg(X.modulus()) > 0)
        for (const auto& [Q, e] : fq_factor(K, X.modulus())) add_place(below_of(Q));
    for (const auto& Praw : extra_S) {
        auto P = fq_trim(Praw);
        if (!fq_is_monic(P) || !fq_irreducible(k, P))
            throw std::invalid_argument("crude_fe_check: extra places must be monic irreducible");
        add_place(P);
    }

    // restriction to the base field
    auto mk = fq_one();
    for (const auto& [code, info] : S) {
        long e = 0;
        for (const auto& [Q, eq] : info.above) e = std::max(e, eq);
        mk = fq_mul(k, mk, fq_pow(k, info.P, e));
    }
    std::vector<CycScalar> yv(static_cast<size_t>(residue_count(k, mk)), ctx->zero());
    for (long c : coprime_codes(k, mk))
        yv[static_cast<size_t>(c)] = X.eval(emb_poly(fq_from_code(k, c)));
    auto Y = HeckeChar::from_values(k, mk, ctx, std::move(yv));
    auto Y0 = primitive_part(Y);
    auto X0 = primitive_part(X);

    std::vector<FqPoly> Sk, SK;
    for (const auto& [code, info] : S) {
        Sk.push_back(info.P);
        for (const auto& [Q, eq] : info.above) SK.push_back(Q);
    }

    auto C = RatFunc::one(ctx);
    auto coeff_of = [&](const QuadEtalePtr& E, const MulChar& chiv, const AddChar& psi) {
        InducingDatum dd;
        dd.blocks.push_back({chiv, 0, 1});
        GroupTag g = kind == CrudeCase::U2 ? GroupTag::u_even(1, E) : GroupTag::u_odd(1, E);
        if (kind == CrudeCase::U3) dd.nu = trivial_etale(E, ctx);
        return classical_coefficient(g, dd, psi);
    };

    for (const auto& [code, info] : S) {
        long prec = info.e + 8;
        auto Fv = completion_field(k, info.d);
        auto cv = complete_at(k, info.P, Fv, prec);
        auto psi = differential_psi(cv, ctx);
        QuadEtalePtr E;
        std::optional<MulChar> chiv;
        if (info.split) {
            E = QuadEtale::create(Fv, EtaleKind::Split);
            std::vector<std::pair<long, long>> cons;
            for (long a = 0; a < k->size(); ++a) cons.push_back({embK.image(a), cv.emb.image(a)});
            auto jK = make_embedding(K, Fv->residue_field(), cons);
            std::vector<MulChar> comp;
            for (const auto& [Q, eq] : info.above) {
                auto cw = complete_at(K, Q, Fv, prec, std::nullopt, jK);
                auto lw = local_component(X, cw);
                // the extension character as a character of the base
                // completion, through the polynomial transports
                long lev = info.e;
                long nclass = Fv->unit_class_count(lev);
                std::vector<CycScalar> tb(static_cast<size_t>(nclass), ctx->zero());
                auto Pl = fq_pow(k, info.P, lev);
                for (long gcode = 0; gcode < residue_count(k, Pl); ++gcode) {
                    auto gp = fq_from_code(k, gcode);
                    if (!fq_coprime(k, gp, info.P)) continue;
                    long id = Fv->unit_class_of(cv.transport(gp), lev);
                    auto val = lw.eval(cw.transport(emb_poly(gp)));
                    auto& slot = tb[static_cast<size_t>(id)];
                    if (slot.is_zero())
                        slot = val;
                    else if (slot != val)
                        throw std::logic_error("crude_fe_check: split transport inconsistency");
                }
                auto wv = lw.eval(cw.transport(emb_poly(info.P)));
                comp.push_back(MulChar::from_table(Fv, ctx, lev, std::move(tb), wv));
            }
            chiv = MulChar::split_pair(E, comp[0], comp[1]);
        } else {
            E = QuadEtale::create(Fv, EtaleKind::Unramified);
            const auto& re = E->residue_embedding();
            std::vector<std::pair<long, long>> cons;
            for (long a = 0; a < k->size(); ++a)
                cons.push_back({embK.image(a), re.image(cv.emb.image(a))});
            auto jE = make_embedding(K, E->ext()->residue_field(), cons);
            long alpha = Fv->coeff(cv.tau, 0);
            auto cw = complete_at(K, emb_poly(info.P), E->ext(), prec, re.image(alpha), jE);
            auto ld = local_component_data(X, cw);
            if (ld.level == 0) {
                long nclass = E->ext()->unit_class_count(1);
                chiv = MulChar::over_etale(
                    E, ctx, 1, std::vector<CycScalar>(static_cast<size_t>(nclass), ctx->one()),
                    ld.w);
            } else {
                chiv = MulChar::over_etale(E, ctx, ld.level, std::move(ld.table), ld.w);
            }
        }
        C = C * to_global(coeff_of(E, *chiv, psi), info.d);
    }

    // the infinite place is inert
    auto Finf = LocalFieldCtx::create(k);
    auto cinf = complete_infinity(k, Finf);
    auto Einf = QuadEtale::create(Finf, EtaleKind::Unramified);
    {
        const auto& re = Einf->residue_embedding();
        std::vector<std::pair<long, long>> cons;
        for (long a = 0; a < k->size(); ++a)
            cons.push_back({embK.image(a), re.image(cinf.emb.image(a))});
        auto jinf = make_embedding(K, Einf->ext()->residue_field(), cons);
        auto xinf = infinity_component(X, Einf->ext(), jinf);
        long nclass = Einf->ext()->unit_class_count(1);
        std::vector<CycScalar> tb;
        for (long id = 0; id < nclass; ++id) tb.push_back(xinf.eval_unit_class(id));
        auto chiv = MulChar::over_etale(Einf, ctx, 1, std::move(tb), xinf.w());
        C = C * coeff_of(Einf, chiv, differential_psi(cinf, ctx));
    }

    Rational qv(q);
    if (kind == CrudeCase::U2) {
        auto lhs = partial_L(Y0, false, Sk);
        auto rhs = C * partial_L(Y0.conj(), false, Sk).subst_one_minus_s(qv);
        return lhs == rhs;
    }
    auto L1 = partial_L(X0, false, SK).subst(ctx->one(), 2);
    auto L2 = partial_L(Y0, true, Sk).subst_double();
    auto L1d = partial_L(X0.conj(), false, SK).subst(ctx->one(), 2).subst_one_minus_s(qv);
    auto L2d = partial_L(Y0.conj(), true, Sk).subst(ctx->from_rational(Rational(1, q)), -2);
    return L1 * L2 == C * L1d * L2d;
}

}  // namespace

bool crude_fe_check(CrudeCase kind, const std::vector<HeckeChar>& data,
                    const std::vector<FqPoly>& extra_S) {
    if (data.empty()) throw std::invalid_argument("crude_fe_check: empty datum");
    if (kind == CrudeCase::U2 || kind == CrudeCase::U3)
        return crude_fe_unitary(kind, data, extra_S);
    return crude_fe_abelian(kind, data, extra_S);
}

}  // namespace lsfactor
