#include <atomic>
#include <cstdlib>
#include <iostream>
#include <random>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "lsfactor/hecke.hpp"
#include "lsfactor/satake.hpp"

using json = nlohmann::json;
using namespace lsfactor;

namespace {

constexpr const char* kSchema = "lsfactor/v1";

std::pair<long, long> prime_power(long q) {
    if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
    long p = q;
    for (long d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    long f = 0, m = q;
    while (m % p == 0) {
        m /= p;
        ++f;
    }
    if (m != 1) throw std::invalid_argument("q must be a prime power");
    return {p, f};
}

// "k/n" names the k-th power of a primitive n-th root of unity
std::pair<long, long> parse_root(const std::string& s) {
    auto pos = s.find('/');
    if (pos == std::string::npos) throw std::invalid_argument("root spec must be k/n");
    long k = std::stol(s.substr(0, pos));
    long n = std::stol(s.substr(pos + 1));
    if (n < 1) throw std::invalid_argument("root spec must be k/n with n >= 1");
    return {k, n};
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

long parse_psi_level(const std::string& s) {
    if (s.rfind("level=", 0) != 0) throw std::invalid_argument("psi spec must be level=N");
    return std::stol(s.substr(6));
}

json scalar_json(const CycScalar& s) {
    json coeffs = json::array();
    for (const auto& r : s.coeffs()) coeffs.push_back(r.get_str());
    return json{{"coeffs", coeffs}, {"order", s.context()->order()}, {"text", s.to_string()}};
}

json poly_json(const Poly& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(scalar_json(c));
    return coeffs;
}

json ratfunc_json(const RatFunc& g) {
    return json{{"num", poly_json(g.num())}, {"den", poly_json(g.den())}, {"text", g.to_string()}};
}

json monomial_json(const Monomial& m) {
    return json{{"coeff", scalar_json(m.coeff)}, {"z_exponent", m.z_exponent}};
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

long thread_budget() {
    long n = 1;
    if (const char* env = std::getenv("LSFACTOR_THREADS")) n = std::max(1L, std::atol(env));
    long hw = static_cast<long>(std::thread::hardware_concurrency());
    return hw > 0 ? std::min(n, hw) : n;
}

// ---- abelian subcommands ----------------------------------------------------

struct AbelianSpec {
    long q = 3;
    std::string kind = "trivial";  // trivial | unramified | ramified
    std::string w = "0/1";
    long level = 1;
    long index = 0;
    std::string psi = "level=0";
    std::string algebra;  // empty | split | unramified | ramified
};

struct AbelianData {
    CycContextPtr ctx;
    LocalFieldCtxPtr F;
    MulChar chi;
    AddChar psi;
    QuadEtalePtr E;  // null without --algebra
};

AbelianData build_abelian(const AbelianSpec& s) {
    auto [p, f] = prime_power(s.q);
    auto F = LocalFieldCtx::create(FiniteField::create(p, f));
    auto [wk, wn] = parse_root(s.w);
    std::vector<long> extra{wn};
    if (s.kind == "ramified") extra.push_back(UnitClassGroup::create(F, s.level).exponent());
    auto ctx = CycContext::create(p, f, extra);
    auto w = ctx->root_of_unity(wn, wk);

    QuadEtalePtr E;
    if (!s.algebra.empty()) {
        EtaleKind kind;
        if (s.algebra == "split")
            kind = EtaleKind::Split;
        else if (s.algebra == "unramified")
            kind = EtaleKind::Unramified;
        else if (s.algebra == "ramified")
            kind = EtaleKind::Ramified;
        else
            throw std::invalid_argument("algebra must be split, unramified or ramified");
        E = QuadEtale::create(F, kind);
    }

    auto make_chi = [&]() -> MulChar {
        if (s.kind == "trivial") {
            if (!E) return MulChar::trivial(F, ctx);
            if (E->is_split())
                return MulChar::split_pair(E, MulChar::trivial(F, ctx), MulChar::trivial(F, ctx));
            long n = E->ext()->unit_class_count(1);
            return MulChar::over_etale(E, ctx, 1,
                                       std::vector<CycScalar>(static_cast<size_t>(n), ctx->one()),
                                       ctx->one());
        }
        if (s.kind == "unramified") {
            if (!E) return MulChar::unramified(F, ctx, w);
            if (E->is_split())
                return MulChar::split_pair(E, MulChar::unramified(F, ctx, w),
                                           MulChar::unramified(F, ctx, ctx->one()));
            long n = E->ext()->unit_class_count(1);
            return MulChar::over_etale(E, ctx, 1,
                                       std::vector<CycScalar>(static_cast<size_t>(n), ctx->one()),
                                       w);
        }
        if (s.kind != "ramified")
            throw std::invalid_argument("char must be trivial, unramified or ramified");
        if (E) throw std::invalid_argument("ramified char specs are not supported over an algebra");
        auto ucg = UnitClassGroup::create(F, s.level);
        auto exps = all_character_exponents(ucg.group->invariants());
        if (s.index < 0 || s.index >= static_cast<long>(exps.size()))
            throw std::invalid_argument("char index out of range");
        return ucg.make_char(ctx, exps[static_cast<size_t>(s.index)], w);
    };
    auto chi = make_chi();
    auto psi = AddChar::of_level(F, ctx, parse_psi_level(s.psi));
    return {ctx, F, std::move(chi), std::move(psi), E};
}

void add_abelian_flags(CLI::App* cmd, AbelianSpec& s) {
    cmd->add_option("--q", s.q, "residue field size");
    cmd->add_option("--char", s.kind, "trivial | unramified | ramified");
    cmd->add_option("--w", s.w, "uniformizer value as k/n");
    cmd->add_option("--level", s.level, "table level for ramified chars");
    cmd->add_option("--index", s.index, "character index at the given level");
    cmd->add_option("--psi", s.psi, "additive character, level=N");
    cmd->add_option("--algebra", s.algebra, "quadratic algebra: split | unramified | ramified");
}

int run_gamma(const AbelianSpec& s) {
    auto d = build_abelian(s);
    json out{{"schema", kSchema}};
    if (d.E) {
        out["gamma"] = ratfunc_json(gamma_etale_F(d.chi, d.E, d.psi));
        out["L"] = ratfunc_json(l_factor_etale_F(d.chi, d.E));
    } else {
        auto fac = abelian_factors(d.chi, d.psi);
        out["gamma"] = ratfunc_json(fac.gamma);
        out["L"] = ratfunc_json(fac.L);
        out["eps"] = monomial_json(fac.epsilon);
    }
    emit(out);
    return 0;
}

int run_eps(const AbelianSpec& s) {
    auto d = build_abelian(s);
    if (d.E) throw std::invalid_argument("eps expects a base-field character");
    emit(json{{"schema", kSchema}, {"eps", monomial_json(epsilon_factor(d.chi, d.psi))}});
    return 0;
}

int run_lfun(const AbelianSpec& s) {
    auto d = build_abelian(s);
    auto L = d.E ? l_factor_etale_F(d.chi, d.E) : l_factor(d.chi);
    emit(json{{"schema", kSchema}, {"L", ratfunc_json(L)}});
    return 0;
}

int run_lambda(const AbelianSpec& s) {
    auto d = build_abelian(s);
    if (!d.E) throw std::invalid_argument("lambda requires --algebra");
    emit(json{{"schema", kSchema}, {"lambda", scalar_json(lambda_factor(d.E, d.psi))}});
    return 0;
}

// ---- coeff ------------------------------------------------------------------

struct CoeffSpec {
    long q = 3;
    std::string group = "Sp";
    long n = 1;
    long n2 = 1;
    std::string algebra = "unramified";
    std::string w = "0/1";
    std::string nu_w = "0/1";
    std::string psi = "level=0";
};

MulChar unram_over(const QuadEtalePtr& E, const LocalFieldCtxPtr& F, const CycContextPtr& ctx,
                   const CycScalar& w) {
    if (!E) return MulChar::unramified(F, ctx, w);
    if (E->is_split())
        return MulChar::split_pair(E, MulChar::unramified(F, ctx, w),
                                   MulChar::unramified(F, ctx, ctx->one()));
    long n = E->ext()->unit_class_count(1);
    return MulChar::over_etale(E, ctx, 1,
                               std::vector<CycScalar>(static_cast<size_t>(n), ctx->one()), w);
}

int run_coeff(const CoeffSpec& s) {
    auto [p, f] = prime_power(s.q);
    auto F = LocalFieldCtx::create(FiniteField::create(p, f));
    std::vector<std::pair<long, long>> wspecs;
    std::vector<long> orders;
    for (const auto& part : split_list(s.w)) {
        wspecs.push_back(parse_root(part));
        orders.push_back(wspecs.back().second);
    }
    auto [nk, nn] = parse_root(s.nu_w);
    orders.push_back(nn);
    auto ctx = CycContext::create(p, f, orders);

    GroupTag G = GroupTag::sp(s.n);
    QuadEtalePtr E;
    bool unitary = s.group == "Ueven" || s.group == "Uodd";
    if (unitary) {
        EtaleKind kind = s.algebra == "split"       ? EtaleKind::Split
                         : s.algebra == "ramified"  ? EtaleKind::Ramified
                                                    : EtaleKind::Unramified;
        E = QuadEtale::create(F, kind);
    }
    if (s.group == "GL")
        G = GroupTag::gl(s.n, s.n2);
    else if (s.group == "SOodd")
        G = GroupTag::so_odd(s.n);
    else if (s.group == "Sp")
        G = GroupTag::sp(s.n);
    else if (s.group == "SOeven")
        G = GroupTag::so_even(s.n);
    else if (s.group == "Ueven")
        G = GroupTag::u_even(s.n, E);
    else if (s.group == "Uodd")
        G = GroupTag::u_odd(s.n, E);
    else
        throw std::invalid_argument("unknown group kind");

    long nchars = s.group == "GL" ? s.n + s.n2 : s.n;
    if (static_cast<long>(wspecs.size()) != nchars)
        throw std::invalid_argument("--w must list one root per inducing character");
    InducingDatum d;
    for (const auto& [k, nord] : wspecs)
        d.blocks.push_back({unram_over(E, F, ctx, ctx->root_of_unity(nord, k)), 0, 1});
    if (s.group == "Uodd") d.nu = unram_over(E, F, ctx, ctx->root_of_unity(nn, nk));

    auto psi = AddChar::of_level(F, ctx, parse_psi_level(s.psi));
    auto C = s.group == "GL" ? rankin_selberg_gamma({{d.blocks.begin(), d.blocks.begin() + s.n}, {}},
                                                    {{d.blocks.begin() + s.n, d.blocks.end()}, {}},
                                                    psi)
                             : classical_coefficient(G, d, psi);
    json out{{"schema", kSchema}, {"coefficient", ratfunc_json(C)}};
    if (s.group == "Sp" || s.group == "Uodd") {
        auto gp = gamma_pair(G, d, psi);
        out["gamma_pair"] = json{{"gamma1", ratfunc_json(gp.gamma1)},
                                 {"gamma2", ratfunc_json(gp.gamma2)}};
        out["lambda"] = scalar_json(lambda_normalization(G, psi));
    }
    if (s.group == "Sp" || s.group == "Uodd") {
        // the coefficient mixes the s- and 2s-variables; extract per grouping
        auto gp = gamma_pair(G, d, psi);
        auto gpd = gamma_pair(G, dual_datum(d), psi);
        auto l1 = local_factors_from_gamma({gp.gamma1}, {gpd.gamma1}, Rational(s.q), true);
        auto l2 = local_factors_from_gamma({gp.gamma2}, {gpd.gamma2}, Rational(s.q), true);
        out["L"] = ratfunc_json(l1.L * l2.L.subst_double());
        out["eps"] = monomial_json(Monomial{l1.epsilon.coeff * l2.epsilon.coeff,
                                            l1.epsilon.z_exponent + 2 * l2.epsilon.z_exponent});
    } else if (s.group != "GL") {
        auto Cd = classical_coefficient(G, dual_datum(d), psi);
        auto lf = local_factors_from_gamma({C}, {Cd}, Rational(s.q), true);
        out["L"] = ratfunc_json(lf.L);
        out["eps"] = monomial_json(lf.epsilon);
    }
    emit(out);
    return 0;
}

// ---- satake -----------------------------------------------------------------

struct SatakeSpec {
    long q = 3;
    std::string rep = "std";
    std::string x = "0/1";
    std::string y;
    bool theta = false;
};

int run_satake(const SatakeSpec& s) {
    auto [p, f] = prime_power(s.q);
    std::vector<std::pair<long, long>> xs, ys;
    std::vector<long> orders;
    for (const auto& part : split_list(s.x)) {
        xs.push_back(parse_root(part));
        orders.push_back(xs.back().second);
    }
    if (!s.y.empty())
        for (const auto& part : split_list(s.y)) {
            ys.push_back(parse_root(part));
            orders.push_back(ys.back().second);
        }
    auto ctx = CycContext::create(p, f, orders);
    SatakeClass cls;
    cls.frob_twist = s.theta;
    for (const auto& [k, n] : xs) cls.x.push_back(ctx->root_of_unity(n, k));
    for (const auto& [k, n] : ys) cls.y.push_back(ctx->root_of_unity(n, k));
    SatakeRep rep;
    if (s.rep == "std")
        rep = SatakeRep::Std;
    else if (s.rep == "tensor")
        rep = SatakeRep::Tensor;
    else if (s.rep == "sym2")
        rep = SatakeRep::Sym2;
    else if (s.rep == "ext2")
        rep = SatakeRep::Ext2;
    else if (s.rep == "asai")
        rep = SatakeRep::Asai;
    else
        throw std::invalid_argument("rep must be std, tensor, sym2, ext2 or asai");
    emit(json{{"schema", kSchema}, {"L", ratfunc_json(unramified_L(cls, rep))}});
    return 0;
}

// ---- hecke ------------------------------------------------------------------

struct HeckeSpec {
    long q = 3;
    std::string modulus = "t";
    bool list = false;
    long char_index = -1;
    bool verify_fe = false;
};

int run_hecke(const HeckeSpec& s) {
    auto [p, f] = prime_power(s.q);
    auto k = FiniteField::create(p, f);
    auto m = fq_parse(k, s.modulus);
    if (!fq_is_monic(m)) throw std::invalid_argument("modulus must be monic");
    auto chars = all_characters(k, m);
    json out{{"schema", kSchema}, {"q", s.q}, {"modulus", fq_to_string(m)}};
    if (s.list || s.char_index < 0) {
        json list = json::array();
        for (size_t i = 0; i < chars.size(); ++i) {
            const auto& c = chars[i];
            list.push_back(json{{"index", i},
                                {"conductor", fq_to_string(c.conductor())},
                                {"primitive", c.is_primitive()},
                                {"even", c.is_even()},
                                {"trivial", c.is_trivial()}});
        }
        out["characters"] = list;
        emit(out);
        return 0;
    }
    if (s.char_index >= static_cast<long>(chars.size()))
        throw std::invalid_argument("char index out of range");
    const auto& chi = chars[static_cast<size_t>(s.char_index)];
    if (chi.is_trivial()) throw std::invalid_argument("the trivial character has no finite L");
    auto chi0 = primitive_part(chi);
    out["conductor"] = fq_to_string(chi.conductor());
    out["even"] = chi.is_even();
    out["L"] = poly_json(finite_L(chi0));
    out["completed_L"] = poly_json(completed_L(chi0).num());
    out["eps"] = monomial_json(global_epsilon(chi0));
    if (s.verify_fe) {
        bool ok = functional_equation_check(chi0);
        out["fe_ok"] = ok;
        emit(out);
        return ok ? 0 : 2;
    }
    emit(out);
    return 0;
}

// ---- sweep ------------------------------------------------------------------

struct SweepSpec {
    std::string qs = "2,3";
    long maxdeg = 3;
};

int run_sweep(const SweepSpec& s) {
    json results = json::array();
    bool all_ok = true;
    for (const auto& qs : split_list(s.qs)) {
        long q = std::stol(qs);
        auto [p, f] = prime_power(q);
        auto k = FiniteField::create(p, f);
        std::vector<std::pair<std::string, HeckeChar>> cases;
        for (long d = 1; d <= s.maxdeg; ++d)
            for (const auto& m : fq_monics(k, d)) {
                auto chars = all_characters(k, m);
                for (size_t i = 0; i < chars.size(); ++i) {
                    if (!chars[i].is_primitive() || chars[i].is_trivial()) continue;
                    cases.push_back({fq_to_string(m) + "#" + std::to_string(i), chars[i]});
                }
            }
        std::vector<char> ok(cases.size(), 0);
        std::atomic<size_t> next{0};
        auto worker = [&]() {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= cases.size()) return;
                ok[i] = functional_equation_check(cases[i].second) ? 1 : 0;
            }
        };
        long nt = std::min<long>(thread_budget(), static_cast<long>(cases.size()) + 1);
        std::vector<std::thread> pool;
        for (long t = 1; t < nt; ++t) pool.emplace_back(worker);
        worker();
        for (auto& t : pool) t.join();
        json failures = json::array();
        for (size_t i = 0; i < cases.size(); ++i)
            if (!ok[i]) failures.push_back(cases[i].first);
        if (!failures.empty()) all_ok = false;
        results.push_back(
            json{{"q", q}, {"cases", cases.size()}, {"failures", failures}});
    }
    emit(json{{"schema", kSchema}, {"maxdeg", s.maxdeg}, {"results", results}, {"all_ok", all_ok}});
    return all_ok ? 0 : 2;
}

// ---- verify -----------------------------------------------------------------

struct VerifySpec {
    std::string suite = "abelian";
    long cases = 100;
    unsigned long seed = 1;
};

MulChar random_char(const LocalFieldCtxPtr& F, const CycContextPtr& ctx, std::mt19937_64& rng,
                    long max_level) {
    long m = static_cast<long>(rng() % static_cast<unsigned long>(max_level + 1));
    long wk = static_cast<long>(rng() % 8);
    auto w = ctx->root_of_unity(8, wk);
    if (m == 0) return MulChar::unramified(F, ctx, w);
    auto ucg = UnitClassGroup::create(F, m);
    std::vector<long> exps;
    for (long inv : ucg.group->invariants())
        exps.push_back(static_cast<long>(rng() % static_cast<unsigned long>(inv)));
    return ucg.make_char(ctx, exps, w);
}

long verify_abelian(long cases, std::mt19937_64& rng) {
    long done = 0;
    while (done < cases)
        for (long q : {2L, 3L}) {
            if (done >= cases) break;
            auto [p, f] = prime_power(q);
            auto F = LocalFieldCtx::create(FiniteField::create(p, f));
            auto ctx = CycContext::create(p, f, {8, UnitClassGroup::create(F, 2).exponent()});
            auto chi = random_char(F, ctx, rng, 2);
            long lv = static_cast<long>(rng() % 5) - 2;
            auto psi = AddChar::of_level(F, ctx, lv);
            auto g = gauss_gamma(chi, psi);
            if (zeta_oracle_gamma(chi, psi) != g)
                throw std::logic_error("abelian: oracle disagreement");
            auto fac = abelian_factors(chi, psi);
            if (fac.gamma * fac.L != RatFunc::monomial(fac.epsilon.coeff, fac.epsilon.z_exponent) *
                                         fac.L_dual)
                throw std::logic_error("abelian: gamma L = eps L_dual fails");
            ++done;
        }
    return done;
}

long verify_lscoeff(long cases, std::mt19937_64& rng) {
    long done = 0;
    while (done < cases)
        for (long q : {2L, 3L}) {
            if (done >= cases) break;
            auto [p, f] = prime_power(q);
            auto F = LocalFieldCtx::create(FiniteField::create(p, f));
            auto ctx = CycContext::create(p, f, {8, UnitClassGroup::create(F, 2).exponent()});
            auto chi = random_char(F, ctx, rng, 2);
            auto psi = AddChar::of_level(F, ctx, 0);
            InducingDatum d{{{chi, 0, 1}}, std::nullopt};
            for (auto G : {GroupTag::sp(1), GroupTag::so_odd(1)})
                if (rank_one_coefficient(G, d, psi) != classical_coefficient(G, d, psi))
                    throw std::logic_error("lscoeff: rank-one mismatch");
            auto a = F->from_residue(1, static_cast<long>(rng() % 3) - 1);
            psi_dependence(GroupTag::sp(1), d, psi, a);
            ++done;
        }
    return done;
}

long verify_satake(long cases, std::mt19937_64& rng) {
    long done = 0;
    while (done < cases)
        for (long q : {2L, 3L}) {
            if (done >= cases) break;
            auto [p, f] = prime_power(q);
            auto F = LocalFieldCtx::create(FiniteField::create(p, f));
            auto ctx = CycContext::create(p, f, {8});
            auto psi = AddChar::of_level(F, ctx, 0);
            long n = 1 + static_cast<long>(rng() % 2);
            for (auto kind : {GroupKind::Sp, GroupKind::SOodd, GroupKind::Ueven}) {
                GroupTag G;
                QuadEtalePtr E;
                if (kind == GroupKind::Ueven) {
                    E = QuadEtale::create(
                        F, rng() % 2 ? EtaleKind::Split : EtaleKind::Unramified);
                    G = GroupTag::u_even(n, E);
                } else {
                    G = kind == GroupKind::Sp ? GroupTag::sp(n) : GroupTag::so_odd(n);
                }
                InducingDatum d;
                for (long i = 0; i < n; ++i) {
                    auto w = ctx->root_of_unity(8, static_cast<long>(rng() % 8));
                    d.blocks.push_back({unram_over(E, F, ctx, w), 0, 1});
                }
                if (!unramified_identity_check(G, d, psi))
                    throw std::logic_error("satake: unramified identity fails");
            }
            ++done;
        }
    return done;
}

long verify_hecke(long cases, std::mt19937_64&) {
    long done = 0;
    for (long q : {2L, 3L}) {
        auto [p, f] = prime_power(q);
        auto k = FiniteField::create(p, f);
        for (long d = 1; d <= 2; ++d)
            for (const auto& m : fq_monics(k, d))
                for (const auto& c : all_characters(k, m)) {
                    if (done >= cases) return done;
                    if (!product_formula_check(c))
                        throw std::logic_error("hecke: product formula fails");
                    if (c.is_primitive() && !c.is_trivial() && !functional_equation_check(c))
                        throw std::logic_error("hecke: functional equation fails");
                    ++done;
                }
    }
    return done;
}

int run_verify(const VerifySpec& s) {
    std::mt19937_64 rng(s.seed);
    std::vector<std::pair<std::string, std::function<long(long, std::mt19937_64&)>>> suites{
        {"abelian", verify_abelian},
        {"lscoeff", verify_lscoeff},
        {"satake", verify_satake},
        {"hecke", verify_hecke}};
    bool found = false;
    printf("%-10s %8s %s\n", "suite", "cases", "status");
    for (const auto& [name, fn] : suites) {
        if (s.suite != "all" && s.suite != name) continue;
        found = true;
        long done = fn(s.cases, rng);
        printf("%-10s %8ld pass\n", name.c_str(), done);
    }
    if (!found) throw std::invalid_argument("unknown suite (abelian, lscoeff, satake, hecke, all)");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact local factors and L-functions over F_q(t)"};
    app.require_subcommand(1);

    AbelianSpec ab;
    auto* gamma = app.add_subcommand("gamma", "abelian gamma, L and epsilon factors");
    add_abelian_flags(gamma, ab);
    auto* eps = app.add_subcommand("eps", "abelian epsilon factor");
    add_abelian_flags(eps, ab);
    auto* lfun = app.add_subcommand("lfun", "abelian L-factor");
    add_abelian_flags(lfun, ab);
    auto* lambda = app.add_subcommand("lambda", "Langlands lambda-factor of a quadratic algebra");
    add_abelian_flags(lambda, ab);

    CoeffSpec co;
    auto* coeff = app.add_subcommand("coeff", "local coefficient of a Siegel Levi");
    coeff->add_option("--q", co.q, "residue field size");
    coeff->add_option("--group", co.group, "GL | SOodd | Sp | SOeven | Ueven | Uodd");
    coeff->add_option("--n", co.n, "rank");
    coeff->add_option("--n2", co.n2, "second GL block size");
    coeff->add_option("--algebra", co.algebra, "split | unramified | ramified (U only)");
    coeff->add_option("--w", co.w, "comma list of uniformizer values k/n");
    coeff->add_option("--nu-w", co.nu_w, "uniformizer value of nu (Uodd)");
    coeff->add_option("--psi", co.psi, "additive character, level=N");

    SatakeSpec sa;
    auto* satake = app.add_subcommand("satake", "unramified L-factor of a Satake class");
    satake->add_option("--q", sa.q, "residue field size");
    satake->add_option("--rep", sa.rep, "std | tensor | sym2 | ext2 | asai");
    satake->add_option("--x", sa.x, "comma list of parameters k/n");
    satake->add_option("--y", sa.y, "second parameter list");
    satake->add_flag("--theta", sa.theta, "Frobenius-twisted (Asai) class");

    HeckeSpec he;
    auto* hecke = app.add_subcommand("hecke", "Dirichlet characters of F_q[t] and their L-functions");
    hecke->add_option("--q", he.q, "constant field size");
    hecke->add_option("--modulus", he.modulus, "monic modulus, e.g. t^3+t");
    hecke->add_flag("--list", he.list, "enumerate the characters mod m");
    hecke->add_option("--char-index", he.char_index, "select one character");
    hecke->add_flag("--verify-fe", he.verify_fe, "check the global functional equation");

    SweepSpec sw;
    auto* sweep = app.add_subcommand("sweep", "global functional equation sweep");
    sweep->add_option("--q", sw.qs, "comma list of constant field sizes");
    sweep->add_option("--maxdeg", sw.maxdeg, "maximal modulus degree");

    VerifySpec ve;
    auto* verify = app.add_subcommand("verify", "randomized invariant suites");
    verify->add_option("suite", ve.suite, "abelian | lscoeff | satake | hecke | all");
    verify->add_option("--cases", ve.cases, "number of cases");
    verify->add_option("--seed", ve.seed, "rng seed");

    try {
        app.parse(argc, argv);
        if (gamma->parsed()) return run_gamma(ab);
        if (eps->parsed()) return run_eps(ab);
        if (lfun->parsed()) return run_lfun(ab);
        if (lambda->parsed()) return run_lambda(ab);
        if (coeff->parsed()) return run_coeff(co);
        if (satake->parsed()) return run_satake(sa);
        if (hecke->parsed()) return run_hecke(he);
        if (sweep->parsed()) return run_sweep(sw);
        if (verify->parsed()) return run_verify(ve);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << json{{"error", e.what()}, {"schema", kSchema}}.dump() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << json{{"error", e.what()}, {"schema", kSchema}}.dump() << "\n";
        return 2;
    }
    return 1;
}
