#include "lsfactor/characters.hpp"

#include <random>
#include <stdexcept>

namespace lsfactor {

AddChar::AddChar(LocalFieldCtxPtr F, CycContextPtr ctx, LaurentElem a)
    : F_(std::move(F)), ctx_(std::move(ctx)), a_(std::move(a)) {
    if (a_.is_zero()) throw std::invalid_argument("AddChar: trivial character not allowed");
    level_ = -a_.val;
}

AddChar AddChar::standard(LocalFieldCtxPtr F, CycContextPtr ctx) {
    auto one = F->one();
    return AddChar(std::move(F), std::move(ctx), one);
}

AddChar AddChar::of_level(LocalFieldCtxPtr F, CycContextPtr ctx, long level) {
    auto a = F->uniformizer(-level);
    return AddChar(std::move(F), std::move(ctx), a);
}

CycScalar AddChar::eval(const LaurentElem& x) const {
    if (x.is_zero()) return ctx_->one();
    auto y = F_->mul(a_, x);
    long c = F_->coeff(y, -1);
    long tr = F_->residue_field()->abs_trace(c);
    return ctx_->root_of_unity(F_->p(), tr);
}

AddChar AddChar::scaled(const LaurentElem& c) const {
    return AddChar(F_, ctx_, F_->mul(a_, c));
}

AddChar transfer_add_char(const QuadEtalePtr& E, const AddChar& psi) {
    switch (E->kind()) {
        case EtaleKind::Split:
            return psi;
        case EtaleKind::Unramified:
            return AddChar(E->ext(), psi.context(), E->embed(psi.scale()).a);
        case EtaleKind::Ramified: {
            auto Ef = E->ext();
            long two = Ef->residue_field()->from_prime_field(2);
            auto aE = Ef->mul(Ef->from_residue(two, 1), E->embed(psi.scale()).a);
            return AddChar(Ef, psi.context(), aE);
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

void validate_table(const LocalFieldCtxPtr& F, long m, const std::vector<CycScalar>& table) {
    long n = F->unit_class_count(m);
    if (static_cast<long>(table.size()) != n)
        throw std::invalid_argument("MulChar: table size mismatch");
    long id1 = F->unit_class_of(F->one(), m);
    if (!table[static_cast<size_t>(id1)].is_one())
        throw std::invalid_argument("MulChar: table not normalized at 1");
    auto check = [&](long i, long j) {
        auto prod = F->mul(F->unit_class_rep(i, m), F->unit_class_rep(j, m));
        long k = F->unit_class_of(prod, m);
        if (table[static_cast<size_t>(k)] !=
            table[static_cast<size_t>(i)] * table[static_cast<size_t>(j)])
            throw std::invalid_argument("MulChar: table is not a homomorphism");
    };
    if (n <= 64) {
        for (long i = 0; i < n; ++i)
            for (long j = i; j < n; ++j) check(i, j);
    } else {
        std::mt19937_64 rng(0x5eedu);
        for (int trial = 0; trial < 500; ++trial)
            check(static_cast<long>(rng() % static_cast<unsigned long>(n)),
                  static_cast<long>(rng() % static_cast<unsigned long>(n)));
    }
}

}  // namespace

void MulChar::compute_conductor() {
    for (long c = 0; c <= m_; ++c) {
        bool ok = true;
        long n = static_cast<long>(table_.size());
        for (long id = 0; id < n && ok; ++id) {
            auto r = fld_->unit_class_rep(id, m_);
            bool one_mod = c == 0 || fld_->coeff(r, 0) == 1;
            for (long i = 1; i < std::min(c, m_) && one_mod; ++i)
                if (fld_->coeff(r, i) != 0) one_mod = false;
            if (one_mod && !table_[static_cast<size_t>(id)].is_one()) ok = false;
        }
        if (ok) {
            cond_ = c;
            return;
        }
    }
    throw std::logic_error("MulChar: conductor exceeds table level");
}

MulChar MulChar::trivial(LocalFieldCtxPtr F, CycContextPtr ctx) {
    return unramified(std::move(F), ctx, ctx->one());
}

MulChar MulChar::unramified(LocalFieldCtxPtr F, CycContextPtr ctx, CycScalar w) {
    MulChar c;
    c.fld_ = std::move(F);
    c.ctx_ = std::move(ctx);
    c.m_ = 0;
    c.table_ = {c.ctx_->one()};
    c.w_ = std::move(w);
    c.cond_ = 0;
    return c;
}

MulChar MulChar::from_table(LocalFieldCtxPtr F, CycContextPtr ctx, long m,
                            std::vector<CycScalar> table, CycScalar w) {
    validate_table(F, m, table);
    MulChar c;
    c.fld_ = std::move(F);
    c.ctx_ = std::move(ctx);
    c.m_ = m;
    c.table_ = std::move(table);
    c.w_ = std::move(w);
    c.compute_conductor();
    return c;
}

MulChar MulChar::over_etale(QuadEtalePtr E, CycContextPtr ctx, long m,
                            std::vector<CycScalar> table, CycScalar w) {
    if (E->is_split()) throw std::invalid_argument("over_etale: use split_pair for split E");
    MulChar c = from_table(E->ext(), std::move(ctx), m, std::move(table), std::move(w));
    c.etale_ = std::move(E);
    return c;
}

MulChar MulChar::split_pair(QuadEtalePtr E, MulChar chi1, MulChar chi2) {
    if (!E->is_split()) throw std::invalid_argument("split_pair: algebra is not split");
    MulChar c;
    c.etale_ = std::move(E);
    c.ctx_ = chi1.ctx_;
    c.comps_ = {std::move(chi1), std::move(chi2)};
    return c;
}

long MulChar::conductor() const {
    if (is_split_pair()) return std::max(comps_[0].cond_, comps_[1].cond_);
    return cond_;
}

CycScalar MulChar::eval(const LaurentElem& x) const {
    if (is_split_pair()) throw std::logic_error("eval: split pair needs eval_etale");
    if (x.is_zero()) throw std::domain_error("MulChar::eval of zero");
    long id = fld_->unit_class_of(x, m_);
    return w_.pow(x.val) * table_[static_cast<size_t>(id)];
}

CycScalar MulChar::eval_etale(const EtaleElem& x) const {
    if (is_split_pair()) return comps_[0].eval(x.a) * comps_[1].eval(x.b);
    return eval(x.a);
}

CycScalar MulChar::eval_unit_class(long id) const {
    if (is_split_pair()) throw std::logic_error("eval_unit_class on split pair");
    return table_[static_cast<size_t>(id)];
}

MulChar MulChar::lifted(long m) const {
    if (m == m_) return *this;
    if (m < m_) throw std::logic_error("MulChar::lifted: cannot lower level");
    MulChar c = *this;
    c.m_ = m;
    long n = fld_->unit_class_count(m);
    c.table_.assign(static_cast<size_t>(n), ctx_->one());
    for (long id = 0; id < n; ++id) {
        auto r = fld_->unit_class_rep(id, m);
        c.table_[static_cast<size_t>(id)] = table_[static_cast<size_t>(fld_->unit_class_of(r, m_))];
    }
    return c;
}

MulChar MulChar::operator*(const MulChar& o) const {
    if (is_split_pair() != o.is_split_pair())
        throw std::invalid_argument("MulChar::*: algebra mismatch");
    if (is_split_pair())
        return split_pair(etale_, comps_[0] * o.comps_[0], comps_[1] * o.comps_[1]);
    if (fld_ != o.fld_) throw std::invalid_argument("MulChar::*: field mismatch");
    long m = std::max(m_, o.m_);
    MulChar a = lifted(m), b = o.lifted(m);
    for (size_t i = 0; i < a.table_.size(); ++i) a.table_[i] = a.table_[i] * b.table_[i];
    a.w_ = a.w_ * b.w_;
    a.compute_conductor();
    return a;
}

MulChar MulChar::inv() const {
    if (is_split_pair()) return split_pair(etale_, comps_[0].inv(), comps_[1].inv());
    MulChar c = *this;
    for (auto& v : c.table_) v = v.inv();
    c.w_ = c.w_.inv();
    return c;
}

MulChar MulChar::square() const {
    return *this * *this;
}

MulChar MulChar::twist_half(long k2) const {
    if (is_split_pair())
        return split_pair(etale_, comps_[0].twist_half(k2), comps_[1].twist_half(k2));
    MulChar c = *this;
    c.w_ = c.w_ * ctx_->half_power(fld_->residue_field()->deg(), -k2);
    return c;
}

MulChar MulChar::galois_conj() const {
    if (is_split_pair()) return split_pair(etale_, comps_[1], comps_[0]);
    if (!etale_) return *this;
    MulChar c = *this;
    for (long id = 0; id < static_cast<long>(table_.size()); ++id) {
        auto r = etale_->conj({fld_->unit_class_rep(id, m_), {}}).a;
        c.table_[static_cast<size_t>(id)] = table_[static_cast<size_t>(fld_->unit_class_of(r, m_))];
    }
    auto cw = etale_->conj({fld_->uniformizer(), {}}).a;
    c.w_ = eval(cw);
    c.compute_conductor();
    return c;
}

MulChar MulChar::value_conj() const {
    if (is_split_pair())
        return split_pair(etale_, comps_[0].value_conj(), comps_[1].value_conj());
    MulChar c = *this;
    for (auto& v : c.table_) v = v.conj();
    c.w_ = c.w_.conj();
    return c;
}

bool MulChar::operator==(const MulChar& o) const {
    if (is_split_pair() != o.is_split_pair()) return false;
    if (is_split_pair()) return comps_[0] == o.comps_[0] && comps_[1] == o.comps_[1];
    if (fld_ != o.fld_) return false;
    long m = std::max(m_, o.m_);
    MulChar a = lifted(m), b = o.lifted(m);
    return a.table_ == b.table_ && a.w_ == b.w_;
}

MulChar base_change(const MulChar& chi, const QuadEtalePtr& E) {
    if (chi.is_split_pair() || chi.etale())
        throw std::invalid_argument("base_change: expected a plain F-character");
    if (E->is_split()) return MulChar::split_pair(E, chi, chi);
    auto Ef = E->ext();
    long mE = E->kind() == EtaleKind::Ramified ? 2 * chi.table_level() : chi.table_level();
    long n = Ef->unit_class_count(mE);
    std::vector<CycScalar> table;
    table.reserve(static_cast<size_t>(n));
    for (long id = 0; id < n; ++id)
        table.push_back(chi.eval(E->norm({Ef->unit_class_rep(id, mE), {}})));
    CycScalar wE = chi.eval(E->norm({Ef->uniformizer(), {}}));
    return MulChar::over_etale(E, chi.context(), mE, std::move(table), wE);
}

MulChar restrict_to_F(const MulChar& chi) {
    if (chi.is_split_pair()) return chi.comp(0) * chi.comp(1);
    const auto& E = chi.etale();
    if (!E) return chi;
    auto F = E->base();
    long mF = E->kind() == EtaleKind::Ramified ? (chi.table_level() + 1) / 2 : chi.table_level();
    long n = F->unit_class_count(mF);
    std::vector<CycScalar> table;
    table.reserve(static_cast<size_t>(n));
    for (long id = 0; id < n; ++id)
        table.push_back(chi.eval(E->embed(F->unit_class_rep(id, mF)).a));
    CycScalar wF = chi.eval(E->embed(F->uniformizer()).a);
    return MulChar::from_table(F, chi.context(), mF, std::move(table), wF);
}

NormOneClasses norm_one_classes(const QuadEtalePtr& E, long m) {
    if (E->is_split()) throw std::invalid_argument("norm_one_classes: split handled separately");
    if (m < 1) throw std::invalid_argument("norm_one_classes: m >= 1 required");
    auto Ef = E->ext();
    auto F = E->base();
    long mF = E->kind() == EtaleKind::Ramified ? (m + 1) / 2 : m;
    long id1 = F->unit_class_of(F->one(), mF);
    std::vector<long> elems;
    for (long id = 0; id < Ef->unit_class_count(m); ++id) {
        auto nm = E->norm({Ef->unit_class_rep(id, m), {}});
        if (F->unit_class_of(nm, mF) == id1) elems.push_back(id);
    }
    auto op = [Ef, m](long a, long b) {
        return Ef->unit_class_of(Ef->mul(Ef->unit_class_rep(a, m), Ef->unit_class_rep(b, m)), m);
    };
    long ident = Ef->unit_class_of(Ef->one(), m);
    return NormOneClasses{E, m,
                          std::make_shared<FiniteAbelianGroup>(std::move(elems), op, ident)};
}

CycScalar E1Char::eval_class(long id) const {
    return character_value(ctx, *dom.group, exponents, id);
}

MulChar hilbert90_extend(const E1Char& nu_prime) {
    const auto& E = nu_prime.dom.E;
    long m = nu_prime.dom.m;
    auto Ef = E->ext();
    long n = Ef->unit_class_count(m);
    std::vector<CycScalar> table;
    table.reserve(static_cast<size_t>(n));
    for (long id = 0; id < n; ++id) {
        auto r = Ef->unit_class_rep(id, m);
        auto y = Ef->truncate(Ef->mul(E->conj({r, {}}).a, Ef->inv_mod(r, m)), m);
        table.push_back(nu_prime.eval_class(Ef->unit_class_of(y, m)));
    }
    auto u = Ef->uniformizer();
    auto yw = Ef->truncate(Ef->mul(E->conj({u, {}}).a, Ef->inv_mod(u, m)), m);
    CycScalar w = nu_prime.eval_class(Ef->unit_class_of(yw, m));
    return MulChar::over_etale(E, nu_prime.ctx, m, std::move(table), w);
}

MulChar hilbert90_extend_split(const QuadEtalePtr& E, const MulChar& nu0) {
    return MulChar::split_pair(E, nu0.inv(), nu0);
}

UnitClassGroup UnitClassGroup::create(LocalFieldCtxPtr F, long m) {
    std::vector<long> elems(static_cast<size_t>(F->unit_class_count(m)));
    for (size_t i = 0; i < elems.size(); ++i) elems[i] = static_cast<long>(i);
    auto Fc = F;
    auto op = [Fc, m](long a, long b) {
        return Fc->unit_class_of(Fc->mul(Fc->unit_class_rep(a, m), Fc->unit_class_rep(b, m)), m);
    };
    long ident = F->unit_class_of(F->one(), m);
    UnitClassGroup g;
    g.F = std::move(F);
    g.m = m;
    g.group = std::make_shared<FiniteAbelianGroup>(std::move(elems), op, ident);
    return g;
}

MulChar UnitClassGroup::make_char(const CycContextPtr& ctx, const std::vector<long>& exponents,
                                  const CycScalar& w) const {
    long n = F->unit_class_count(m);
    std::vector<CycScalar> table;
    table.reserve(static_cast<size_t>(n));
    for (long id = 0; id < n; ++id) table.push_back(character_value(ctx, *group, exponents, id));
    return MulChar::from_table(F, ctx, m, std::move(table), w);
}

}  // namespace lsfactor
