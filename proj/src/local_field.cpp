#include "lsfactor/local_field.hpp"

#include <stdexcept>

namespace lsfactor {

LocalFieldCtxPtr LocalFieldCtx::create(FiniteFieldPtr residue) {
    auto ctx = std::shared_ptr<LocalFieldCtx>(new LocalFieldCtx);
    ctx->k_ = std::move(residue);
    return ctx;
}

void LocalFieldCtx::normalize(LaurentElem& x) const {
    size_t lead = 0;
    while (lead < x.digits.size() && x.digits[lead] == 0) ++lead;
    if (lead == x.digits.size()) {
        x.digits.clear();
        x.val = 0;
        return;
    }
    if (lead > 0) {
        x.digits.erase(x.digits.begin(), x.digits.begin() + static_cast<long>(lead));
        x.val += static_cast<long>(lead);
    }
    while (!x.digits.empty() && x.digits.back() == 0) x.digits.pop_back();
}

LaurentElem LocalFieldCtx::from_residue(long c, long val) const {
    LaurentElem x{val, {c}};
    normalize(x);
    return x;
}

LaurentElem LocalFieldCtx::uniformizer(long e) const {
    return {e, {1}};
}

LaurentElem LocalFieldCtx::from_digits(long val, std::vector<long> digits) const {
    LaurentElem x{val, std::move(digits)};
    normalize(x);
    return x;
}

long LocalFieldCtx::ord(const LaurentElem& x) const {
    if (x.is_zero()) throw std::domain_error("ord of zero");
    return x.val;
}

long LocalFieldCtx::coeff(const LaurentElem& x, long k) const {
    long i = k - x.val;
    if (i < 0 || i >= static_cast<long>(x.digits.size())) return 0;
    return x.digits[static_cast<size_t>(i)];
}

LaurentElem LocalFieldCtx::add(const LaurentElem& a, const LaurentElem& b) const {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long lo = std::min(a.val, b.val);
    long hi = std::max(a.val + static_cast<long>(a.digits.size()),
                       b.val + static_cast<long>(b.digits.size()));
    LaurentElem r{lo, std::vector<long>(static_cast<size_t>(hi - lo), 0)};
    for (long k = lo; k < hi; ++k)
        r.digits[static_cast<size_t>(k - lo)] = k_->add(coeff(a, k), coeff(b, k));
    normalize(r);
    return r;
}

LaurentElem LocalFieldCtx::neg(const LaurentElem& a) const {
    LaurentElem r = a;
    for (auto& c : r.digits) c = k_->neg(c);
    return r;
}

LaurentElem LocalFieldCtx::sub(const LaurentElem& a, const LaurentElem& b) const {
    return add(a, neg(b));
}

LaurentElem LocalFieldCtx::mul(const LaurentElem& a, const LaurentElem& b) const {
    if (a.is_zero() || b.is_zero()) return {};
    LaurentElem r{a.val + b.val, std::vector<long>(a.digits.size() + b.digits.size() - 1, 0)};
    for (size_t i = 0; i < a.digits.size(); ++i) {
        if (a.digits[i] == 0) continue;
        for (size_t j = 0; j < b.digits.size(); ++j)
            r.digits[i + j] = k_->add(r.digits[i + j], k_->mul(a.digits[i], b.digits[j]));
    }
    normalize(r);
    return r;
}

LaurentElem LocalFieldCtx::truncate(const LaurentElem& a, long N) const {
    if (a.is_zero() || a.val >= N) return a.val >= N && !a.is_zero() ? LaurentElem{} : a;
    LaurentElem r = a;
    long keep = N - a.val;
    if (keep < static_cast<long>(r.digits.size())) r.digits.resize(static_cast<size_t>(keep));
    normalize(r);
    return r;
}

LaurentElem LocalFieldCtx::inv_mod(const LaurentElem& a, long prec) const {
    if (a.is_zero()) throw std::domain_error("inv of zero");
    if (prec < 1) prec = 1;
    long c0 = a.digits[0];
    long c0i = k_->inv(c0);
    std::vector<long> b(static_cast<size_t>(prec), 0);
    b[0] = c0i;
    for (long k = 1; k < prec; ++k) {
        long s = 0;
        for (long i = 1; i <= k && i < static_cast<long>(a.digits.size()); ++i)
            s = k_->add(s, k_->mul(a.digits[static_cast<size_t>(i)],
                                   b[static_cast<size_t>(k - i)]));
        b[static_cast<size_t>(k)] = k_->neg(k_->mul(c0i, s));
    }
    LaurentElem r{-a.val, std::move(b)};
    normalize(r);
    return r;
}

LaurentElem LocalFieldCtx::pow(const LaurentElem& a, long e) const {
    if (e < 0) throw std::invalid_argument("LocalFieldCtx::pow: negative exponent");
    LaurentElem acc = one(), x = a;
    while (e > 0) {
        if (e & 1) acc = mul(acc, x);
        x = mul(x, x);
        e >>= 1;
    }
    return acc;
}

long LocalFieldCtx::unit_class_count(long m) const {
    if (m <= 0) return 1;
    long n = q() - 1;
    for (long i = 1; i < m; ++i) n *= q();
    return n;
}

long LocalFieldCtx::unit_class_of(const LaurentElem& x, long m) const {
    if (x.is_zero()) throw std::domain_error("unit_class_of zero");
    if (m <= 0) return 0;
    long id = 0;
    for (long i = m - 1; i >= 1; --i) {
        long c = i < static_cast<long>(x.digits.size()) ? x.digits[static_cast<size_t>(i)] : 0;
        id = id * q() + c;
    }
    return id * (q() - 1) + (x.digits[0] - 1);
}

LaurentElem LocalFieldCtx::unit_class_rep(long id, long m) const {
    if (m <= 0) return one();
    std::vector<long> d(static_cast<size_t>(m), 0);
    d[0] = id % (q() - 1) + 1;
    id /= q() - 1;
    for (long i = 1; i < m; ++i) {
        d[static_cast<size_t>(i)] = id % q();
        id /= q();
    }
    LaurentElem r{0, std::move(d)};
    normalize(r);
    return r;
}

QuadEtalePtr QuadEtale::create(LocalFieldCtxPtr F, EtaleKind kind) {
    auto E = std::shared_ptr<QuadEtale>(new QuadEtale);
    E->kind_ = kind;
    E->F_ = F;
    switch (kind) {
        case EtaleKind::Split:
            E->E_ = F;
            E->haar_exp2_ = 0;
            break;
        case EtaleKind::Unramified: {
            auto kF = F->residue_field();
            auto kE = FiniteField::create(kF->p(), 2 * kF->deg());
            E->E_ = LocalFieldCtx::create(kE);
            E->res_emb_ = std::make_shared<FFEmbedding>(kF, kE);
            E->haar_exp2_ = 0;
            break;
        }
        case EtaleKind::Ramified:
            if (F->p() == 2)
                throw std::invalid_argument("ramified quadratic algebra needs odd residue char");
            E->E_ = F;  // same residue field; elements are series in u, u^2 = pi
            E->haar_exp2_ = -1;
            break;
    }
    return E;
}

const FFEmbedding& QuadEtale::residue_embedding() const {
    if (!res_emb_) throw std::logic_error("residue_embedding: not unramified");
    return *res_emb_;
}

EtaleElem QuadEtale::embed(const LaurentElem& x) const {
    switch (kind_) {
        case EtaleKind::Split:
            return {x, x};
        case EtaleKind::Unramified: {
            LaurentElem y = x;
            for (auto& c : y.digits) c = res_emb_->image(c);
            return {y, {}};
        }
        case EtaleKind::Ramified: {
            if (x.is_zero()) return {{}, {}};
            LaurentElem y{2 * x.val, std::vector<long>(2 * x.digits.size() - 1, 0)};
            for (size_t i = 0; i < x.digits.size(); ++i) y.digits[2 * i] = x.digits[i];
            return {y, {}};
        }
    }
    throw std::logic_error("unreachable");
}

EtaleElem QuadEtale::conj(const EtaleElem& x) const {
    switch (kind_) {
        case EtaleKind::Split:
            return {x.b, x.a};
        case EtaleKind::Unramified: {
            LaurentElem y = x.a;
            auto kE = E_->residue_field();
            long qF = F_->q();
            for (auto& c : y.digits)
                if (c != 0) c = kE->pow(c, qF);
            return {y, {}};
        }
        case EtaleKind::Ramified: {
            LaurentElem y = x.a;
            for (size_t i = 0; i < y.digits.size(); ++i) {
                long e = y.val + static_cast<long>(i);
                if (e % 2 != 0) y.digits[i] = F_->residue_field()->neg(y.digits[i]);
            }
            return {y, {}};
        }
    }
    throw std::logic_error("unreachable");
}

EtaleElem QuadEtale::add(const EtaleElem& x, const EtaleElem& y) const {
    if (kind_ == EtaleKind::Split) return {F_->add(x.a, y.a), F_->add(x.b, y.b)};
    return {E_->add(x.a, y.a), {}};
}

EtaleElem QuadEtale::mul(const EtaleElem& x, const EtaleElem& y) const {
    if (kind_ == EtaleKind::Split) return {F_->mul(x.a, y.a), F_->mul(x.b, y.b)};
    return {E_->mul(x.a, y.a), {}};
}

namespace {

// interpret an element with only even uniformizer exponents as an element of
// the base field (ramified case: u^2 = pi)
LaurentElem halve_exponents(const LaurentElem& x) {
    if (x.is_zero()) return x;
    if (x.val % 2 != 0) throw std::logic_error("halve_exponents: odd valuation");
    LaurentElem r{x.val / 2, std::vector<long>((x.digits.size() + 1) / 2, 0)};
    for (size_t i = 0; i < x.digits.size(); ++i) {
        if (i % 2 == 1) {
            if (x.digits[i] != 0) throw std::logic_error("halve_exponents: odd coefficient");
            continue;
        }
        r.digits[i / 2] = x.digits[i];
    }
    while (!r.digits.empty() && r.digits.back() == 0) r.digits.pop_back();
    if (r.digits.empty()) return {};
    return r;
}

}  // namespace

LaurentElem QuadEtale::trace(const EtaleElem& x) const {
    switch (kind_) {
        case EtaleKind::Split:
            return F_->add(x.a, x.b);
        case EtaleKind::Unramified: {
            LaurentElem s = E_->add(x.a, conj(x).a);
            for (auto& c : s.digits) c = res_emb_->preimage(c);
            return s;
        }
        case EtaleKind::Ramified:
            return halve_exponents(E_->add(x.a, conj(x).a));
    }
    throw std::logic_error("unreachable");
}

LaurentElem QuadEtale::norm(const EtaleElem& x) const {
    switch (kind_) {
        case EtaleKind::Split:
            return F_->mul(x.a, x.b);
        case EtaleKind::Unramified: {
            LaurentElem s = E_->mul(x.a, conj(x).a);
            for (auto& c : s.digits) c = res_emb_->preimage(c);
            return s;
        }
        case EtaleKind::Ramified:
            return halve_exponents(E_->mul(x.a, conj(x).a));
    }
    throw std::logic_error("unreachable");
}

bool QuadEtale::is_zero_divisor(const EtaleElem& x) const {
    if (kind_ == EtaleKind::Split) return x.a.is_zero() || x.b.is_zero();
    return x.a.is_zero();
}

long QuadEtale::abs_q_exp(const EtaleElem& x) const {
    if (is_zero_divisor(x)) throw std::domain_error("abs of zero divisor");
    switch (kind_) {
        case EtaleKind::Split:
            return -(x.a.val + x.b.val);
        case EtaleKind::Unramified:
            return -2 * x.a.val;
        case EtaleKind::Ramified:
            return -x.a.val;
    }
    throw std::logic_error("unreachable");
}

int QuadEtale::legendre(long c) const {
    auto k = F_->residue_field();
    if (c == 0) throw std::domain_error("legendre of zero");
    long e = (k->size() - 1) / 2;
    return k->pow(c, e) == 1 ? 1 : -1;
}

int QuadEtale::eta(const LaurentElem& x) const {
    if (x.is_zero()) throw std::domain_error("eta of zero");
    switch (kind_) {
        case EtaleKind::Split:
            return 1;
        case EtaleKind::Unramified:
            return x.val % 2 == 0 ? 1 : -1;
        case EtaleKind::Ramified: {
            int s = legendre(x.digits[0]);
            if (x.val % 2 != 0) {
                long m1 = F_->residue_field()->neg(1);
                s *= legendre(m1);
            }
            return s;
        }
    }
    throw std::logic_error("unreachable");
}

long QuadEtale::psi_level(long l_F) const {
    switch (kind_) {
        case EtaleKind::Split:
        case EtaleKind::Unramified:
            return l_F;
        case EtaleKind::Ramified:
            return 2 * l_F - 1;
    }
    throw std::logic_error("unreachable");
}

EtaleElem QuadEtale::beta() const {
    switch (kind_) {
        case EtaleKind::Split:
            return {F_->one(), F_->neg(F_->one())};
        case EtaleKind::Unramified: {
            auto kE = E_->residue_field();
            if (F_->p() != 2) {
                for (long c = 1; c < kE->size(); ++c)
                    if (kE->pow(c, F_->q()) == kE->neg(c)) return {E_->from_residue(c), {}};
            }
            // char 2: no trace-zero generator exists; any residue generator
            // still satisfies E = F[beta]
            return {E_->from_residue(kE->generator()), {}};
        }
        case EtaleKind::Ramified:
            return {E_->uniformizer(), {}};
    }
    throw std::logic_error("unreachable");
}

}  // namespace lsfactor
