#include "lsfactor/ratfunc.hpp"

#include <sstream>

namespace lsfactor {

Poly::Poly(CycContextPtr ctx, std::vector<CycScalar> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
    trim();
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::constant(const CycScalar& c) {
    return Poly(c.context(), {c});
}

Poly Poly::zero(const CycContextPtr& ctx) {
    return Poly(ctx, {});
}

Poly Poly::one(const CycContextPtr& ctx) {
    return Poly(ctx, {ctx->one()});
}

Poly Poly::monomial(const CycScalar& c, long k) {
    if (k < 0) throw std::invalid_argument("Poly::monomial: negative exponent");
    std::vector<CycScalar> cs(static_cast<size_t>(k) + 1, c.context()->zero());
    cs.back() = c;
    return Poly(c.context(), std::move(cs));
}

CycScalar Poly::coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(coeffs_.size())) return ctx_->zero();
    return coeffs_[static_cast<size_t>(i)];
}

CycScalar Poly::lead() const {
    if (coeffs_.empty()) throw std::logic_error("Poly::lead on zero polynomial");
    return coeffs_.back();
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<CycScalar> cs(std::max(coeffs_.size(), o.coeffs_.size()), ctx_->zero());
    for (size_t i = 0; i < coeffs_.size(); ++i) cs[i] = cs[i] + coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) cs[i] = cs[i] + o.coeffs_[i];
    return Poly(ctx_, std::move(cs));
}

Poly Poly::operator-() const {
    std::vector<CycScalar> cs = coeffs_;
    for (auto& c : cs) c = -c;
    return Poly(ctx_, std::move(cs));
}

Poly Poly::operator-(const Poly& o) const {
    return *this + (-o);
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly::zero(ctx_ ? ctx_ : o.ctx_);
    std::vector<CycScalar> cs(coeffs_.size() + o.coeffs_.size() - 1, ctx_->zero());
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            cs[i + j] = cs[i + j] + coeffs_[i] * o.coeffs_[j];
    }
    return Poly(ctx_, std::move(cs));
}

Poly Poly::operator*(const CycScalar& c) const {
    std::vector<CycScalar> cs = coeffs_;
    for (auto& x : cs) x = x * c;
    return Poly(ctx_, std::move(cs));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& o) const {
    if (o.is_zero()) throw std::domain_error("Poly::divmod by zero");
    Poly rem = *this;
    long dq = degree() - o.degree();
    if (dq < 0) return {Poly::zero(ctx_), rem};
    std::vector<CycScalar> q(static_cast<size_t>(dq) + 1, ctx_->zero());
    CycScalar linv = o.lead().inv();
    while (!rem.is_zero() && rem.degree() >= o.degree()) {
        long k = rem.degree() - o.degree();
        CycScalar c = rem.lead() * linv;
        q[static_cast<size_t>(k)] = c;
        rem = rem - o * Poly::monomial(c, k);
    }
    return {Poly(ctx_, std::move(q)), rem};
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * lead().inv();
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly Poly::subst(const CycScalar& c, long e) const {
    if (e < 1) throw std::invalid_argument("Poly::subst: exponent must be >= 1");
    if (is_zero()) return *this;
    std::vector<CycScalar> cs(static_cast<size_t>(degree() * e) + 1, ctx_->zero());
    CycScalar cp = ctx_->one();
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        cs[i * static_cast<size_t>(e)] = coeffs_[i] * cp;
        cp = cp * c;
    }
    return Poly(ctx_, std::move(cs));
}

CycScalar Poly::eval(const CycScalar& z) const {
    CycScalar acc = ctx_->zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

std::complex<double> Poly::eval(std::complex<double> z) const {
    std::complex<double> acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * z + it->to_complex();
    return acc;
}

long Poly::low_order() const {
    if (is_zero()) throw std::logic_error("Poly::low_order on zero polynomial");
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return static_cast<long>(i);
    return 0;  // unreachable
}

bool Poly::operator==(const Poly& o) const {
    if (coeffs_.size() != o.coeffs_.size()) return false;
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != o.coeffs_[i]) return false;
    return true;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << coeffs_[i].to_string() << ")";
        if (i == 1) os << "*Z";
        else if (i > 1) os << "*Z^" << i;
        first = false;
    }
    return os.str();
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    canonicalize();
}

void RatFunc::canonicalize() {
    auto ctx = den_.context();
    if (num_.is_zero()) {
        den_ = Poly::one(ctx);
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    CycScalar u = den_.coeff(den_.low_order()).inv();
    num_ = num_ * u;
    den_ = den_ * u;
}

RatFunc RatFunc::from_poly(Poly p) {
    auto ctx = p.context();
    return RatFunc(std::move(p), Poly::one(ctx));
}

RatFunc RatFunc::constant(const CycScalar& c) {
    return RatFunc::from_poly(Poly::constant(c));
}

RatFunc RatFunc::one(const CycContextPtr& ctx) {
    return RatFunc::from_poly(Poly::one(ctx));
}

RatFunc RatFunc::zero(const CycContextPtr& ctx) {
    return RatFunc(Poly::zero(ctx), Poly::one(ctx));
}

RatFunc RatFunc::monomial(const CycScalar& c, long k) {
    auto ctx = c.context();
    if (k >= 0) return RatFunc::from_poly(Poly::monomial(c, k));
    return RatFunc(Poly::constant(c), Poly::monomial(ctx->one(), -k));
}

bool RatFunc::is_one() const {
    return num_.degree() == 0 && den_.degree() == 0 && num_.coeff(0).is_one();
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const CycScalar& c) const {
    return RatFunc(num_ * c, den_);
}

RatFunc RatFunc::inv() const {
    if (is_zero()) throw std::domain_error("RatFunc::inv of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    return *this * o.inv();
}

RatFunc RatFunc::pow(long e) const {
    auto ctx = context();
    RatFunc base = e < 0 ? inv() : *this;
    long n = e < 0 ? -e : e;
    RatFunc acc = RatFunc::one(ctx);
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

RatFunc RatFunc::subst(const CycScalar& c, long e) const {
    auto ctx = context();
    if (e == 0) throw std::invalid_argument("RatFunc::subst: zero exponent");
    if (e > 0) {
        if (is_zero()) return *this;
        return RatFunc(num_.subst(c, e), den_.subst(c, e));
    }
    // Z -> c Z^{-m}: p(c Z^{-m}) = Z^{-deg(p) m} * reverse-substituted poly.
    long m = -e;
    if (is_zero()) return *this;
    auto flip = [&](const Poly& p) {
        long d = p.degree();
        std::vector<CycScalar> cs(static_cast<size_t>(d * m) + 1, ctx->zero());
        CycScalar cp = ctx->one();
        for (long i = 0; i <= d; ++i) {
            cs[static_cast<size_t>((d - i) * m)] = p.coeff(i) * cp;
            cp = cp * c;
        }
        return Poly(ctx, std::move(cs));
    };
    long dn = num_.degree(), dd = den_.degree();
    Poly n2 = flip(num_), d2 = flip(den_);
    // overall factor Z^{(dd - dn) m}
    long k = (dd - dn) * m;
    if (k >= 0) n2 = n2 * Poly::monomial(ctx->one(), k);
    else d2 = d2 * Poly::monomial(ctx->one(), -k);
    return RatFunc(std::move(n2), std::move(d2));
}

RatFunc RatFunc::subst_double() const {
    return subst(context()->one(), 2);
}

RatFunc RatFunc::subst_scale(const CycScalar& c) const {
    return subst(c, 1);
}

RatFunc RatFunc::subst_one_minus_s(const Rational& qv) const {
    return subst(context()->from_rational(Rational(qv.get_den(), qv.get_num())), -1);
}

RatFunc RatFunc::conj_coeffs() const {
    auto cc = [](const Poly& p) {
        std::vector<CycScalar> cs = p.coeffs();
        for (auto& c : cs) c = c.conj();
        return Poly(p.context(), std::move(cs));
    };
    return RatFunc(cc(num_), cc(den_));
}

CycScalar RatFunc::eval(const CycScalar& z) const {
    return num_.eval(z) / den_.eval(z);
}

std::complex<double> RatFunc::eval(std::complex<double> z) const {
    return num_.eval(z) / den_.eval(z);
}

bool RatFunc::is_monomial() const {
    if (is_zero()) return false;
    long ln = num_.low_order();
    if (ln != num_.degree()) return false;
    long ld = den_.low_order();
    return ld == den_.degree();
}

Monomial RatFunc::as_monomial() const {
    if (!is_monomial()) throw std::logic_error("RatFunc::as_monomial: not a monomial");
    long ln = num_.low_order(), ld = den_.low_order();
    return Monomial{num_.coeff(ln) / den_.coeff(ld), ln - ld};
}

NormalizedParts RatFunc::normalized_parts() const {
    if (is_zero()) throw std::logic_error("RatFunc::normalized_parts of zero");
    auto ctx = context();
    long ln = num_.low_order(), ld = den_.low_order();
    CycScalar cn = num_.coeff(ln), cd = den_.coeff(ld);
    auto strip = [&](const Poly& p, long l, const CycScalar& c) {
        CycScalar ci = c.inv();
        std::vector<CycScalar> cs;
        for (long i = l; i <= p.degree(); ++i) cs.push_back(p.coeff(i) * ci);
        return Poly(ctx, std::move(cs));
    };
    return NormalizedParts{cn / cd, ln - ld, strip(num_, ln, cn), strip(den_, ld, cd)};
}

bool RatFunc::operator==(const RatFunc& o) const {
    return num_ == o.num_ && den_ == o.den_;
}

std::string RatFunc::to_string() const {
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

}  // namespace lsfactor
