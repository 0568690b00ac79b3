#include "lsfactor/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace lsfactor {

long euler_phi(long n) {
    long result = n;
    long m = n;
    for (long d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            result -= result / d;
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

// Exact division of integer polynomials, remainder must vanish.
std::vector<mpz_class> poly_div_exact(const std::vector<mpz_class>& a,
                                      const std::vector<mpz_class>& b) {
    std::vector<mpz_class> rem = a;
    std::vector<mpz_class> quot(a.size() - b.size() + 1, 0);
    for (long i = static_cast<long>(rem.size()) - 1; i >= static_cast<long>(b.size()) - 1; --i) {
        if (rem[i] == 0) continue;
        mpz_class c = rem[i] / b.back();
        if (c * b.back() != rem[i]) throw std::runtime_error("poly_div_exact: not divisible");
        long shift = i - (static_cast<long>(b.size()) - 1);
        quot[shift] = c;
        for (size_t j = 0; j < b.size(); ++j) rem[shift + j] -= c * b[j];
    }
    for (const auto& r : rem)
        if (r != 0) throw std::runtime_error("poly_div_exact: nonzero remainder");
    return quot;
}

bool is_prime_long(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(long n) {
    // x^n - 1 divided by all Phi_d, d | n, d < n.
    std::vector<mpz_class> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto phi_d = cyclotomic_polynomial(d);
        num = poly_div_exact(num, phi_d);
    }
    return num;
}

std::shared_ptr<const CycContext> CycContext::create(long p, long f,
                                                     const std::vector<long>& extra_orders) {
    if (!is_prime_long(p) || f < 1) throw std::invalid_argument("CycContext: need prime p, f >= 1");
    long q = 1;
    for (long i = 0; i < f; ++i) q *= p;

    long M = std::lcm(4 * p, std::max<long>(q - 1, 1));
    for (long e : extra_orders) {
        if (e < 1) throw std::invalid_argument("CycContext: bad extra order");
        M = std::lcm(M, e);
    }

    auto ctx = std::shared_ptr<CycContext>(new CycContext());
    ctx->M_ = M;
    ctx->p_ = p;
    ctx->f_ = f;
    ctx->q_ = q;
    ctx->phi_ = euler_phi(M);
    long phi = ctx->phi_;

    auto phiM = cyclotomic_polynomial(M);
    // x^phi = -(phiM without leading term); build reduction rows for
    // x^(phi+i), 0 <= i <= phi-2, by repeated shift-and-reduce.
    std::vector<Rational> top(phi);
    for (long i = 0; i < phi; ++i) top[i] = Rational(-phiM[i]);
    ctx->reduction_rows_.push_back(top);
    for (long i = 1; i <= phi - 2; ++i) {
        const auto& prev = ctx->reduction_rows_.back();
        std::vector<Rational> row(phi, 0);
        for (long j = 0; j < phi - 1; ++j) row[j + 1] = prev[j];
        if (prev[phi - 1] != 0)
            for (long j = 0; j < phi; ++j) row[j] += prev[phi - 1] * top[j];
        ctx->reduction_rows_.push_back(row);
    }

    // zeta^k in the power basis for 0 <= k < M.
    ctx->zeta_powers_.resize(M);
    std::vector<Rational> cur(phi, 0);
    cur[0] = 1;
    for (long k = 0; k < M; ++k) {
        ctx->zeta_powers_[k] = cur;
        // multiply by x
        std::vector<Rational> nxt(phi, 0);
        for (long j = 0; j < phi - 1; ++j) nxt[j + 1] = cur[j];
        if (cur[phi - 1] != 0)
            for (long j = 0; j < phi; ++j) nxt[j] += cur[phi - 1] * top[j];
        cur = nxt;
    }

    // sqrt(q): rational when f is even, otherwise p^((f-1)/2) * sqrt(p).
    // sqrt(2) = zeta_8 + zeta_8^{-1}; for odd p the quadratic Gauss sum
    // g = sum_a (a|p) zeta_p^a equals sqrt(p) (p = 1 mod 4) or i*sqrt(p)
    // (p = 3 mod 4), with zeta_p = zeta_M^(M/p) and i = zeta_M^(M/4).
    CycScalar sq(ctx, std::vector<Rational>(phi, 0));
    auto set_to = [&](const CycScalar& v) { sq = v; };
    CycScalar sqrt_p = CycScalar(ctx, std::vector<Rational>(phi, 0));
    if (p == 2) {
        sqrt_p = ctx->zeta_pow(M / 8) + ctx->zeta_pow(M - M / 8);
    } else {
        CycScalar g(ctx, std::vector<Rational>(phi, 0));
        for (long a = 1; a < p; ++a) {
            // Legendre symbol via Euler's criterion
            long e = 1;
            long base = a % p, exp = (p - 1) / 2;
            while (exp) {
                if (exp & 1) e = (e * base) % p;
                base = (base * base) % p;
                exp >>= 1;
            }
            CycScalar term = ctx->zeta_pow((a * (M / p)) % M);
            g = (e == 1) ? g + term : g - term;
        }
        if (p % 4 == 1)
            sqrt_p = g;
        else
            sqrt_p = g * ctx->zeta_pow(M - M / 4);  // g / i
    }
    long half = f / 2;
    mpz_class scale = 1;
    for (long i = 0; i < half; ++i) scale *= p;
    if (f % 2 == 0)
        set_to(ctx->from_rational(Rational(scale)));
    else
        set_to(sqrt_p * Rational(scale));
    if (!((sq * sq) == ctx->from_long(q)))
        throw std::runtime_error("CycContext: sqrt_q construction failed");
    if (!(sq.conj() == sq))
        throw std::runtime_error("CycContext: sqrt_q not conjugation-fixed");
    ctx->sqrt_q_coeffs_ = sq.coeffs();
    if (!((sqrt_p * sqrt_p) == ctx->from_long(p)))
        throw std::runtime_error("CycContext: sqrt_p construction failed");
    ctx->sqrt_p_coeffs_ = sqrt_p.coeffs();
    return ctx;
}

CycScalar CycContext::zero() const {
    return CycScalar(shared_from_this(), std::vector<Rational>(phi_, 0));
}

CycScalar CycContext::one() const { return from_long(1); }

CycScalar CycContext::from_rational(const Rational& r) const {
    std::vector<Rational> c(phi_, 0);
    c[0] = r;
    return CycScalar(shared_from_this(), std::move(c));
}

CycScalar CycContext::from_long(long n) const { return from_rational(Rational(n)); }

CycScalar CycContext::zeta_pow(long k) const {
    k %= M_;
    if (k < 0) k += M_;
    return CycScalar(shared_from_this(), zeta_powers_[k]);
}

CycScalar CycContext::root_of_unity(long n, long k) const {
    if (n < 1 || M_ % n != 0)
        throw std::invalid_argument("root_of_unity: order " + std::to_string(n) +
                                    " does not divide M = " + std::to_string(M_));
    long kk = k % n;
    if (kk < 0) kk += n;
    return zeta_pow(kk * (M_ / n));
}

CycScalar CycContext::sqrt_q() const { return CycScalar(shared_from_this(), sqrt_q_coeffs_); }

CycScalar CycContext::sqrt_q_pow(long e) const {
    CycScalar s = sqrt_q();
    if (e < 0) return s.pow(-e).inv();
    return s.pow(e);
}

CycScalar CycContext::sqrt_p() const { return CycScalar(shared_from_this(), sqrt_p_coeffs_); }

CycScalar CycContext::half_power(long fdeg, long e2) const {
    long s = fdeg * e2;
    bool neg = s < 0;
    if (neg) s = -s;
    mpz_class whole = 1;
    for (long i = 0; i < s / 2; ++i) whole *= p_;
    CycScalar v = from_rational(Rational(whole));
    if (s % 2 != 0) v = v * sqrt_p();
    return neg ? v.inv() : v;
}

CycScalar::CycScalar(CycContextPtr ctx, std::vector<Rational> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
    if (static_cast<long>(coeffs_.size()) != ctx_->phi_)
        throw std::invalid_argument("CycScalar: wrong coefficient count");
    for (auto& c : coeffs_) c.canonicalize();
}

void CycScalar::check_same(const CycScalar& o) const {
    if (ctx_.get() != o.ctx_.get())
        throw std::invalid_argument("CycScalar: mismatched cyclotomic contexts");
}

bool CycScalar::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycScalar::is_one() const {
    if (coeffs_[0] != 1) return false;
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

bool CycScalar::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational CycScalar::to_rational() const {
    if (!is_rational()) throw std::runtime_error("CycScalar: not rational");
    return coeffs_[0];
}

CycScalar CycScalar::operator-() const {
    std::vector<Rational> c(coeffs_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = -coeffs_[i];
    return CycScalar(ctx_, std::move(c));
}

CycScalar CycScalar::operator+(const CycScalar& o) const {
    check_same(o);
    std::vector<Rational> c(coeffs_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = coeffs_[i] + o.coeffs_[i];
    return CycScalar(ctx_, std::move(c));
}

CycScalar CycScalar::operator-(const CycScalar& o) const {
    check_same(o);
    std::vector<Rational> c(coeffs_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = coeffs_[i] - o.coeffs_[i];
    return CycScalar(ctx_, std::move(c));
}

CycScalar CycScalar::operator*(const CycScalar& o) const {
    check_same(o);
    long phi = ctx_->phi_;
    std::vector<Rational> prod(2 * phi - 1, 0);
    for (long i = 0; i < phi; ++i) {
        if (coeffs_[i] == 0) continue;
        for (long j = 0; j < phi; ++j) {
            if (o.coeffs_[j] == 0) continue;
            prod[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    std::vector<Rational> c(prod.begin(), prod.begin() + phi);
    for (long k = phi; k < 2 * phi - 1; ++k) {
        if (prod[k] == 0) continue;
        const auto& row = ctx_->reduction_rows_[k - phi];
        for (long j = 0; j < phi; ++j)
            if (row[j] != 0) c[j] += prod[k] * row[j];
    }
    return CycScalar(ctx_, std::move(c));
}

CycScalar CycScalar::operator*(const Rational& r) const {
    std::vector<Rational> c(coeffs_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = coeffs_[i] * r;
    return CycScalar(ctx_, std::move(c));
}

CycScalar CycScalar::inv() const {
    if (is_zero()) throw std::runtime_error("CycScalar: division by zero");
    if (is_rational()) return ctx_->from_rational(Rational(1) / coeffs_[0]);
    // Extended Euclid in Q[x] for gcd(this, Phi_M) = 1.
    long phi = ctx_->phi_;
    std::vector<Rational> r0(phi + 1, 0);  // Phi_M
    {
        // reconstruct Phi_M from the top reduction row: x^phi - row
        const auto& row = ctx_->reduction_rows_[0];
        r0[phi] = 1;
        for (long i = 0; i < phi; ++i) r0[i] = -row[i];
    }
    std::vector<Rational> r1 = coeffs_;
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    std::vector<Rational> s0 = {Rational(0)};  // coefficient of input along r0
    std::vector<Rational> s1 = {Rational(1)};  // coefficient of input along r1

    auto deg = [](const std::vector<Rational>& v) -> long {
        return static_cast<long>(v.size()) - 1;
    };
    auto trim = [](std::vector<Rational>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    while (deg(r1) > 0) {
        // r0 = q*r1 + r; update (r0,s0) <- (r1,s1), (r1,s1) <- (r,s)
        std::vector<Rational> rem = r0;
        std::vector<Rational> quot(std::max<long>(deg(r0) - deg(r1) + 1, 1), 0);
        for (long i = deg(rem); i >= deg(r1); --i) {
            if (rem[i] == 0) continue;
            Rational c = rem[i] / r1.back();
            quot[i - deg(r1)] = c;
            for (long j = 0; j <= deg(r1); ++j) rem[i - deg(r1) + j] -= c * r1[j];
        }
        trim(rem);
        // s = s0 - q*s1
        std::vector<Rational> s(std::max(s0.size(), quot.size() + s1.size()), 0);
        for (size_t i = 0; i < s0.size(); ++i) s[i] = s0[i];
        for (size_t i = 0; i < quot.size(); ++i)
            for (size_t j = 0; j < s1.size(); ++j) s[i + j] -= quot[i] * s1[j];
        trim(s);
        r0 = std::move(r1);
        s0 = std::move(s1);
        r1 = std::move(rem);
        s1 = std::move(s);
    }
    if (r1.empty()) throw std::runtime_error("CycScalar: inverse failed (zero divisor?)");
    // r1 is a nonzero constant: inverse = s1 / r1[0], reduced mod Phi_M.
    std::vector<Rational> c(phi, 0);
    for (size_t i = 0; i < s1.size(); ++i) {
        Rational v = s1[i] / r1[0];
        if (v == 0) continue;
        const auto& rep = ctx_->zeta_powers_[i % ctx_->M_];
        for (long j = 0; j < phi; ++j) c[j] += v * rep[j];
    }
    return CycScalar(ctx_, std::move(c));
}

CycScalar CycScalar::operator/(const CycScalar& o) const { return *this * o.inv(); }

CycScalar CycScalar::conj() const {
    long phi = ctx_->phi_;
    long M = ctx_->M_;
    std::vector<Rational> c(phi, 0);
    for (long i = 0; i < phi; ++i) {
        if (coeffs_[i] == 0) continue;
        const auto& rep = ctx_->zeta_powers_[(M - i) % M];
        for (long j = 0; j < phi; ++j) c[j] += coeffs_[i] * rep[j];
    }
    return CycScalar(ctx_, std::move(c));
}

CycScalar CycScalar::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    CycScalar result = ctx_->one();
    CycScalar base = *this;
    while (e) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

bool CycScalar::operator==(const CycScalar& o) const {
    check_same(o);
    return coeffs_ == o.coeffs_;
}

std::complex<double> CycScalar::to_complex() const {
    std::complex<double> acc = 0;
    const double tau = 6.283185307179586476925287;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        double a = coeffs_[i].get_d();
        double ang = tau * static_cast<double>(i) / static_cast<double>(ctx_->M_);
        acc += a * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc;
}

std::string CycScalar::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        os << coeffs_[i];
        if (i > 0) os << "*z^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace lsfactor
