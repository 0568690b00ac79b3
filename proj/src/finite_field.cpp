#include "lsfactor/finite_field.hpp"

#include <numeric>
#include <stdexcept>

namespace lsfactor {

namespace {

long ipow(long b, long e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// multiply polynomials over F_p reduced mod the (monic) modulus, all encoded
// as digit vectors
std::vector<long> polymul_mod(const std::vector<long>& a, const std::vector<long>& b, long p,
                              const std::vector<long>& mod) {
    long n = static_cast<long>(mod.size()) - 1;
    std::vector<long> prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    for (long d = static_cast<long>(prod.size()) - 1; d >= n; --d) {
        long c = prod[static_cast<size_t>(d)];
        if (c == 0) continue;
        for (long k = 0; k <= n; ++k) {
            auto idx = static_cast<size_t>(d - n + k);
            prod[idx] = ((prod[idx] - c * mod[static_cast<size_t>(k)]) % p + p) % p;
        }
    }
    prod.resize(static_cast<size_t>(n), 0);
    return prod;
}

}  // namespace

std::vector<long> FiniteField::digits(long a) const {
    std::vector<long> d(static_cast<size_t>(n_));
    for (long i = 0; i < n_; ++i) {
        d[static_cast<size_t>(i)] = a % p_;
        a /= p_;
    }
    return d;
}

long FiniteField::from_digits(const std::vector<long>& d) const {
    long a = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it) a = a * p_ + *it;
    return a;
}

FiniteFieldPtr FiniteField::create(long p, long n) {
    auto ff = std::shared_ptr<FiniteField>(new FiniteField);
    ff->p_ = p;
    ff->n_ = n;
    ff->size_ = ipow(p, n);

    // find the first monic irreducible of degree n by testing that x^(p^n) = x
    // and x^(p^(n/l)) != x for prime divisors l of n
    auto try_modulus = [&](const std::vector<long>& mod) {
        auto frob_iter = [&](std::vector<long> v, long times) {
            for (long t = 0; t < times; ++t) {
                std::vector<long> base = v, acc = {1};
                long e = p;
                while (e > 0) {
                    if (e & 1) acc = polymul_mod(acc, base, p, mod);
                    base = polymul_mod(base, base, p, mod);
                    e >>= 1;
                }
                v = acc;
            }
            return v;
        };
        std::vector<long> x = {0, 1};
        x.resize(static_cast<size_t>(n), 0);
        if (frob_iter(x, n) != x) return false;
        for (long l = 2; l <= n; ++l) {
            if (n % l != 0) continue;
            bool prime = true;
            for (long d = 2; d * d <= l; ++d)
                if (l % d == 0) prime = false;
            if (!prime) continue;
            if (frob_iter(x, n / l) == x) return false;
        }
        return true;
    };

    if (n == 1) {
        ff->modulus_ = {0, 1};  // x, so elements are just residues mod p
    } else {
        bool found = false;
        for (long tail = 0; tail < ipow(p, n) && !found; ++tail) {
            std::vector<long> mod(static_cast<size_t>(n) + 1, 0);
            long t = tail;
            for (long i = 0; i < n; ++i) {
                mod[static_cast<size_t>(i)] = t % p;
                t /= p;
            }
            mod[static_cast<size_t>(n)] = 1;
            if (mod[0] == 0) continue;
            if (try_modulus(mod)) {
                ff->modulus_ = mod;
                found = true;
            }
        }
        if (!found) throw std::logic_error("no irreducible polynomial found");
    }

    // build multiplicative log/exp tables from a generator
    ff->log_table_.assign(static_cast<size_t>(ff->size_), -1);
    long m = ff->size_ - 1;
    for (long g = 1; g < ff->size_; ++g) {
        long x = 1, ord = 0;
        do {
            x = ff->mul(x, g);
            ++ord;
        } while (x != 1);
        if (ord == m) {
            ff->generator_ = g;
            break;
        }
    }
    if (ff->generator_ == 0 && m > 1) throw std::logic_error("no generator found");
    if (m == 1) ff->generator_ = 1;
    ff->exp_table_.resize(static_cast<size_t>(m));
    std::vector<long> logs(static_cast<size_t>(ff->size_), -1);
    long x = 1;
    for (long k = 0; k < m; ++k) {
        ff->exp_table_[static_cast<size_t>(k)] = x;
        logs[static_cast<size_t>(x)] = k;
        x = ff->from_digits(polymul_mod(ff->digits(x), ff->digits(ff->generator_), p, ff->modulus_));
    }
    ff->log_table_ = std::move(logs);
    return ff;
}

long FiniteField::add(long a, long b) const {
    auto da = digits(a), db = digits(b);
    for (long i = 0; i < n_; ++i)
        da[static_cast<size_t>(i)] = (da[static_cast<size_t>(i)] + db[static_cast<size_t>(i)]) % p_;
    return from_digits(da);
}

long FiniteField::neg(long a) const {
    auto d = digits(a);
    for (auto& c : d) c = (p_ - c) % p_;
    return from_digits(d);
}

long FiniteField::sub(long a, long b) const {
    return add(a, neg(b));
}

long FiniteField::mul(long a, long b) const {
    if (a == 0 || b == 0) return 0;
    if (!log_table_.empty() && log_table_[static_cast<size_t>(a)] >= 0 &&
        log_table_[static_cast<size_t>(b)] >= 0) {
        long m = size_ - 1;
        return exp_table_[static_cast<size_t>(
            (log_table_[static_cast<size_t>(a)] + log_table_[static_cast<size_t>(b)]) % m)];
    }
    return from_digits(polymul_mod(digits(a), digits(b), p_, modulus_));
}

long FiniteField::inv(long a) const {
    if (a == 0) throw std::domain_error("FiniteField::inv of zero");
    long m = size_ - 1;
    return exp_table_[static_cast<size_t>((m - log_table_[static_cast<size_t>(a)]) % m)];
}

long FiniteField::pow(long a, long e) const {
    if (a == 0) {
        if (e <= 0) throw std::domain_error("FiniteField::pow: 0^nonpositive");
        return 0;
    }
    long m = size_ - 1;
    long l = log_table_[static_cast<size_t>(a)];
    long r = ((e % m) * l) % m;
    if (r < 0) r += m;
    return exp_table_[static_cast<size_t>(r)];
}

long FiniteField::from_prime_field(long c) const {
    c %= p_;
    if (c < 0) c += p_;
    return c;
}

long FiniteField::scalar_mul(long c, long a) const {
    return mul(from_prime_field(c), a);
}

long FiniteField::mult_order(long a) const {
    if (a == 0) throw std::domain_error("mult_order of zero");
    long m = size_ - 1;
    long l = log_table_[static_cast<size_t>(a)];
    return m / std::gcd(m, l);
}

long FiniteField::dlog(long a) const {
    if (a == 0) throw std::domain_error("dlog of zero");
    return log_table_[static_cast<size_t>(a)];
}

long FiniteField::abs_trace(long a) const {
    long s = 0, x = a;
    for (long i = 0; i < n_; ++i) {
        s = add(s, x);
        x = frobenius(x);
    }
    return s;  // lies in the prime field, encoded as itself
}

long FiniteField::abs_norm(long a) const {
    long s = 1, x = a;
    for (long i = 0; i < n_; ++i) {
        s = mul(s, x);
        x = frobenius(x);
    }
    return s;
}

FFEmbedding::FFEmbedding(FiniteFieldPtr sub, FiniteFieldPtr super)
    : sub_(std::move(sub)), super_(std::move(super)) {
    if (sub_->p() != super_->p() || super_->deg() % sub_->deg() != 0)
        throw std::invalid_argument("FFEmbedding: incompatible fields");
    // root of the small modulus inside the big field
    root_ = -1;
    const auto& m = sub_->modulus();
    for (long b = 0; b < super_->size(); ++b) {
        long v = 0;
        for (auto it = m.rbegin(); it != m.rend(); ++it)
            v = super_->add(super_->mul(v, b), super_->from_prime_field(*it));
        if (v == 0) {
            root_ = b;
            break;
        }
    }
    if (root_ < 0) throw std::logic_error("FFEmbedding: no root of modulus found");
    image_table_.resize(static_cast<size_t>(sub_->size()));
    preimage_table_.assign(static_cast<size_t>(super_->size()), -1);
    for (long a = 0; a < sub_->size(); ++a) {
        auto d = sub_->digits(a);
        long v = 0;
        for (auto it = d.rbegin(); it != d.rend(); ++it)
            v = super_->add(super_->mul(v, root_), super_->from_prime_field(*it));
        image_table_[static_cast<size_t>(a)] = v;
        preimage_table_[static_cast<size_t>(v)] = a;
    }
}

long FFEmbedding::image(long a) const {
    return image_table_[static_cast<size_t>(a)];
}

bool FFEmbedding::in_image(long b) const {
    return preimage_table_[static_cast<size_t>(b)] >= 0;
}

long FFEmbedding::preimage(long b) const {
    long a = preimage_table_[static_cast<size_t>(b)];
    if (a < 0) throw std::domain_error("FFEmbedding::preimage: not in image");
    return a;
}

long FFEmbedding::rel_trace(long b) const {
    long steps = super_->deg() / sub_->deg();
    long s = 0, x = b;
    for (long i = 0; i < steps; ++i) {
        s = super_->add(s, x);
        x = super_->pow(x, sub_->size());
    }
    return preimage(s);
}

long FFEmbedding::rel_norm(long b) const {
    long steps = super_->deg() / sub_->deg();
    long s = 1, x = b;
    for (long i = 0; i < steps; ++i) {
        s = super_->mul(s, x);
        x = super_->pow(x, sub_->size());
    }
    return preimage(s);
}

}  // namespace lsfactor
