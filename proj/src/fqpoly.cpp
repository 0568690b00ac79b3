#include "lsfactor/fqpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace lsfactor {

FqPoly fq_trim(FqPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

long fq_deg(const FqPoly& a) { return static_cast<long>(a.size()) - 1; }

bool fq_is_monic(const FqPoly& a) { return !a.empty() && a.back() == 1; }

FqPoly fq_one() { return {1}; }
FqPoly fq_x() { return {0, 1}; }
FqPoly fq_constant(long c) { return fq_trim({c}); }

long fq_eval(const FiniteFieldPtr& k, const FqPoly& a, long x) {
    long r = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) r = k->add(k->mul(r, x), *it);
    return r;
}

FqPoly fq_add(const FiniteFieldPtr& k, const FqPoly& a, const FqPoly& b) {
    FqPoly out(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = k->add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    return fq_trim(std::move(out));
}

FqPoly fq_sub(const FiniteFieldPtr& k, const FqPoly& a, const FqPoly& b) {
    FqPoly out(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = k->sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    return fq_trim(std::move(out));
}

FqPoly fq_mul(const FiniteFieldPtr& k, const FqPoly& a, const FqPoly& b) {
    if (a.empty() || b.empty()) return {};
    FqPoly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = k->add(out[i + j], k->mul(a[i], b[j]));
    return fq_trim(std::move(out));
}

FqPoly fq_scale(const FiniteFieldPtr& k, long c, const FqPoly& a) {
    FqPoly out = a;
    for (auto& x : out) x = k->mul(c, x);
    return fq_trim(std::move(out));
}

FqPoly fq_monic(const FiniteFieldPtr& k, const FqPoly& a) {
    if (a.empty()) return {};
    return fq_scale(k, k->inv(a.back()), a);
}

FqPoly fq_derivative(const FiniteFieldPtr& k, const FqPoly& a) {
    FqPoly out;
    for (size_t i = 1; i < a.size(); ++i)
        out.push_back(k->scalar_mul(static_cast<long>(i) % k->p(), a[i]));
    return fq_trim(std::move(out));
}

FqPoly fq_pow(const FiniteFieldPtr& k, const FqPoly& a, long e) {
    if (e < 0) throw std::invalid_argument("fq_pow: negative exponent");
    FqPoly out = fq_one();
    for (long i = 0; i < e; ++i) out = fq_mul(k, out, a);
    return out;
}

std::pair<FqPoly, FqPoly> fq_divmod(const FiniteFieldPtr& k, const FqPoly& a, const FqPoly& b) {
    if (b.empty()) throw std::invalid_argument("fq_divmod: division by zero");
    FqPoly rem = a, quo;
    long db = fq_deg(b);
    long linv = k->inv(b.back());
    if (fq_deg(rem) >= db) quo.assign(static_cast<size_t>(fq_deg(rem) - db) + 1, 0);
    while (fq_deg(rem) >= db) {
        long d = fq_deg(rem);
        long c = k->mul(rem.back(), linv);
        quo[static_cast<size_t>(d - db)] = c;
        for (long i = 0; i <= db; ++i) {
            size_t pos = static_cast<size_t>(d - db + i);
            rem[pos] = k->sub(rem[pos], k->mul(c, b[static_cast<size_t>(i)]));
        }
        rem = fq_trim(std::move(rem));
    }
    return {fq_trim(std::move(quo)), rem};
}

FqPoly fq_mod(const FiniteFieldPtr& k, const FqPoly& a, const FqPoly& m) {
    return fq_divmod(k, a, m).second;
}

FqPoly fq_mulmod(const FiniteFieldPtr& k, const FqPoly& a, const FqPoly& b, const FqPoly& m) {
    return fq_mod(k, fq_mul(k, a, b), m);
}

FqPoly fq_gcd(const FiniteFieldPtr& k, FqPoly a, FqPoly b) {
    while (!b.empty()) {
        auto r = fq_mod(k, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return fq_monic(k, a);
}

bool fq_coprime(const FiniteFieldPtr& k, const FqPoly& a, const FqPoly& b) {
    return fq_deg(fq_gcd(k, a, b)) == 0;
}

FqXgcd fq_xgcd(const FiniteFieldPtr& k, const FqPoly& a, const FqPoly& b) {
    FqPoly r0 = a, r1 = b;
    FqPoly u0 = fq_one(), u1 = {}, v0 = {}, v1 = fq_one();
    while (!r1.empty()) {
        auto [q, r] = fq_divmod(k, r0, r1);
        FqPoly u2 = fq_sub(k, u0, fq_mul(k, q, u1));
        FqPoly v2 = fq_sub(k, v0, fq_mul(k, q, v1));
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (r0.empty()) return {{}, {}, {}};
    long c = k->inv(r0.back());
    return {fq_scale(k, c, r0), fq_scale(k, c, u0), fq_scale(k, c, v0)};
}

FqPoly fq_crt(const FiniteFieldPtr& k, const std::vector<FqPoly>& residues,
              const std::vector<FqPoly>& moduli) {
    if (residues.size() != moduli.size() || residues.empty())
        throw std::invalid_argument("fq_crt: mismatched inputs");
    FqPoly x = fq_mod(k, residues[0], moduli[0]);
    FqPoly m = moduli[0];
    for (size_t i = 1; i < residues.size(); ++i) {
        auto xg = fq_xgcd(k, m, moduli[i]);
        if (fq_deg(xg.g) != 0) throw std::invalid_argument("fq_crt: moduli not coprime");
        // x + m t = residues[i] mod moduli[i]
        auto t = fq_mulmod(k, fq_sub(k, residues[i], x), xg.u, moduli[i]);
        x = fq_add(k, x, fq_mul(k, m, t));
        m = fq_mul(k, m, moduli[i]);
        x = fq_mod(k, x, m);
    }
    return x;
}

std::vector<FqPoly> fq_monics(const FiniteFieldPtr& k, long d) {
    if (d < 0) throw std::invalid_argument("fq_monics: negative degree");
    long n = 1;
    for (long i = 0; i < d; ++i) n *= k->size();
    std::vector<FqPoly> out;
    out.reserve(static_cast<size_t>(n));
    for (long c = 0; c < n; ++c) {
        auto f = fq_from_code(k, c);
        f.resize(static_cast<size_t>(d) + 1, 0);
        f[static_cast<size_t>(d)] = 1;
        out.push_back(std::move(f));
    }
    return out;
}

bool fq_irreducible(const FiniteFieldPtr& k, const FqPoly& a) {
    long d = fq_deg(a);
    if (d <= 0) return false;
    if (d == 1) return true;
    for (long e = 1; 2 * e <= d; ++e)
        for (const auto& P : fq_monic_irreducibles(k, e))
            if (fq_mod(k, a, P).empty()) return false;
    return true;
}

std::vector<FqPoly> fq_monic_irreducibles(const FiniteFieldPtr& k, long d) {
    std::vector<FqPoly> out;
    for (auto& f : fq_monics(k, d))
        if (fq_irreducible(k, f)) out.push_back(std::move(f));
    return out;
}

std::vector<std::pair<FqPoly, long>> fq_factor(const FiniteFieldPtr& k, const FqPoly& a) {
    if (a.empty()) throw std::invalid_argument("fq_factor: zero polynomial");
    std::vector<std::pair<FqPoly, long>> out;
    FqPoly rem = fq_monic(k, a);
    for (long d = 1; 2 * d <= fq_deg(rem); ++d) {
        for (const auto& P : fq_monic_irreducibles(k, d)) {
            long e = 0;
            while (true) {
                auto [q, r] = fq_divmod(k, rem, P);
                if (!r.empty()) break;
                rem = std::move(q);
                ++e;
            }
            if (e > 0) out.push_back({P, e});
            if (2 * d > fq_deg(rem)) break;
        }
    }
    if (fq_deg(rem) >= 1) out.push_back({std::move(rem), 1});
    return out;
}

long fq_mult(const FiniteFieldPtr& k, const FqPoly& a, const FqPoly& P) {
    if (fq_deg(P) < 1) throw std::invalid_argument("fq_mult: constant divisor");
    long e = 0;
    FqPoly rem = a;
    while (fq_deg(rem) >= fq_deg(P)) {
        auto [q, r] = fq_divmod(k, rem, P);
        if (!r.empty()) break;
        rem = std::move(q);
        ++e;
    }
    return e;
}

long fq_code(const FiniteFieldPtr& k, const FqPoly& a) {
    long out = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) out = out * k->size() + *it;
    return out;
}

FqPoly fq_from_code(const FiniteFieldPtr& k, long code) {
    FqPoly out;
    while (code > 0) {
        out.push_back(code % k->size());
        code /= k->size();
    }
    return out;
}

std::string fq_to_string(const FqPoly& a) {
    if (a.empty()) return "0";
    std::string out;
    for (long i = fq_deg(a); i >= 0; --i) {
        long c = a[static_cast<size_t>(i)];
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c) + "*";
        out += i == 1 ? "t" : "t^" + std::to_string(i);
    }
    return out;
}

FqPoly fq_parse(const FiniteFieldPtr& k, const std::string& s) {
    FqPoly out;
    std::string cur;
    auto flush = [&]() {
        if (cur.empty()) return;
        long c = 1, e = 0;
        size_t tpos = cur.find('t');
        if (tpos == std::string::npos) {
            c = std::stol(cur);
        } else {
            std::string head = cur.substr(0, tpos);
            if (!head.empty() && head.back() == '*') head.pop_back();
            if (!head.empty()) c = std::stol(head);
            std::string tail = cur.substr(tpos + 1);
            e = 1;
            if (!tail.empty()) {
                if (tail[0] != '^') throw std::invalid_argument("fq_parse: bad term");
                e = std::stol(tail.substr(1));
            }
        }
        if (c < 0 || c >= k->size() || e < 0) throw std::invalid_argument("fq_parse: bad coefficient");
        if (static_cast<long>(out.size()) <= e) out.resize(static_cast<size_t>(e) + 1, 0);
        out[static_cast<size_t>(e)] = k->add(out[static_cast<size_t>(e)], c);
        cur.clear();
    };
    for (char ch : s) {
        if (ch == ' ') continue;
        if (ch == '+') {
            flush();
            continue;
        }
        cur += ch;
    }
    flush();
    return fq_trim(std::move(out));
}

}  // namespace lsfactor
