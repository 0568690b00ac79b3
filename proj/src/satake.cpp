#include "lsfactor/satake.hpp"

#include <stdexcept>

namespace lsfactor {

namespace {

Poly sparse_det(const std::vector<std::vector<Poly>>& m) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    Poly out = Poly::zero(m[0][0].context());
    for (size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) continue;
        std::vector<std::vector<Poly>> minor;
        minor.reserve(n - 1);
        for (size_t r = 1; r < n; ++r) {
            std::vector<Poly> row;
            row.reserve(n - 1);
            for (size_t cc = 0; cc < n; ++cc)
                if (cc != c) row.push_back(m[r][cc]);
            minor.push_back(std::move(row));
        }
        auto term = m[0][c] * sparse_det(minor);
        out = c % 2 == 0 ? out + term : out - term;
    }
    return out;
}

Poly asai_char_poly(const std::vector<CycScalar>& x, const std::vector<CycScalar>& y) {
    const auto& ctx = x[0].context();
    long n = static_cast<long>(x.size());
    size_t N = static_cast<size_t>(n * n);
    std::vector<std::vector<Poly>> m(N, std::vector<Poly>(N, Poly::zero(ctx)));
    for (size_t k = 0; k < N; ++k) m[k][k] = Poly::one(ctx);
    // the class sends e_i (x) e_j to y_j x_i e_j (x) e_i
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            size_t row = static_cast<size_t>(j * n + i);
            size_t col = static_cast<size_t>(i * n + j);
            auto coeff = x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
            m[row][col] = m[row][col] - Poly::monomial(coeff, 1);
        }
    return sparse_det(m);
}

SatakeClass inverted(const SatakeClass& cls) {
    SatakeClass out;
    out.frob_twist = cls.frob_twist;
    for (const auto& v : cls.x) out.x.push_back(v.inv());
    for (const auto& v : cls.y) out.y.push_back(v.inv());
    return out;
}

CycScalar block_w(const MulChar& chi, int comp) {
    return chi.is_split_pair() ? chi.comp(comp).w() : chi.w();
}

}  // namespace

RatFunc unramified_L(const SatakeClass& cls, SatakeRep rep) {
    if (cls.x.empty()) throw std::invalid_argument("unramified_L: empty class");
    for (const auto& v : cls.x)
        if (v.is_zero()) throw std::invalid_argument("unramified_L: zero parameter");
    const auto& ctx = cls.x[0].context();
    if (rep == SatakeRep::Tensor && cls.y.empty())
        throw std::invalid_argument("unramified_L: tensor needs a second class");
    if (rep == SatakeRep::Asai && cls.y.size() != cls.x.size())
        throw std::invalid_argument("unramified_L: dimension mismatch");
    auto den = Poly::one(ctx);
    auto factor = [&](const CycScalar& c) {
        den = den * (Poly::one(ctx) - Poly::monomial(c, 1));
    };
    long n = static_cast<long>(cls.x.size());
    switch (rep) {
        case SatakeRep::Std:
            for (const auto& v : cls.x) factor(v);
            break;
        case SatakeRep::Tensor:
            for (const auto& a : cls.x)
                for (const auto& b : cls.y) factor(a * b);
            break;
        case SatakeRep::Sym2:
            for (long i = 0; i < n; ++i)
                for (long j = i; j < n; ++j)
                    factor(cls.x[static_cast<size_t>(i)] * cls.x[static_cast<size_t>(j)]);
            break;
        case SatakeRep::Ext2:
            for (long i = 0; i < n; ++i)
                for (long j = i + 1; j < n; ++j)
                    factor(cls.x[static_cast<size_t>(i)] * cls.x[static_cast<size_t>(j)]);
            break;
        case SatakeRep::Asai:
            if (!cls.frob_twist) return unramified_L({cls.x, cls.y, false}, SatakeRep::Tensor);
            den = asai_char_poly(cls.x, cls.y);
            break;
    }
    return RatFunc::from_poly(den).inv();
}

bool unramified_identity_check(const GroupTag& G, const InducingDatum& d, const AddChar& psi) {
    if (psi.level() != 0)
        throw std::invalid_argument("unramified_identity_check: psi must have level 0");
    const auto& ctx = psi.context();
    auto chars = expand_datum(d);
    for (const auto& c : chars)
        if (c.conductor() != 0)
            throw std::invalid_argument("unramified_identity_check: ramified block");
    bool unitary = G.kind == GroupKind::Ueven || G.kind == GroupKind::Uodd;
    bool inert = unitary && !G.E->is_split();
    if (inert && G.E->kind() == EtaleKind::Ramified)
        throw std::invalid_argument("unramified_identity_check: ramified algebra");
    if (G.kind == GroupKind::Uodd && d.nu && d.nu->conductor() != 0)
        throw std::invalid_argument("unramified_identity_check: ramified nu");

    RatFunc C;
    SatakeClass c1, c2;
    SatakeRep r1 = SatakeRep::Std, r2 = SatakeRep::Std;
    bool has2 = false;
    bool double1 = false;  // L1 given in the variable of the quadratic extension

    auto x_of = [&](int comp) {
        std::vector<CycScalar> out;
        for (const auto& c : chars) out.push_back(block_w(c, comp));
        return out;
    };

    if (G.kind == GroupKind::GL) {
        if (static_cast<long>(chars.size()) != G.n + G.n2)
            throw std::invalid_argument("unramified_identity_check: GL datum size mismatch");
        C = RatFunc::one(ctx);
        for (long i = 0; i < G.n; ++i)
            for (long j = 0; j < G.n2; ++j)
                C = C * gauss_gamma(chars[static_cast<size_t>(i)] *
                                        chars[static_cast<size_t>(G.n + j)],
                                    psi);
        r1 = SatakeRep::Tensor;
        for (long i = 0; i < G.n; ++i) c1.x.push_back(chars[static_cast<size_t>(i)].w());
        for (long j = 0; j < G.n2; ++j) c1.y.push_back(chars[static_cast<size_t>(G.n + j)].w());
    } else {
        C = classical_coefficient(G, d, psi);
        switch (G.kind) {
            case GroupKind::SOodd:
                r1 = SatakeRep::Sym2;
                c1.x = x_of(0);
                break;
            case GroupKind::Sp:
                r1 = SatakeRep::Std;
                c1.x = x_of(0);
                has2 = true;
                r2 = SatakeRep::Ext2;
                c2.x = x_of(0);
                break;
            case GroupKind::SOeven:
                r1 = SatakeRep::Ext2;
                c1.x = x_of(0);
                break;
            case GroupKind::Ueven:
                r1 = SatakeRep::Asai;
                if (inert) {
                    c1.frob_twist = true;
                    c1.x = x_of(0);
                    c1.y.assign(c1.x.size(), ctx->one());
                } else {
                    c1.x = x_of(0);
                    c1.y = x_of(1);
                }
                break;
            case GroupKind::Uodd: {
                const auto& nu = *d.nu;
                r1 = SatakeRep::Std;
                if (inert) {
                    double1 = true;
                    for (const auto& c : chars) c1.x.push_back(c.w() * nu.w());
                    has2 = true;
                    r2 = SatakeRep::Asai;
                    c2.frob_twist = true;
                    c2.x = x_of(0);
                    c2.y.assign(c2.x.size(), -ctx->one());
                } else {
                    for (const auto& c : chars) {
                        c1.x.push_back(block_w(c, 0) * block_w(nu, 0));
                        c1.x.push_back(block_w(c, 1) * block_w(nu, 1));
                    }
                    has2 = true;
                    r2 = SatakeRep::Tensor;
                    c2.x = x_of(0);
                    c2.y = x_of(1);
                }
                break;
            }
            default:
                throw std::logic_error("unreachable");
        }
    }

    auto L1 = unramified_L(c1, r1);
    auto L1d = unramified_L(inverted(c1), r1);
    if (double1) {
        L1 = L1.subst_double();
        L1d = L1d.subst_double();
    }
    auto L2 = has2 ? unramified_L(c2, r2) : RatFunc::one(ctx);
    auto L2d = has2 ? unramified_L(inverted(c2), r2) : RatFunc::one(ctx);

    long q = psi.field()->q();
    Rational qv(q);
    auto lhs = C * L1 * L2.subst_double();
    auto rhs = L1d.subst_one_minus_s(qv) *
               L2d.subst(ctx->from_rational(Rational(1, q)), -2);
    return lhs == rhs;
}

}  // namespace lsfactor
