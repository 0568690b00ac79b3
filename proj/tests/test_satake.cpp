#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lsfactor/satake.hpp"

using namespace lsfactor;

namespace {

MulChar unram_etale(const QuadEtalePtr& E, const CycContextPtr& ctx, const CycScalar& w) {
    long n = E->ext()->unit_class_count(1);
    std::vector<CycScalar> tb(static_cast<size_t>(n), ctx->one());
    return MulChar::over_etale(E, ctx, 1, std::move(tb), w);
}

InducingBlock block(MulChar chi) { return {std::move(chi), 0, 1}; }

}  // namespace

TEST_CASE("closed forms of the small representations") {
    auto ctx = CycContext::create(3, 1);
    auto one = RatFunc::one(ctx);
    auto Z = RatFunc::monomial(ctx->one(), 1);

    SatakeClass ones{{ctx->one(), ctx->one()}, {}, false};
    CHECK(unramified_L(ones, SatakeRep::Sym2) == ((one - Z) * (one - Z) * (one - Z)).inv());

    auto c = ctx->zeta_pow(5);
    SatakeClass recip{{c, c.inv()}, {}, false};
    CHECK(unramified_L(recip, SatakeRep::Ext2) == (one - Z).inv());

    // dimension additivity: sym2 + ext2 fill the tensor square
    std::mt19937_64 rng(3);
    for (long n : {2L, 3L}) {
        SatakeClass cls;
        for (long i = 0; i < n; ++i) cls.x.push_back(ctx->zeta_pow(1 + rng() % (ctx->order() - 1)));
        cls.y = cls.x;
        auto s = unramified_L(cls, SatakeRep::Sym2);
        auto e = unramified_L(cls, SatakeRep::Ext2);
        auto t = unramified_L(cls, SatakeRep::Tensor);
        CHECK(s.den().degree() + e.den().degree() == n * n);
        CHECK(s * e == t);
    }
}

TEST_CASE("Asai: untwisted equals tensor, twisted matches the closed form") {
    auto ctx = CycContext::create(3, 1);
    std::mt19937_64 rng(7);
    auto one = RatFunc::one(ctx);
    for (long n : {1L, 2L, 3L}) {
        for (int rep = 0; rep < 3; ++rep) {
            SatakeClass cls;
            cls.frob_twist = false;
            for (long i = 0; i < n; ++i) {
                cls.x.push_back(ctx->zeta_pow(1 + rng() % (ctx->order() - 1)));
                cls.y.push_back(ctx->zeta_pow(1 + rng() % (ctx->order() - 1)));
            }
            CHECK(unramified_L(cls, SatakeRep::Asai) == unramified_L(cls, SatakeRep::Tensor));

            cls.frob_twist = true;
            auto brute = unramified_L(cls, SatakeRep::Asai);
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
            CHECK(brute == closed.inv());
        }
    }
}

TEST_CASE("unramified identities for the split classical groups and GL") {
    std::mt19937_64 rng(11);
    for (auto [p, f] : {std::pair<long, long>{2, 1}, {3, 1}}) {
        auto F = LocalFieldCtx::create(FiniteField::create(p, f));
        auto ctx = CycContext::create(p, f);
        auto psi = AddChar::standard(F, ctx);
        auto rand_char = [&]() {
            return MulChar::unramified(F, ctx, ctx->zeta_pow(rng() % ctx->order()));
        };
        auto datum = [&](long n) {
            InducingDatum d;
            for (long i = 0; i < n; ++i) d.blocks.push_back(block(rand_char()));
            return d;
        };
        for (int rep = 0; rep < 4; ++rep) {
            for (long n : {1L, 2L, 3L}) {
                CAPTURE(p);
                CAPTURE(n);
                CHECK(unramified_identity_check(GroupTag::so_odd(n), datum(n), psi));
                CHECK(unramified_identity_check(GroupTag::sp(n), datum(n), psi));
                if (n >= 2)
                    CHECK(unramified_identity_check(GroupTag::so_even(n), datum(n), psi));
            }
            CHECK(unramified_identity_check(GroupTag::gl(1, 1), datum(2), psi));
            CHECK(unramified_identity_check(GroupTag::gl(1, 2), datum(3), psi));
            CHECK(unramified_identity_check(GroupTag::gl(2, 1), datum(3), psi));
        }
    }
}

TEST_CASE("unramified identities for the unitary groups") {
    std::mt19937_64 rng(13);
    for (auto [p, f] : {std::pair<long, long>{2, 1}, {3, 1}}) {
        auto F = LocalFieldCtx::create(FiniteField::create(p, f));
        auto ctx = CycContext::create(p, f);
        auto psi = AddChar::standard(F, ctx);
        auto rand_w = [&]() { return ctx->zeta_pow(rng() % ctx->order()); };
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
            for (int rep = 0; rep < 4; ++rep) {
                for (long n : {1L, 2L, 3L}) {
                    CAPTURE(p);
                    CAPTURE(n);
                    CAPTURE(static_cast<int>(kind));
                    InducingDatum d;
                    for (long i = 0; i < n; ++i) d.blocks.push_back(block(rand_echar()));
                    CHECK(unramified_identity_check(GroupTag::u_even(n, E), d, psi));
                    d.nu = rand_nu();
                    CHECK(unramified_identity_check(GroupTag::u_odd(n, E), d, psi));
                }
            }
        }
    }
}
