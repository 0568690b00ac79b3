#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lsfactor/local_field.hpp"

using namespace lsfactor;

namespace {

LaurentElem random_elem(const LocalFieldCtxPtr& F, std::mt19937_64& rng, bool nonzero) {
    for (;;) {
        long val = static_cast<long>(rng() % 5) - 2;
        std::vector<long> d(1 + rng() % 3);
        for (auto& c : d) c = static_cast<long>(rng() % static_cast<unsigned long>(F->q()));
        auto x = F->from_digits(val, d);
        if (!nonzero || !x.is_zero()) return x;
    }
}

}  // namespace

TEST_CASE("laurent arithmetic") {
    auto F = LocalFieldCtx::create(FiniteField::create(3, 1));
    auto t = F->uniformizer();
    auto x = F->add(F->one(), t);  // 1 + t
    CHECK(F->ord(x) == 0);
    CHECK(F->coeff(x, 1) == 1);
    auto y = F->mul(x, x);  // 1 + 2t + t^2
    CHECK(F->coeff(y, 1) == 2);
    CHECK(F->coeff(y, 2) == 1);
    CHECK(F->sub(y, y).is_zero());
    // inverse of 1 + t is 1 - t + t^2 - ...
    auto xi = F->inv_mod(x, 4);
    CHECK(F->truncate(F->mul(x, xi), 4) == F->one());
    CHECK(F->coeff(xi, 1) == 2);
    // negative valuation
    auto z = F->from_digits(-2, {2, 1});
    CHECK(F->ord(z) == -2);
    CHECK(F->ord(F->mul(z, t)) == -1);
}

TEST_CASE("unit classes are a bijection") {
    auto F = LocalFieldCtx::create(FiniteField::create(2, 2));
    for (long m : {0L, 1L, 2L, 3L}) {
        long n = F->unit_class_count(m);
        for (long id = 0; id < n; ++id) {
            auto r = F->unit_class_rep(id, m);
            CHECK(F->unit_class_of(r, m) == id);
        }
    }
    CHECK(F->unit_class_count(2) == 12);
    // class of a unit ignores high digits
    auto u = F->from_digits(0, {3, 1, 2, 3});
    CHECK(F->unit_class_of(u, 2) == F->unit_class_of(F->truncate(u, 2), 2));
}

TEST_CASE("quadratic algebra structure") {
    std::mt19937_64 rng(777);
    auto F = LocalFieldCtx::create(FiniteField::create(3, 1));
    for (auto kind : {EtaleKind::Split, EtaleKind::Unramified, EtaleKind::Ramified}) {
        auto E = QuadEtale::create(F, kind);
        CAPTURE(static_cast<int>(kind));
        for (int trial = 0; trial < 20; ++trial) {
            auto x = random_elem(F, rng, true);
            auto z = E->embed(x);
            // conjugation fixes the base field
            CHECK(E->conj(z).a == z.a);
            CHECK(E->trace(z) == F->add(x, x));
            CHECK(E->norm(z) == F->mul(x, x));
        }
        // beta generates and is trace-free
        auto b = E->beta();
        CHECK(E->trace(b).is_zero());
        // norm is multiplicative on random algebra elements
        auto mk = [&]() {
            if (kind == EtaleKind::Split)
                return EtaleElem{random_elem(F, rng, true), random_elem(F, rng, true)};
            return EtaleElem{random_elem(E->ext(), rng, true), {}};
        };
        for (int trial = 0; trial < 20; ++trial) {
            auto z = mk(), w = mk();
            CHECK(E->norm(E->mul(z, w)) == F->mul(E->norm(z), E->norm(w)));
            CHECK(E->trace(E->add(z, w)) == F->add(E->trace(z), E->trace(w)));
            CHECK(E->conj(E->conj(z)).a == z.a);
            // x * conj(x) = norm embedded
            auto n = E->mul(z, E->conj(z));
            CHECK(n.a == E->embed(E->norm(z)).a);
            if (kind == EtaleKind::Split) CHECK(n.b == E->embed(E->norm(z)).b);
        }
    }
}

TEST_CASE("eta is trivial exactly on norms") {
    std::mt19937_64 rng(31337);
    for (long p : {3L, 5L}) {
        auto F = LocalFieldCtx::create(FiniteField::create(p, 1));
        for (auto kind : {EtaleKind::Split, EtaleKind::Unramified, EtaleKind::Ramified}) {
            auto E = QuadEtale::create(F, kind);
            CAPTURE(p);
            CAPTURE(static_cast<int>(kind));
            // eta kills norms
            for (int trial = 0; trial < 40; ++trial) {
                EtaleElem z;
                if (kind == EtaleKind::Split)
                    z = {random_elem(F, rng, true), random_elem(F, rng, true)};
                else
                    z = {random_elem(E->ext(), rng, true), {}};
                CHECK(E->eta(E->norm(z)) == 1);
            }
            // multiplicative
            for (int trial = 0; trial < 40; ++trial) {
                auto x = random_elem(F, rng, true), y = random_elem(F, rng, true);
                CHECK(E->eta(F->mul(x, y)) == E->eta(x) * E->eta(y));
            }
            // nontrivial for the field cases
            if (kind != EtaleKind::Split) {
                bool saw = false;
                for (int trial = 0; trial < 60 && !saw; ++trial)
                    saw = E->eta(random_elem(F, rng, true)) == -1;
                CHECK(saw);
            }
        }
    }
}

TEST_CASE("eta special values") {
    auto F3 = LocalFieldCtx::create(FiniteField::create(3, 1));
    auto Eu = QuadEtale::create(F3, EtaleKind::Unramified);
    CHECK(Eu->eta(F3->uniformizer()) == -1);
    CHECK(Eu->eta(F3->from_residue(2)) == 1);
    auto Er = QuadEtale::create(F3, EtaleKind::Ramified);
    // -t = N(u), and 2 = -1 is not a square mod 3
    CHECK(Er->eta(F3->from_residue(2, 1)) == 1);
    CHECK(Er->eta(F3->from_residue(2)) == -1);
    CHECK(Er->psi_level(0) == -1);
    CHECK(Er->psi_level(1) == 1);
    CHECK(Er->haar_exp2() == -1);
    CHECK(Eu->haar_exp2() == 0);
}

TEST_CASE("char 2 rejects ramified") {
    auto F2 = LocalFieldCtx::create(FiniteField::create(2, 1));
    CHECK_THROWS(QuadEtale::create(F2, EtaleKind::Ramified));
    auto Eu = QuadEtale::create(F2, EtaleKind::Unramified);
    CHECK(Eu->ext()->q() == 4);
}
