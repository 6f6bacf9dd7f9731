#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "denomlab/bernoulli.hpp"
#include "denomlab/qexp.hpp"

using namespace dlab;

TEST_CASE("dimension of weight-k forms") {
    long expected[] = {1, 0, 1, 1, 1, 1, 2, 1, 2, 2, 2, 2, 3, 2, 3};
    for (long i = 0; i <= 14; ++i) CHECK(dim_modular_forms(2 * i) == expected[i]);
    CHECK(dim_modular_forms(-2) == 0);
    CHECK(dim_modular_forms(3) == 0);
}

TEST_CASE("delta expansion") {
    auto d = delta_series(1002);
    CHECK(d.weight == 12);
    CHECK(d.c[0] == 0);
    CHECK(d.c[1] == 1);
    CHECK(d.c[2] == -24);
    CHECK(d.c[3] == 252);
    CHECK(d.c[4] == -1472);
    CHECK(d.c[5] == 4830);
    CHECK(d.c[6] == -6048);
    CHECK(d.c[7] == -16744);
    CHECK(d.c[11] == 534612);
    CHECK(d.c[12] == -370944);
    // tau(n) = sigma_11(n) mod 691
    for (long n = 1; n <= 1000; ++n) {
        Int s = 0;
        for (long e = 1; e <= n; ++e)
            if (n % e == 0) s += int_pow(Int(e), 11);
        CHECK((numerator(d.c[n]) - s) % 691 == 0);
    }
}

TEST_CASE("eisenstein series") {
    auto e4 = eisenstein_series(4, 6);
    CHECK(e4.c[0] == Rational(1) / 240);
    CHECK(e4.c[1] == 1);
    CHECK(e4.c[2] == 9);
    CHECK(e4.c[3] == 28);
    CHECK(eisenstein_series(12, 2).c[0] == Rational(691) / 65520);
    // T_m eigenvalue sigma_{k-1}(m)
    for (long k : {4L, 8L, 12L}) {
        auto e = eisenstein_series(k, 40);
        for (long m : {2L, 3L, 6L}) {
            auto t = hecke_operator(e, m);
            Rational lam = 0;
            for (long dd = 1; dd <= m; ++dd)
                if (m % dd == 0) lam += Rational(int_pow(Int(dd), k - 1));
            for (long n = 0; n < t.prec; ++n) CHECK(t.c[n] == lam * e.c[n]);
        }
    }
}

TEST_CASE("miller basis") {
    for (long k : {12L, 16L, 24L, 28L}) {
        long d = dim_modular_forms(k);
        auto basis = miller_basis(k, d + 6);
        REQUIRE(basis.size() == static_cast<size_t>(d));
        for (long i = 0; i < d; ++i) {
            CHECK(basis[i].weight == k);
            for (long j = 0; j < d; ++j)
                CHECK(basis[i].c[j] == (i == j ? 1 : 0));
        }
    }
    // the weight-12 theta-like form with vanishing q coefficient
    auto b12 = miller_basis(12, 4);
    CHECK(b12[0].c[2] == 196560);
    CHECK(b12[1].c[2] == -24);
}

TEST_CASE("hecke operators on delta") {
    auto d = delta_series(61);
    auto t2 = hecke_operator(d, 2);
    for (long n = 0; n < t2.prec; ++n) CHECK(t2.c[n] == -24 * d.c[n]);
    auto t6 = hecke_operator(d, 6);
    for (long n = 0; n < t6.prec; ++n) CHECK(t6.c[n] == -6048 * d.c[n]);
    CHECK_THROWS_AS(hecke_operator(d, 70), PrecisionError);
}

TEST_CASE("eigenforms with rational coefficients") {
    long ks[] = {12, 16, 18, 20, 22, 26};
    long a2s[] = {-24, 216, -528, 456, -288, -48};
    long a3s[] = {252, -3348, -4284, 50652, -128844, -195804};
    for (int i = 0; i < 6; ++i) {
        auto forms = eigenforms(ks[i], 30);
        REQUIRE(forms.size() == 1);
        const auto& f = forms[0];
        CHECK(f.disc == 1);
        CHECK(f.f.c[1] == QuadraticNumber(Rational(1)));
        CHECK(f.f.c[2].to_rational() == a2s[i]);
        CHECK(f.f.c[3].to_rational() == a3s[i]);
        // eigenform property under several Hecke operators
        for (long m : {2L, 3L, 4L, 6L}) {
            auto t = hecke_operator(f.f, m);
            for (long n = 1; n < t.prec; ++n) CHECK(t.c[n] == f.f.c[m] * f.f.c[n]);
        }
    }
}

TEST_CASE("weight 24 eigenform pair") {
    auto forms = eigenforms(24, 40);
    REQUIRE(forms.size() == 2);
    CHECK(forms[0].disc == 144169);
    CHECK(forms[0].f.c[2] == QuadraticNumber(144169, Rational(540), Rational(12)));
    CHECK(forms[1].f.c[2] == QuadraticNumber(144169, Rational(540), Rational(-12)));
    CHECK(forms[0].f.c[3] == QuadraticNumber(144169, Rational(169740), Rational(-576)));
    for (const auto& f : forms) {
        // Hecke relations: multiplicativity and the p^2 recursion
        CHECK(f.f.c[6] == f.f.c[2] * f.f.c[3]);
        CHECK(f.f.c[4] == f.f.c[2] * f.f.c[2] - Rational(int_pow(Int(2), 23)) * QuadraticNumber(Rational(1)));
        CHECK(f.f.c[9] == f.f.c[3] * f.f.c[3] - Rational(int_pow(Int(3), 23)) * QuadraticNumber(Rational(1)));
        for (long m : {2L, 3L, 5L, 6L}) {
            auto t = hecke_operator(f.f, m);
            for (long n = 1; n < t.prec; ++n) CHECK(t.c[n] == f.f.c[m] * f.f.c[n]);
        }
    }
}

TEST_CASE("congruence ideal") {
    CHECK(congruence_ideal(12).empty());
    CHECK(congruence_ideal(16).empty());
    auto ideal = congruence_ideal(24);
    auto p2 = primes_above(144169, 2);
    auto p3 = primes_above(144169, 3);
    auto pd = primes_above(144169, 144169);
    REQUIRE(ideal.size() == 5);
    CHECK(ideal[p2[0]] == 3);
    CHECK(ideal[p2[1]] == 3);
    CHECK(ideal[p3[0]] == 1);
    CHECK(ideal[p3[1]] == 1);
    CHECK(ideal[pd[0]] == 1);
}

TEST_CASE("eisenstein series from a pair of characters") {
    auto triv = DirichletCharacter::principal(1);
    for (long w : {4L, 6L, 12L}) {
        auto g = eisenstein_two_characters(triv, triv, w, 10);
        auto e = eisenstein_series(w, 10);
        for (long n = 0; n < 10; ++n) CHECK(g.c[n].to_rational() == e.c[n]);
    }
    // weight 2 with trivial characters: constant term drops
    auto g2 = eisenstein_two_characters(triv, triv, 2, 8);
    CHECK(g2.c[0].is_zero());
    CHECK(g2.c[6].to_rational() == 12);  // sigma_1(6)
    // nontrivial chi2
    auto q4 = DirichletCharacter::kronecker(-4);
    auto g3 = eisenstein_two_characters(triv, q4, 3, 8);
    CHECK(g3.c[0].to_rational() == Rational(-1) / 4);
    CHECK(g3.c[1].to_rational() == 1);
    CHECK(g3.c[2].to_rational() == 1);
    CHECK(g3.c[5].to_rational() == 26);
    // nontrivial chi1 kills the constant term
    auto g4 = eisenstein_two_characters(q4, triv, 3, 8);
    CHECK(g4.c[0].is_zero());
    CHECK(g4.c[2].to_rational() == 4);  // chi(2) + chi(1) 4 = 4
    // coefficients are multiplicative across coprime indices
    auto c5 = DirichletCharacter::from_label("5:1");
    auto g5 = eisenstein_two_characters(c5, q4, 4, 15);
    long M = g5.c[1].modulus;
    CHECK(g5.c[6] == embed(g5.c[2], M) * embed(g5.c[3], M));
    CHECK(g5.c[10] == embed(g5.c[2], M) * embed(g5.c[5], M));
    CHECK(g5.c[14] == embed(g5.c[2], M) * embed(g5.c[7], M));
    // parity and primitivity guards
    CHECK_THROWS_AS(eisenstein_two_characters(triv, q4, 4, 6), PreconditionError);
    CHECK_THROWS_AS(
        eisenstein_two_characters(DirichletCharacter::principal(4), triv, 4, 6),
        PreconditionError);
}
