#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "denomlab/dirichlet.hpp"
#include "denomlab/primes.hpp"

using namespace dlab;

namespace {
CyclotomicNumber rat(long n, long modulus = 1) {
    return embed(CyclotomicNumber(Rational(n)), modulus);
}
}  // namespace

TEST_CASE("character groups have the right size and labels round trip") {
    for (long long n : {1, 2, 3, 4, 5, 7, 8, 9, 12, 16, 21, 40, 60}) {
        auto chars = DirichletCharacter::all_modulo(n);
        CHECK(chars.size() == static_cast<size_t>(euler_phi(n)));
        for (const auto& chi : chars) {
            CHECK(DirichletCharacter::from_label(chi.label()) == chi);
            CHECK(chi.modulus() == n);
        }
        CHECK(chars[0].is_principal());
        CHECK(chars[0].label() == std::to_string(n) + ":0");
    }
    CHECK_THROWS_AS(DirichletCharacter::from_label("12:4"), ParseError);
    CHECK_THROWS_AS(DirichletCharacter::from_label("nope"), ParseError);
}

TEST_CASE("orthogonality") {
    for (long long n : {5, 8, 12, 21}) {
        for (const auto& chi : DirichletCharacter::all_modulo(n)) {
            CyclotomicNumber s = rat(0, chi.order());
            for (long long a = 1; a <= n; ++a) s = s + chi.value(a);
            if (chi.is_principal())
                CHECK(s.to_rational() == euler_phi(n));
            else
                CHECK(s.is_zero());
        }
    }
}

TEST_CASE("character values are multiplicative and respect order") {
    for (long long n : {7, 9, 16, 40}) {
        for (const auto& chi : DirichletCharacter::all_modulo(n)) {
            long long ord = chi.order();
            for (long long a = 1; a < n; ++a) {
                auto ea = chi.value_exponent(a);
                if (!ea) continue;
                for (long long b = a; b < n; ++b) {
                    auto eb = chi.value_exponent(b);
                    if (!eb) continue;
                    CHECK(*chi.value_exponent(a * b % n) == (*ea + *eb) % ord);
                }
            }
            // order is exact
            bool hit = false;
            for (long long a = 1; a < n && !hit; ++a) {
                auto e = chi.value_exponent(a);
                if (e && gcd_ll(*e, ord) == 1) hit = true;
            }
            if (ord > 1) CHECK(hit);
        }
    }
}

TEST_CASE("specific characters used by the pipeline") {
    auto q5 = DirichletCharacter::from_label("5:2");
    CHECK(q5.order() == 2);
    CHECK(q5.conductor() == 5);
    CHECK(q5.is_even());
    CHECK(q5.value_int(2) == -1);
    CHECK(q5.value_int(4) == 1);
    CHECK(q5 == DirichletCharacter::kronecker(5));

    for (const char* lbl : {"7:2", "7:4"}) {
        auto c = DirichletCharacter::from_label(lbl);
        CHECK(c.order() == 3);
        CHECK(c.conductor() == 7);
        CHECK(c.is_even());
    }
    CHECK(DirichletCharacter::from_label("7:2").conjugate() ==
          DirichletCharacter::from_label("7:4"));

    auto q8 = DirichletCharacter::from_label("8:1");
    CHECK(q8.order() == 2);
    CHECK(q8.conductor() == 8);
    CHECK(q8.is_even());
    CHECK(q8 == DirichletCharacter::kronecker(8));
    CHECK(DirichletCharacter::from_label("8:3") == DirichletCharacter::kronecker(-8));
    CHECK(DirichletCharacter::kronecker(-4).parity() == -1);
    CHECK(DirichletCharacter::kronecker(-3).parity() == -1);
    CHECK_THROWS_AS(DirichletCharacter::kronecker(20), PreconditionError);
}

TEST_CASE("kronecker characters match the symbol everywhere") {
    for (long long d : {-8LL, -7LL, -4LL, -3LL, 5LL, 8LL, 12LL, 13LL, 17LL, 21LL, -24LL}) {
        auto chi = DirichletCharacter::kronecker(d);
        long long n = chi.modulus();
        CHECK(n == (d < 0 ? -d : d));
        CHECK(chi.conductor() == n);
        CHECK(chi.parity() == (d < 0 ? -1 : 1));
        for (long long a = 1; a <= 3 * n; ++a)
            CHECK(chi.value_int(a) == kronecker_symbol(Int(d), Int(a)));
    }
}

TEST_CASE("conductor and primitive part") {
    // character mod 12 induced from the quadratic character mod 3
    auto q3 = DirichletCharacter::from_label("3:1");
    auto ind = q3.induced_modulo(12);
    CHECK(ind.modulus() == 12);
    CHECK(ind.conductor() == 3);
    CHECK(ind.primitive_part() == q3);
    for (long long a = 1; a < 12; ++a) {
        if (gcd_ll(a, 12) != 1) continue;
        CHECK(ind.value_int(a) == q3.value_int(a));
    }
    CHECK(DirichletCharacter::principal(12).conductor() == 1);
    CHECK(DirichletCharacter::principal(12).primitive_part() ==
          DirichletCharacter::principal(1));
    CHECK_THROWS_AS(q3.induced_modulo(8), PreconditionError);

    // all characters: primitive part has the stated conductor and matches on units
    for (long long n : {8, 9, 16, 24, 45}) {
        for (const auto& chi : DirichletCharacter::all_modulo(n)) {
            auto prim = chi.primitive_part();
            CHECK(prim.modulus() == chi.conductor());
            CHECK(prim.conductor() == chi.conductor());
            CHECK(prim.order() == chi.order());
            for (long long a = 1; a < n; ++a) {
                if (gcd_ll(a, n) != 1) continue;
                CHECK(*prim.value_exponent(a) == *chi.value_exponent(a));
            }
        }
    }
}

TEST_CASE("products") {
    auto q3 = DirichletCharacter::from_label("3:1");
    auto q4 = DirichletCharacter::kronecker(-4);
    auto prod = q3 * q4;
    CHECK(prod.modulus() == 12);
    CHECK(prod == DirichletCharacter::kronecker(12).induced_modulo(12));
    CHECK(prod.conductor() == 12);

    auto c7 = DirichletCharacter::from_label("7:2");
    CHECK(c7 * c7 == c7.conjugate());
    CHECK((c7 * c7.conjugate()).is_principal());
    CHECK((c7 * c7 * c7).is_principal());

    // chi * conj(chi) is principal at the lcm modulus
    for (long long n : {5, 8, 16}) {
        for (const auto& chi : DirichletCharacter::all_modulo(n)) {
            CHECK((chi * chi.conjugate()).is_principal());
            CHECK((chi * DirichletCharacter::principal(3)).modulus() == lcm_ll(n, 3));
        }
    }
}

TEST_CASE("gauss sums") {
    // tau(chi)^2 = chi(-1) |d| for quadratic chi of fundamental discriminant d
    for (long long d : {-8LL, -4LL, -3LL, 5LL, 8LL, 13LL}) {
        auto chi = DirichletCharacter::kronecker(d);
        auto t = gauss_sum(chi);
        CHECK((t * t) == rat(d, t.modulus));
    }
    // |tau(chi)|^2 = N for primitive chi; sigma_{-1} is complex conjugation
    for (long long n : {5, 7, 8, 9, 16}) {
        for (const auto& chi : DirichletCharacter::all_modulo(n)) {
            if (!chi.is_primitive()) continue;
            auto t = gauss_sum(chi);
            long m = t.modulus;
            CHECK(t * automorphism(t, m - 1) == rat(n, m));
        }
    }
    // tau of the trivial character mod 1 is 1
    CHECK(gauss_sum(DirichletCharacter::principal(1)).to_rational() == 1);
    // imprimitive example collapses
    CHECK(gauss_sum(DirichletCharacter::principal(4)).is_zero());
    // factorization over coprime conductors:
    // tau(chi1 chi2) = chi1(N2) chi2(N1) tau(chi1) tau(chi2)
    auto c5 = DirichletCharacter::from_label("5:1");
    auto c4 = DirichletCharacter::kronecker(-4);
    auto lhs = gauss_sum(c5 * c4);
    long M = lcm_ll(lhs.modulus, 20);
    auto rhs = embed(c5.value(4), M) * embed(c4.value(5), M) *
               embed(gauss_sum(c5), M) * embed(gauss_sum(c4), M);
    CHECK(embed(lhs, M) == rhs);
    // numeric check: tau(chi_5) = sqrt(5)
    auto t5 = to_complex(gauss_sum(DirichletCharacter::kronecker(5)));
    CHECK(std::abs(t5 - std::complex<double>(std::sqrt(5.0), 0)) < 1e-12);
    auto tm4 = to_complex(gauss_sum(DirichletCharacter::kronecker(-4)));
    CHECK(std::abs(tm4 - std::complex<double>(0, 2)) < 1e-12);
}

TEST_CASE("fundamental discriminants") {
    CHECK(fundamental_discriminant(5) == std::make_pair(5LL, 1LL));
    CHECK(fundamental_discriminant(45) == std::make_pair(5LL, 3LL));
    CHECK(fundamental_discriminant(12) == std::make_pair(12LL, 1LL));
    CHECK(fundamental_discriminant(48) == std::make_pair(12LL, 2LL));
    CHECK(fundamental_discriminant(8) == std::make_pair(8LL, 1LL));
    CHECK(fundamental_discriminant(-4) == std::make_pair(-4LL, 1LL));
    CHECK(fundamental_discriminant(-16) == std::make_pair(-4LL, 2LL));
    CHECK(fundamental_discriminant(-3) == std::make_pair(-3LL, 1LL));
    CHECK(fundamental_discriminant(-27) == std::make_pair(-3LL, 3LL));
    CHECK(fundamental_discriminant(1) == std::make_pair(1LL, 1LL));
    CHECK(fundamental_discriminant(4) == std::make_pair(1LL, 2LL));
    CHECK(fundamental_discriminant(-400) == std::make_pair(-4LL, 10LL));
    CHECK_THROWS_AS(fundamental_discriminant(2), PreconditionError);
    CHECK_THROWS_AS(fundamental_discriminant(-5), PreconditionError);
    CHECK_THROWS_AS(fundamental_discriminant(0), PreconditionError);
}
