#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "denomlab/critical_values.hpp"

using namespace dlab;

namespace {

const DirichletCharacter kTrivial = DirichletCharacter::principal(1);

struct Weight12 {
    std::vector<Eigenform> basis = eigenforms(12, 900);
    EigenFunctionals u = eigen_functionals(basis[0]);
    PeriodNormalization norm = period_normalization(basis[0], u);
};

Weight12& weight12() {
    static Weight12 w;
    return w;
}

Rational odd_part(Rational x) {
    if (x == 0) return x;
    Int n = numerator(x), d = denominator(x);
    while (n % 2 == 0) n /= 2;
    while (d % 2 == 0) d /= 2;
    if (n < 0) n = -n;
    return Rational(n, d);
}

// Gamma(j) (2 pi)^{-j} L(j, chi1) * Gamma(j') (2 pi)^{-j'} L(j', chi2) /
// (sqrt(-1)^{j+j'+1} tau((chi1 chi2)_0)); the period scale and the residual
// factor 4 / <f,f> cancel in ratios
std::complex<double> product_oracle(const Eigenform& f, long l1, long l2,
                                    const DirichletCharacter& chi1,
                                    const DirichletCharacter& chi2) {
    std::complex<double> i(0, 1);
    auto ipow = [&](long e) {
        e = ((e % 4) + 4) % 4;
        std::complex<double> t(1, 0);
        for (long j = 0; j < e; ++j) t *= i;
        return t;
    };
    DirichletCharacter psi0 = (chi1 * chi2).primitive_part();
    return lambda_numeric(f, chi1, l1) * lambda_numeric(f, chi2, l2) /
           (ipow(l1 + l2 + 1) * to_complex(gauss_sum(psi0)));
}

}  // namespace

TEST_CASE("period scale at the reference pair") {
    auto& w = weight12();
    CHECK(w.norm.weight == 12);
    CHECK(w.norm.l1 == 11);
    CHECK(w.norm.l2 == 8);
    CHECK(w.norm.omega == QuadraticNumber(Rational(-36, 3455)));

    auto basis16 = eigenforms(16, 8);
    auto u16 = eigen_functionals(basis16[0]);
    auto norm16 = period_normalization(basis16[0], u16);
    CHECK(norm16.omega == QuadraticNumber(Rational(-1404, 25319)));
}

TEST_CASE("period scale is pair independent up to the documented sign") {
    auto& w = weight12();
    // calibrating against any admissible pair changes omega by (-1)^{l1+1} only
    for (auto [l1, l2] : {std::pair<long, long>{11, 6}, {11, 2}, {10, 5}, {9, 4}}) {
        auto norm = period_normalization(w.basis[0], w.u, l1, l2);
        Rational expected = Rational(36, 3455) * (l1 % 2 == 0 ? 1 : -1);
        CHECK(norm.omega == QuadraticNumber(expected));
    }
}

TEST_CASE("critical value reproduces the calibration coordinate") {
    auto& w = weight12();
    auto v = critical_value(w.u, w.norm, 11, 8, kTrivial, kTrivial);
    auto anchor = anchor_decomposition(12, 11, 8);
    CHECK(to_quadratic(v) == anchor.cusp[0]);
}

TEST_CASE("twisted value and its relative norm") {
    auto& w = weight12();
    auto chi = DirichletCharacter::from_label("5:2");
    auto v = critical_value(w.u, w.norm, 11, 8, chi, kTrivial);
    CHECK(v.modulus() == 2);
    CHECK(relative_norm(v) == QuadraticNumber(Rational(24192, 9765625)));
    // denominator support of the norm stays at the conductor
    auto support = denominator_support(relative_norm(v));
    REQUIRE(support.size() == 1);
    CHECK(support.begin()->first.p == 5);
    CHECK(support.begin()->second == -10);
}

TEST_CASE("values are Galois equivariant in the character") {
    auto& w = weight12();
    auto chi = DirichletCharacter::from_label("5:1");  // order 4
    auto chi3 = DirichletCharacter::from_label("5:3");
    auto v = critical_value(w.u, w.norm, 11, 7, chi, kTrivial);
    CHECK(v.modulus() == 4);
    CHECK(automorphism(v, 3) == critical_value(w.u, w.norm, 11, 7, chi3, kTrivial));
    CHECK(relative_norm(v) == relative_norm(automorphism(v, 3)));
}

TEST_CASE("value matches the analytic product oracle") {
    auto& w = weight12();
    auto chi = DirichletCharacter::from_label("5:2");
    auto v1 = critical_value(w.u, w.norm, 11, 8, chi, kTrivial);
    auto v2 = critical_value(w.u, w.norm, 11, 6, kTrivial, kTrivial);
    std::complex<double> got = to_complex(v1) / to_complex(v2);
    std::complex<double> want = product_oracle(w.basis[0], 11, 8, chi, kTrivial) /
                                product_oracle(w.basis[0], 11, 6, kTrivial, kTrivial);
    CHECK(std::abs(got - want) <= 1e-10 * std::abs(want));
}

TEST_CASE("untwisted ratio of completed values") {
    auto& w = weight12();
    CHECK(untwisted_ratio(w.u, 9, 7) == QuadraticNumber(Rational(14, 9)));
    CHECK(untwisted_ratio(w.u, 9, 9) == QuadraticNumber(Rational(1)));
    CHECK_THROWS_AS(untwisted_ratio(w.u, 9, 8), PreconditionError);

    std::complex<double> want = lambda_numeric(w.basis[0], kTrivial, 11) /
                                lambda_numeric(w.basis[0], kTrivial, 7);
    double got = to_double(untwisted_ratio(w.u, 11, 7));
    CHECK(std::abs(got - want.real()) <= 1e-10 * std::abs(want));
    CHECK(std::abs(want.imag()) <= 1e-10 * std::abs(want));
}

TEST_CASE("admissibility clauses are named") {
    auto chi4 = DirichletCharacter::from_label("4:1");  // odd
    auto chi3 = DirichletCharacter::from_label("3:1");  // odd
    auto chi5 = DirichletCharacter::from_label("5:2");  // even
    CHECK(admissibility_failure(12, 11, 8, kTrivial, kTrivial).empty());
    CHECK(admissibility_failure(12, 7, 6, chi5, kTrivial).empty());
    CHECK(admissibility_failure(12, 10, 7, chi4, chi3).empty());
    CHECK(admissibility_failure(12, 12, 7, kTrivial, kTrivial) ==
          "first exponent exceeds the critical range");
    CHECK(admissibility_failure(12, 9, 9, kTrivial, kTrivial) ==
          "exponents must be strictly decreasing");
    CHECK(admissibility_failure(12, 8, 4, chi4, kTrivial) ==
          "exponent sum too small for the Eisenstein family");
    CHECK(admissibility_failure(12, 11, 7, kTrivial, kTrivial) ==
          "character parities do not match the exponent pair");
    CHECK(admissibility_failure(12, 7, 6, kTrivial, kTrivial) ==
          "adjacent exponents need a nontrivial character");
}

TEST_CASE("assembly guards") {
    auto& w = weight12();
    // parity mismatch between characters and exponents
    CHECK_THROWS_AS(critical_value(w.u, w.norm, 11, 7, kTrivial, kTrivial),
                    PreconditionError);
    CHECK_THROWS_AS(critical_value(w.u, w.norm, 12, 7, kTrivial, kTrivial),
                    PreconditionError);
    // adjacent exponents with trivial characters still evaluate (parity holds)
    auto v = critical_value(w.u, w.norm, 7, 6, kTrivial, kTrivial);
    CHECK(!to_quadratic(v).is_zero());

    auto basis16 = eigenforms(16, 8);
    auto u16 = eigen_functionals(basis16[0]);
    CHECK_THROWS_AS(critical_value(u16, w.norm, 15, 12, kTrivial, kTrivial),
                    PreconditionError);
    CHECK_THROWS_AS(period_normalization(basis16[0], w.u), PreconditionError);
}

TEST_CASE("two-dimensional eigenspace calibrates conjugate scales") {
    auto basis = eigenforms(24, 8);
    REQUIRE(basis.size() == 2);
    auto u0 = eigen_functionals(basis[0]);
    auto u1 = eigen_functionals(basis[1]);
    auto n0 = period_normalization(basis[0], u0);
    auto n1 = period_normalization(basis[1], u1);
    CHECK(n0.omega == conjugate(n1.omega));
    CHECK(!n0.omega.is_zero());

    auto v0 = to_quadratic(critical_value(u0, n0, 23, 20, kTrivial, kTrivial));
    auto v1 = to_quadratic(critical_value(u1, n1, 23, 20, kTrivial, kTrivial));
    CHECK(v0 == conjugate(v1));
    auto anchor = anchor_decomposition(24, 23, 20);
    CHECK(v0 == anchor.cusp[0]);
    CHECK(v1 == anchor.cusp[1]);
}

TEST_CASE("relative norm degenerates to the identity on rational moduli") {
    auto& w = weight12();
    auto v = critical_value(w.u, w.norm, 11, 6, kTrivial, kTrivial);
    CHECK(v.modulus() == 1);
    CHECK(relative_norm(v) == to_quadratic(v));
    CHECK(odd_part(to_quadratic(v).to_rational()) != 0);
}
