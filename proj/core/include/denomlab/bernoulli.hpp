#pragma once

#include "denomlab/dirichlet.hpp"
#include "denomlab/numbers.hpp"

namespace dlab {

// B_0 = 1, B_1 = -1/2, B_2 = 1/6, ...
Rational bernoulli_number(long m);
Poly bernoulli_polynomial(long m);

// B_{m,chi} = N^{m-1} sum_{a=1}^{N} chi(a) B_m(a/N) at chi's stored modulus N;
// for imprimitive chi this removes the Euler factors at primes dividing N
CyclotomicNumber generalized_bernoulli(const DirichletCharacter& chi, long m);

// L(1-m, chi) = -B_{m,chi}/m, m >= 1, again at chi's stored modulus
CyclotomicNumber dirichlet_L_negative(const DirichletCharacter& chi, long m);

// zeta(-n), n >= 0
Rational zeta_negative(long n);

}  // namespace dlab
