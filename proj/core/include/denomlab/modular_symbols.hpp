#pragma once

#include <complex>

#include "denomlab/dirichlet.hpp"
#include "denomlab/qexp.hpp"

namespace dlab {

// (P|g)(X) = (cX+d)^{k-2} P((aX+b)/(cX+d)) on the monomial basis 1, X, ..., X^{k-2}
std::vector<Rational> polynomial_action(long k, const std::vector<Rational>& p,
                                        long a, long b, long c, long d);

// coordinates on the base path {0 -> oo} of the symbol {cusp -> oo} (x) p,
// expanded along the continued fraction of the cusp
std::vector<Rational> path_vector(long k, const Rational& cusp, const std::vector<Rational>& p);

// spanning set of the subspace killed by every period functional
std::vector<std::vector<Rational>> relation_rows(long k);

// rows t_n with (T_m u)(X^n) = sum_j t_n[j] u(X^j) for functionals u
std::vector<std::vector<Rational>> hecke_rows(long k, long m);

// period functional pair of a normalized eigenform, split by the X -> -X
// involution; plus is supported on even monomials with plus[k-2] = 1,
// minus on odd monomials with minus[k-3] = 1
struct EigenFunctionals {
    long weight = 0;
    long long disc = 1;
    std::vector<QuadraticNumber> plus;
    std::vector<QuadraticNumber> minus;
};

EigenFunctionals eigen_functionals(const Eigenform& f);

// sum_a conj(chi)(a) < u, {a/N -> oo} (x) (X - a/N)^{j-1} > on the parity
// component selected by chi(-1) (-1)^{j-1}; the opposite component must
// pair to zero, and chi must be primitive
CompositeNumber twisted_coefficient(const EigenFunctionals& u, const DirichletCharacter& chi,
                                    long j);

// Gamma(j) (2 pi)^{-j} L(f, chi, j) for primitive chi, summed with
// incomplete-gamma smoothing at the symmetric cut
std::complex<double> lambda_numeric(const Eigenform& f, const DirichletCharacter& chi, long j);

}  // namespace dlab
