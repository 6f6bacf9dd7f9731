#pragma once

#include "denomlab/modular_symbols.hpp"
#include "denomlab/nearly_holomorphic.hpp"

namespace dlab {

// ratio of completed untwisted values Gamma_C(j1) L(j1) / (Gamma_C(j2) L(j2))
// at critical points of the same parity; lands in the coefficient field
QuadraticNumber untwisted_ratio(const EigenFunctionals& u, long j1, long j2);

// why a tuple (l1, l2, chi1, chi2) is outside the admissible range for the
// denominator scan, or the empty string when it is admissible
std::string admissibility_failure(long weight, long l1, long l2,
                                  const DirichletCharacter& chi1,
                                  const DirichletCharacter& chi2);

// period scale for the completed two-variable product, calibrated so that the
// value at the reference exponent pair equals the cusp coordinate of the
// holomorphic projection built from the Eisenstein family at that pair.
// Values computed against one normalization are exact up to a single sign and
// power of 2 shared by the whole weight.
struct PeriodNormalization {
    long weight = 0;
    long long disc = 1;
    long l1 = 0;
    long l2 = 0;
    QuadraticNumber omega;
};

// calibrate against the pair (l1, l2); pre: l1 + l2 odd, l1 - l2 >= 3,
// l1 <= weight - 1, l2 >= weight - l1 + 1, and u matches f
PeriodNormalization period_normalization(const Eigenform& f, const EigenFunctionals& u,
                                         long l1, long l2);

// calibrate against the default reference pair (weight - 1, weight - 4)
PeriodNormalization period_normalization(const Eigenform& f, const EigenFunctionals& u);

// Gamma_C(l1) Gamma_C(l2) L(l1, chi1) L(l2, chi2) /
//   (sqrt(-1)^{l1+l2+1} tau((chi1 chi2)_0) <f, f>)
// as an element of Q(f, chi1, chi2), up to the normalization's global unit.
// pre: chi1, chi2 primitive, 1 <= l2, l1 <= weight - 1, and the character
// parities match the exponents: chi1 chi2 (-1) = (-1)^{l1 + l2 + 1}
CompositeNumber critical_value(const EigenFunctionals& u, const PeriodNormalization& norm,
                               long l1, long l2, const DirichletCharacter& chi1,
                               const DirichletCharacter& chi2);

// norm from Q(f, zeta_L) down to Q(f): product over the automorphisms fixing
// the quadratic part
QuadraticNumber relative_norm(const CompositeNumber& x);

}  // namespace dlab
