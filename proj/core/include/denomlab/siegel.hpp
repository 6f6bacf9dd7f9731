#pragma once

#include "denomlab/dirichlet.hpp"
#include "denomlab/numbers.hpp"

#include <string>
#include <utility>
#include <vector>

namespace dlab {

// symmetric matrix with integral diagonal and half-integral corners, stored
// as (a, c, t) with t twice the off-diagonal entry; m = 0 is the empty matrix
struct HalfIntegralMatrix {
    int m = 0;
    long long a = 0;
    long long c = 0;
    long long t = 0;

    static HalfIntegralMatrix empty();
    static HalfIntegralMatrix scalar(long long a);
    static HalfIntegralMatrix binary(long long a, long long c, long long t);

    long long det2() const;  // det of twice the matrix; 1 for m = 0
    int rank_of() const;
    bool is_psd() const;
    bool is_positive_definite() const;
    // congruence action by (g11 g12; g21 g22), m = 2 only
    HalfIntegralMatrix transform(long long g11, long long g12, long long g21,
                                 long long g22) const;
    std::string to_string() const;  // "(a, c, t)"

    friend bool operator==(const HalfIntegralMatrix& x, const HalfIntegralMatrix& y) {
        return x.m == y.m && x.a == y.a && x.c == y.c && x.t == y.t;
    }
    friend bool operator<(const HalfIntegralMatrix& x, const HalfIntegralMatrix& y) {
        if (x.m != y.m) return x.m < y.m;
        if (x.a != y.a) return x.a < y.a;
        if (x.c != y.c) return x.c < y.c;
        return x.t < y.t;
    }
};

// +1, -1, 0 as Q_p(sqrt(x)) is Q_p, unramified quadratic, ramified quadratic
int chi_p(const Rational& x, long long p);
// chi_p of (-1)^{m/2} det B; requires even size and nonzero determinant
int xi_p(const HalfIntegralMatrix& B, long long p);
// (d, f) with (-1)^{m/2} det2 = d * f^2, d a fundamental discriminant
std::pair<long long, long long> form_discriminant(const HalfIntegralMatrix& B);

// (1 - X) for size 1; (1 - X)(1 - p^2 X^2)/(1 - p xi X) expanded for size 2
Poly gamma_factor(const HalfIntegralMatrix& B, long long p);

// exact value of the local series sum_R e_p(tr(BR)) nu(R)^{-s} over
// Sym_m(Q_p)/Sym_m(Z_p); nondegenerate B of size 1 or 2, integer s >= 2
Rational siegel_series_bruteforce(const HalfIntegralMatrix& B, long long p, long s);

// the integral polynomial with constant term 1 dividing the local series
struct LocalSiegelPolynomial {
    long long p = 0;
    HalfIntegralMatrix B;
    std::vector<Int> coeffs;

    long degree() const { return static_cast<long>(coeffs.size()) - 1; }
};

Rational eval_at(const LocalSiegelPolynomial& F, const Rational& x);
CyclotomicNumber eval_at(const LocalSiegelPolynomial& F, const CyclotomicNumber& x);

// factor of the local series past the elementary one: recovered from series
// values by exact interpolation, cross-checked by polynomial division
LocalSiegelPolynomial local_F(const HalfIntegralMatrix& B, long long p);

// p^i divides the i-th coefficient of local_F (scaled integrality)
bool kitaoka_check(const HalfIntegralMatrix& B, long long p);

// nondegenerate block of a singular matrix of positive rank; for rank one
// both a kernel-vector completion and the entry gcd produce the block, and
// the two are compared
HalfIntegralMatrix nondegenerate_block(const HalfIntegralMatrix& T);
LocalSiegelPolynomial local_F_star(const HalfIntegralMatrix& T, long long p);

// Fourier coefficient of the weight-l degree-2 Eisenstein series at full
// level, for positive semidefinite B of size 2 and even l >= 4
Rational fourier_coeff_level1(const HalfIntegralMatrix& B, long l);

struct SiegelFourierCoefficient {
    long l = 0;
    DirichletCharacter phi;
    HalfIntegralMatrix B;
    CompositeNumber value;
    CompositeNumber normalized;  // tau(phi)^{-1} i^{-l} value
};

// Fourier coefficient at level N > 1 with primitive nebentypus phi,
// phi(-1) = (-1)^l; zero for B not positive definite
SiegelFourierCoefficient fourier_coeff_twisted(const HalfIntegralMatrix& B, long l,
                                               const DirichletCharacter& phi);

struct IntegralityReport {
    long l = 0;
    long long det_bound = 0;
    long checked_level1 = 0;
    long checked_twisted = 0;
    std::vector<std::string> counterexamples;
};

// (2l-2)(2l-1)! * fourier_coeff_level1 integral over the semidefinite corpus;
// optionally the normalized twisted coefficients land in
// (l-1)^{-1} O_{Q(phi)}[1/N] when det2 is prime to N
IntegralityReport integrality_validators(long l, long long det_bound,
                                         bool include_twisted = false);

// size-2 matrices with entries bounded by entry_cap and 0 < |det2| <= det_bound,
// followed by size-1 matrices with 0 < |det2| <= det_bound
std::vector<HalfIntegralMatrix> corpus_nondegenerate(long long entry_cap,
                                                     long long det_bound);
// zero matrix, diag(r, 0) for r <= rank1_max, and reduced positive definite
// forms 0 <= t <= a <= c with det2 <= det_bound
std::vector<HalfIntegralMatrix> corpus_psd(long long det_bound, long long rank1_max);

namespace detail {
// class sums of the local series by denominator index: entry j collects the
// classes with nu = p^j, for j <= levels.  full_cap limits the level of the
// direct enumeration (0 = automatic); higher levels use the rank-one
// completion layers.  Every entry is checked rational and integral.
std::vector<Int> series_buckets(const HalfIntegralMatrix& B, long long p, int levels,
                                int full_cap = 0);
}  // namespace detail

}  // namespace dlab
