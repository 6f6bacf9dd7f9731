#pragma once

#include "denomlab/dirichlet.hpp"
#include "denomlab/numbers.hpp"
#include "denomlab/primes.hpp"

#include <vector>

namespace dlab {

// q-expansion truncated to n < prec
template <class K>
struct Series {
    long weight = 0;
    long prec = 0;
    std::vector<K> c;

    Series() = default;
    Series(long weight_, long prec_) : weight(weight_), prec(prec_), c(prec_) {}

    const K& coeff(long n) const {
        if (n < 0 || n >= prec)
            throw PrecisionError("series coefficient out of range", prec);
        return c[n];
    }
    bool is_zero() const {
        for (const auto& x : c)
            if (!(x == K())) return false;
        return true;
    }
};

template <class K>
Series<K> operator+(const Series<K>& a, const Series<K>& b) {
    if (a.weight != b.weight)
        throw PreconditionError("series sum: weights differ");
    Series<K> r(a.weight, std::min(a.prec, b.prec));
    for (long n = 0; n < r.prec; ++n) r.c[n] = a.c[n] + b.c[n];
    return r;
}

template <class K>
Series<K> operator-(const Series<K>& a, const Series<K>& b) {
    if (a.weight != b.weight)
        throw PreconditionError("series difference: weights differ");
    Series<K> r(a.weight, std::min(a.prec, b.prec));
    for (long n = 0; n < r.prec; ++n) r.c[n] = a.c[n] - b.c[n];
    return r;
}

template <class K, class S>
Series<K> operator*(const S& s, const Series<K>& a) {
    Series<K> r(a.weight, a.prec);
    for (long n = 0; n < a.prec; ++n) r.c[n] = s * a.c[n];
    return r;
}

template <class K>
Series<K> operator*(const Series<K>& a, const Series<K>& b) {
    Series<K> r(a.weight + b.weight, std::min(a.prec, b.prec));
    for (long i = 0; i < r.prec; ++i) {
        if (a.c[i] == K()) continue;
        for (long j = 0; i + j < r.prec; ++j) {
            if (b.c[j] == K()) continue;
            r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
        }
    }
    return r;
}

// (T_m f)(n) = sum over d | gcd(m, n) of d^{k-1} c(mn/d^2)
template <class K>
Series<K> hecke_operator(const Series<K>& f, long m) {
    if (m < 1) throw PreconditionError("hecke operator index must be positive");
    long out = (f.prec - 1) / m + 1;
    if (f.prec < 1 || out < 2)
        throw PrecisionError("series too short for this Hecke operator", f.prec);
    Series<K> r(f.weight, out);
    for (long n = 0; n < out; ++n) {
        K s{};
        long g = static_cast<long>(gcd_ll(m, n));  // gcd(m, 0) = m
        for (long d = 1; d <= g; ++d) {
            if (g % d != 0) continue;
            s = s + Rational(int_pow(Int(d), f.weight - 1)) * f.c[(m / d) * (n / d)];
        }
        r.c[n] = s;
    }
    return r;
}

long dim_modular_forms(long k);

Series<Rational> delta_series(long prec);
// zeta(1-k)/2 + sum_n sigma_{k-1}(n) q^n
Series<Rational> eisenstein_series(long k, long prec);
// basis f_0..f_{d-1} of weight-k forms with coeff(f_i, j) = delta_{ij}, j < d
std::vector<Series<Rational>> miller_basis(long k, long prec);

struct Eigenform {
    long weight = 0;
    long long disc = 1;  // coefficient field Q(sqrt disc)
    Series<QuadraticNumber> f;
};

// all Galois-conjugate normalized eigenforms of the given weight (dim <= 2);
// for quadratic coefficient fields the +sqrt(disc) conjugate comes first
std::vector<Eigenform> eigenforms(long k, long prec);

// ideal of Q(sqrt disc) measuring congruences between the conjugate
// eigenforms: min valuations of the coefficient differences; empty for dim 1
PrimeValuationMap congruence_ideal(long k);

// Eisenstein series attached to an ordered pair of primitive characters:
// c(m) = sum_{d | m} chi1(m/d) chi2(d) d^{weight-1}
Series<CyclotomicNumber> eisenstein_two_characters(const DirichletCharacter& chi1,
                                                   const DirichletCharacter& chi2,
                                                   long weight, long prec);

}  // namespace dlab
