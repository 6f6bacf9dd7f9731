#pragma once

#include "denomlab/numbers.hpp"

#include <map>
#include <optional>
#include <vector>

namespace dlab {

inline constexpr long long VAL_INF = 9223372036854775807LL;

int kronecker_symbol(Int a, Int n);
bool is_probable_prime(const Int& n);
// sorted (prime, exponent) pairs, n != 0; sign discarded
std::vector<std::pair<Int, long>> factorize(Int n);
long long ord_p(const Int& n, long long p);       // VAL_INF for n = 0
long long ord_p(const Rational& x, long long p);  // VAL_INF for x = 0
// square root mod an odd prime; nullopt if a is a non-residue
std::optional<Int> sqrt_mod_prime(Int a, const Int& p);

// discriminant of Q(sqrt(d)), d squarefree
long long field_discriminant(long long d);

// prime ideal of Q or of a quadratic field Q(sqrt(d))
struct PrimeIdeal {
    enum class Kind { Rational, Split, Inert, Ramified };
    long long p = 0;
    Kind kind = Kind::Rational;
    long long d = 1;     // 1 for rational primes
    long long root = 0;  // split only: distinguishes the two ideals above p

    long ramification() const { return kind == Kind::Ramified ? 2 : 1; }
    long residue_degree() const { return kind == Kind::Inert ? 2 : 1; }

    friend bool operator==(const PrimeIdeal& a, const PrimeIdeal& b) {
        return a.p == b.p && a.kind == b.kind && a.d == b.d && a.root == b.root;
    }
    friend bool operator<(const PrimeIdeal& a, const PrimeIdeal& b) {
        if (a.p != b.p) return a.p < b.p;
        if (a.d != b.d) return a.d < b.d;
        if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
        return a.root < b.root;
    }
};

std::string to_string(const PrimeIdeal& P);

// all primes above p in Q(sqrt(d)); split ideals ordered by canonical root
std::vector<PrimeIdeal> primes_above(long long d, long long p);

long long valuation(const Rational& x, long long p);
long long valuation(const QuadraticNumber& x, const PrimeIdeal& P);
bool is_integral(const QuadraticNumber& x);  // w.r.t. the maximal order

using PrimeValuationMap = std::map<PrimeIdeal, long long>;

// negative-valuation primes with their (negative) exponents
PrimeValuationMap denominator_support(const Rational& x);
PrimeValuationMap denominator_support(const QuadraticNumber& x);
// rational primes dividing coefficient denominators in the power basis
PrimeValuationMap denominator_support(const CyclotomicNumber& x);
PrimeValuationMap denominator_support(const CompositeNumber& x);

}  // namespace dlab
