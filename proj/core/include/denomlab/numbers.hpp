#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dlab {

namespace mp = boost::multiprecision;
using Int = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PrecisionError : std::runtime_error {
    long max_valid;
    PrecisionError(const std::string& what, long max_valid_)
        : std::runtime_error(what), max_valid(max_valid_) {}
};

struct ParseError : std::runtime_error {
    long line;
    explicit ParseError(const std::string& what, long line_ = 0)
        : std::runtime_error(what), line(line_) {}
};

Int int_pow(const Int& base, long exp);
Rational rational_pow(const Rational& base, long exp);
Int factorial(long n);
Int binomial(long n, long k);
long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);

// dense univariate polynomials over Q, coefficient of x^i at index i
using Poly = std::vector<Rational>;

void poly_trim(Poly& p);
long poly_degree(const Poly& p);  // -1 for zero
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Rational& s);
// division with remainder; divisor must be nonzero
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Rational poly_eval(const Poly& p, const Rational& x);
// g = gcd(a,b) monic, with u*a + v*b = g
Poly poly_gcdext(const Poly& a, const Poly& b, Poly& u, Poly& v);

long euler_phi(long n);
long multiplicative_order(long a, long n);
const Poly& cyclotomic_polynomial(long n);

// element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^{phi(n)-1};
// equal elements always carry identical coefficient vectors
struct CyclotomicNumber {
    long modulus = 1;
    std::vector<Rational> c;

    CyclotomicNumber() : c(1) {}
    explicit CyclotomicNumber(const Rational& r) : c{r} {}
    CyclotomicNumber(long modulus_, std::vector<Rational> coeffs);

    bool is_zero() const;
    bool is_rational() const;
    Rational to_rational() const;  // throws FieldError if not rational

    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        return a.modulus == b.modulus && a.c == b.c;
    }
};

CyclotomicNumber zeta_power(long n, long k);
CyclotomicNumber cyclotomic_from_monomials(
    long n, const std::vector<std::pair<long, Rational>>& terms);

CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b);
CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b);
CyclotomicNumber operator-(const CyclotomicNumber& a);
CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
CyclotomicNumber operator*(const Rational& s, const CyclotomicNumber& a);
CyclotomicNumber field_inv(const CyclotomicNumber& a);  // throws FieldError on zero

// zeta_n -> zeta_n^t, gcd(t, n) = 1
CyclotomicNumber automorphism(const CyclotomicNumber& a, long t);
// Q(zeta_n) -> Q(zeta_m) via zeta_n = zeta_m^{m/n}; requires n | m
CyclotomicNumber embed(const CyclotomicNumber& a, long m);
// inverse of embed; throws FieldError if a is not in Q(zeta_l)
CyclotomicNumber descend(const CyclotomicNumber& a, long l);

std::complex<double> to_complex(const CyclotomicNumber& a, long t = 1);
double to_double(const Rational& r);

// a + b*sqrt(d), d squarefree; d = 1 degenerates to Q (b forced to 0)
struct QuadraticNumber {
    long long d = 1;
    Rational a, b;

    QuadraticNumber() = default;
    QuadraticNumber(const Rational& r) : a(r) {}
    QuadraticNumber(long long d_, Rational a_, Rational b_);

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }
    Rational to_rational() const;

    friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
        return x.d == y.d && x.a == y.a && x.b == y.b;
    }
};

QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y);
QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y);
QuadraticNumber operator-(const QuadraticNumber& x);
QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y);
QuadraticNumber operator*(const Rational& s, const QuadraticNumber& x);
QuadraticNumber field_inv(const QuadraticNumber& x);
QuadraticNumber conjugate(const QuadraticNumber& x);
Rational norm(const QuadraticNumber& x);
Rational trace(const QuadraticNumber& x);
double to_double(const QuadraticNumber& x);  // sqrt(d) > 0 embedding, d > 0

// c0 + c1*sqrt(d) with c0, c1 in Q(zeta_n); represents Q(zeta_n)(sqrt(d))
struct CompositeNumber {
    long long d = 1;
    CyclotomicNumber c0, c1;

    CompositeNumber() = default;
    explicit CompositeNumber(const Rational& r) : c0(r) {}
    CompositeNumber(long long d_, CyclotomicNumber c0_, CyclotomicNumber c1_);

    long modulus() const { return c0.modulus; }
    bool is_zero() const { return c0.is_zero() && c1.is_zero(); }

    friend bool operator==(const CompositeNumber& x, const CompositeNumber& y) {
        return x.d == y.d && x.c0 == y.c0 && x.c1 == y.c1;
    }
};

CompositeNumber make_composite(const CyclotomicNumber& a);
CompositeNumber make_composite(const QuadraticNumber& x, long modulus);
CompositeNumber operator+(const CompositeNumber& x, const CompositeNumber& y);
CompositeNumber operator-(const CompositeNumber& x, const CompositeNumber& y);
CompositeNumber operator-(const CompositeNumber& x);
CompositeNumber operator*(const CompositeNumber& x, const CompositeNumber& y);
CompositeNumber field_inv(const CompositeNumber& x);
CompositeNumber automorphism(const CompositeNumber& x, long t);  // fixes sqrt(d)
CompositeNumber embed(const CompositeNumber& x, long m);
CompositeNumber descend(const CompositeNumber& x, long l);
// requires the cyclotomic part rational; throws FieldError otherwise
QuadraticNumber to_quadratic(const CompositeNumber& x);
std::complex<double> to_complex(const CompositeNumber& x, long t = 1);

std::string to_string(const Rational& r);
std::string to_string(const CyclotomicNumber& a);
std::string to_string(const QuadraticNumber& x);
std::string to_string(const CompositeNumber& x);
Rational parse_rational(const std::string& s);
CyclotomicNumber parse_cyclotomic(const std::string& s);
QuadraticNumber parse_quadratic(const std::string& s);
CompositeNumber parse_composite(const std::string& s);

}  // namespace dlab
