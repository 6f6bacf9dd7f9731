#include "denomlab/numbers.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace dlab {

Int int_pow(const Int& base, long exp) {
    Int r = 1, b = base;
    for (long e = exp; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        if (e > 1) b *= b;
    }
    return r;
}

Rational rational_pow(const Rational& base, long exp) {
    if (exp < 0) {
        if (base == 0) throw FieldError("rational_pow: 0 to negative power");
        return rational_pow(Rational(1) / base, -exp);
    }
    Rational r = 1, b = base;
    for (long e = exp; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        if (e > 1) b *= b;
    }
    return r;
}

Int factorial(long n) {
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }
long long lcm_ll(long long a, long long b) { return std::lcm(a, b); }

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

long poly_degree(const Poly& p) {
    for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    poly_trim(r);
    return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    poly_trim(r);
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    poly_trim(r);
    return r;
}

Poly poly_scale(const Poly& a, const Rational& s) {
    Poly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    poly_trim(r);
    return r;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    long db = poly_degree(b);
    if (db < 0) throw FieldError("poly_divmod: division by zero polynomial");
    Poly rem = a;
    poly_trim(rem);
    long da = poly_degree(rem);
    if (da < db) return {{}, rem};
    Poly quot(da - db + 1);
    Rational lead = b[db];
    for (long i = da; i >= db; --i) {
        if (rem.size() <= static_cast<size_t>(i) || rem[i] == 0) continue;
        Rational q = rem[i] / lead;
        quot[i - db] = q;
        for (long j = 0; j <= db; ++j) rem[i - db + j] -= q * b[j];
    }
    poly_trim(quot);
    poly_trim(rem);
    return {quot, rem};
}

Rational poly_eval(const Poly& p, const Rational& x) {
    Rational r = 0;
    for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i) r = r * x + p[i];
    return r;
}

Poly poly_gcdext(const Poly& a, const Poly& b, Poly& u, Poly& v) {
    Poly r0 = a, r1 = b;
    poly_trim(r0);
    poly_trim(r1);
    Poly u0{Rational(1)}, v0{}, u1{}, v1{Rational(1)};
    while (poly_degree(r1) >= 0) {
        auto [q, r] = poly_divmod(r0, r1);
        Poly u2 = poly_sub(u0, poly_mul(q, u1));
        Poly v2 = poly_sub(v0, poly_mul(q, v1));
        r0 = r1;
        r1 = r;
        u0 = u1;
        u1 = u2;
        v0 = v1;
        v1 = v2;
    }
    long d = poly_degree(r0);
    if (d >= 0 && r0[d] != 1) {
        Rational inv = Rational(1) / r0[d];
        r0 = poly_scale(r0, inv);
        u0 = poly_scale(u0, inv);
        v0 = poly_scale(v0, inv);
    }
    u = u0;
    v = v0;
    return r0;
}

long euler_phi(long n) {
    long r = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            r -= r / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) r -= r / m;
    return r;
}

long multiplicative_order(long a, long n) {
    a %= n;
    if (a < 0) a += n;
    if (std::gcd(a, n) != 1) throw PreconditionError("multiplicative_order: not a unit");
    long r = 1;
    long x = a;
    while (x != 1 % n) {
        x = static_cast<long>((static_cast<long long>(x) * a) % n);
        ++r;
    }
    return std::max(r, 1L);
}

namespace {

std::mutex cyc_mutex;
std::map<long, Poly>& cyclotomic_cache() {
    static std::map<long, Poly> cache;
    return cache;
}

const Poly& cyclotomic_polynomial_locked(long n) {
    auto& cache = cyclotomic_cache();
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // x^n - 1 divided by all Phi_d, d | n, d < n
    Poly num(n + 1);
    num[0] = -1;
    num[n] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const Poly& pd = cyclotomic_polynomial_locked(d);
        auto [q, r] = poly_divmod(num, pd);
        if (poly_degree(r) >= 0)
            throw FieldError("cyclotomic_polynomial: inexact division");
        num = q;
    }
    return cache.emplace(n, std::move(num)).first->second;
}

// rows[e] = coefficients of x^e mod Phi_n in the power basis, e in [0, n)
using ReductionTable = std::vector<std::vector<Rational>>;

std::shared_ptr<const ReductionTable> reduction_table(long n) {
    static std::map<long, std::shared_ptr<const ReductionTable>> cache;
    static std::mutex m;
    {
        std::lock_guard<std::mutex> lock(m);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    const Poly phi_poly = cyclotomic_polynomial(n);
    long phi = poly_degree(phi_poly);
    auto table = std::make_shared<ReductionTable>();
    table->resize(n);
    for (long e = 0; e < n; ++e) {
        auto& row = (*table)[e];
        row.assign(phi, Rational(0));
        if (e < phi) {
            row[e] = 1;
        } else {
            // x^e = x * x^{e-1}
            const auto& prev = (*table)[e - 1];
            std::vector<Rational> shifted(phi + 1);
            for (long i = 0; i < phi; ++i) shifted[i + 1] = prev[i];
            // eliminate x^phi using Phi_n (monic)
            if (shifted[phi] != 0) {
                Rational t = shifted[phi];
                for (long i = 0; i < phi; ++i) shifted[i] -= t * phi_poly[i];
            }
            for (long i = 0; i < phi; ++i) row[i] = shifted[i];
        }
    }
    std::lock_guard<std::mutex> lock(m);
    return cache.emplace(n, table).first->second;
}

}  // namespace

const Poly& cyclotomic_polynomial(long n) {
    if (n < 1) throw PreconditionError("cyclotomic_polynomial: n must be positive");
    std::lock_guard<std::mutex> lock(cyc_mutex);
    return cyclotomic_polynomial_locked(n);
}

CyclotomicNumber::CyclotomicNumber(long modulus_, std::vector<Rational> coeffs)
    : modulus(modulus_), c(std::move(coeffs)) {
    if (modulus < 1) throw PreconditionError("CyclotomicNumber: modulus must be positive");
    c.resize(euler_phi(modulus));
}

bool CyclotomicNumber::is_zero() const {
    for (const auto& x : c)
        if (x != 0) return false;
    return true;
}

bool CyclotomicNumber::is_rational() const {
    for (size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) return false;
    return true;
}

Rational CyclotomicNumber::to_rational() const {
    if (!is_rational()) throw FieldError("to_rational: element is not rational");
    return c[0];
}

CyclotomicNumber zeta_power(long n, long k) {
    k %= n;
    if (k < 0) k += n;
    auto table = reduction_table(n);
    CyclotomicNumber r;
    r.modulus = n;
    r.c = (*table)[k];
    return r;
}

CyclotomicNumber cyclotomic_from_monomials(
    long n, const std::vector<std::pair<long, Rational>>& terms) {
    auto table = reduction_table(n);
    long phi = static_cast<long>((*table)[0].size());
    CyclotomicNumber r;
    r.modulus = n;
    r.c.assign(phi, Rational(0));
    for (const auto& [e0, coeff] : terms) {
        if (coeff == 0) continue;
        long e = e0 % n;
        if (e < 0) e += n;
        const auto& row = (*table)[e];
        for (long i = 0; i < phi; ++i)
            if (row[i] != 0) r.c[i] += coeff * row[i];
    }
    return r;
}

namespace {

std::pair<CyclotomicNumber, CyclotomicNumber> align(const CyclotomicNumber& a,
                                                    const CyclotomicNumber& b) {
    if (a.modulus == b.modulus) return {a, b};
    if (a.modulus == 1) {
        CyclotomicNumber a2;
        a2.modulus = b.modulus;
        a2.c.assign(b.c.size(), Rational(0));
        a2.c[0] = a.c[0];
        return {a2, b};
    }
    if (b.modulus == 1) {
        auto [y, x] = align(b, a);
        return {x, y};
    }
    throw FieldError("cyclotomic arithmetic: incompatible moduli " +
                     std::to_string(a.modulus) + " and " + std::to_string(b.modulus));
}

}  // namespace

CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    auto [x, y] = align(a, b);
    for (size_t i = 0; i < x.c.size(); ++i) x.c[i] += y.c[i];
    return x;
}

CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    auto [x, y] = align(a, b);
    for (size_t i = 0; i < x.c.size(); ++i) x.c[i] -= y.c[i];
    return x;
}

CyclotomicNumber operator-(const CyclotomicNumber& a) {
    CyclotomicNumber r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    auto [x, y] = align(a, b);
    long n = x.modulus;
    long phi = static_cast<long>(x.c.size());
    if (n == 1) {
        CyclotomicNumber r;
        r.c[0] = x.c[0] * y.c[0];
        return r;
    }
    std::vector<Rational> prod(2 * phi - 1);
    for (long i = 0; i < phi; ++i) {
        if (x.c[i] == 0) continue;
        for (long j = 0; j < phi; ++j) {
            if (y.c[j] == 0) continue;
            prod[i + j] += x.c[i] * y.c[j];
        }
    }
    auto table = reduction_table(n);
    CyclotomicNumber r;
    r.modulus = n;
    r.c.assign(phi, Rational(0));
    for (long e = 0; e < static_cast<long>(prod.size()); ++e) {
        if (prod[e] == 0) continue;
        if (e < phi) {
            r.c[e] += prod[e];
        } else {
            const auto& row = (*table)[e % n];
            for (long i = 0; i < phi; ++i)
                if (row[i] != 0) r.c[i] += prod[e] * row[i];
        }
    }
    return r;
}

CyclotomicNumber operator*(const Rational& s, const CyclotomicNumber& a) {
    CyclotomicNumber r = a;
    for (auto& x : r.c) x *= s;
    return r;
}

CyclotomicNumber field_inv(const CyclotomicNumber& a) {
    if (a.is_zero()) throw FieldError("field_inv: division by zero");
    if (a.modulus == 1 || a.is_rational()) {
        CyclotomicNumber r;
        r.modulus = a.modulus;
        r.c.assign(a.c.size(), Rational(0));
        r.c[0] = Rational(1) / a.c[0];
        return r;
    }
    Poly ap(a.c.begin(), a.c.end());
    poly_trim(ap);
    Poly u, v;
    Poly g = poly_gcdext(ap, cyclotomic_polynomial(a.modulus), u, v);
    if (poly_degree(g) != 0)
        throw FieldError("field_inv: nonunit in cyclotomic field");
    u = poly_scale(u, Rational(1) / g[0]);
    std::vector<std::pair<long, Rational>> terms;
    for (size_t i = 0; i < u.size(); ++i) terms.emplace_back(static_cast<long>(i), u[i]);
    return cyclotomic_from_monomials(a.modulus, terms);
}

CyclotomicNumber automorphism(const CyclotomicNumber& a, long t) {
    long n = a.modulus;
    long tm = t % n;
    if (tm < 0) tm += n;
    if (std::gcd(tm, n) != 1)
        throw PreconditionError("automorphism: exponent not coprime to modulus");
    std::vector<std::pair<long, Rational>> terms;
    for (size_t i = 0; i < a.c.size(); ++i)
        if (a.c[i] != 0) terms.emplace_back(static_cast<long>((i * tm) % n), a.c[i]);
    return cyclotomic_from_monomials(n, terms);
}

CyclotomicNumber embed(const CyclotomicNumber& a, long m) {
    if (m % a.modulus != 0)
        throw FieldError("embed: target modulus not a multiple of source");
    if (m == a.modulus) return a;
    long step = m / a.modulus;
    std::vector<std::pair<long, Rational>> terms;
    for (size_t i = 0; i < a.c.size(); ++i)
        if (a.c[i] != 0) terms.emplace_back(static_cast<long>(i) * step, a.c[i]);
    return cyclotomic_from_monomials(m, terms);
}

CyclotomicNumber descend(const CyclotomicNumber& a, long l) {
    if (a.modulus % l != 0)
        throw FieldError("descend: target modulus does not divide source");
    if (l == a.modulus) return a;
    long phi_m = static_cast<long>(a.c.size());
    long phi_l = euler_phi(l);
    // columns: embeddings of zeta_l^j, augmented with a
    std::vector<std::vector<Rational>> mat(phi_m, std::vector<Rational>(phi_l + 1));
    for (long j = 0; j < phi_l; ++j) {
        CyclotomicNumber col = embed(zeta_power(l, j), a.modulus);
        for (long i = 0; i < phi_m; ++i) mat[i][j] = col.c[i];
    }
    for (long i = 0; i < phi_m; ++i) mat[i][phi_l] = a.c[i];
    std::vector<long> pivot_row(phi_l, -1);
    long row = 0;
    for (long col = 0; col < phi_l && row < phi_m; ++col) {
        long pr = -1;
        for (long i = row; i < phi_m; ++i)
            if (mat[i][col] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(mat[pr], mat[row]);
        Rational inv = Rational(1) / mat[row][col];
        for (long j = col; j <= phi_l; ++j) mat[row][j] *= inv;
        for (long i = 0; i < phi_m; ++i) {
            if (i == row || mat[i][col] == 0) continue;
            Rational f = mat[i][col];
            for (long j = col; j <= phi_l; ++j) mat[i][j] -= f * mat[row][j];
        }
        pivot_row[col] = row;
        ++row;
    }
    for (long i = row; i < phi_m; ++i)
        if (mat[i][phi_l] != 0)
            throw FieldError("descend: element does not lie in requested subfield");
    CyclotomicNumber r;
    r.modulus = l;
    r.c.assign(phi_l, Rational(0));
    for (long j = 0; j < phi_l; ++j)
        if (pivot_row[j] >= 0) r.c[j] = mat[pivot_row[j]][phi_l];
    // pivotless columns would leave a nonzero residual, caught above
    return r;
}

double to_double(const Rational& r) {
    return static_cast<double>(numerator(r)) / static_cast<double>(denominator(r));
}

std::complex<double> to_complex(const CyclotomicNumber& a, long t) {
    std::complex<double> r = 0;
    const double two_pi = 8.0 * std::atan(1.0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        double arg = two_pi * static_cast<double>((t * static_cast<long long>(i)) % a.modulus) /
                     static_cast<double>(a.modulus);
        r += to_double(a.c[i]) * std::complex<double>(std::cos(arg), std::sin(arg));
    }
    return r;
}

QuadraticNumber::QuadraticNumber(long long d_, Rational a_, Rational b_)
    : d(d_), a(std::move(a_)), b(std::move(b_)) {
    if (d == 0) throw PreconditionError("QuadraticNumber: d must be nonzero");
    if (d == 1) {
        a += b;
        b = 0;
    } else if (b == 0) {
        d = 1;
    }
}

Rational QuadraticNumber::to_rational() const {
    if (b != 0) throw FieldError("to_rational: element is not rational");
    return a;
}

namespace {

long long quad_field(const QuadraticNumber& x, const QuadraticNumber& y) {
    if (x.d == y.d) return x.d;
    if (x.d == 1) return y.d;
    if (y.d == 1) return x.d;
    throw FieldError("quadratic arithmetic: incompatible fields sqrt(" +
                     std::to_string(x.d) + ") and sqrt(" + std::to_string(y.d) + ")");
}

}  // namespace

QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
    return QuadraticNumber(quad_field(x, y), x.a + y.a, x.b + y.b);
}

QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) {
    return QuadraticNumber(quad_field(x, y), x.a - y.a, x.b - y.b);
}

QuadraticNumber operator-(const QuadraticNumber& x) {
    return QuadraticNumber(x.d, -x.a, -x.b);
}

QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
    long long d = quad_field(x, y);
    return QuadraticNumber(d, x.a * y.a + Rational(d) * x.b * y.b, x.a * y.b + x.b * y.a);
}

QuadraticNumber operator*(const Rational& s, const QuadraticNumber& x) {
    return QuadraticNumber(x.d, s * x.a, s * x.b);
}

QuadraticNumber field_inv(const QuadraticNumber& x) {
    Rational n = norm(x);
    if (n == 0) throw FieldError("field_inv: division by zero");
    return QuadraticNumber(x.d, x.a / n, -x.b / n);
}

QuadraticNumber conjugate(const QuadraticNumber& x) {
    return QuadraticNumber(x.d, x.a, -x.b);
}

Rational norm(const QuadraticNumber& x) { return x.a * x.a - Rational(x.d) * x.b * x.b; }

Rational trace(const QuadraticNumber& x) { return 2 * x.a; }

double to_double(const QuadraticNumber& x) {
    if (x.d < 0) throw FieldError("to_double: imaginary quadratic element");
    return to_double(x.a) + to_double(x.b) * std::sqrt(static_cast<double>(x.d));
}

CompositeNumber::CompositeNumber(long long d_, CyclotomicNumber c0_, CyclotomicNumber c1_)
    : d(d_), c0(std::move(c0_)), c1(std::move(c1_)) {
    if (d == 0) throw PreconditionError("CompositeNumber: d must be nonzero");
    if (c0.modulus != c1.modulus) {
        if (c0.modulus == 1)
            c0 = embed(c0, c1.modulus);
        else if (c1.modulus == 1)
            c1 = embed(c1, c0.modulus);
        else
            throw FieldError("CompositeNumber: component moduli differ");
    }
    if (d == 1) {
        c0 = c0 + c1;
        c1 = CyclotomicNumber();
        c1 = embed(c1, c0.modulus);
    } else if (c1.is_zero()) {
        d = 1;
    }
}

CompositeNumber make_composite(const CyclotomicNumber& a) {
    CyclotomicNumber zero;
    zero = embed(zero, a.modulus);
    return CompositeNumber(1, a, zero);
}

CompositeNumber make_composite(const QuadraticNumber& x, long modulus) {
    CyclotomicNumber a = embed(CyclotomicNumber(x.a), modulus);
    CyclotomicNumber b = embed(CyclotomicNumber(x.b), modulus);
    return CompositeNumber(x.d, a, b);
}

namespace {

std::pair<CompositeNumber, CompositeNumber> align(const CompositeNumber& x,
                                                  const CompositeNumber& y) {
    CompositeNumber a = x, b = y;
    long m = a.modulus();
    if (m != b.modulus()) {
        if (a.modulus() == 1)
            a = CompositeNumber(a.d, embed(a.c0, b.modulus()), embed(a.c1, b.modulus()));
        else if (b.modulus() == 1)
            b = CompositeNumber(b.d, embed(b.c0, a.modulus()), embed(b.c1, a.modulus()));
        else
            throw FieldError("composite arithmetic: incompatible moduli");
    }
    if (a.d != b.d) {
        if (a.d == 1)
            a.d = b.d;
        else if (b.d == 1)
            b.d = a.d;
        else
            throw FieldError("composite arithmetic: incompatible quadratic parts");
    }
    return {a, b};
}

}  // namespace

CompositeNumber operator+(const CompositeNumber& x, const CompositeNumber& y) {
    auto [a, b] = align(x, y);
    return CompositeNumber(a.d, a.c0 + b.c0, a.c1 + b.c1);
}

CompositeNumber operator-(const CompositeNumber& x, const CompositeNumber& y) {
    auto [a, b] = align(x, y);
    return CompositeNumber(a.d, a.c0 - b.c0, a.c1 - b.c1);
}

CompositeNumber operator-(const CompositeNumber& x) {
    return CompositeNumber(x.d, -x.c0, -x.c1);
}

CompositeNumber operator*(const CompositeNumber& x, const CompositeNumber& y) {
    auto [a, b] = align(x, y);
    Rational dd(a.d);
    return CompositeNumber(a.d, a.c0 * b.c0 + dd * (a.c1 * b.c1),
                           a.c0 * b.c1 + a.c1 * b.c0);
}

CompositeNumber field_inv(const CompositeNumber& x) {
    if (x.is_zero()) throw FieldError("field_inv: division by zero");
    // multiply by the sqrt-conjugate, then invert the cyclotomic norm
    CyclotomicNumber n = x.c0 * x.c0 - Rational(x.d) * (x.c1 * x.c1);
    if (n.is_zero())
        throw FieldError("field_inv: sqrt(d) already lies in the cyclotomic base field");
    CyclotomicNumber ninv = field_inv(n);
    return CompositeNumber(x.d, x.c0 * ninv, -(x.c1 * ninv));
}

CompositeNumber automorphism(const CompositeNumber& x, long t) {
    return CompositeNumber(x.d, automorphism(x.c0, t), automorphism(x.c1, t));
}

CompositeNumber embed(const CompositeNumber& x, long m) {
    return CompositeNumber(x.d, embed(x.c0, m), embed(x.c1, m));
}

CompositeNumber descend(const CompositeNumber& x, long l) {
    return CompositeNumber(x.d, descend(x.c0, l), descend(x.c1, l));
}

QuadraticNumber to_quadratic(const CompositeNumber& x) {
    return QuadraticNumber(x.d, x.c0.to_rational(), x.c1.to_rational());
}

std::complex<double> to_complex(const CompositeNumber& x, long t) {
    std::complex<double> sq = x.d >= 0
        ? std::complex<double>(std::sqrt(static_cast<double>(x.d)), 0)
        : std::complex<double>(0, std::sqrt(static_cast<double>(-x.d)));
    return to_complex(x.c0, t) + sq * to_complex(x.c1, t);
}

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << numerator(r) << '/' << denominator(r);
    return os.str();
}

std::string to_string(const CyclotomicNumber& a) {
    std::ostringstream os;
    os << '(' << a.modulus << ';';
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (i) os << ',';
        os << to_string(a.c[i]);
    }
    os << ')';
    return os.str();
}

std::string to_string(const QuadraticNumber& x) {
    std::ostringstream os;
    os << '(' << x.d << ';' << to_string(x.a) << ';' << to_string(x.b) << ')';
    return os.str();
}

std::string to_string(const CompositeNumber& x) {
    std::ostringstream os;
    os << '(' << x.c0.modulus << ';' << x.d << ';';
    for (size_t i = 0; i < x.c0.c.size(); ++i) {
        if (i) os << ',';
        os << to_string(x.c0.c[i]);
    }
    os << ';';
    for (size_t i = 0; i < x.c1.c.size(); ++i) {
        if (i) os << ',';
        os << to_string(x.c1.c[i]);
    }
    os << ')';
    return os.str();
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    return parts;
}

std::string strip_parens(const std::string& s) {
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw ParseError("expected parenthesized field element: " + s);
    return s.substr(1, s.size() - 2);
}

std::vector<Rational> parse_rational_list(const std::string& s) {
    std::vector<Rational> r;
    if (s.empty()) return r;
    for (const auto& part : split(s, ',')) r.push_back(parse_rational(part));
    return r;
}

}  // namespace

Rational parse_rational(const std::string& s) {
    auto pos = s.find('/');
    try {
        if (pos == std::string::npos) return Rational(Int(s));
        Int num(s.substr(0, pos));
        Int den(s.substr(pos + 1));
        if (den == 0) throw ParseError("zero denominator: " + s);
        return Rational(num) / Rational(den);
    } catch (const std::runtime_error& e) {
        throw ParseError("bad rational '" + s + "': " + e.what());
    }
}

CyclotomicNumber parse_cyclotomic(const std::string& s) {
    auto parts = split(strip_parens(s), ';');
    if (parts.size() != 2) throw ParseError("bad cyclotomic element: " + s);
    long n = std::stol(parts[0]);
    auto coeffs = parse_rational_list(parts[1]);
    if (static_cast<long>(coeffs.size()) != euler_phi(n))
        throw ParseError("cyclotomic coefficient count mismatch: " + s);
    return CyclotomicNumber(n, std::move(coeffs));
}

QuadraticNumber parse_quadratic(const std::string& s) {
    auto parts = split(strip_parens(s), ';');
    if (parts.size() != 3) throw ParseError("bad quadratic element: " + s);
    return QuadraticNumber(std::stoll(parts[0]), parse_rational(parts[1]),
                           parse_rational(parts[2]));
}

CompositeNumber parse_composite(const std::string& s) {
    auto parts = split(strip_parens(s), ';');
    if (parts.size() != 4) throw ParseError("bad composite element: " + s);
    long n = std::stol(parts[0]);
    long long d = std::stoll(parts[1]);
    auto l0 = parse_rational_list(parts[2]);
    auto l1 = parse_rational_list(parts[3]);
    if (static_cast<long>(l0.size()) != euler_phi(n) ||
        static_cast<long>(l1.size()) != euler_phi(n))
        throw ParseError("composite coefficient count mismatch: " + s);
    CyclotomicNumber c0(n, std::move(l0));
    CyclotomicNumber c1(n, std::move(l1));
    if (d == 1 && !c1.is_zero()) throw ParseError("composite with d=1 must have zero sqrt part");
    return CompositeNumber(d, c0, c1);
}

}  // namespace dlab
