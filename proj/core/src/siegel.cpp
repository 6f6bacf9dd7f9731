#include "denomlab/siegel.hpp"

#include "denomlab/bernoulli.hpp"
#include "denomlab/primes.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace dlab {

namespace {

constexpr long long kOpsBudget = 600000000LL;
constexpr long long kRankOneBudget = 6000000LL;

long long pow_ll(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

bool pow_within(long long b, int e, long long bound, long long& out) {
    __int128 r = 1;
    for (int i = 0; i < e; ++i) {
        r *= b;
        if (r > bound) return false;
    }
    out = static_cast<long long>(r);
    return true;
}

long long mod_pos(long long x, long long m) {
    long long r = x % m;
    return r < 0 ? r + m : r;
}

// min(ord_p(x), cap) for x != 0
int vord_ll(long long x, long long p, int cap) {
    if (x < 0) x = -x;
    int v = 0;
    while (v < cap && x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

long long ext_gcd(long long a, long long b, long long& x, long long& y) {
    if (b == 0) {
        x = a >= 0 ? 1 : -1;
        y = 0;
        return a >= 0 ? a : -a;
    }
    long long x1, y1;
    long long g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

long long inv_mod(long long a, long long m) {
    long long x, y;
    if (ext_gcd(mod_pos(a, m), m, x, y) != 1)
        throw PreconditionError("inverse of a non-unit");
    return mod_pos(x, m);
}

void require_prime(long long p) {
    if (p < 2 || !is_probable_prime(Int(p)))
        throw PreconditionError("prime modulus required");
}

// sum of e(u q / p^e) over units u mod p^e; q may be given mod p^{e+1}
long long unit_character_sum(long long p, int e, long long q) {
    if (e == 0) return 1;
    int w = (q == 0) ? e : vord_ll(q, p, e);
    long long pe1 = pow_ll(p, e - 1);
    if (w >= e) return pe1 * (p - 1);
    if (w == e - 1) return -pe1;
    return 0;
}

// value of sum counts[T] zeta^T for zeta of order p^level; monomial vectors
// representing zero are exactly those constant on fibers of T mod p^{level-1},
// so rationality reduces to integer comparisons
Int bucket_sum(long long p, const std::vector<long long>& counts) {
    const long long q = static_cast<long long>(counts.size());
    if (q == 1) return Int(counts[0]);
    const long long q1 = q / p;
    for (long long r = 1; r < q1; ++r)
        for (long long T = r + q1; T < q; T += q1)
            if (counts[T] != counts[r])
                throw std::logic_error("local series class sum is irrational");
    for (long long T = 2 * q1; T < q; T += q1)
        if (counts[T] != counts[q1])
            throw std::logic_error("local series class sum is irrational");
    return Int(counts[0] - counts[q1]);
}

[[noreturn]] void throw_budget(long long p, int L) {
    throw PreconditionError("local series at p=" + std::to_string(p) +
                            " needs classes to denominator exponent " + std::to_string(L) +
                            ", past the enumeration budget");
}

// classes r/p^j, r a unit mod p^j, for j <= L
std::vector<Int> buckets_size1(const HalfIntegralMatrix& B, long long p, int L) {
    long long PL;
    if (!pow_within(p, L, kRankOneBudget, PL)) throw_budget(p, L);
    std::vector<Int> out(static_cast<size_t>(L) + 1);
    out[0] = 1;
    for (int j = 1; j <= L; ++j) {
        const long long pj = pow_ll(p, j);
        std::vector<long long> counts(static_cast<size_t>(pj), 0);
        const long long am = mod_pos(B.a, pj);
        for (long long k = 1; k < pj; ++k)
            if (k % p != 0) ++counts[static_cast<size_t>(am * k % pj)];
        out[static_cast<size_t>(j)] = bucket_sum(p, counts);
    }
    return out;
}

std::vector<Int> buckets_size2(const HalfIntegralMatrix& B, long long p, int L,
                               int full_cap) {
    const int minL0 = std::max(1, L / 2);
    const int L0 = (full_cap <= 0) ? minL0 : std::min(L, std::max(full_cap, minL0));
    long long PL;
    if (!pow_within(p, L, kOpsBudget, PL)) throw_budget(p, L);
    const long long P0 = pow_ll(p, L0);

    __int128 ops = static_cast<__int128>(P0) * P0 * P0;
    for (int e2 = L0 + 1; e2 <= L; ++e2) {
        const int ep = 2 * e2 - L, f = L - e2;
        const long long Pep = pow_ll(p, ep);
        const long long reps = Pep + Pep / p;
        if (f == 0)
            ops += reps;
        else
            ops += static_cast<__int128>(Pep - Pep / p) * reps * pow_ll(p, 3 * f);
    }
    if (ops > kOpsBudget || PL > kRankOneBudget * 8) throw_budget(p, L);

    std::vector<std::vector<long long>> counts(
        static_cast<size_t>(L) + 1, std::vector<long long>(static_cast<size_t>(PL), 0));
    std::vector<long long> direct(static_cast<size_t>(L) + 1, 0);
    const long long a = B.a, c = B.c, t = B.t;

    // every class with denominator exponent at most L0, indexed by its
    // residue matrix; the index splits off the content and the kernel depth
    {
        std::vector<int> vt(static_cast<size_t>(P0));
        vt[0] = L0;
        for (long long x = 1; x < P0; ++x)
            vt[static_cast<size_t>(x)] = vord_ll(x, p, L0);
        const long long shift = PL / P0;
        for (long long m11 = 0; m11 < P0; ++m11)
            for (long long m12 = 0; m12 < P0; ++m12) {
                const long long d12 = m12 * m12;
                const int v1 = std::min(vt[static_cast<size_t>(m11)],
                                        vt[static_cast<size_t>(m12)]);
                const long long tr0 = a * m11 + t * m12;
                for (long long m22 = 0; m22 < P0; ++m22) {
                    const int tc = std::min(v1, vt[static_cast<size_t>(m22)]);
                    const long long det = m11 * m22 - d12;
                    const int de = (det == 0)
                                       ? L0 + tc
                                       : std::min(vord_ll(det, p, 2 * L0), L0 + tc);
                    const int j = 2 * L0 - de;
                    if (j > L) continue;
                    const long long T = mod_pos(tr0 + c * m22, P0);
                    ++counts[static_cast<size_t>(j)][static_cast<size_t>(T * shift)];
                }
            }
    }

    // classes of denominator exponent e2 > L0 whose total index stays within
    // range factor through a unit times a rank-one projector plus a p^{e'}
    // perturbation, uniquely so; enumerate that parametrization instead
    for (int e2 = L0 + 1; e2 <= L; ++e2) {
        const int ep = 2 * e2 - L, f = L - e2;
        const long long Pe2 = pow_ll(p, e2);
        const long long Pep = pow_ll(p, ep);
        const long long shift = PL / Pe2;
        if (f == 0) {
            // the perturbation is trivial; the unit sum telescopes
            const long long M1 = Pe2 * p;
            for (long long x = 0; x < Pep; ++x) {
                const long long q =
                    mod_pos(static_cast<long long>(
                                (static_cast<__int128>(c) * x % M1 * x + t * x + a) % M1),
                            M1);
                direct[static_cast<size_t>(e2)] += unit_character_sum(p, e2, q);
            }
            for (long long y = 0; y < Pep / p; ++y) {
                const long long x = p * y;
                const long long q =
                    mod_pos(static_cast<long long>(
                                (static_cast<__int128>(a) * x % M1 * x + t * x + c) % M1),
                            M1);
                direct[static_cast<size_t>(e2)] += unit_character_sum(p, e2, q);
            }
            continue;
        }
        const long long Pf = pow_ll(p, f);
        auto scan = [&](long long u, long long v1, long long v2) {
            const long long b11 = static_cast<long long>(
                static_cast<__int128>(u) * v1 % Pe2 * v1 % Pe2);
            const long long b12 = static_cast<long long>(
                static_cast<__int128>(u) * v1 % Pe2 * v2 % Pe2);
            const long long b22 = static_cast<long long>(
                static_cast<__int128>(u) * v2 % Pe2 * v2 % Pe2);
            for (long long w11 = 0; w11 < Pf; ++w11) {
                long long m11 = b11 + Pep * w11;
                if (m11 >= Pe2) m11 -= Pe2;
                for (long long w12 = 0; w12 < Pf; ++w12) {
                    long long m12 = b12 + Pep * w12;
                    if (m12 >= Pe2) m12 -= Pe2;
                    const long long d12 = m12 * m12;
                    const long long tr0 = a * m11 + t * m12;
                    for (long long w22 = 0; w22 < Pf; ++w22) {
                        long long m22 = b22 + Pep * w22;
                        if (m22 >= Pe2) m22 -= Pe2;
                        const long long det = m11 * m22 - d12;
                        const int de =
                            (det == 0) ? e2 : std::min(vord_ll(det, p, e2), e2);
                        if (de < ep)
                            throw std::logic_error(
                                "completion layer index below its floor");
                        const int j = 2 * e2 - de;
                        const long long T = mod_pos(tr0 + c * m22, Pe2);
                        ++counts[static_cast<size_t>(j)][static_cast<size_t>(T * shift)];
                    }
                }
            }
        };
        for (long long u = 1; u < Pep; ++u) {
            if (u % p == 0) continue;
            for (long long x = 0; x < Pep; ++x) scan(u, 1, x);
            for (long long y = 0; y < Pep / p; ++y) scan(u, p * y, 1);
        }
    }

    std::vector<Int> out(static_cast<size_t>(L) + 1);
    for (int j = 0; j <= L; ++j)
        out[static_cast<size_t>(j)] =
            bucket_sum(p, counts[static_cast<size_t>(j)]) + Int(direct[static_cast<size_t>(j)]);
    return out;
}

int expected_deg_F(const HalfIntegralMatrix& B, long long p) {
    if (B.m == 1) return static_cast<int>(ord_p(Int(B.a), p));
    auto [d, f] = form_discriminant(B);
    (void)f;
    return static_cast<int>(ord_p(Int(B.det2()), p) - ord_p(Int(d), p));
}

struct SeriesData {
    std::vector<Int> buckets;
    int L = 0;
    int deg_gamma = 0;
    int deg_F = 0;
};

void validate_local_input(const HalfIntegralMatrix& B, long long p) {
    require_prime(p);
    if (B.m != 1 && B.m != 2)
        throw PreconditionError("local series needs size 1 or 2");
    if (B.rank_of() != B.m)
        throw PreconditionError("local series needs a nondegenerate matrix");
}

SeriesData compute_series_data(const HalfIntegralMatrix& B, long long p) {
    SeriesData D;
    const int ord = static_cast<int>(ord_p(Int(B.det2()), p));
    D.L = ord + 3;
    D.buckets = detail::series_buckets(B, p, D.L, 0);
    D.deg_F = expected_deg_F(B, p);
    D.deg_gamma = (B.m == 1) ? 1 : (xi_p(B, p) != 0 ? 2 : 3);
    if (D.buckets[0] != 1)
        throw std::logic_error("empty class must contribute exactly one");
    for (int j = D.deg_gamma + D.deg_F + 1; j <= D.L; ++j)
        if (D.buckets[static_cast<size_t>(j)] != 0)
            throw std::logic_error("class sums extend past the predicted degree");
    return D;
}

using MatrixKey = std::tuple<int, long long, long long, long long, long long>;

MatrixKey make_key(const HalfIntegralMatrix& B, long long p) {
    return {B.m, B.a, B.c, B.t, p};
}

SeriesData series_data(const HalfIntegralMatrix& B, long long p) {
    static std::map<MatrixKey, SeriesData> cache;
    static std::mutex mtx;
    const MatrixKey key = make_key(B, p);
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    SeriesData D = compute_series_data(B, p);
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(key, std::move(D)).first->second;
}

std::vector<Rational> solve_vandermonde(const std::vector<Rational>& xs,
                                        const std::vector<Rational>& rhs) {
    const size_t n = xs.size();
    std::vector<std::vector<Rational>> A(n, std::vector<Rational>(n + 1));
    for (size_t i = 0; i < n; ++i) {
        Rational pw(1);
        for (size_t j = 0; j < n; ++j) {
            A[i][j] = pw;
            pw *= xs[i];
        }
        A[i][n] = rhs[i];
    }
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && A[piv][col] == 0) ++piv;
        if (piv == n) throw std::logic_error("interpolation nodes degenerate");
        std::swap(A[piv], A[col]);
        const Rational lead = A[col][col];
        for (size_t j = col; j <= n; ++j) A[col][j] /= lead;
        for (size_t i = 0; i < n; ++i) {
            if (i == col || A[i][col] == 0) continue;
            const Rational f = A[i][col];
            for (size_t j = col; j <= n; ++j) A[i][j] -= f * A[col][j];
        }
    }
    std::vector<Rational> out(n);
    for (size_t i = 0; i < n; ++i) out[i] = A[i][n];
    return out;
}

Rational rational_power_of(long long p, long e) {
    if (e >= 0) return Rational(int_pow(Int(p), e));
    return Rational(1) / Rational(int_pow(Int(p), -e));
}

}  // namespace

HalfIntegralMatrix HalfIntegralMatrix::empty() { return {}; }

HalfIntegralMatrix HalfIntegralMatrix::scalar(long long a) {
    HalfIntegralMatrix B;
    B.m = 1;
    B.a = a;
    return B;
}

HalfIntegralMatrix HalfIntegralMatrix::binary(long long a, long long c, long long t) {
    HalfIntegralMatrix B;
    B.m = 2;
    B.a = a;
    B.c = c;
    B.t = t;
    return B;
}

long long HalfIntegralMatrix::det2() const {
    if (m == 0) return 1;
    if (m == 1) return 2 * a;
    return 4 * a * c - t * t;
}

int HalfIntegralMatrix::rank_of() const {
    if (m == 0) return 0;
    if (m == 1) return a != 0 ? 1 : 0;
    if (det2() != 0) return 2;
    return (a != 0 || c != 0 || t != 0) ? 1 : 0;
}

bool HalfIntegralMatrix::is_psd() const {
    if (m == 0) return true;
    if (m == 1) return a >= 0;
    return a >= 0 && c >= 0 && det2() >= 0;
}

bool HalfIntegralMatrix::is_positive_definite() const {
    if (m == 0) return true;
    if (m == 1) return a > 0;
    return a > 0 && det2() > 0;
}

HalfIntegralMatrix HalfIntegralMatrix::transform(long long g11, long long g12,
                                                 long long g21, long long g22) const {
    if (m != 2) throw PreconditionError("transform needs size 2");
    const long long det = g11 * g22 - g12 * g21;
    if (det != 1 && det != -1) throw PreconditionError("transform must be unimodular");
    const long long a2 = a * g11 * g11 + t * g11 * g21 + c * g21 * g21;
    const long long c2 = a * g12 * g12 + t * g12 * g22 + c * g22 * g22;
    const long long t2 =
        2 * a * g11 * g12 + t * (g11 * g22 + g12 * g21) + 2 * c * g21 * g22;
    return binary(a2, c2, t2);
}

std::string HalfIntegralMatrix::to_string() const {
    if (m == 0) return "()";
    if (m == 1) return "(" + std::to_string(a) + ")";
    return "(" + std::to_string(a) + ", " + std::to_string(c) + ", " +
           std::to_string(t) + ")";
}

int chi_p(const Rational& x, long long p) {
    require_prime(p);
    if (x == 0) throw PreconditionError("chi_p: nonzero argument required");
    const long long e = ord_p(x, p);
    if (mod_pos(e, 2) == 1) return 0;
    Int nu = numerator(x), de = denominator(x);
    while (nu % p == 0) nu /= p;
    while (de % p == 0) de /= p;
    const long long md = (p == 2) ? 8 : p;
    long long r = static_cast<long long>(nu % md);
    long long q = static_cast<long long>(de % md);
    r = mod_pos(r, md) * inv_mod(mod_pos(q, md), md) % md;
    if (p == 2) return r == 1 ? 1 : (r == 5 ? -1 : 0);
    return kronecker_symbol(Int(r), Int(p));
}

int xi_p(const HalfIntegralMatrix& B, long long p) {
    if (B.m != 2 || B.det2() == 0)
        throw PreconditionError("xi_p needs a nondegenerate matrix of even size");
    return chi_p(Rational(-B.det2()) / 4, p);
}

std::pair<long long, long long> form_discriminant(const HalfIntegralMatrix& B) {
    if (B.m != 2 || B.det2() == 0)
        throw PreconditionError("form_discriminant needs a nondegenerate size-2 matrix");
    return fundamental_discriminant(-B.det2());
}

Poly gamma_factor(const HalfIntegralMatrix& B, long long p) {
    validate_local_input(B, p);
    const Poly one_minus{Rational(1), Rational(-1)};
    if (B.m == 1) return one_minus;
    const int xi = xi_p(B, p);
    const Rational P(p);
    if (xi == 1) return poly_mul(one_minus, Poly{Rational(1), P});
    if (xi == -1) return poly_mul(one_minus, Poly{Rational(1), -P});
    return poly_mul(one_minus, Poly{Rational(1), Rational(0), -P * P});
}

namespace detail {

std::vector<Int> series_buckets(const HalfIntegralMatrix& B, long long p, int levels,
                                int full_cap) {
    validate_local_input(B, p);
    if (levels < 1) throw PreconditionError("series_buckets: levels must be positive");
    if (B.m == 1) return buckets_size1(B, p, levels);
    return buckets_size2(B, p, levels, full_cap);
}

}  // namespace detail

Rational siegel_series_bruteforce(const HalfIntegralMatrix& B, long long p, long s) {
    validate_local_input(B, p);
    if (s < 2) throw PreconditionError("series argument must be at least 2");
    const SeriesData D = series_data(B, p);
    Rational val(0);
    for (int j = 0; j <= D.L; ++j) {
        if (D.buckets[static_cast<size_t>(j)] == 0) continue;
        val += Rational(D.buckets[static_cast<size_t>(j)]) /
               Rational(int_pow(Int(p), static_cast<long>(j) * s));
    }
    return val;
}

Rational eval_at(const LocalSiegelPolynomial& F, const Rational& x) {
    Rational acc(0);
    for (auto it = F.coeffs.rbegin(); it != F.coeffs.rend(); ++it)
        acc = acc * x + Rational(*it);
    return acc;
}

CyclotomicNumber eval_at(const LocalSiegelPolynomial& F, const CyclotomicNumber& x) {
    CyclotomicNumber acc{Rational(0)};
    for (auto it = F.coeffs.rbegin(); it != F.coeffs.rend(); ++it)
        acc = acc * x + CyclotomicNumber(Rational(*it));
    return acc;
}

LocalSiegelPolynomial local_F(const HalfIntegralMatrix& B, long long p) {
    validate_local_input(B, p);
    static std::map<MatrixKey, std::vector<Int>> cache;
    static std::mutex mtx;
    const MatrixKey key = make_key(B, p);
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return {p, B, it->second};
    }
    const int deg = expected_deg_F(B, p);
    std::vector<Int> coeffs;
    if (B.m == 2 && p > 9 && deg == 0) {
        // the determinant ordinal is carried entirely by the discriminant,
        // forcing the constant polynomial
        coeffs = {Int(1)};
    } else {
        const SeriesData D = series_data(B, p);
        Poly bp(D.buckets.size());
        for (size_t i = 0; i < D.buckets.size(); ++i) bp[i] = Rational(D.buckets[i]);
        poly_trim(bp);
        const Poly g = gamma_factor(B, p);
        auto [q, r] = poly_divmod(bp, g);
        poly_trim(r);
        if (!r.empty())
            throw std::logic_error("series is not divisible by its elementary factor");
        if (poly_degree(q) != deg)
            throw std::logic_error("series factor degree disagrees with bookkeeping");
        std::vector<Rational> xs(static_cast<size_t>(deg) + 1),
            ys(static_cast<size_t>(deg) + 1);
        for (int i = 0; i <= deg; ++i) {
            const long s = i + 2;
            const Rational x = rational_power_of(p, -s);
            xs[static_cast<size_t>(i)] = x;
            ys[static_cast<size_t>(i)] =
                siegel_series_bruteforce(B, p, s) / poly_eval(g, x);
        }
        const std::vector<Rational> fc = solve_vandermonde(xs, ys);
        for (int i = 0; i <= deg; ++i) {
            if (fc[static_cast<size_t>(i)] != q[static_cast<size_t>(i)])
                throw std::logic_error("interpolated and divided factors disagree");
            if (denominator(fc[static_cast<size_t>(i)]) != 1)
                throw std::logic_error("series factor has a fractional coefficient");
            coeffs.push_back(numerator(fc[static_cast<size_t>(i)]));
        }
        if (coeffs.front() != 1)
            throw std::logic_error("series factor must have unit constant term");
    }
    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(key, coeffs);
    return {p, B, coeffs};
}

bool kitaoka_check(const HalfIntegralMatrix& B, long long p) {
    const LocalSiegelPolynomial F = local_F(B, p);
    Int pw(1);
    for (const Int& f : F.coeffs) {
        if (f % pw != 0) return false;
        pw *= p;
    }
    return true;
}

HalfIntegralMatrix nondegenerate_block(const HalfIntegralMatrix& T) {
    const int r = T.rank_of();
    if (r == 0)
        throw PreconditionError("rank-zero matrix has no nondegenerate block");
    if (r == T.m) return T;
    // size 2, rank 1: complete a primitive kernel vector to a basis and read
    // off the remaining diagonal entry; it must equal the entry gcd up to sign
    long long k1, k2;
    if (T.a != 0) {
        long long x, y;
        const long long g = ext_gcd(T.t, -2 * T.a, x, y);
        k1 = T.t / g;
        k2 = -2 * T.a / g;
    } else {
        k1 = 1;
        k2 = 0;
    }
    long long x, y;
    if (ext_gcd(k1, k2, x, y) != 1)
        throw std::logic_error("kernel vector is not primitive");
    const long long w1 = -y, w2 = x;
    const long long d_basis = T.a * w1 * w1 + T.t * w1 * w2 + T.c * w2 * w2;
    long long g = 0;
    for (long long v : {T.a, T.t, T.c}) g = ext_gcd(g, v, x, y);
    const long long sign = (T.a != 0 ? T.a : T.c) > 0 ? 1 : -1;
    if (d_basis != sign * g)
        throw std::logic_error("rank-one reductions disagree");
    return HalfIntegralMatrix::scalar(d_basis);
}

LocalSiegelPolynomial local_F_star(const HalfIntegralMatrix& T, long long p) {
    if (T.rank_of() == T.m) return local_F(T, p);
    return local_F(nondegenerate_block(T), p);
}

Rational fourier_coeff_level1(const HalfIntegralMatrix& B, long l) {
    if (B.m != 2) throw PreconditionError("coefficient index must have size 2");
    if (l < 4 || l % 2 != 0) throw PreconditionError("even weight at least 4 required");
    if (!B.is_psd()) throw PreconditionError("positive semidefinite index required");
    const Rational sign = (l / 2 + 1) % 2 == 0 ? Rational(1) : Rational(-1);
    const int r = B.rank_of();
    if (r == 0)
        return sign * rational_power_of(2, l - 1) * zeta_negative(2 * l - 3) *
               zeta_negative(l - 1);
    if (r == 1) {
        const HalfIntegralMatrix blk = nondegenerate_block(B);
        Rational prod(1);
        for (const auto& [pf, e] : factorize(Int(2 * blk.a))) {
            (void)e;
            const long long p = static_cast<long long>(pf);
            prod *= eval_at(local_F(blk, p), rational_power_of(p, l - 2));
        }
        return sign * rational_power_of(2, l) * prod * zeta_negative(2 * l - 3);
    }
    auto [d, f] = form_discriminant(B);
    (void)f;
    Rational prod(1);
    for (const auto& [pf, e] : factorize(Int(B.det2()))) {
        (void)e;
        const long long p = static_cast<long long>(pf);
        prod *= eval_at(local_F(B, p), rational_power_of(p, l - 3));
    }
    const CyclotomicNumber Lv =
        dirichlet_L_negative(DirichletCharacter::kronecker(d), l - 1);
    return sign * rational_power_of(2, l) * prod * Lv.to_rational();
}

SiegelFourierCoefficient fourier_coeff_twisted(const HalfIntegralMatrix& B, long l,
                                               const DirichletCharacter& phi) {
    if (B.m != 2) throw PreconditionError("coefficient index must have size 2");
    const long long N = phi.modulus();
    if (N <= 1 || !phi.is_primitive())
        throw PreconditionError("primitive character of modulus > 1 required");
    if (l < 2) throw PreconditionError("weight at least 2 required");
    if (phi.parity() != (l % 2 ? -1 : 1))
        throw PreconditionError("character parity must match the weight");
    if (l == 2 && phi.order() == 2)
        throw PreconditionError(
            "weight 2 with a quadratic character falls outside the holomorphic range");
    SiegelFourierCoefficient out;
    out.l = l;
    out.phi = phi;
    out.B = B;
    if (!B.is_positive_definite()) return out;

    auto [d, fB] = form_discriminant(B);
    (void)fB;
    const long long ad = -d;
    const DirichletCharacter chiB = DirichletCharacter::kronecker(d);
    const DirichletCharacter psi0 = (phi * chiB).primitive_part();
    const long long m0 = psi0.modulus();
    const int delta = psi0.is_even() ? 0 : 1;
    if ((l - 1 - delta) % 2 != 0)
        throw std::logic_error("primitive twist parity is inconsistent");

    long long M = 4;
    M = lcm_ll(M, lcm_ll(m0, psi0.order()));
    M = lcm_ll(M, lcm_ll(ad, 2));
    M = lcm_ll(M, lcm_ll(N, phi.order()));
    const long Mb = static_cast<long>(M);
    auto emb = [&](const CyclotomicNumber& z) { return embed(z, Mb); };

    const long esign = (l + (l - 1 - delta) / 2) % 2;
    Rational scalar = esign ? Rational(-1) : Rational(1);
    scalar *= rational_power_of(2, l);
    scalar *= rational_power_of(ad, l - 2);
    scalar /= Rational(int_pow(Int(m0), l - 1));

    CyclotomicNumber acc = emb(CyclotomicNumber(scalar));
    acc = acc * emb(zeta_power(4, 3)) * emb(gauss_sum(chiB));
    if (delta) acc = acc * emb(zeta_power(4, 3));
    acc = acc * emb(gauss_sum(psi0));
    acc = acc * emb(dirichlet_L_negative(psi0.conjugate(), l - 1));
    const DirichletCharacter phibar = phi.conjugate();
    for (const auto& [pf, e] : factorize(Int(B.det2()))) {
        (void)e;
        const long long p = static_cast<long long>(pf);
        const CyclotomicNumber x =
            rational_power_of(p, l - 3) * emb(phibar.value(mod_pos(p, N)));
        acc = acc * eval_at(local_F(B, p), x);
    }
    const CyclotomicNumber one{Rational(1)};
    for (const auto& [pf, e] : factorize(Int(N * ad))) {
        (void)e;
        const long long p = static_cast<long long>(pf);
        acc = acc * (emb(one) - rational_power_of(p, 1 - l) *
                                    emb(psi0.value(mod_pos(p, m0))));
    }
    out.value = make_composite(acc);
    const CyclotomicNumber inv_tau = field_inv(emb(gauss_sum(phi)));
    out.normalized =
        make_composite(inv_tau * emb(zeta_power(4, mod_pos(-l, 4))) * acc);
    return out;
}

IntegralityReport integrality_validators(long l, long long det_bound,
                                         bool include_twisted) {
    if (l < 4 || l % 2 != 0) throw PreconditionError("even weight at least 4 required");
    IntegralityReport rep;
    rep.l = l;
    rep.det_bound = det_bound;
    const Int scale = Int(2 * l - 2) * factorial(2 * l - 1);
    for (const HalfIntegralMatrix& B : corpus_psd(det_bound, det_bound / 2)) {
        const Rational v = Rational(scale) * fourier_coeff_level1(B, l);
        ++rep.checked_level1;
        if (denominator(v) != 1)
            rep.counterexamples.push_back("level 1 " + B.to_string() + " weight " +
                                          std::to_string(l));
    }
    if (include_twisted) {
        for (const char* label : {"5:2", "7:2", "7:4", "8:1"}) {
            const DirichletCharacter phi = DirichletCharacter::from_label(label);
            if (phi.parity() != (l % 2 ? -1 : 1)) continue;
            const long long N = phi.modulus();
            for (const HalfIntegralMatrix& B :
                 corpus_psd(std::min(det_bound, 40LL), 0)) {
                if (!B.is_positive_definite()) continue;
                if (gcd_ll(B.det2(), N) != 1) continue;
                const SiegelFourierCoefficient fc = fourier_coeff_twisted(B, l, phi);
                ++rep.checked_twisted;
                bool ok = fc.normalized.c1.is_zero();
                if (ok) {
                    const CyclotomicNumber scaled =
                        Rational(l - 1) * fc.normalized.c0;
                    try {
                        const CyclotomicNumber dsc =
                            descend(scaled, static_cast<long>(phi.order()));
                        for (const auto& [P, e] : denominator_support(dsc)) {
                            (void)e;
                            if (N % P.p != 0) {
                                ok = false;
                                break;
                            }
                        }
                    } catch (const FieldError&) {
                        ok = false;
                    }
                }
                if (!ok)
                    rep.counterexamples.push_back("twist " + std::string(label) + " " +
                                                  B.to_string() + " weight " +
                                                  std::to_string(l));
            }
        }
    }
    return rep;
}

std::vector<HalfIntegralMatrix> corpus_nondegenerate(long long entry_cap,
                                                     long long det_bound) {
    std::vector<HalfIntegralMatrix> out;
    for (long long a = -entry_cap; a <= entry_cap; ++a)
        for (long long c = -entry_cap; c <= entry_cap; ++c)
            for (long long t = -entry_cap; t <= entry_cap; ++t) {
                const long long d = 4 * a * c - t * t;
                if (d != 0 && d <= det_bound && d >= -det_bound)
                    out.push_back(HalfIntegralMatrix::binary(a, c, t));
            }
    for (long long a = -det_bound / 2; a <= det_bound / 2; ++a)
        if (a != 0) out.push_back(HalfIntegralMatrix::scalar(a));
    return out;
}

std::vector<HalfIntegralMatrix> corpus_psd(long long det_bound, long long rank1_max) {
    std::vector<HalfIntegralMatrix> out;
    out.push_back(HalfIntegralMatrix::binary(0, 0, 0));
    for (long long r = 1; r <= rank1_max; ++r)
        out.push_back(HalfIntegralMatrix::binary(r, 0, 0));
    for (long long a = 1; 3 * a * a <= det_bound; ++a)
        for (long long t = 0; t <= a; ++t)
            for (long long c = a; 4 * a * c - t * t <= det_bound; ++c)
                out.push_back(HalfIntegralMatrix::binary(a, c, t));
    return out;
}

}  // namespace dlab
