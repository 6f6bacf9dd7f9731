#include "denomlab/primes.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace dlab {

int kronecker_symbol(Int a, Int n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    long v2 = 0;
    while ((n & 1) == 0) {
        n >>= 1;
        ++v2;
    }
    if (v2 % 2 == 1) {
        if ((a & 1) == 0) return 0;
        Int am8 = a % 8;
        if (am8 < 0) am8 += 8;
        if (am8 == 3 || am8 == 5) result = -result;
    } else if (v2 > 0 && (a & 1) == 0) {
        return 0;
    }
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            Int nm8 = n % 8;
            if (nm8 == 3 || nm8 == 5) result = -result;
        }
        std::swap(a, n);
        if ((a % 4) == 3 && (n % 4) == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

namespace {

Int egcd(Int a, Int b, Int& x, Int& y) {
    Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        Int q = a / b;
        Int r = a - q * b;
        a = b;
        b = r;
        Int x2 = x0 - q * x1;
        Int y2 = y0 - q * y1;
        x0 = x1;
        x1 = x2;
        y0 = y1;
        y1 = y2;
    }
    x = x0;
    y = y0;
    return a;
}

Int inv_mod(const Int& a, const Int& m) {
    Int x, y;
    Int g = egcd(((a % m) + m) % m, m, x, y);
    if (g != 1) throw FieldError("inv_mod: not invertible");
    x %= m;
    if (x < 0) x += m;
    return x;
}

bool miller_rabin_witness(const Int& n, const Int& a) {
    if (a % n == 0) return false;
    Int d = n - 1;
    long r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    Int x = powm(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (long i = 1; i < r; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;
}

const std::vector<long>& small_primes() {
    static std::vector<long> primes = [] {
        const long limit = 1000000;
        std::vector<bool> sieve(limit + 1, true);
        std::vector<long> ps;
        for (long i = 2; i <= limit; ++i) {
            if (!sieve[i]) continue;
            ps.push_back(i);
            for (long j = 2 * i; j <= limit; j += i) sieve[j] = false;
        }
        return ps;
    }();
    return primes;
}

Int pollard_brent_round(const Int& n, long c) {
    Int x = 2, y = 2, ys = 2, d = 1, q = 1;
    long r = 1;
    const long m = 128;
    while (d == 1) {
        x = y;
        for (long i = 0; i < r; ++i) y = (y * y + c) % n;
        for (long k = 0; k < r && d == 1; k += m) {
            ys = y;
            long lim = std::min(m, r - k);
            for (long i = 0; i < lim; ++i) {
                y = (y * y + c) % n;
                Int diff = x > y ? x - y : y - x;
                if (diff != 0) q = (q * diff) % n;
            }
            d = gcd(q, n);
        }
        r *= 2;
    }
    if (d == n) {
        d = 1;
        while (d == 1) {
            ys = (ys * ys + c) % n;
            Int diff = x > ys ? x - ys : ys - x;
            d = diff == 0 ? n : gcd(diff, n);
        }
    }
    return d;
}

Int pollard_brent(const Int& n) {
    // deterministic parameter schedule keeps repeated runs identical
    for (long c = 1;; ++c) {
        Int d = pollard_brent_round(n, c);
        if (d != 1 && d != n) return d;
    }
}

}  // namespace

bool is_probable_prime(const Int& n) {
    if (n < 2) return false;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    // fixed witness set: deterministic, proven complete below 3.3e24
    for (long a : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L,
                   43L, 47L, 53L, 59L, 61L, 67L, 71L, 73L, 79L, 83L, 89L, 97L}) {
        if (miller_rabin_witness(n, Int(a))) return false;
    }
    return true;
}

std::vector<std::pair<Int, long>> factorize(Int n) {
    if (n == 0) throw PreconditionError("factorize: zero input");
    if (n < 0) n = -n;
    std::map<Int, long> acc;
    for (long p : small_primes()) {
        if (n == 1) break;
        if (Int(p) * p > n) break;
        while (n % p == 0) {
            ++acc[Int(p)];
            n /= p;
        }
    }
    std::vector<Int> stack;
    if (n > 1) stack.push_back(n);
    while (!stack.empty()) {
        Int m = stack.back();
        stack.pop_back();
        if (m == 1) continue;
        if (is_probable_prime(m)) {
            ++acc[m];
            continue;
        }
        Int d = pollard_brent(m);
        stack.push_back(d);
        stack.push_back(m / d);
    }
    return {acc.begin(), acc.end()};
}

long long ord_p(const Int& n, long long p) {
    if (n == 0) return VAL_INF;
    Int m = n < 0 ? Int(-n) : n;
    long long v = 0;
    while (m % p == 0) {
        m /= p;
        ++v;
    }
    return v;
}

long long ord_p(const Rational& x, long long p) {
    if (x == 0) return VAL_INF;
    return ord_p(numerator(x), p) - ord_p(denominator(x), p);
}

std::optional<Int> sqrt_mod_prime(Int a, const Int& p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return Int(0);
    if (p == 2) return a;
    if (powm(a, (p - 1) / 2, p) != 1) return std::nullopt;
    if (p % 4 == 3) return powm(a, (p + 1) / 4, p);
    // Tonelli-Shanks
    Int q = p - 1;
    long s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    Int z = 2;
    while (powm(z, (p - 1) / 2, p) != p - 1) ++z;
    Int m = s, c = powm(z, q, p), t = powm(a, q, p), r = powm(a, (q + 1) / 2, p);
    while (t != 1) {
        long i = 0;
        Int tt = t;
        while (tt != 1) {
            tt = (tt * tt) % p;
            ++i;
        }
        Int b = c;
        for (long j = 0; j < static_cast<long>(m) - i - 1; ++j) b = (b * b) % p;
        m = i;
        c = (b * b) % p;
        t = (t * c) % p;
        r = (r * b) % p;
    }
    return r;
}

long long field_discriminant(long long d) {
    long long m = ((d % 4) + 4) % 4;
    return m == 1 ? d : 4 * d;
}

std::string to_string(const PrimeIdeal& P) {
    std::ostringstream os;
    os << P.p;
    switch (P.kind) {
        case PrimeIdeal::Kind::Rational: os << 'q'; break;
        case PrimeIdeal::Kind::Split: os << 's' << P.root; break;
        case PrimeIdeal::Kind::Inert: os << 'i'; break;
        case PrimeIdeal::Kind::Ramified: os << 'r'; break;
    }
    return os.str();
}

std::vector<PrimeIdeal> primes_above(long long d, long long p) {
    if (p < 2) throw PreconditionError("primes_above: p must be a prime");
    if (d == 1) return {PrimeIdeal{p, PrimeIdeal::Kind::Rational, 1, 0}};
    long long disc = field_discriminant(d);
    int s = kronecker_symbol(Int(disc), Int(p));
    if (s == 0) return {PrimeIdeal{p, PrimeIdeal::Kind::Ramified, d, 0}};
    if (s == -1) return {PrimeIdeal{p, PrimeIdeal::Kind::Inert, d, 0}};
    if (p == 2) {
        // theta = (1+sqrt(d))/2 has minimal polynomial x^2 - x - (d-1)/4
        return {PrimeIdeal{2, PrimeIdeal::Kind::Split, d, 0},
                PrimeIdeal{2, PrimeIdeal::Kind::Split, d, 1}};
    }
    Int dm = Int(d) % p;
    auto r = sqrt_mod_prime(dm, Int(p));
    if (!r) throw FieldError("primes_above: inconsistent Kronecker symbol");
    long long r1 = static_cast<long long>(*r);
    long long r2 = p - r1;
    if (r1 > r2) std::swap(r1, r2);
    return {PrimeIdeal{p, PrimeIdeal::Kind::Split, d, r1},
            PrimeIdeal{p, PrimeIdeal::Kind::Split, d, r2}};
}

long long valuation(const Rational& x, long long p) { return ord_p(x, p); }

namespace {

// Newton lift of the split-prime root to precision p^m
Int lift_split_root(const PrimeIdeal& P, long m) {
    Int pk = P.p;
    Int r = P.root;
    Int target = int_pow(Int(P.p), m);
    if (P.p == 2) {
        // f(x) = x^2 - x - (d-1)/4
        Int c = (Int(P.d) - 1) / 4;
        Int mod = 2;
        while (mod < target) {
            mod = mod * mod;
            if (mod > target) mod = target;
            Int f = (r * r - r - c) % mod;
            if (f < 0) f += mod;
            Int fp = (2 * r - 1) % mod;
            r = (r - f * inv_mod(fp, mod)) % mod;
            if (r < 0) r += mod;
        }
        return r;
    }
    Int mod = pk;
    while (mod < target) {
        mod = mod * mod;
        if (mod > target) mod = target;
        Int f = (r * r - P.d) % mod;
        if (f < 0) f += mod;
        Int fp = (2 * r) % mod;
        r = (r - f * inv_mod(fp, mod)) % mod;
        if (r < 0) r += mod;
    }
    return r;
}

// valuation of U + V*sqrt(d) with integer U, V at P
long long integral_valuation(const Int& U, const Int& V, const PrimeIdeal& P) {
    Int nrm = U * U - Int(P.d) * V * V;
    if (nrm == 0) throw FieldError("valuation: norm vanished on nonzero element");
    long long nv = ord_p(nrm, P.p);
    switch (P.kind) {
        case PrimeIdeal::Kind::Inert: {
            if (nv % 2 != 0) throw FieldError("valuation: odd norm valuation at inert prime");
            return nv / 2;
        }
        case PrimeIdeal::Kind::Ramified:
            return nv;
        case PrimeIdeal::Kind::Split: {
            long m = static_cast<long>(nv) + 2;
            Int mod = int_pow(Int(P.p), m);
            Int r = lift_split_root(P, m);
            Int sqrt_d = P.p == 2 ? Int(2 * r - 1) : r;
            Int phi = (U + V * sqrt_d) % mod;
            if (phi < 0) phi += mod;
            long long v = phi == 0 ? m : ord_p(phi, P.p);
            if (v > nv)
                throw FieldError("valuation: split embedding exceeded norm bound");
            return v;
        }
        case PrimeIdeal::Kind::Rational:
            break;
    }
    throw FieldError("valuation: rational prime applied to quadratic element");
}

}  // namespace

long long valuation(const QuadraticNumber& x, const PrimeIdeal& P) {
    if (x.is_zero()) return VAL_INF;
    if (P.kind == PrimeIdeal::Kind::Rational) {
        if (x.d != 1) throw FieldError("valuation: rational prime applied to quadratic element");
        return ord_p(x.a, P.p);
    }
    if (x.d != P.d) {
        if (x.d != 1) throw FieldError("valuation: element and ideal fields differ");
        // rational element inside Q(sqrt(d))
        return P.ramification() * ord_p(x.a, P.p);
    }
    Int w = lcm(denominator(x.a), denominator(x.b));
    Int U = numerator(x.a) * (w / denominator(x.a));
    Int V = numerator(x.b) * (w / denominator(x.b));
    return integral_valuation(U, V, P) - P.ramification() * ord_p(w, P.p);
}

bool is_integral(const QuadraticNumber& x) {
    return denominator(trace(x)) == 1 && denominator(norm(x)) == 1;
}

PrimeValuationMap denominator_support(const Rational& x) {
    PrimeValuationMap r;
    if (x == 0) return r;
    for (const auto& [p, e] : factorize(denominator(x))) {
        r[PrimeIdeal{static_cast<long long>(p), PrimeIdeal::Kind::Rational, 1, 0}] = -e;
    }
    return r;
}

PrimeValuationMap denominator_support(const QuadraticNumber& x) {
    if (x.d == 1) return denominator_support(x.a);
    PrimeValuationMap r;
    if (x.is_zero()) return r;
    Int w = lcm(denominator(x.a), denominator(x.b));
    // negative valuations can only occur above primes dividing the
    // coefficient denominator, and above 2 for half-integral coordinates
    Int wx = x.d % 4 == 1 || x.d % 4 == -3 ? Int(2) * w : w;
    for (const auto& [p, e] : factorize(wx)) {
        (void)e;
        for (const auto& P : primes_above(x.d, static_cast<long long>(p))) {
            long long v = valuation(x, P);
            if (v < 0) r[P] = v;
        }
    }
    return r;
}

PrimeValuationMap denominator_support(const CyclotomicNumber& x) {
    PrimeValuationMap r;
    Int den = 1;
    for (const auto& c : x.c) den = lcm(den, denominator(c));
    if (den == 1) return r;
    for (const auto& [p, e] : factorize(den)) {
        (void)e;
        long long pp = static_cast<long long>(p);
        long long v = VAL_INF;
        for (const auto& c : x.c) {
            if (c == 0) continue;
            v = std::min(v, ord_p(c, pp));
        }
        if (v < 0) r[PrimeIdeal{pp, PrimeIdeal::Kind::Rational, 1, 0}] = v;
    }
    return r;
}

PrimeValuationMap denominator_support(const CompositeNumber& x) {
    PrimeValuationMap r = denominator_support(x.c0);
    for (const auto& [P, v] : denominator_support(x.c1)) {
        auto it = r.find(P);
        if (it == r.end())
            r[P] = v;
        else
            it->second = std::min(it->second, v);
    }
    return r;
}

}  // namespace dlab
