#include "denomlab/dirichlet.hpp"

#include "denomlab/primes.hpp"

#include <algorithm>

namespace dlab {

namespace {

long long primitive_root(long long p, int e) {
    long long pe = 1;
    for (int i = 0; i < e; ++i) pe *= p;
    long long target = pe / p * (p - 1);
    for (long long g = 2; g < pe; ++g) {
        if (gcd_ll(g, p) != 1) continue;
        if (multiplicative_order(static_cast<long>(g), static_cast<long>(pe)) == target)
            return g;
    }
    throw PreconditionError("no primitive root found");
}

// x with x = r mod m, x = 1 mod (n/m)
long long crt_lift(long long r, long long m, long long n) {
    long long q = n / m;
    if (q == 1) return ((r % n) + n) % n;
    // x = r + m*t, r + m*t = 1 mod q
    long long minv = 1, mm = m % q;
    for (long long t = 0; t < q; ++t)
        if ((mm * t) % q == 1) { minv = t; break; }
    long long t = ((1 - r) % q + q) % q * minv % q;
    return ((r + m * t) % n + n) % n;
}

long long dlog(long long a, long long g, long long order, long long mod) {
    long long x = 1 % mod;
    for (long long k = 0; k < order; ++k) {
        if (x == a % mod) return k;
        x = static_cast<long long>((__int128)x * g % mod);
    }
    throw PreconditionError("discrete log does not exist");
}

}  // namespace

DirichletCharacter::DirichletCharacter() = default;

DirichletCharacter::DirichletCharacter(long long modulus) : modulus_(modulus) {
    if (modulus < 1) throw PreconditionError("character modulus must be positive");
    for (const auto& [p, e] : factorize(Int(modulus))) {
        long long pl = static_cast<long long>(p);
        long long pe = 1;
        for (long i = 0; i < e; ++i) pe *= pl;
        if (pl == 2) {
            if (e == 1) continue;
            if (e == 2) {
                comps_.push_back({2, pe, crt_lift(3, pe, modulus), 2, 0});
            } else {
                comps_.push_back({2, pe, crt_lift(pe - 1, pe, modulus), 2, 0});
                comps_.push_back({2, pe, crt_lift(5, pe, modulus), pe / 4, 0});
            }
        } else {
            long long g = primitive_root(pl, static_cast<int>(e));
            comps_.push_back({pl, pe, crt_lift(g, pe, modulus), pe / pl * (pl - 1), 0});
        }
    }
}

void DirichletCharacter::set_order() {
    order_ = 1;
    for (const auto& c : comps_)
        order_ = lcm_ll(order_, c.order / gcd_ll(c.exponent, c.order));
}

std::vector<long long> DirichletCharacter::exponents() const {
    std::vector<long long> v;
    v.reserve(comps_.size());
    for (const auto& c : comps_) v.push_back(c.exponent);
    return v;
}

DirichletCharacter DirichletCharacter::principal(long long modulus) {
    DirichletCharacter chi(modulus);
    chi.set_order();
    return chi;
}

DirichletCharacter DirichletCharacter::from_label(const std::string& label) {
    auto colon = label.find(':');
    if (colon == std::string::npos) throw ParseError("character label needs N:j");
    long long n = 0, j = 0;
    try {
        n = std::stoll(label.substr(0, colon));
        j = std::stoll(label.substr(colon + 1));
    } catch (const std::exception&) {
        throw ParseError("bad character label: " + label);
    }
    DirichletCharacter chi(n);
    long long total = euler_phi(static_cast<long>(n));
    if (j < 0 || j >= total) throw ParseError("character index out of range on " + label);
    for (auto it = chi.comps_.rbegin(); it != chi.comps_.rend(); ++it) {
        it->exponent = j % it->order;
        j /= it->order;
    }
    chi.set_order();
    return chi;
}

std::vector<DirichletCharacter> DirichletCharacter::all_modulo(long long modulus) {
    std::vector<DirichletCharacter> out;
    long long total = euler_phi(static_cast<long>(modulus));
    out.reserve(total);
    DirichletCharacter chi(modulus);
    for (long long j = 0; j < total; ++j) {
        long long rem = j;
        for (auto it = chi.comps_.rbegin(); it != chi.comps_.rend(); ++it) {
            it->exponent = rem % it->order;
            rem /= it->order;
        }
        chi.set_order();
        out.push_back(chi);
    }
    return out;
}

DirichletCharacter DirichletCharacter::kronecker(long long disc) {
    if (disc == 0) throw PreconditionError("discriminant must be nonzero");
    auto [d0, f] = fundamental_discriminant(disc);
    if (d0 != disc || f != 1)
        throw PreconditionError("discriminant is not fundamental");
    long long n = disc < 0 ? -disc : disc;
    DirichletCharacter chi(n);
    for (auto& c : chi.comps_) {
        int s = kronecker_symbol(Int(disc), Int(c.generator));
        if (s == 1) c.exponent = 0;
        else if (s == -1) c.exponent = c.order / 2;
        else throw PreconditionError("kronecker symbol vanishes on a generator");
    }
    chi.set_order();
    for (long long a = 1; a <= n; ++a) {
        auto e = chi.value_exponent(a);
        int expected = kronecker_symbol(Int(disc), Int(a));
        int got = !e ? 0 : (*e == 0 ? 1 : -1);
        if (got != expected)
            throw PreconditionError("kronecker character disagrees with the symbol");
    }
    return chi;
}

long long DirichletCharacter::conductor() const {
    long long cond = 1;
    size_t i = 0;
    while (i < comps_.size()) {
        const auto& c = comps_[i];
        long long d = c.order / gcd_ll(c.exponent, c.order);
        if (c.prime == 2 && c.prime_power >= 8) {
            const auto& c5 = comps_[i + 1];
            long long d5 = c5.order / gcd_ll(c5.exponent, c5.order);
            if (d5 > 1) {
                long long f = 4;
                while (d5 > 1) { d5 /= 2; f *= 2; }
                cond *= f;
            } else if (d == 2) {
                cond *= 4;
            }
            i += 2;
            continue;
        }
        if (c.prime == 2) {
            if (d == 2) cond *= 4;
        } else if (d > 1) {
            long long f = c.prime;
            while (d % c.prime == 0) { d /= c.prime; f *= c.prime; }
            cond *= f;
        }
        ++i;
    }
    return cond;
}

int DirichletCharacter::parity() const {
    if (modulus_ <= 2) return 1;
    auto e = value_exponent(modulus_ - 1);
    if (!e) throw PreconditionError("parity: -1 not coprime to modulus");
    return *e == 0 ? 1 : -1;
}

std::optional<long long> DirichletCharacter::value_exponent(long long a) const {
    a %= modulus_;
    if (a < 0) a += modulus_;
    if (modulus_ == 1) return 0;
    if (gcd_ll(a, modulus_) != 1) return std::nullopt;
    // zeta_{c.order}^{k * c.exponent} rewritten as a power of zeta_{order_};
    // each component value is an order_-th root of unity, so the division is exact
    auto contribution = [&](long long k, const Component& c) {
        long long m = static_cast<long long>((__int128)k * c.exponent % c.order);
        if ((__int128)m * order_ % c.order != 0)
            throw PreconditionError("component value is not a root of the character order");
        return static_cast<long long>((__int128)m * order_ / c.order % order_);
    };
    long long e = 0;
    size_t i = 0;
    while (i < comps_.size()) {
        const auto& c = comps_[i];
        long long pe = c.prime_power;
        long long ai = a % pe;
        if (c.prime == 2 && pe >= 8) {
            // a = (-1)^s 5^t mod 2^e
            const auto& c5 = comps_[i + 1];
            long long s = ai % 4 == 1 ? 0 : 1;
            long long b = s == 0 ? ai : pe - ai;
            long long t = dlog(b, 5, c5.order, pe);
            e = (e + contribution(s, c) + contribution(t, c5)) % order_;
            i += 2;
            continue;
        }
        long long k = dlog(ai, c.generator % pe, c.order, pe);
        e = (e + contribution(k, c)) % order_;
        ++i;
    }
    return e;
}

CyclotomicNumber DirichletCharacter::value(long long a) const {
    auto e = value_exponent(a);
    if (!e) return embed(CyclotomicNumber(Rational(0)), static_cast<long>(order_));
    return zeta_power(static_cast<long>(order_), static_cast<long>(*e));
}

long long DirichletCharacter::value_int(long long a) const {
    if (order_ > 2) throw PreconditionError("character is not quadratic");
    auto e = value_exponent(a);
    if (!e) return 0;
    return *e == 0 ? 1 : -1;
}

DirichletCharacter DirichletCharacter::primitive_part() const {
    long long c = conductor();
    if (c == modulus_) return *this;
    DirichletCharacter chi(c);
    for (auto& comp : chi.comps_) {
        long long g = comp.generator % c;
        while (gcd_ll(g, modulus_) != 1) g += c;
        auto e = value_exponent(g);
        if (!e || (__int128)(*e) * comp.order % order_ != 0)
            throw PreconditionError("primitive part: generator lift failed");
        comp.exponent = static_cast<long long>((__int128)(*e) * comp.order / order_ % comp.order);
    }
    chi.set_order();
    return chi;
}

DirichletCharacter DirichletCharacter::induced_modulo(long long m) const {
    if (m % conductor() != 0)
        throw PreconditionError("conductor does not divide requested modulus");
    return *this * DirichletCharacter::principal(m);
}

DirichletCharacter DirichletCharacter::conjugate() const {
    DirichletCharacter chi = *this;
    for (auto& c : chi.comps_) c.exponent = (c.order - c.exponent) % c.order;
    chi.set_order();
    return chi;
}

std::string DirichletCharacter::label() const {
    long long j = 0;
    for (const auto& c : comps_) j = j * c.order + c.exponent;
    return std::to_string(modulus_) + ":" + std::to_string(j);
}

DirichletCharacter operator*(const DirichletCharacter& a, const DirichletCharacter& b) {
    long long m = lcm_ll(a.modulus_, b.modulus_);
    DirichletCharacter chi(m);
    long long d = lcm_ll(a.order_, b.order_);
    for (auto& comp : chi.comps_) {
        auto ea = a.value_exponent(comp.generator);
        auto eb = b.value_exponent(comp.generator);
        if (!ea || !eb) throw PreconditionError("product: generator not coprime");
        long long e = (*ea % d * (d / a.order_) + *eb % d * (d / b.order_)) % d;
        if ((__int128)e * comp.order % d != 0)
            throw PreconditionError("product: value is not a component root of unity");
        comp.exponent = static_cast<long long>((__int128)e * comp.order / d % comp.order);
    }
    chi.set_order();
    return chi;
}

CyclotomicNumber gauss_sum(const DirichletCharacter& chi) {
    long long n = chi.modulus();
    long long m = lcm_ll(n, chi.order());
    std::vector<std::pair<long, Rational>> terms;
    for (long long a = 1; a <= n; ++a) {
        auto e = chi.value_exponent(a);
        if (!e) continue;
        terms.emplace_back(static_cast<long>((*e * (m / chi.order()) + a * (m / n)) % m),
                           Rational(1));
    }
    return cyclotomic_from_monomials(static_cast<long>(m), terms);
}

std::pair<long long, long long> fundamental_discriminant(long long D) {
    if (D == 0) throw PreconditionError("discriminant must be nonzero");
    long long r = ((D % 4) + 4) % 4;
    if (r == 2 || r == 3) throw PreconditionError("not a discriminant: 2, 3 mod 4");
    long long d0 = D < 0 ? -1 : 1, f = 1;
    for (const auto& [p, e] : factorize(Int(D < 0 ? -D : D))) {
        long long pl = static_cast<long long>(p);
        for (long i = 0; i + 1 < e; i += 2) f *= pl;
        if (e % 2) d0 *= pl;
    }
    long long dmod = ((d0 % 4) + 4) % 4;
    if (dmod == 1) return {d0, f};
    return {4 * d0, f / 2};
}

}  // namespace dlab
