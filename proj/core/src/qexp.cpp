#include "denomlab/qexp.hpp"

#include "denomlab/bernoulli.hpp"

namespace dlab {

namespace {

// Dedekind eta without the q^{1/24}, cubed: sum (-1)^j (2j+1) q^{j(j+1)/2}
Series<Rational> eta_cubed(long prec) {
    Series<Rational> r(0, prec);
    for (long j = 0;; ++j) {
        long e = j * (j + 1) / 2;
        if (e >= prec) break;
        r.c[e] = Rational(j % 2 == 0 ? 2 * j + 1 : -(2 * j + 1));
    }
    return r;
}

Series<Rational> one_plus(long weight, long scale, long sigma_pow, long prec) {
    Series<Rational> r(weight, prec);
    r.c[0] = 1;
    for (long n = 1; n < prec; ++n) {
        Int s = 0;
        for (long d = 1; d <= n; ++d)
            if (n % d == 0) s += int_pow(Int(d), sigma_pow);
        r.c[n] = Rational(scale) * Rational(s);
    }
    return r;
}

}  // namespace

long dim_modular_forms(long k) {
    if (k < 0 || k % 2 == 1) return 0;
    return k / 12 + (k % 12 == 2 ? 0 : 1);
}

Series<Rational> delta_series(long prec) {
    Series<Rational> e3 = eta_cubed(prec);
    Series<Rational> p = e3 * e3;  // eta^6
    p = p * p;                     // eta^12
    p = p * p;                     // eta^24
    Series<Rational> r(12, prec);
    for (long n = 1; n < prec; ++n) r.c[n] = p.c[n - 1];
    return r;
}

Series<Rational> eisenstein_series(long k, long prec) {
    if (k < 4 || k % 2 == 1) throw PreconditionError("eisenstein weight must be even, >= 4");
    Series<Rational> r(k, prec);
    r.c[0] = zeta_negative(k - 1) / 2;
    for (long n = 1; n < prec; ++n) {
        Int s = 0;
        for (long d = 1; d <= n; ++d)
            if (n % d == 0) s += int_pow(Int(d), k - 1);
        r.c[n] = Rational(s);
    }
    return r;
}

std::vector<Series<Rational>> miller_basis(long k, long prec) {
    long d = dim_modular_forms(k);
    if (d == 0) throw PreconditionError("no forms in this weight");
    if (prec <= d) throw PrecisionError("miller basis needs prec > dim", prec);
    Series<Rational> e4 = one_plus(4, 240, 3, prec);
    Series<Rational> e6 = one_plus(6, -504, 5, prec);
    Series<Rational> delta = delta_series(prec);
    std::vector<Series<Rational>> basis(d);
    for (long i = 0; i < d; ++i) {
        long w = k - 12 * i;
        long b = w % 4 == 2 ? 1 : 0;
        long a = (w - 6 * b) / 4;
        Series<Rational> m(0, prec);
        m.c[0] = 1;
        for (long j = 0; j < i; ++j) m = m * delta;
        for (long j = 0; j < a; ++j) m = m * e4;
        for (long j = 0; j < b; ++j) m = m * e6;
        m.weight = k;
        basis[i] = m;
    }
    for (long i = d - 1; i >= 0; --i)
        for (long j = i + 1; j < d; ++j)
            basis[i] = basis[i] - basis[i].c[j] * basis[j];
    return basis;
}

std::vector<Eigenform> eigenforms(long k, long prec) {
    long dim = dim_modular_forms(k) - 1;  // cusp forms
    if (dim < 1 || dim > 2)
        throw PreconditionError("eigenforms implemented for cusp dimensions 1 and 2");
    auto basis = miller_basis(k, std::max(prec, 2 * dim + 3));
    std::vector<Eigenform> out;
    if (dim == 1) {
        Eigenform e;
        e.weight = k;
        e.disc = 1;
        e.f.weight = k;
        e.f.prec = basis[1].prec;
        e.f.c.reserve(basis[1].prec);
        for (const auto& x : basis[1].c) e.f.c.emplace_back(x);
        out.push_back(std::move(e));
        return out;
    }
    // T_2 on the cusp basis f_1, f_2 in coordinates (c(1), c(2))
    auto t1 = hecke_operator(basis[1], 2);
    auto t2 = hecke_operator(basis[2], 2);
    Rational m11 = t1.c[1], m21 = t1.c[2], m12 = t2.c[1], m22 = t2.c[2];
    Rational tr = m11 + m22, det = m11 * m22 - m12 * m21;
    Rational discq = tr * tr - 4 * det;
    if (m12 == 0 || discq <= 0)
        throw PreconditionError("eigenforms: T_2 is not regular semisimple on this space");
    // a(2) = tr/2 + u sqrt(D) with disc u^2 D = discq, D squarefree
    Int num = numerator(discq), den = denominator(discq);
    Int n2 = num * den;  // discq = n2 / den^2
    long long D = 1;
    Rational u = Rational(1) / Rational(den);
    for (const auto& [p, e] : factorize(n2)) {
        for (long i = 0; i + 1 < e; i += 2) u *= Rational(p);
        if (e % 2) D *= static_cast<long long>(p);
    }
    for (int sign = 0; sign < 2; ++sign) {
        QuadraticNumber a2(D, tr / 2, sign == 0 ? u / 2 : -u / 2);
        QuadraticNumber beta = field_inv(QuadraticNumber(m12)) * (a2 - QuadraticNumber(m11));
        Eigenform e;
        e.weight = k;
        e.disc = D;
        e.f.weight = k;
        e.f.prec = std::min(basis[1].prec, basis[2].prec);
        e.f.c.resize(e.f.prec);
        for (long n = 0; n < e.f.prec; ++n)
            e.f.c[n] = QuadraticNumber(basis[1].c[n]) + beta * QuadraticNumber(basis[2].c[n]);
        out.push_back(std::move(e));
    }
    return out;
}

PrimeValuationMap congruence_ideal(long k) {
    const long prec = 60;
    auto forms = eigenforms(k, prec);
    PrimeValuationMap ideal;
    if (forms.size() < 2) return ideal;
    const auto& a = forms[0].f;
    const auto& b = forms[1].f;
    std::vector<QuadraticNumber> diffs;
    for (long n = 2; n < prec; ++n) {
        QuadraticNumber d = a.c[n] - b.c[n];
        if (!d.is_zero()) diffs.push_back(d);
    }
    if (diffs.empty()) throw PreconditionError("conjugate eigenforms coincide");
    Rational nrm = norm(diffs.front());
    for (const auto& [p, e] : factorize(numerator(nrm))) {
        (void)e;
        for (const auto& P : primes_above(forms[0].disc, static_cast<long long>(p))) {
            long long v = VAL_INF;
            for (const auto& d : diffs) v = std::min(v, valuation(d, P));
            if (v > 0) ideal[P] = v;
        }
    }
    return ideal;
}

Series<CyclotomicNumber> eisenstein_two_characters(const DirichletCharacter& chi1,
                                                   const DirichletCharacter& chi2,
                                                   long weight, long prec) {
    if (weight < 1) throw PreconditionError("weight must be positive");
    if (!chi1.is_primitive() || !chi2.is_primitive())
        throw PreconditionError("characters must be primitive");
    if (chi1.parity() * chi2.parity() != (weight % 2 == 0 ? 1 : -1))
        throw PreconditionError("character parity must match weight parity");
    DirichletCharacter prod = chi1 * chi2;
    long ord = static_cast<long>(lcm_ll(chi1.order(), chi2.order()));
    Series<CyclotomicNumber> g(weight, prec);
    bool triv1 = chi1.conductor() == 1, triv2 = chi2.conductor() == 1;
    CyclotomicNumber c0(Rational(0));
    if (!triv1) {
        // 0
    } else if (weight == 2 && triv2) {
        c0 = CyclotomicNumber(-Rational(1 - chi1.modulus() * chi2.modulus()) / 24);
    } else {
        c0 = (Rational(1) / 2) * dirichlet_L_negative(prod, weight);
    }
    g.c[0] = embed(c0, ord);
    for (long m = 1; m < prec; ++m) {
        std::vector<std::pair<long, Rational>> terms;
        for (long d = 1; d <= m; ++d) {
            if (m % d != 0) continue;
            auto e1 = chi1.value_exponent(m / d);
            auto e2 = chi2.value_exponent(d);
            if (!e1 || !e2) continue;
            long e = static_cast<long>((*e1 * (ord / chi1.order()) +
                                        *e2 * (ord / chi2.order())) % ord);
            terms.emplace_back(e, Rational(int_pow(Int(d), weight - 1)));
        }
        g.c[m] = cyclotomic_from_monomials(ord, terms);
    }
    return g;
}

}  // namespace dlab
