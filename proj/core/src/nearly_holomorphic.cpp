#include "denomlab/nearly_holomorphic.hpp"

#include "denomlab/bernoulli.hpp"

namespace dlab {

NearlyHolo<CyclotomicNumber> eisenstein_completed(long lambda,
                                                  const DirichletCharacter& omega,
                                                  long prec) {
    if (lambda < 2) throw PreconditionError("completed Eisenstein series needs weight >= 2");
    if (omega.is_even() != (lambda % 2 == 0))
        throw PreconditionError("character parity must match the weight");
    long n_mod = omega.modulus();
    long ord = omega.order();
    bool quasi = lambda == 2 && omega.conductor() == 1;
    NearlyHolo<CyclotomicNumber> r(lambda, prec, quasi ? 1 : 0);
    r.layers[0][0] = Rational(1, 2) * dirichlet_L_negative(omega, lambda);
    for (long n = 1; n < prec; ++n) {
        std::vector<std::pair<long, Rational>> terms;
        for (long d = 1; d <= n; ++d) {
            if (n % d != 0) continue;
            auto e = omega.value_exponent(d);
            if (!e) continue;
            terms.emplace_back(*e, Rational(int_pow(Int(d), lambda - 1)));
        }
        r.layers[0][n] = cyclotomic_from_monomials(ord, terms);
    }
    if (quasi)
        r.layers[1][0] = CyclotomicNumber(Rational(euler_phi(n_mod), 2 * n_mod * n_mod));
    return r;
}

namespace {

NearlyHolo<Rational> rational_layers(const NearlyHolo<CyclotomicNumber>& f) {
    NearlyHolo<Rational> r(f.weight, f.prec, f.depth());
    for (long j = 0; j <= f.depth(); ++j)
        for (long n = 0; n < f.prec; ++n) r.layers[j][n] = f.layers[j][n].to_rational();
    return r;
}

}  // namespace

AnchorDecomposition anchor_decomposition(long k, long l1, long l2) {
    if ((l1 + l2) % 2 == 0)
        throw PreconditionError("exponent pair must have odd sum");
    if (l1 - l2 < 3 || l1 > k - 1 || l2 < k - l1 + 1)
        throw PreconditionError("exponent pair outside the supported range");
    long lambda = -k + l1 + l2 + 1;
    long r = k - l1 - 1;
    const long prec = 12;

    Series<Rational> g = eisenstein_series(l1 - l2 + 1, prec);
    NearlyHolo<Rational> base =
        rational_layers(eisenstein_completed(lambda, DirichletCharacter::principal(1), prec));
    Series<Rational> h0 = holomorphic_projection(g * raise_weight(base, r));

    Series<Rational> ek = eisenstein_series(k, prec);
    AnchorDecomposition out;
    out.alpha = h0.c[0] / ek.c[0];
    Series<Rational> s = h0 - out.alpha * ek;

    std::vector<Eigenform> basis = eigenforms(k, prec);
    long d = static_cast<long>(basis.size());
    std::vector<QuadraticNumber> a(d);
    if (d == 1) {
        a[0] = QuadraticNumber(basis[0].disc, s.c[1], Rational(0));
    } else if (d == 2) {
        QuadraticNumber b1 = basis[0].f.c[2];
        QuadraticNumber b2 = basis[1].f.c[2];
        a[0] = (QuadraticNumber(s.c[2]) - s.c[1] * b2) * field_inv(b1 - b2);
        a[1] = QuadraticNumber(s.c[1]) - a[0];
    } else if (d != 0) {
        throw PreconditionError("eigenform basis larger than expected");
    }
    for (long n = 0; n < prec; ++n) {
        QuadraticNumber acc{};
        for (long i = 0; i < d; ++i) acc = acc + a[i] * basis[i].f.c[n];
        if (!(acc == QuadraticNumber(s.c[n])))
            throw PreconditionError("projection does not lie in the Eisenstein/eigenform span");
    }
    out.cusp = a;
    return out;
}

}  // namespace dlab
