#include "denomlab/critical_values.hpp"

namespace dlab {

namespace {

long lcm_long(long long a, long long b) { return static_cast<long>(lcm_ll(a, b)); }

// C(chi1, l1) C(chi2, l2) tau(chi1) tau(chi2) / (N1 N2 tau((chi1 chi2)_0)),
// the completed product divided by the period scale
CompositeNumber symbol_product(const EigenFunctionals& u, long l1, long l2,
                               const DirichletCharacter& chi1,
                               const DirichletCharacter& chi2) {
    CompositeNumber c1 = twisted_coefficient(u, chi1, l1);
    CompositeNumber c2 = twisted_coefficient(u, chi2, l2);
    DirichletCharacter psi0 = (chi1 * chi2).primitive_part();
    CyclotomicNumber t1 = gauss_sum(chi1);
    CyclotomicNumber t2 = gauss_sum(chi2);
    CyclotomicNumber t0 = gauss_sum(psi0);
    long target = lcm_long(chi1.order(), chi2.order());
    long m = lcm_long(lcm_long(c1.modulus(), c2.modulus()),
                      lcm_long(lcm_long(t1.modulus, t2.modulus),
                               lcm_long(t0.modulus, target)));
    CyclotomicNumber scale = embed(t1, m) * embed(t2, m) * field_inv(embed(t0, m));
    scale = Rational(1, chi1.modulus() * chi2.modulus()) * scale;
    CompositeNumber v = embed(c1, m) * embed(c2, m) * make_composite(scale);
    return descend(v, target);
}

int required_parity(long l1, long l2) { return (l1 + l2 + 1) % 2 == 0 ? 1 : -1; }

}  // namespace

QuadraticNumber untwisted_ratio(const EigenFunctionals& u, long j1, long j2) {
    if ((j1 - j2) % 2 != 0)
        throw PreconditionError("untwisted_ratio: critical points must have equal parity");
    DirichletCharacter triv = DirichletCharacter::principal(1);
    QuadraticNumber num = to_quadratic(twisted_coefficient(u, triv, j1));
    QuadraticNumber den = to_quadratic(twisted_coefficient(u, triv, j2));
    if (den.is_zero()) throw FieldError("untwisted_ratio: reference value vanishes");
    QuadraticNumber r = num * field_inv(den);
    // sqrt(-1)^{j2 - j1} with j2 - j1 even
    if (((j2 - j1) / 2) % 2 != 0) r = Rational(-1) * r;
    return r;
}

std::string admissibility_failure(long weight, long l1, long l2,
                                  const DirichletCharacter& chi1,
                                  const DirichletCharacter& chi2) {
    if (l1 > weight - 1) return "first exponent exceeds the critical range";
    if (l2 > l1 - 1) return "exponents must be strictly decreasing";
    if (l2 < weight - l1 + 1) return "exponent sum too small for the Eisenstein family";
    if (chi1.parity() * chi2.parity() != required_parity(l1, l2))
        return "character parities do not match the exponent pair";
    if (l1 == l2 + 1 && chi1.is_principal() && chi2.is_principal())
        return "adjacent exponents need a nontrivial character";
    return "";
}

PeriodNormalization period_normalization(const Eigenform& f, const EigenFunctionals& u,
                                         long l1, long l2) {
    if (f.weight != u.weight || f.disc != u.disc)
        throw PreconditionError("period_normalization: eigenform and functionals disagree");
    if (f.f.prec < 3)
        throw PreconditionError("period_normalization: need at least three coefficients");
    AnchorDecomposition anc = anchor_decomposition(f.weight, l1, l2);
    std::vector<Eigenform> basis = eigenforms(f.weight, 3);
    size_t index = basis.size();
    for (size_t i = 0; i < basis.size(); ++i)
        if (basis[i].f.coeff(2) == f.f.coeff(2)) {
            index = i;
            break;
        }
    if (index == basis.size())
        throw PreconditionError("period_normalization: eigenform not in the weight's basis");
    DirichletCharacter triv = DirichletCharacter::principal(1);
    QuadraticNumber m = to_quadratic(symbol_product(u, l1, l2, triv, triv));
    if (m.is_zero())
        throw PreconditionError("period_normalization: symbol product vanishes at the reference pair");
    PeriodNormalization norm;
    norm.weight = f.weight;
    norm.disc = f.disc;
    norm.l1 = l1;
    norm.l2 = l2;
    norm.omega = anc.cusp[index] * field_inv(m);
    return norm;
}

PeriodNormalization period_normalization(const Eigenform& f, const EigenFunctionals& u) {
    return period_normalization(f, u, f.weight - 1, f.weight - 4);
}

CompositeNumber critical_value(const EigenFunctionals& u, const PeriodNormalization& norm,
                               long l1, long l2, const DirichletCharacter& chi1,
                               const DirichletCharacter& chi2) {
    if (norm.weight != u.weight || norm.disc != u.disc)
        throw PreconditionError("critical_value: normalization belongs to a different eigenform");
    long k = u.weight;
    if (l1 < 1 || l1 > k - 1 || l2 < 1 || l2 > k - 1)
        throw PreconditionError("critical_value: exponent outside the critical strip");
    if (chi1.parity() * chi2.parity() != required_parity(l1, l2))
        throw PreconditionError("critical_value: character parities do not match the exponent pair");
    CompositeNumber v = symbol_product(u, l1, l2, chi1, chi2);
    return make_composite(norm.omega, 1) * v;
}

QuadraticNumber relative_norm(const CompositeNumber& x) {
    long m = x.modulus();
    CompositeNumber acc = x;
    for (long t = 2; t < m; ++t) {
        if (gcd_ll(t, m) != 1) continue;
        acc = acc * automorphism(x, t);
    }
    return to_quadratic(acc);
}

}  // namespace dlab
