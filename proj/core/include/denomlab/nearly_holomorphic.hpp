#pragma once

#include "denomlab/dirichlet.hpp"
#include "denomlab/qexp.hpp"

namespace dlab {

// sum over j, n of layers[j][n] q^n R^j with R = 1/(4 pi y)
template <class K>
struct NearlyHolo {
    long weight = 0;
    long prec = 0;
    std::vector<std::vector<K>> layers;

    NearlyHolo() = default;
    NearlyHolo(long weight_, long prec_, long depth)
        : weight(weight_), prec(prec_), layers(depth + 1, std::vector<K>(prec_)) {}
    explicit NearlyHolo(const Series<K>& f)
        : weight(f.weight), prec(f.prec), layers(1, f.c) {}

    long depth() const { return static_cast<long>(layers.size()) - 1; }
};

// weight-raising derivation: a q^n R^j -> n a q^n R^j + (j - weight) a q^n R^{j+1}
template <class K>
NearlyHolo<K> raise_weight(const NearlyHolo<K>& f) {
    NearlyHolo<K> r(f.weight + 2, f.prec, f.depth() + 1);
    for (long j = 0; j <= f.depth(); ++j)
        for (long n = 0; n < f.prec; ++n) {
            r.layers[j][n] = r.layers[j][n] + Rational(n) * f.layers[j][n];
            r.layers[j + 1][n] = r.layers[j + 1][n] + Rational(j - f.weight) * f.layers[j][n];
        }
    return r;
}

template <class K>
NearlyHolo<K> raise_weight(const NearlyHolo<K>& f, long r) {
    NearlyHolo<K> out = f;
    for (long i = 0; i < r; ++i) out = raise_weight(out);
    return out;
}

template <class K>
NearlyHolo<K> operator*(const Series<K>& g, const NearlyHolo<K>& f) {
    long prec = std::min(g.prec, f.prec);
    NearlyHolo<K> r(g.weight + f.weight, prec, f.depth());
    for (long j = 0; j <= f.depth(); ++j)
        for (long a = 0; a < prec; ++a) {
            if (g.c[a] == K()) continue;
            for (long b = 0; a + b < prec; ++b)
                r.layers[j][a + b] = r.layers[j][a + b] + g.c[a] * f.layers[j][b];
        }
    return r;
}

// b(n) = sum_j layers[j][n] n^j (k-2-j)!/(k-2)!; annihilates raise_weight images
template <class K>
Series<K> holomorphic_projection(const NearlyHolo<K>& f) {
    long k = f.weight;
    if (k <= 2 * f.depth() + 2)
        throw PreconditionError("holomorphic projection needs weight > 2 depth + 2");
    Series<K> r(k, f.prec);
    r.c[0] = f.layers[0][0];
    for (long n = 1; n < f.prec; ++n) {
        K s{};
        for (long j = 0; j <= f.depth(); ++j) {
            Rational scale = Rational(int_pow(Int(n), j)) * Rational(factorial(k - 2 - j)) /
                             Rational(factorial(k - 2));
            s = s + scale * f.layers[j][n];
        }
        r.c[n] = s;
    }
    return r;
}

// completed Eisenstein series of weight lambda and character omega mod N:
// holomorphic part L_N(1-lambda, omega)/2 + sum_n (sum_{d|n} omega(d) d^{lambda-1}) q^n,
// plus the R-layer constant phi(N)/(2 N^2) when lambda = 2 and omega is principal
NearlyHolo<CyclotomicNumber> eisenstein_completed(long lambda,
                                                  const DirichletCharacter& omega,
                                                  long prec);

struct AnchorDecomposition {
    Rational alpha;                          // Eisenstein coordinate
    std::vector<QuadraticNumber> cusp;       // coordinates on the eigenform basis
};

// expand the holomorphic projection of g delta^{(r)} Gtilde over the weight-k
// basis {Eisenstein, eigenforms}; trivial twist characters only
AnchorDecomposition anchor_decomposition(long k, long l1, long l2);

}  // namespace dlab
