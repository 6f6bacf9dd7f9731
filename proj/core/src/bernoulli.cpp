#include "denomlab/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace dlab {

namespace {
std::mutex bernoulli_mutex;
std::vector<Rational>& bernoulli_cache() {
    static std::vector<Rational> cache{Rational(1), Rational(-1) / 2};
    return cache;
}
}  // namespace

Rational bernoulli_number(long m) {
    if (m < 0) throw PreconditionError("bernoulli_number: negative index");
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    auto& cache = bernoulli_cache();
    while (static_cast<long>(cache.size()) <= m) {
        long n = static_cast<long>(cache.size());
        if (n % 2 == 1) {
            cache.emplace_back(0);
            continue;
        }
        // sum_{j=0}^{n} C(n+1, j) B_j = 0
        Rational s(0);
        for (long j = 0; j < n; ++j) s += Rational(binomial(n + 1, j)) * cache[j];
        cache.push_back(-s / Rational(n + 1));
    }
    return cache[m];
}

Poly bernoulli_polynomial(long m) {
    Poly p(m + 1);
    for (long j = 0; j <= m; ++j)
        p[m - j] = Rational(binomial(m, j)) * bernoulli_number(j);
    return p;
}

CyclotomicNumber generalized_bernoulli(const DirichletCharacter& chi, long m) {
    if (m < 1) throw PreconditionError("generalized_bernoulli: m must be positive");
    long long n = chi.modulus();
    Poly bm = bernoulli_polynomial(m);
    Rational scale = rational_pow(Rational(n), m - 1);
    std::vector<std::pair<long, Rational>> terms;
    for (long long a = 1; a <= n; ++a) {
        auto e = chi.value_exponent(a);
        if (!e) continue;
        terms.emplace_back(static_cast<long>(*e), scale * poly_eval(bm, Rational(a) / n));
    }
    return cyclotomic_from_monomials(static_cast<long>(chi.order()), terms);
}

CyclotomicNumber dirichlet_L_negative(const DirichletCharacter& chi, long m) {
    return (Rational(-1) / m) * generalized_bernoulli(chi, m);
}

Rational zeta_negative(long n) {
    if (n < 0) throw PreconditionError("zeta_negative: n must be >= 0");
    if (n == 0) return Rational(-1) / 2;
    return -bernoulli_number(n + 1) / (n + 1);
}

}  // namespace dlab
