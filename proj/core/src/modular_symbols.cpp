#include "denomlab/modular_symbols.hpp"

#include <algorithm>

namespace dlab {

namespace {

std::vector<Rational> mul_linear(const std::vector<Rational>& v, long a, long b) {
    std::vector<Rational> r(v.size() + 1, Rational(0));
    for (size_t i = 0; i < v.size(); ++i) {
        r[i + 1] += Rational(a) * v[i];
        r[i] += Rational(b) * v[i];
    }
    return r;
}

long to_long(const Int& x) { return x.convert_to<long>(); }

Int floor_div(const Int& x, const Int& y) {
    Int q = x / y;
    if (q * y != x && (x < 0) != (y < 0)) --q;
    return q;
}

}  // namespace

std::vector<Rational> polynomial_action(long k, const std::vector<Rational>& p, long a, long b,
                                        long c, long d) {
    long w = k - 2;
    if (static_cast<long>(p.size()) != w + 1)
        throw PreconditionError("polynomial degree does not match the weight");
    if (a * d - b * c == 0) throw PreconditionError("matrix must be invertible");
    std::vector<std::vector<Rational>> pa(w + 1), pc(w + 1);
    pa[0] = {Rational(1)};
    pc[0] = {Rational(1)};
    for (long n = 1; n <= w; ++n) {
        pa[n] = mul_linear(pa[n - 1], a, b);
        pc[n] = mul_linear(pc[n - 1], c, d);
    }
    std::vector<Rational> out(w + 1, Rational(0));
    for (long n = 0; n <= w; ++n) {
        if (p[n] == 0) continue;
        const auto& u = pa[n];
        const auto& v = pc[w - n];
        for (size_t i = 0; i < u.size(); ++i) {
            if (u[i] == 0) continue;
            for (size_t j = 0; j < v.size(); ++j) out[i + j] += p[n] * u[i] * v[j];
        }
    }
    return out;
}

std::vector<Rational> path_vector(long k, const Rational& cusp, const std::vector<Rational>& p) {
    long w = k - 2;
    if (static_cast<long>(p.size()) != w + 1)
        throw PreconditionError("polynomial degree does not match the weight");
    std::vector<Rational> out(w + 1, Rational(0));
    Int x = numerator(cusp), y = denominator(cusp);
    Int p2 = 0, q2 = 1;   // two steps back
    Int p1 = 1, q1 = 0;   // one step back
    long i = 0;
    while (true) {
        Int a = floor_div(x, y);
        Int pc = a * p1 + p2;
        Int qc = a * q1 + q2;
        long s = (i % 2 == 0) ? -1 : 1;
        auto term = polynomial_action(k, p, to_long(pc), s * to_long(p1), to_long(qc),
                                      s * to_long(q1));
        for (long n = 0; n <= w; ++n) out[n] -= term[n];
        Int r = x - a * y;
        if (r == 0) break;
        x = y;
        y = r;
        p2 = p1;
        q2 = q1;
        p1 = pc;
        q1 = qc;
        ++i;
    }
    return out;
}

std::vector<std::vector<Rational>> relation_rows(long k) {
    long w = k - 2;
    std::vector<std::vector<Rational>> rows;
    for (long n = 0; n <= w; ++n) {
        std::vector<Rational> e(w + 1, Rational(0));
        e[n] = 1;
        auto s = polynomial_action(k, e, 0, -1, 1, 0);
        auto u = polynomial_action(k, e, 0, -1, 1, -1);
        auto u2 = polynomial_action(k, e, -1, 1, -1, 0);
        std::vector<Rational> r1(w + 1), r2(w + 1);
        for (long m = 0; m <= w; ++m) {
            r1[m] = e[m] + s[m];
            r2[m] = e[m] + u[m] + u2[m];
        }
        rows.push_back(std::move(r1));
        rows.push_back(std::move(r2));
    }
    return rows;
}

std::vector<std::vector<Rational>> hecke_rows(long k, long m) {
    if (m < 1) throw PreconditionError("Hecke index must be positive");
    long w = k - 2;
    std::vector<std::vector<Rational>> rows(w + 1);
    for (long n = 0; n <= w; ++n) {
        std::vector<Rational> e(w + 1, Rational(0));
        e[n] = 1;
        std::vector<Rational> acc(w + 1, Rational(0));
        for (long d = 1; d <= m; ++d) {
            if (m % d != 0) continue;
            long a = m / d;
            for (long b = 0; b < d; ++b) {
                auto q = polynomial_action(k, e, d, -b, 0, a);
                auto v = path_vector(k, Rational(b, d), q);
                for (long t = 0; t <= w; ++t) acc[t] += v[t];
            }
        }
        rows[n] = std::move(acc);
    }
    return rows;
}

namespace {

// reduced basis of the solution space of rows * x = 0
std::vector<std::vector<QuadraticNumber>> nullspace(
    std::vector<std::vector<QuadraticNumber>> rows, long ncols) {
    long nrows = static_cast<long>(rows.size());
    std::vector<long> pivot_col;
    long r = 0;
    for (long c = 0; c < ncols && r < nrows; ++c) {
        long pr = -1;
        for (long i = r; i < nrows; ++i)
            if (!rows[i][c].is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(rows[r], rows[pr]);
        QuadraticNumber inv = field_inv(rows[r][c]);
        for (long j = c; j < ncols; ++j) rows[r][j] = inv * rows[r][j];
        for (long i = 0; i < nrows; ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            QuadraticNumber f = rows[i][c];
            for (long j = c; j < ncols; ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<std::vector<QuadraticNumber>> basis;
    for (long c = 0; c < ncols; ++c) {
        if (std::find(pivot_col.begin(), pivot_col.end(), c) != pivot_col.end()) continue;
        std::vector<QuadraticNumber> v(ncols);
        v[c] = QuadraticNumber(Rational(1));
        for (long i = 0; i < r; ++i) v[pivot_col[i]] = -rows[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

EigenFunctionals eigen_functionals(const Eigenform& f) {
    long k = f.weight, w = k - 2;
    QuadraticNumber a2 = f.f.c[2];
    auto rel = relation_rows(k);
    auto t2 = hecke_rows(k, 2);

    EigenFunctionals out;
    out.weight = k;
    out.disc = f.disc;
    for (long parity = 0; parity < 2; ++parity) {
        std::vector<long> idx;
        for (long n = parity; n <= w; n += 2) idx.push_back(n);
        long ncols = static_cast<long>(idx.size());
        std::vector<std::vector<QuadraticNumber>> rows;
        for (const auto& rr : rel) {
            std::vector<QuadraticNumber> row(ncols);
            bool nonzero = false;
            for (long c = 0; c < ncols; ++c) {
                row[c] = QuadraticNumber(rr[idx[c]]);
                nonzero = nonzero || !row[c].is_zero();
            }
            if (nonzero) rows.push_back(std::move(row));
        }
        for (long n = 0; n <= w; ++n) {
            std::vector<QuadraticNumber> row(ncols);
            for (long c = 0; c < ncols; ++c) {
                row[c] = QuadraticNumber(t2[n][idx[c]]);
                if (idx[c] == n) row[c] = row[c] - a2;
            }
            rows.push_back(std::move(row));
        }
        auto basis = nullspace(std::move(rows), ncols);
        if (basis.size() != 1)
            throw PreconditionError("Hecke eigenspace on functionals is not one-dimensional");
        long target = (parity == 0) ? k - 2 : k - 3;
        long pos = static_cast<long>(std::find(idx.begin(), idx.end(), target) - idx.begin());
        QuadraticNumber piv = basis[0][pos];
        if (piv.is_zero())
            throw PreconditionError("functional vanishes at the normalization coordinate");
        QuadraticNumber scale = field_inv(piv);
        std::vector<QuadraticNumber> full(w + 1);
        for (long c = 0; c < ncols; ++c) full[idx[c]] = scale * basis[0][c];
        if (parity == 0)
            out.plus = std::move(full);
        else
            out.minus = std::move(full);
    }
    return out;
}

namespace {

CompositeNumber scale_composite(const CyclotomicNumber& c, const QuadraticNumber& q) {
    return CompositeNumber(q.d, q.a * c, q.b * c);
}

}  // namespace

CompositeNumber twisted_coefficient(const EigenFunctionals& u, const DirichletCharacter& chi,
                                    long j) {
    long k = u.weight;
    if (j < 1 || j > k - 1) throw PreconditionError("argument outside the critical strip");
    if (!chi.is_primitive()) throw PreconditionError("primitive character required");
    long w = k - 2, n_mod = chi.modulus();
    DirichletCharacter cbar = chi.conjugate();
    CompositeNumber cplus, cminus;
    for (long a = 0; a < n_mod; ++a) {
        auto e = cbar.value_exponent(a);
        if (!e && n_mod > 1) continue;
        CyclotomicNumber cv = cbar.value(a);
        std::vector<Rational> p(w + 1, Rational(0));
        Rational shift = -Rational(a, n_mod);
        Rational pw(1);
        for (long i = j - 1; i >= 0; --i) {
            p[i] = Rational(binomial(j - 1, i)) * pw;
            pw *= shift;
        }
        auto vec = path_vector(k, Rational(a, n_mod), p);
        QuadraticNumber sp, sm;
        for (long n = 0; n <= w; ++n) {
            if (vec[n] == 0) continue;
            sp = sp + vec[n] * u.plus[n];
            sm = sm + vec[n] * u.minus[n];
        }
        cplus = cplus + scale_composite(cv, sp);
        cminus = cminus + scale_composite(cv, sm);
    }
    bool want_plus = chi.is_even() == (j % 2 == 1);
    const CompositeNumber& wrong = want_plus ? cminus : cplus;
    if (!wrong.is_zero())
        throw PreconditionError("twisted sum has a component of the wrong parity");
    return want_plus ? cplus : cminus;
}

namespace {

double upper_gamma(long s, double x) {
    double term = 1.0, sum = 1.0;
    for (long m = 1; m < s; ++m) {
        term *= x / static_cast<double>(m);
        sum += term;
    }
    double fact = 1.0;
    for (long m = 2; m < s; ++m) fact *= static_cast<double>(m);
    return std::exp(-x) * fact * sum;
}

}  // namespace

std::complex<double> lambda_numeric(const Eigenform& f, const DirichletCharacter& chi, long j) {
    if (!chi.is_primitive()) throw PreconditionError("primitive character required");
    long k = f.weight, n_mod = chi.modulus();
    if (j < 1 || j > k - 1) throw PreconditionError("argument outside the critical strip");
    const double two_pi = 8.0 * std::atan(1.0);
    std::vector<std::complex<double>> cv(n_mod, 0.0);
    for (long a = 0; a < n_mod; ++a)
        if (chi.value_exponent(a) || n_mod == 1) cv[a] = to_complex(chi.value(a));
    std::complex<double> sum1 = 0.0, sum2 = 0.0;
    for (long n = 1; n < f.f.prec; ++n) {
        double an = to_double(f.f.c[n]);
        double xn = two_pi * n / n_mod;
        sum1 += cv[n % n_mod] * an * std::pow(two_pi * n, static_cast<double>(-j)) *
                upper_gamma(j, xn);
        sum2 += std::conj(cv[n % n_mod]) * an * std::pow(two_pi * n, static_cast<double>(j - k)) *
                upper_gamma(k - j, xn);
    }
    std::complex<double> tau = to_complex(gauss_sum(chi));
    std::complex<double> root = tau * tau / static_cast<double>(n_mod);
    double ik = (k % 4 == 0) ? 1.0 : -1.0;
    return sum1 + root * std::pow(static_cast<double>(n_mod), static_cast<double>(k - 2 * j)) *
                      ik * sum2;
}

}  // namespace dlab
