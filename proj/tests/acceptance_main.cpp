// End-to-end acceptance drive: eleven checks, one verdict line each.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "denomlab/bernoulli.hpp"
#include "denomlab/denom_lab.hpp"
#include "denomlab/siegel.hpp"

using namespace dlab;

namespace {

constexpr double kFloatRatioTol = 1e-8;  // relative, criterion 8
constexpr double kMinutes1 = 60.0, kMinutes2 = 120.0, kMinutes5 = 300.0,
                 kMinutes10 = 600.0, kMinutes30 = 1800.0;

const DirichletCharacter kTrivial = DirichletCharacter::principal(1);

std::vector<std::string> g_notes;

void note(const std::string& s) { g_notes.push_back(s); }

Rational odd_part(Rational x) {
    if (x == 0) return x;
    Int n = numerator(x), d = denominator(x);
    while (n % 2 == 0) n /= 2;
    while (d % 2 == 0) d /= 2;
    if (n < 0) n = -n;
    return Rational(n, d);
}

std::complex<double> ipow(long e) {
    static const std::complex<double> table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[((e % 4) + 4) % 4];
}

// completed product oracle up to factors constant in (l1, l2, chi1, chi2)
std::complex<double> product_oracle(const Eigenform& f, long l1, long l2,
                                    const DirichletCharacter& chi1,
                                    const DirichletCharacter& chi2) {
    DirichletCharacter psi0 = (chi1 * chi2).primitive_part();
    return lambda_numeric(f, chi1, l1) * lambda_numeric(f, chi2, l2) /
           (ipow(l1 + l2 + 1) * to_complex(gauss_sum(psi0)));
}

// ---------------------------------------------------------------------------

bool criterion1() {  // local series factorization against the brute-force sum
    long checked = 0;
    for (const HalfIntegralMatrix& B : corpus_nondegenerate(6, 50)) {
        for (long long p : {2LL, 3LL, 5LL, 7LL}) {
            LocalSiegelPolynomial F = local_F(B, p);
            Poly gamma = gamma_factor(B, p);
            long d = F.degree();
            for (long s = d + 3; s <= d + 5; ++s) {
                Rational x = Rational(Int(1), int_pow(Int(p), s));
                Rational got = poly_eval(gamma, x) * eval_at(F, x);
                if (got != siegel_series_bruteforce(B, p, s)) {
                    note("series mismatch at " + B.to_string() + " p=" + std::to_string(p) +
                         " s=" + std::to_string(s));
                    return false;
                }
                ++checked;
            }
        }
    }
    note("criterion 1 checked " + std::to_string(checked) + " evaluations");
    return checked > 0;
}

bool criterion2() {  // scaled integrality of the local polynomial coefficients
    long checked = 0;
    for (const HalfIntegralMatrix& B : corpus_nondegenerate(6, 50)) {
        for (long long p : {2LL, 3LL, 5LL, 7LL}) {
            if (!kitaoka_check(B, p)) {
                note("coefficient divisibility fails at " + B.to_string() +
                     " p=" + std::to_string(p));
                return false;
            }
            ++checked;
        }
    }
    note("criterion 2 checked " + std::to_string(checked) + " pairs");
    return checked > 0;
}

bool criterion3() {  // (2l-2)(2l-1)! clears every level-1 coefficient
    for (long l : {4L, 6L, 8L, 10L, 12L}) {
        IntegralityReport rep = integrality_validators(l, 100, false);
        if (!rep.counterexamples.empty()) {
            note(rep.counterexamples.front());
            return false;
        }
        note("weight " + std::to_string(l) + ": " + std::to_string(rep.checked_level1) +
             " level-1 coefficients integral");
    }
    return true;
}

bool criterion4() {  // normalized twisted coefficients have conductor-only denominators
    for (long l : {4L, 6L}) {
        IntegralityReport rep = integrality_validators(l, 40, true);
        if (!rep.counterexamples.empty()) {
            note(rep.counterexamples.front());
            return false;
        }
        if (rep.checked_twisted == 0) return false;
        note("weight " + std::to_string(l) + ": " + std::to_string(rep.checked_twisted) +
             " twisted coefficients bounded");
    }
    return true;
}

bool criterion5() {  // Clausen-von Staudt
    for (long m = 2; m <= 60; m += 2) {
        Rational s = bernoulli_number(m);
        for (long long p = 2; p <= m + 1; ++p) {
            if (!is_probable_prime(p)) continue;
            if (m % (p - 1) == 0) s += Rational(1, p);
        }
        if (denominator(s) != 1) {
            note("B_" + std::to_string(m) + " plus prime reciprocals is not integral");
            return false;
        }
    }
    return true;
}

bool criterion6() {  // eigenform sanity
    Series<Rational> delta = delta_series(1001);
    for (long n = 1; n <= 1000; ++n) {
        Int sigma = 0;
        for (long d = 1; d <= n; ++d)
            if (n % d == 0) sigma += int_pow(Int(d), 11);
        Rational diff = delta.coeff(n) - Rational(sigma);
        if (numerator(diff) % 691 != 0 || denominator(diff) != 1) {
            note("tau congruence fails at n=" + std::to_string(n));
            return false;
        }
    }
    for (long k : {12L, 16L, 18L, 20L, 22L, 24L, 26L}) {
        for (const Eigenform& f : eigenforms(k, 170)) {
            for (long long p : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL}) {
                QuadraticNumber sq = f.f.coeff(p) * f.f.coeff(p);
                QuadraticNumber want =
                    f.f.coeff(p * p) + QuadraticNumber(Rational(int_pow(Int(p), k - 1)));
                if (!(sq == want)) {
                    note("Hecke relation fails at k=" + std::to_string(k) +
                         " p=" + std::to_string(p));
                    return false;
                }
                for (long long q : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL}) {
                    if (q == p) continue;
                    if (!(f.f.coeff(p) * f.f.coeff(q) == f.f.coeff(p * q))) {
                        note("multiplicativity fails at k=" + std::to_string(k));
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

bool criterion7() {  // anchor family against symbol-side values, odd parts
    struct Case {
        long k, ref_l1, ref_l2, l1, l2;
    };
    for (const Case& c : {Case{12, 11, 6, 11, 8}, Case{16, 15, 12, 15, 10},
                          Case{16, 15, 12, 14, 11}}) {
        auto basis = eigenforms(c.k, 8);
        auto u = eigen_functionals(basis[0]);
        auto norm = period_normalization(basis[0], u, c.ref_l1, c.ref_l2);
        QuadraticNumber v =
            to_quadratic(critical_value(u, norm, c.l1, c.l2, kTrivial, kTrivial));
        QuadraticNumber anchor = anchor_decomposition(c.k, c.l1, c.l2).cusp[0];
        if (odd_part(v.to_rational()) != odd_part(anchor.to_rational())) {
            note("odd parts differ at k=" + std::to_string(c.k) + " (" +
                 std::to_string(c.l1) + "," + std::to_string(c.l2) + ")");
            return false;
        }
    }
    return true;
}

bool criterion8() {  // exact value ratios against the analytic oracle
    struct Case {
        long l1, l2;
        const char* chi1;
        const char* chi2;
    };
    long cases = 0;
    auto run_weight = [&](long k, long base_l1, long base_l2,
                          const std::vector<Case>& cs) {
        auto basis = eigenforms(k, 420);
        auto u = eigen_functionals(basis[0]);
        auto norm = period_normalization(basis[0], u);
        auto base =
            critical_value(u, norm, base_l1, base_l2, kTrivial, kTrivial);
        std::complex<double> base_oracle =
            product_oracle(basis[0], base_l1, base_l2, kTrivial, kTrivial);
        for (const Case& c : cs) {
            auto chi1 = DirichletCharacter::from_label(c.chi1);
            auto chi2 = DirichletCharacter::from_label(c.chi2);
            auto v = critical_value(u, norm, c.l1, c.l2, chi1, chi2);
            std::complex<double> got = to_complex(v) / to_complex(base);
            std::complex<double> want =
                product_oracle(basis[0], c.l1, c.l2, chi1, chi2) / base_oracle;
            if (std::abs(got - want) > kFloatRatioTol * std::abs(want)) {
                note("ratio off at k=" + std::to_string(k) + " (" + std::to_string(c.l1) +
                     "," + std::to_string(c.l2) + ";" + c.chi1 + "," + c.chi2 + ")");
                return false;
            }
            ++cases;
        }
        return true;
    };
    if (!run_weight(12, 11, 6,
                    {{11, 8, "5:2", "1:0"},
                     {11, 7, "5:1", "1:0"},
                     {10, 7, "4:1", "3:1"},
                     {11, 8, "1:0", "1:0"}}))
        return false;
    if (!run_weight(16, 15, 10, {{15, 12, "1:0", "1:0"}, {15, 12, "5:2", "1:0"}}))
        return false;
    note("criterion 8 checked " + std::to_string(cases) + " ratios");
    return cases >= 6;
}

bool criterion9() {  // raising a cusp form projects onto the Eisenstein line
    long checked = 0;
    for (long k : {12L, 16L, 18L}) {
        Series<Rational> ek = eisenstein_series(k, 12);
        for (const Series<Rational>& h : miller_basis(k - 2, 12)) {
            if (!(h.coeff(0) == 0)) continue;  // Eisenstein direction
            NearlyHolo<Rational> lifted = raise_weight(NearlyHolo<Rational>(h));
            Series<Rational> proj = holomorphic_projection(lifted);
            Rational scale = proj.coeff(0) / ek.coeff(0);
            for (long n = 0; n < proj.prec; ++n) {
                if (!(proj.coeff(n) == scale * ek.coeff(n))) {
                    note("projection leaves the Eisenstein line at k=" + std::to_string(k));
                    return false;
                }
            }
            ++checked;
        }
    }
    note("criterion 9 checked " + std::to_string(checked) + " cusp directions");
    return checked > 0;
}

bool criterion10() {  // the denominator bound at desk scale
    long records = 0;
    for (long k : {12L, 16L, 18L, 20L, 22L, 24L, 26L}) {
        auto t0 = std::chrono::steady_clock::now();
        ScanRequest req;
        req.weight = k;
        req.cond_max = 8;
        req.threads = 0;
        auto recs = scan(req);
        if (recs.empty()) return false;
        for (const auto& rec : recs) {
            if (!rec.ok) {
                note("record error at k=" + std::to_string(k) + " (" +
                     std::to_string(rec.l1) + "," + std::to_string(rec.l2) + ";" +
                     rec.chi1 + "," + rec.chi2 + "): " + rec.error);
                return false;
            }
            if (!rec.refined_ok) {
                note("counterexample prime " + std::to_string(rec.refined_witness) +
                     " at k=" + std::to_string(k) + " (" + std::to_string(rec.l1) + "," +
                     std::to_string(rec.l2) + ";" + rec.chi1 + "," + rec.chi2 + ")");
                return false;
            }
        }
        records += static_cast<long>(recs.size());

        // adjacent exponents with trivial characters sit outside the scan's
        // admission rule but inside the refined bound's reach
        auto basis = eigenforms(k, 8);
        auto u = eigen_functionals(basis[0]);
        auto norm = period_normalization(basis[0], u);
        auto cert = bound_certificate(k);
        for (long l2 = k / 2; l2 <= k - 2; ++l2) {
            CriticalValueRecord rec;
            rec.weight = k;
            rec.l1 = l2 + 1;
            rec.l2 = l2;
            rec.chi1 = rec.chi2 = "1:0";
            rec.cond_product = 1;
            rec.value = critical_value(u, norm, l2 + 1, l2, kTrivial, kTrivial);
            rec.norm_value = relative_norm(rec.value);
            rec.denominator = denominator_support(rec.norm_value);
            rec.ok = true;
            Verdict verdict = verify_refined_bound(rec, cert);
            if (!verdict.pass) {
                note("adjacent counterexample prime " + std::to_string(verdict.witness) +
                     " at k=" + std::to_string(k) + " l2=" + std::to_string(l2));
                return false;
            }
            ++records;
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                          .count();
        note("k=" + std::to_string(k) + ": " + std::to_string(recs.size()) +
             " scan records clean in " + std::to_string(secs) + "s");
    }
    note("criterion 10 checked " + std::to_string(records) + " records");
    return records > 0;
}

bool criterion11() {  // determinism of the scan stream
    ScanRequest req;
    req.weight = 12;
    req.cond_max = 6;
    req.threads = 1;
    std::ostringstream a, b, c;
    report_emit(scan(req), a);
    report_emit(scan(req), b);
    req.threads = 8;
    report_emit(scan(req), c);
    if (a.str().empty()) return false;
    return a.str() == b.str() && a.str() == c.str();
}

}  // namespace

int main() {
    struct Entry {
        const char* name;
        std::function<bool()> run;
        double budget_secs;
    };
    const std::vector<Entry> entries = {
        {"CRITERION 1", criterion1, kMinutes5},   {"CRITERION 2", criterion2, kMinutes1},
        {"CRITERION 3", criterion3, kMinutes5},   {"CRITERION 4", criterion4, kMinutes10},
        {"CRITERION 5", criterion5, 1.0},         {"CRITERION 6", criterion6, kMinutes1},
        {"CRITERION 7", criterion7, kMinutes5},   {"CRITERION 8", criterion8, kMinutes2},
        {"CRITERION 9", criterion9, kMinutes1},   {"CRITERION 10", criterion10, kMinutes30},
        {"CRITERION 11", criterion11, kMinutes5},
    };
    int failures = 0;
    for (size_t i = 0; i < entries.size(); ++i) {
        g_notes.clear();
        bool ok = false;
        std::string why;
        auto t0 = std::chrono::steady_clock::now();
        try {
            ok = entries[i].run();
        } catch (const std::exception& e) {
            ok = false;
            why = e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (ok && secs > entries[i].budget_secs) {
            ok = false;
            why = "over time budget";
        }
        if (!ok) ++failures;
        std::printf("%s: %s  (%.1fs)\n", entries[i].name, ok ? "PASS" : "FAIL", secs);
        if (!ok) {
            if (!why.empty()) std::printf("    %s\n", why.c_str());
            for (const auto& n : g_notes) std::printf("    %s\n", n.c_str());
        }
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
