#include "denomlab/denom_lab.hpp"

#include "denomlab/bernoulli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

namespace dlab {

namespace {

long long to_ll(const Int& n) { return n.convert_to<long long>(); }

void add_odd_support(std::set<long long>& s, const Int& n) {
    for (const auto& [p, e] : factorize(n)) {
        long long q = to_ll(p);
        if (q > 2) s.insert(q);
    }
}

}  // namespace

BoundCertificate bound_certificate(long weight) {
    std::vector<Eigenform> basis = eigenforms(weight, 3);
    BoundCertificate cert;
    cert.weight = weight;
    cert.disc = basis[0].disc;
    cert.zeta_edge = zeta_negative(weight - 1);
    cert.congruence_norm = 1;
    for (const auto& [P, v] : congruence_ideal(weight))
        cert.congruence_norm *= int_pow(Int(P.p), v * P.residue_degree());

    std::set<long long> coarse;
    add_odd_support(coarse, numerator(cert.zeta_edge));
    add_odd_support(coarse, denominator(cert.zeta_edge));
    add_odd_support(coarse, factorial(weight));
    add_odd_support(coarse, cert.congruence_norm);
    cert.coarse.assign(coarse.begin(), coarse.end());

    std::set<long long> refined;
    for (long long p = 3; p <= weight; ++p)
        if (is_probable_prime(p)) refined.insert(p);
    add_odd_support(refined, numerator(cert.zeta_edge));
    add_odd_support(refined, cert.congruence_norm);
    cert.refined.assign(refined.begin(), refined.end());
    return cert;
}

Verdict verify_coarse_bound(const CriticalValueRecord& rec, const BoundCertificate& cert) {
    for (const auto& [P, v] : rec.denominator) {
        if (v >= 0) continue;
        long long p = P.p;
        if (p == 2) continue;
        if (rec.cond_product % p == 0) continue;
        if (std::binary_search(cert.coarse.begin(), cert.coarse.end(), p)) continue;
        return {false, p};
    }
    return {true, 0};
}

Verdict verify_refined_bound(const CriticalValueRecord& rec, const BoundCertificate& cert) {
    for (const auto& [P, v] : rec.denominator) {
        if (v >= 0) continue;
        long long p = P.p;
        if (p <= cert.weight) continue;
        if (rec.cond_product % p == 0) continue;
        if (std::binary_search(cert.refined.begin(), cert.refined.end(), p)) continue;
        return {false, p};
    }
    return {true, 0};
}

std::optional<long long> find_q0(const Eigenform& f, long l2, const PrimeIdeal& P,
                                 long long bound) {
    if (P.p <= f.weight)
        throw PreconditionError("find_q0: ideal must lie above a prime beyond the weight");
    if (l2 < 1 || l2 > f.weight - 1)
        throw PreconditionError("find_q0: exponent outside the critical strip");
    if (P.d != f.disc)
        throw PreconditionError("find_q0: ideal from a different coefficient field");
    for (long long q = 2; q <= bound; ++q) {
        if (!is_probable_prime(q) || q == P.p) continue;
        // the Euler-type factor 1 - c_f(q) q^{-l2+1} + q^{weight-2l2+1},
        // cleared of q-powers by multiplying through with q^{l2-1}
        Rational s = Rational(int_pow(Int(q), l2 - 1)) + Rational(int_pow(Int(q), f.weight - l2));
        QuadraticNumber e = QuadraticNumber(f.disc, s, Rational(0)) - f.f.coeff(q);
        if (e.is_zero()) continue;
        if (valuation(e, P) == 0) return q;
    }
    return std::nullopt;
}

namespace {

std::vector<std::pair<long, long>> default_pairs(long k) {
    std::vector<std::pair<long, long>> out;
    for (long l1 = (k + 2) / 2; l1 <= k - 1; ++l1)
        for (long l2 = k - l1 + 1; l2 <= l1 - 1; ++l2) out.emplace_back(l1, l2);
    return out;
}

std::vector<DirichletCharacter> primitive_characters(long long cond_max) {
    std::vector<DirichletCharacter> out;
    for (long long n = 1; n <= cond_max; ++n)
        for (const auto& chi : DirichletCharacter::all_modulo(n))
            if (chi.is_primitive()) out.push_back(chi);
    return out;
}

CriticalValueRecord compute_record(const EigenFunctionals& u, const PeriodNormalization& norm,
                                   const BoundCertificate& cert, long l1, long l2,
                                   const DirichletCharacter& chi1,
                                   const DirichletCharacter& chi2) {
    CriticalValueRecord rec;
    rec.weight = u.weight;
    rec.l1 = l1;
    rec.l2 = l2;
    rec.chi1 = chi1.label();
    rec.chi2 = chi2.label();
    rec.cond_product = chi1.modulus() * chi2.modulus();
    auto start = std::chrono::steady_clock::now();
    try {
        rec.value = critical_value(u, norm, l1, l2, chi1, chi2);
        rec.norm_value = relative_norm(rec.value);
        rec.denominator = denominator_support(rec.norm_value);
        rec.value_denominator = denominator_support(rec.value);
        rec.ok = true;
        Verdict c = verify_coarse_bound(rec, cert);
        rec.coarse_ok = c.pass;
        rec.coarse_witness = c.witness;
        Verdict r = verify_refined_bound(rec, cert);
        rec.refined_ok = r.pass;
        rec.refined_witness = r.witness;
    } catch (const std::exception& e) {
        rec.ok = false;
        rec.error = e.what();
    }
    rec.millis = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - start)
                     .count();
    return rec;
}

}  // namespace

std::vector<CriticalValueRecord> scan(const ScanRequest& req) {
    std::vector<Eigenform> basis = eigenforms(req.weight, 8);
    const Eigenform& f = basis.front();
    EigenFunctionals u = eigen_functionals(f);
    PeriodNormalization norm = period_normalization(f, u);
    BoundCertificate cert = bound_certificate(req.weight);

    std::vector<DirichletCharacter> chars = primitive_characters(req.cond_max);
    std::vector<std::pair<long, long>> pairs =
        req.pairs ? *req.pairs : default_pairs(req.weight);

    struct Task {
        long l1, l2;
        size_t i1, i2;
    };
    std::vector<Task> tasks;
    for (const auto& [l1, l2] : pairs)
        for (size_t i1 = 0; i1 < chars.size(); ++i1)
            for (size_t i2 = 0; i2 < chars.size(); ++i2)
                if (admissibility_failure(req.weight, l1, l2, chars[i1], chars[i2]).empty())
                    tasks.push_back({l1, l2, i1, i2});

    std::vector<CriticalValueRecord> records(tasks.size());
    long threads = req.threads > 0
                       ? req.threads
                       : static_cast<long>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    threads = std::min<long>(threads, static_cast<long>(tasks.size()));

    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            const Task& t = tasks[i];
            records[i] =
                compute_record(u, norm, cert, t.l1, t.l2, chars[t.i1], chars[t.i2]);
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (long i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return records;
}

std::map<long long, long long> denominator_profile(
    const std::vector<CriticalValueRecord>& recs) {
    std::map<long long, long long> out;
    for (const auto& rec : recs) {
        if (!rec.ok) continue;
        for (const auto& [P, v] : rec.denominator) {
            if (v >= 0) continue;
            long long p = P.p;
            if (p == 2 || rec.cond_product % p == 0) continue;
            auto it = out.find(p);
            if (it == out.end())
                out[p] = -v;
            else
                it->second = std::max(it->second, -v);
        }
    }
    return out;
}

namespace {

std::string ideal_tag(const PrimeIdeal& P) {
    switch (P.kind) {
        case PrimeIdeal::Kind::Rational: return "q";
        case PrimeIdeal::Kind::Split: return "s" + std::to_string(P.root);
        case PrimeIdeal::Kind::Inert: return "i";
        case PrimeIdeal::Kind::Ramified: return "r";
    }
    throw FieldError("ideal_tag: unknown kind");
}

std::string valuation_triples(const PrimeValuationMap& m) {
    std::string s = "[";
    bool first = true;
    for (const auto& [P, v] : m) {
        if (!first) s += ';';
        first = false;
        s += "(" + std::to_string(P.p) + "," + ideal_tag(P) + "," + std::to_string(v) + ")";
    }
    return s + "]";
}

std::string verdict_token(bool pass, long long witness) {
    return pass ? "PASS" : "FAIL:" + std::to_string(witness);
}

std::string sanitize(const std::string& msg) {
    std::string out = msg;
    for (char& c : out)
        if (c == '|' || c == '\n') c = '/';
    return out;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    size_t start = 0;
    for (;;) {
        size_t bar = line.find('|', start);
        if (bar == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, bar - start));
        start = bar + 1;
    }
}

std::string expect_field(const std::vector<std::string>& parts, size_t index,
                         const std::string& key, long line_no) {
    if (index >= parts.size())
        throw ParseError("report line missing field " + key, line_no);
    const std::string& s = parts[index];
    if (s.rfind(key + "=", 0) != 0)
        throw ParseError("report line expected field " + key, line_no);
    return s.substr(key.size() + 1);
}

long long parse_ll(const std::string& s, long line_no) {
    try {
        size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("report line has a malformed integer '" + s + "'", line_no);
    }
}

PrimeValuationMap parse_triples(const std::string& s, long long d, long line_no) {
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw ParseError("valuation list must be bracketed", line_no);
    PrimeValuationMap out;
    std::string body = s.substr(1, s.size() - 2);
    size_t pos = 0;
    while (pos < body.size()) {
        size_t close = body.find(')', pos);
        if (body[pos] != '(' || close == std::string::npos)
            throw ParseError("malformed valuation triple", line_no);
        std::string entry = body.substr(pos + 1, close - pos - 1);
        size_t c1 = entry.find(',');
        size_t c2 = entry.find(',', c1 == std::string::npos ? c1 : c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw ParseError("malformed valuation triple", line_no);
        long long p = parse_ll(entry.substr(0, c1), line_no);
        std::string tag = entry.substr(c1 + 1, c2 - c1 - 1);
        long long v = parse_ll(entry.substr(c2 + 1), line_no);
        if (tag.empty()) throw ParseError("valuation triple missing its tag", line_no);
        PrimeIdeal P;
        P.p = p;
        switch (tag[0]) {
            case 'q':
                P.kind = PrimeIdeal::Kind::Rational;
                P.d = 1;
                break;
            case 's':
                P.kind = PrimeIdeal::Kind::Split;
                P.d = d;
                P.root = parse_ll(tag.substr(1), line_no);
                break;
            case 'i':
                P.kind = PrimeIdeal::Kind::Inert;
                P.d = d;
                break;
            case 'r':
                P.kind = PrimeIdeal::Kind::Ramified;
                P.d = d;
                break;
            default:
                throw ParseError("unknown ideal tag '" + tag + "'", line_no);
        }
        out[P] = v;
        pos = close + 1;
        if (pos < body.size()) {
            if (body[pos] != ';') throw ParseError("valuation triples must be ;-separated", line_no);
            ++pos;
        }
    }
    return out;
}

std::pair<bool, long long> parse_verdict(const std::string& s, long line_no) {
    if (s == "PASS") return {true, 0};
    if (s.rfind("FAIL:", 0) == 0) return {false, parse_ll(s.substr(5), line_no)};
    throw ParseError("malformed verdict '" + s + "'", line_no);
}

long long label_modulus(const std::string& label, long line_no) {
    size_t colon = label.find(':');
    if (colon == std::string::npos)
        throw ParseError("character label must be N:j", line_no);
    return parse_ll(label.substr(0, colon), line_no);
}

}  // namespace

void report_emit(const std::vector<CriticalValueRecord>& recs, std::ostream& os) {
    for (const auto& rec : recs) {
        os << "v1|k=" << rec.weight << "|l1=" << rec.l1 << "|l2=" << rec.l2
           << "|chi1=" << rec.chi1 << "|chi2=" << rec.chi2;
        if (!rec.ok) {
            os << "|err=" << sanitize(rec.error) << "\n";
            continue;
        }
        os << "|field=" << rec.value.modulus() << "," << rec.value.d
           << "|val=" << to_string(rec.value) << "|norm=" << to_string(rec.norm_value)
           << "|den=" << valuation_triples(rec.denominator)
           << "|vden=" << valuation_triples(rec.value_denominator)
           << "|coarse=" << verdict_token(rec.coarse_ok, rec.coarse_witness)
           << "|refined=" << verdict_token(rec.refined_ok, rec.refined_witness) << "\n";
    }
}

void report_emit(const std::vector<CriticalValueRecord>& recs, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw ParseError("cannot open report file " + path);
    report_emit(recs, os);
}

std::vector<CriticalValueRecord> report_load(std::istream& is) {
    std::vector<CriticalValueRecord> out;
    std::string line;
    long line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::vector<std::string> parts = split_fields(line);
        if (parts[0] != "v1") throw ParseError("unsupported report schema", line_no);
        CriticalValueRecord rec;
        rec.weight = static_cast<long>(parse_ll(expect_field(parts, 1, "k", line_no), line_no));
        rec.l1 = static_cast<long>(parse_ll(expect_field(parts, 2, "l1", line_no), line_no));
        rec.l2 = static_cast<long>(parse_ll(expect_field(parts, 3, "l2", line_no), line_no));
        rec.chi1 = expect_field(parts, 4, "chi1", line_no);
        rec.chi2 = expect_field(parts, 5, "chi2", line_no);
        rec.cond_product =
            label_modulus(rec.chi1, line_no) * label_modulus(rec.chi2, line_no);
        if (parts.size() == 7 && parts[6].rfind("err=", 0) == 0) {
            rec.ok = false;
            rec.error = parts[6].substr(4);
            out.push_back(std::move(rec));
            continue;
        }
        std::string field = expect_field(parts, 6, "field", line_no);
        size_t comma = field.find(',');
        if (comma == std::string::npos)
            throw ParseError("field descriptor must be modulus,disc", line_no);
        long long modulus = parse_ll(field.substr(0, comma), line_no);
        long long disc = parse_ll(field.substr(comma + 1), line_no);
        try {
            rec.value = parse_composite(expect_field(parts, 7, "val", line_no));
            rec.norm_value = parse_quadratic(expect_field(parts, 8, "norm", line_no));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), line_no);
        }
        if (rec.value.modulus() != modulus || rec.value.d != disc)
            throw ParseError("value does not match its field descriptor", line_no);
        rec.denominator = parse_triples(expect_field(parts, 9, "den", line_no), disc, line_no);
        rec.value_denominator =
            parse_triples(expect_field(parts, 10, "vden", line_no), 1, line_no);
        auto coarse = parse_verdict(expect_field(parts, 11, "coarse", line_no), line_no);
        auto refined = parse_verdict(expect_field(parts, 12, "refined", line_no), line_no);
        if (parts.size() != 13)
            throw ParseError("report line carries extra fields", line_no);
        rec.ok = true;
        rec.coarse_ok = coarse.first;
        rec.coarse_witness = coarse.second;
        rec.refined_ok = refined.first;
        rec.refined_witness = refined.second;
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<CriticalValueRecord> report_load(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ParseError("cannot open report file " + path);
    return report_load(is);
}

}  // namespace dlab
