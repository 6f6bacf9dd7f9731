#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "denomlab/critical_values.hpp"
#include "denomlab/primes.hpp"

namespace dlab {

// grid of completed-product values: all admissible exponent pairs against all
// ordered pairs of primitive characters with conductor at most cond_max
struct ScanRequest {
    long weight = 12;
    long long cond_max = 1;
    std::optional<std::vector<std::pair<long, long>>> pairs;  // default: full admissible window
    long threads = 1;                                         // 0 = hardware concurrency
};

struct CriticalValueRecord {
    long weight = 0;
    long l1 = 0;
    long l2 = 0;
    std::string chi1;  // character labels "N:j"
    std::string chi2;
    long long cond_product = 1;
    bool ok = false;
    std::string error;  // set when !ok

    CompositeNumber value;                // completed product against the weight's period scale
    QuadraticNumber norm_value;           // relative norm down to the coefficient field
    PrimeValuationMap denominator;        // negative valuations of norm_value
    PrimeValuationMap value_denominator;  // coefficientwise support of the value itself

    bool coarse_ok = false;  // denominator primes confined to 2, conductor primes, coarse set
    long long coarse_witness = 0;
    bool refined_ok = false;  // no prime > weight outside conductor and refined set
    long long refined_witness = 0;
    double millis = 0;  // not serialized
};

// allowed odd denominator primes for a weight's eigenform family; the coarse
// set collects the odd support of zeta_edge * (weight!)^2 * congruence_norm,
// the refined set is {odd p <= weight} plus the odd supports of the
// zeta_edge numerator and of congruence_norm
struct BoundCertificate {
    long weight = 0;
    long long disc = 1;
    Rational zeta_edge;  // zeta(1 - weight)
    Int congruence_norm = 1;
    std::vector<long long> coarse;
    std::vector<long long> refined;
};

BoundCertificate bound_certificate(long weight);

struct Verdict {
    bool pass = true;
    long long witness = 0;  // offending prime when !pass
};

// every denominator prime lies above 2, divides the record's conductor
// product, or sits in the certificate's coarse set
Verdict verify_coarse_bound(const CriticalValueRecord& rec, const BoundCertificate& cert);

// no denominator prime p > weight coprime to the conductor product escapes
// the refined set; covers adjacent-exponent records as well
Verdict verify_refined_bound(const CriticalValueRecord& rec, const BoundCertificate& cert);

// smallest prime q <= bound outside P with q^{l2-1} - c_f(q) + q^{weight-l2}
// a P-unit; pre: P lies above a rational prime > weight and the eigenform
// carries coefficients past bound
std::optional<long long> find_q0(const Eigenform& f, long l2, const PrimeIdeal& P,
                                 long long bound);

// deterministic record list ordered by (l1, l2, chi1 label, chi2 label);
// per-record failures are recorded inline and never abort the scan
std::vector<CriticalValueRecord> scan(const ScanRequest& req);

// observed maximal denominator exponent per odd non-conductor rational prime
std::map<long long, long long> denominator_profile(const std::vector<CriticalValueRecord>& recs);

// line-oriented report, one record per line; every field except millis
// round-trips exactly, and emit(load(emit(x))) == emit(x) byte for byte
void report_emit(const std::vector<CriticalValueRecord>& recs, std::ostream& os);
void report_emit(const std::vector<CriticalValueRecord>& recs, const std::string& path);
std::vector<CriticalValueRecord> report_load(std::istream& is);
std::vector<CriticalValueRecord> report_load(const std::string& path);

}  // namespace dlab
