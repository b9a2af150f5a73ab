// Irrationality certificates for factorial series.
//
// Write P = sum chi(n)/n! with 0 <= chi(n) <= M. If P were a/b, then
//   X_b := b! * sum_{n>b} chi(n)/n!
// would be a positive integer, yet the geometric majorant forces X_b < M/b,
// which is < 1 for every b > M. Denominators b <= M are screened one by one
// with an exact enclosure of X_b shown to contain no integer. A certificate
// records all screening enclosures plus the symbolic b > M chain, and can be
// re-verified by deterministic replay from the stored term counts alone.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "pchi/eval.hpp"
#include "pchi/series.hpp"

namespace pchi {

struct DenominatorRecord {
    Natural b;
    Natural terms_used;  // N of the enclosure; N >= b + 1
    Ratio x_lo;          // exact partial sum of X_b up to N
    Ratio x_hi;          // x_lo + M*b!/(N!*N)
    bool operator==(const DenominatorRecord&) const = default;
};

struct LargeBArgument {
    Ratio bound;  // M/(M+1): X_b < M/b <= M/(M+1) < 1 for every b > M
    bool operator==(const LargeBArgument&) const = default;
};

enum class Verdict { Irrational };

struct Certificate {
    ChiSpec spec;
    Natural bound_m;
    std::vector<DenominatorRecord> screening;  // exactly b = 1..M, ascending
    LargeBArgument large_b;
    Verdict verdict = Verdict::Irrational;
    bool operator==(const Certificate&) const = default;
};

struct VerificationFailure {
    std::string record_id;  // "b=4", or "certificate" for global checks
    std::string reason;
};

struct VerificationOutcome {
    bool ok = false;
    std::vector<VerificationFailure> failures;
};

// Certification refused: the series is a finite sum with the given value.
class RationalSeriesError : public std::runtime_error {
  public:
    explicit RationalSeriesError(Ratio value)
        : std::runtime_error("series is rational: " + ratio_string(value)),
          value_(std::move(value)) {}
    const Ratio& value() const { return value_; }

  private:
    Ratio value_;
};

// Screening hit the refinement cap without an integer-free enclosure.
class ScreeningInconclusive : public std::runtime_error {
  public:
    explicit ScreeningInconclusive(Natural b)
        : std::runtime_error("screening inconclusive for b=" + b.get_str()),
          b_(std::move(b)) {}
    const Natural& b() const { return b_; }

  private:
    Natural b_;
};

class CertificateFormatError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Exact b! * sum_{n=b+1}^{N} chi(n)/n!. Requires N >= b + 1.
Ratio x_partial(const ChiSpec& spec, const Natural& b, const Natural& terms);

// [x_partial, x_partial + M*b!/(N!*N)]; the true X_b lies inside.
Interval x_enclosure(const ChiSpec& spec, const Natural& b, const Natural& terms);

// M/b; X_b < M/b holds strictly for every b >= 1.
Ratio theorem_bound(const ChiSpec& spec, const Natural& b);

// Exact check of b!/n! <= (1+b)^(b-n) for n >= b+1 (equality iff n = b+1).
bool factorial_inequality_check(const Natural& b, const Natural& n);

// True iff [lo, hi] with lo > 0 contains no integer.
bool integer_free(const Interval& iv);

// Refines N (doubling from b + 2*|cycle| + 8, at most 12 doublings) until
// the enclosure of X_b is strictly positive and integer-free.
DenominatorRecord screen_denominator(const ChiSpec& spec, const Natural& b);

// Full certificate: screening for b = 1..M plus the large-b chain.
// jobs = 0 means use the available hardware parallelism.
Certificate certify(const ChiSpec& spec, unsigned jobs = 0);

// Independent re-check by deterministic replay: recomputes every enclosure
// from spec + terms_used, checks positivity, integer-freeness, coverage of
// b = 1..M, the nonzero-cycle gate and the large-b chain. Never calls
// screen_denominator or certify; failures are data, not exceptions.
VerificationOutcome verify(const Certificate& cert);

// Canonical JSON (fixed field order, big numbers as decimal strings,
// rationals as "num/den" in lowest terms, newline-terminated).
std::string certificate_to_json(const Certificate& cert);

// Strict parse of the canonical form. Throws CertificateFormatError.
Certificate certificate_from_json(std::string_view text);

}  // namespace pchi
