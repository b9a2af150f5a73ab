// Exact partial sums, rigorous tail bounds, interval enclosures of the
// series value, and correctly rounded decimal output.
//
// The tail estimate reuses the geometric comparison b!/n! <= (1+b)^(b-n):
// for any cutoff N >= 1,  sum_{n>N} chi(n)/n! <= M/(N*N!).

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "pchi/series.hpp"

namespace pchi {

struct Interval {
    Ratio lo;
    Ratio hi;  // invariant: lo <= hi
};

struct ValueEnclosure {
    Interval interval;   // [partial_sum(N), partial_sum(N) + tail_bound(N)]
    Natural terms_used;  // N
    Ratio tail_bound;
};

struct DecimalString {
    std::string digits;  // "d.dd...d" with exactly k fractional digits
    bool round_to_nearest = true;
};

// The interval straddles a rounding boundary even after the refinement cap.
// Reachable only when the value sits exactly on a boundary, i.e. for
// rational specs; irrational values always resolve.
class RoundingUndecidable : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Exact sum_{n=0}^{N} chi(n)/n! in lowest terms.
Ratio partial_sum(const ChiSpec& spec, const Natural& terms);

// M/(N*N!) with M = effective_bound(spec); majorizes the true tail.
// Throws std::invalid_argument for N = 0.
Ratio tail_bound(const ChiSpec& spec, const Natural& terms);

ValueEnclosure enclose_value(const ChiSpec& spec, const Natural& terms);

// Smallest N whose tail bound is <= eps (doubling then bisection over the
// strictly decreasing bound). Requires eps > 0.
ValueEnclosure enclose_to_width(const ChiSpec& spec, const Ratio& eps);

// Round-to-nearest with k >= 1 fractional digits, certified: the enclosure
// is refined until the whole interval rounds to a single string.
DecimalString decimal(const ChiSpec& spec, const Natural& fractional_digits);

// Same, also returning the enclosure that settled the rounding.
std::pair<DecimalString, ValueEnclosure> decimal_with_enclosure(const ChiSpec& spec,
                                                                const Natural& fractional_digits);

}  // namespace pchi
