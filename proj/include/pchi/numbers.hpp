// Exact arithmetic primitives shared by every module.
//
// All quantities in this library are arbitrary-precision integers or
// fractions; no floating point appears anywhere on a certified path.
// Storage is delegated to GMP: Integer/Natural are mpz_class, Ratio is
// mpq_class kept canonical (lowest terms, positive denominator).

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace pchi {

using Integer = mpz_class;
// Nonnegative by convention; operations validate at their boundaries.
using Natural = mpz_class;
using Ratio = mpq_class;

// num/den reduced to lowest terms, den > 0. Throws std::domain_error on den == 0.
inline Ratio make_ratio(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) throw std::domain_error("make_ratio: zero denominator");
    Ratio q(num, den);
    q.canonicalize();
    return q;
}

// Loop-bound conversion; throws std::overflow_error when v < 0 or v > ULONG_MAX.
inline unsigned long to_ulong(const Integer& v) {
    if (sgn(v) < 0 || !v.fits_ulong_p())
        throw std::overflow_error("integer out of range for an index: " + v.get_str());
    return v.get_ui();
}

// n! for n >= 0. Sizes beyond unsigned long would not fit in memory anyway.
inline Integer factorial(const Natural& n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), to_ulong(n));
    return r;
}

// base^exp with exp >= 0.
inline Integer ipow(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline Integer pow10(unsigned long k) { return ipow(10, k); }

inline Integer floor_of(const Ratio& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Integer ceil_of(const Ratio& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline bool is_integer(const Ratio& q) { return q.get_den() == 1; }

// Decimal rendering used by every serialized format.
inline std::string natural_string(const Natural& n) { return n.get_str(); }

// "num/den" in lowest terms, always with the "/den" part.
inline std::string ratio_string(const Ratio& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Strict parsers for the serialized formats: digits only, no signs, no blanks.
inline Natural parse_natural(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty natural");
    for (char c : text)
        if (c < '0' || c > '9')
            throw std::invalid_argument("invalid natural: \"" + std::string(text) + "\"");
    return Natural(std::string(text), 10);
}

// Accepts "num/den" (den > 0) or a bare integer with optional leading '-'.
inline Ratio parse_ratio(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num_part = text.substr(0, slash);
    bool negative = false;
    if (!num_part.empty() && num_part.front() == '-') {
        negative = true;
        num_part.remove_prefix(1);
    }
    Integer num = parse_natural(num_part);
    if (negative) num = -num;
    if (slash == std::string_view::npos) return Ratio(num);
    Natural den = parse_natural(text.substr(slash + 1));
    return make_ratio(num, den);
}

}  // namespace pchi
