#include "pchi/eval.hpp"

#include <optional>

namespace pchi {

Ratio partial_sum(const ChiSpec& spec, const Natural& terms) {
    const unsigned long last = to_ulong(terms);
    // Accumulate chi(n) * N!/n! over the common denominator N!.
    Integer num = 0;
    Integer weight = 1;  // N!/n! for the current n
    for (unsigned long n = last;; --n) {
        num += chi_at(spec, n) * weight;
        if (n == 0) break;
        weight *= n;
    }
    return make_ratio(num, factorial(terms));
}

Ratio tail_bound(const ChiSpec& spec, const Natural& terms) {
    if (terms < 1) throw std::invalid_argument("tail_bound requires N >= 1");
    return make_ratio(effective_bound(spec), terms * factorial(terms));
}

ValueEnclosure enclose_value(const ChiSpec& spec, const Natural& terms) {
    Ratio lo = partial_sum(spec, terms);
    Ratio tail = tail_bound(spec, terms);
    return ValueEnclosure{{lo, lo + tail}, terms, tail};
}

ValueEnclosure enclose_to_width(const ChiSpec& spec, const Ratio& eps) {
    if (sgn(eps) <= 0) throw std::invalid_argument("enclose_to_width requires eps > 0");
    const Natural bound_m = effective_bound(spec);
    auto bound_at = [&](unsigned long n) {
        return make_ratio(bound_m, Natural(n) * factorial(Natural(n)));
    };

    unsigned long hi = 1;
    while (bound_at(hi) > eps) hi *= 2;
    unsigned long lo = hi / 2;  // 0 when hi == 1; bound_at(lo) > eps for lo >= 1
    while (hi - lo > 1) {
        unsigned long mid = lo + (hi - lo) / 2;
        (bound_at(mid) <= eps ? hi : lo) = mid;
    }
    return enclose_value(spec, Natural(hi));
}

namespace {

// floor(v*10^k + 1/2), i.e. the round-to-nearest cell index, or nullopt when
// v lies exactly on a rounding boundary.
std::optional<Integer> rounding_cell(const Ratio& value, const Integer& scale) {
    Ratio shifted = value * scale + make_ratio(1, 2);
    if (is_integer(shifted)) return std::nullopt;
    return floor_of(shifted);
}

std::string format_scaled(const Integer& cell, unsigned long k) {
    std::string digits = cell.get_str();
    if (digits.size() <= k) digits.insert(0, k + 1 - digits.size(), '0');
    digits.insert(digits.size() - k, ".");
    return digits;
}

}  // namespace

std::pair<DecimalString, ValueEnclosure> decimal_with_enclosure(const ChiSpec& spec,
                                                                const Natural& fractional_digits) {
    if (fractional_digits < 1) throw std::invalid_argument("decimal requires k >= 1");
    const unsigned long k = to_ulong(fractional_digits);
    const Integer scale = pow10(k);

    ValueEnclosure enc = enclose_to_width(spec, make_ratio(1, scale * 100));
    for (int attempt = 0; attempt <= 12; ++attempt) {
        auto cell_lo = rounding_cell(enc.interval.lo, scale);
        auto cell_hi = rounding_cell(enc.interval.hi, scale);
        if (cell_lo && cell_hi && *cell_lo == *cell_hi)
            return {DecimalString{format_scaled(*cell_lo, k), true}, enc};
        if (attempt < 12) enc = enclose_value(spec, enc.terms_used * 2);
    }
    throw RoundingUndecidable("rounding undecidable at " + std::to_string(k) +
                              " digits: value sits on a rounding boundary");
}

DecimalString decimal(const ChiSpec& spec, const Natural& fractional_digits) {
    return decimal_with_enclosure(spec, fractional_digits).first;
}

}  // namespace pchi
