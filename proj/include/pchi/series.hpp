// Coefficient model for factorial series P = sum_{n>=0} chi(n)/n!.
//
// chi is described finitely as a prefix followed by a repeating cycle,
// with every value a nonnegative integer bounded by effective_bound().
// All types are immutable after construction and every operation is pure.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pchi/numbers.hpp"

namespace pchi {

class ChiSpec {
  public:
    // Validates: cycle nonempty, values >= 0, declared bound (if any) >= 1
    // and >= every value. Throws std::invalid_argument otherwise.
    static ChiSpec make(std::vector<Natural> prefix, std::vector<Natural> cycle,
                        std::optional<Natural> declared_bound = std::nullopt);

    const std::vector<Natural>& prefix() const { return prefix_; }
    const std::vector<Natural>& cycle() const { return cycle_; }
    const std::optional<Natural>& declared_bound() const { return bound_; }

    bool operator==(const ChiSpec&) const = default;

  private:
    ChiSpec() = default;
    std::vector<Natural> prefix_;
    std::vector<Natural> cycle_;
    std::optional<Natural> bound_;
};

enum class SeriesClass {
    EventuallyZero,         // all cycle values are 0: the series is a finite sum
    CertifiableIrrational,  // cycle contains a nonzero value
};

// chi(n): prefix lookup for n < |prefix|, cycle lookup (mod |cycle|) beyond.
const Natural& chi_at(const ChiSpec& spec, unsigned long n);
Natural chi_at(const ChiSpec& spec, const Natural& n);

// Declared bound when present, else max over all values, floored at 1 so
// that M is always a valid divisor.
Natural effective_bound(const ChiSpec& spec);

SeriesClass classify(const ChiSpec& spec);

// Exact value of the (finite) series for EventuallyZero specs, else absent.
std::optional<Ratio> rational_shortcut(const ChiSpec& spec);

// Value-wise decrement by one; evaluating the result gives P - e.
// Requires every value >= 1; throws std::invalid_argument otherwise.
ChiSpec subtract_e(const ChiSpec& spec);

// Built-in worked examples: "example1", "example3", "example4".
ChiSpec builtin_example(const std::string& name);
const std::vector<std::string>& builtin_example_names();

}  // namespace pchi
