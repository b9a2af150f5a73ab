#include "pchi/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace pchi {

ChiSpec ChiSpec::make(std::vector<Natural> prefix, std::vector<Natural> cycle,
                      std::optional<Natural> declared_bound) {
    if (cycle.empty()) throw std::invalid_argument("cycle must be nonempty");
    Natural max_value = 0;
    for (const auto& v : prefix) {
        if (sgn(v) < 0) throw std::invalid_argument("chi values must be nonnegative");
        max_value = std::max(max_value, v);
    }
    for (const auto& v : cycle) {
        if (sgn(v) < 0) throw std::invalid_argument("chi values must be nonnegative");
        max_value = std::max(max_value, v);
    }
    if (declared_bound) {
        if (*declared_bound < 1)
            throw std::invalid_argument("declared bound must be at least 1");
        if (*declared_bound < max_value)
            throw std::invalid_argument("value " + max_value.get_str() + " exceeds bound " +
                                        declared_bound->get_str());
    }
    ChiSpec s;
    s.prefix_ = std::move(prefix);
    s.cycle_ = std::move(cycle);
    s.bound_ = std::move(declared_bound);
    return s;
}

const Natural& chi_at(const ChiSpec& spec, unsigned long n) {
    if (n < spec.prefix().size()) return spec.prefix()[n];
    return spec.cycle()[(n - spec.prefix().size()) % spec.cycle().size()];
}

Natural chi_at(const ChiSpec& spec, const Natural& n) {
    if (sgn(n) < 0) throw std::invalid_argument("chi_at: negative index");
    if (n < spec.prefix().size()) return spec.prefix()[n.get_ui()];
    const Natural offset = n - spec.prefix().size();
    const Natural idx = offset % Natural(spec.cycle().size());
    return spec.cycle()[idx.get_ui()];
}

Natural effective_bound(const ChiSpec& spec) {
    if (spec.declared_bound()) return *spec.declared_bound();
    Natural max_value = 0;
    for (const auto& v : spec.prefix()) max_value = std::max(max_value, v);
    for (const auto& v : spec.cycle()) max_value = std::max(max_value, v);
    // All-zero specs get bound 1 so M never divides by zero downstream.
    return std::max(max_value, Natural(1));
}

SeriesClass classify(const ChiSpec& spec) {
    for (const auto& v : spec.cycle())
        if (sgn(v) != 0) return SeriesClass::CertifiableIrrational;
    return SeriesClass::EventuallyZero;
}

std::optional<Ratio> rational_shortcut(const ChiSpec& spec) {
    if (classify(spec) != SeriesClass::EventuallyZero) return std::nullopt;
    // Only the prefix contributes; accumulate over the common denominator L!.
    const std::size_t len = spec.prefix().size();
    if (len == 0) return Ratio(0);
    Integer num = 0;
    Integer weight = 1;  // (L-1)!/n!, built from n = L-1 downward
    for (std::size_t i = len; i-- > 0;) {
        num += spec.prefix()[i] * weight;
        if (i > 0) weight *= static_cast<unsigned long>(i);
    }
    return make_ratio(num, factorial(Natural(len - 1)));
}

ChiSpec subtract_e(const ChiSpec& spec) {
    auto decrement = [](const std::vector<Natural>& values) {
        std::vector<Natural> out;
        out.reserve(values.size());
        for (const auto& v : values) {
            if (sgn(v) == 0)
                throw std::invalid_argument("subtract_e requires chi(n) >= 1 for all n");
            out.push_back(v - 1);
        }
        return out;
    };
    std::vector<Natural> prefix = decrement(spec.prefix());
    std::vector<Natural> cycle = decrement(spec.cycle());
    std::optional<Natural> bound;
    if (spec.declared_bound()) {
        Natural b = *spec.declared_bound() - 1;
        // A decremented bound of 0 only happens when every value was 1; the
        // result is all-zero and needs no declared bound.
        if (b >= 1) bound = b;
    }
    return ChiSpec::make(std::move(prefix), std::move(cycle), std::move(bound));
}

const std::vector<std::string>& builtin_example_names() {
    static const std::vector<std::string> names = {"example1", "example3", "example4"};
    return names;
}

ChiSpec builtin_example(const std::string& name) {
    if (name == "example1") return ChiSpec::make({}, {3, 5, 7});
    if (name == "example3") {
        // The 26 primes up to 101, ascending.
        return ChiSpec::make({}, {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                  43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101});
    }
    if (name == "example4") return ChiSpec::make({}, {2, 0});
    std::string known;
    for (const auto& n : builtin_example_names()) known += (known.empty() ? "" : ", ") + n;
    throw std::invalid_argument("unknown example \"" + name + "\" (valid: " + known + ")");
}

}  // namespace pchi
