#include "pchi/certify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

namespace pchi {

Ratio x_partial(const ChiSpec& spec, const Natural& b, const Natural& terms) {
    if (terms < b + 1) throw std::invalid_argument("x_partial requires N >= b + 1");
    const unsigned long first = to_ulong(b) + 1;
    const unsigned long last = to_ulong(terms);
    // sum chi(n) * N!/n! over n = b+1..N; the running weight ends at N!/b!,
    // which is exactly the denominator of b! * sum chi(n)/n!.
    Integer num = 0;
    Integer weight = 1;
    for (unsigned long n = last; n >= first; --n) {
        num += chi_at(spec, n) * weight;
        weight *= n;
    }
    return make_ratio(num, weight);
}

Interval x_enclosure(const ChiSpec& spec, const Natural& b, const Natural& terms) {
    Ratio lo = x_partial(spec, b, terms);
    // b! * tail <= M * b!/(N! * N)
    Ratio tail = make_ratio(effective_bound(spec) * factorial(b), factorial(terms) * terms);
    return Interval{lo, lo + tail};
}

Ratio theorem_bound(const ChiSpec& spec, const Natural& b) {
    if (b < 1) throw std::invalid_argument("theorem_bound requires b >= 1");
    return make_ratio(effective_bound(spec), b);
}

bool factorial_inequality_check(const Natural& b, const Natural& n) {
    if (n < b + 1) throw std::invalid_argument("factorial_inequality_check requires n >= b + 1");
    // b!/n! <= (1+b)^(b-n)  <=>  (1+b)^(n-b) <= n!/b!
    const Integer lhs = ipow(b + 1, to_ulong(n - b));
    Integer rhs = 1;
    for (unsigned long k = to_ulong(b) + 1; k <= to_ulong(n); ++k) rhs *= k;
    return lhs <= rhs;
}

bool integer_free(const Interval& iv) {
    if (iv.hi < 1) return sgn(iv.lo) > 0;
    return floor_of(iv.hi) < ceil_of(iv.lo);
}

DenominatorRecord screen_denominator(const ChiSpec& spec, const Natural& b) {
    if (b < 1) throw std::invalid_argument("screen_denominator requires b >= 1");
    if (classify(spec) != SeriesClass::CertifiableIrrational)
        throw std::invalid_argument("screen_denominator requires a nonzero cycle");
    Natural terms = b + 2 * Natural(spec.cycle().size()) + 8;
    for (int doubling = 0; doubling <= 12; ++doubling) {
        Interval iv = x_enclosure(spec, b, terms);
        if (sgn(iv.lo) > 0 && integer_free(iv))
            return DenominatorRecord{b, terms, std::move(iv.lo), std::move(iv.hi)};
        terms *= 2;
    }
    throw ScreeningInconclusive(b);
}

namespace {

unsigned resolve_jobs(unsigned jobs) {
    if (jobs != 0) return jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw != 0 ? hw : 1;
}

}  // namespace

Certificate certify(const ChiSpec& spec, unsigned jobs) {
    if (classify(spec) == SeriesClass::EventuallyZero)
        throw RationalSeriesError(*rational_shortcut(spec));

    const Natural bound_m = effective_bound(spec);
    const unsigned long m = to_ulong(bound_m);
    std::vector<DenominatorRecord> screening(m);

    const unsigned workers =
        static_cast<unsigned>(std::min<unsigned long>(resolve_jobs(jobs), m));
    if (workers <= 1) {
        for (unsigned long b = 1; b <= m; ++b)
            screening[b - 1] = screen_denominator(spec, Natural(b));
    } else {
        // Records are independent; workers pull the next b and write into
        // its slot, so the merged result is identical to the serial one.
        std::atomic<unsigned long> next{1};
        std::exception_ptr first_error;
        std::mutex error_mutex;
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    unsigned long b = next.fetch_add(1);
                    if (b > m) return;
                    try {
                        screening[b - 1] = screen_denominator(spec, Natural(b));
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(error_mutex);
                        if (!first_error) first_error = std::current_exception();
                        return;
                    }
                }
            });
        }
        for (auto& t : pool) t.join();
        if (first_error) std::rethrow_exception(first_error);
    }

    LargeBArgument large_b{make_ratio(bound_m, bound_m + 1)};
    return Certificate{spec, bound_m, std::move(screening), std::move(large_b),
                       Verdict::Irrational};
}

VerificationOutcome verify(const Certificate& cert) {
    VerificationOutcome out;
    auto flag = [&out](std::string id, std::string reason) {
        out.failures.push_back({std::move(id), std::move(reason)});
    };

    if (classify(cert.spec) != SeriesClass::CertifiableIrrational)
        flag("certificate", "spec cycle is all zeros; the series is rational");

    const Natural bound_m = effective_bound(cert.spec);
    if (cert.bound_m != bound_m)
        flag("certificate", "bound_M mismatch: certificate says " + cert.bound_m.get_str() +
                                ", spec gives " + bound_m.get_str());

    if (bound_m > 1000000) {
        // A certificate this wide cannot have been produced honestly;
        // replaying it would not terminate in reasonable time.
        flag("certificate", "bound_M too large for verification replay");
        out.ok = false;
        return out;
    }

    // Coverage: exactly one record per b in 1..M.
    std::map<Natural, const DenominatorRecord*> by_b;
    for (const auto& rec : cert.screening) {
        if (rec.b < 1 || rec.b > bound_m) {
            flag("b=" + rec.b.get_str(), "unexpected screening record outside 1..M");
            continue;
        }
        if (!by_b.emplace(rec.b, &rec).second)
            flag("b=" + rec.b.get_str(), "duplicate screening record");
    }
    for (Natural b = 1; b <= bound_m; ++b)
        if (!by_b.count(b)) flag("certificate", "screening gap at b=" + b.get_str());

    for (const auto& [b, rec] : by_b) {
        const std::string id = "b=" + b.get_str();
        try {
            if (rec->terms_used < b + 1) {
                flag(id, "terms_used must be at least b + 1");
                continue;
            }
            // Deterministic replay from spec + terms_used alone.
            Ratio expect_lo = x_partial(cert.spec, b, rec->terms_used);
            Ratio expect_tail = make_ratio(bound_m * factorial(b),
                                           factorial(rec->terms_used) * rec->terms_used);
            if (rec->x_lo != expect_lo || rec->x_hi != expect_lo + expect_tail) {
                flag(id, "enclosure endpoint mismatch");
                continue;
            }
            if (sgn(rec->x_lo) <= 0) {
                flag(id, "enclosure is not strictly positive");
                continue;
            }
            if (!integer_free(Interval{rec->x_lo, rec->x_hi}))
                flag(id, "enclosure contains an integer");
        } catch (const std::exception& e) {
            flag(id, std::string("replay failed: ") + e.what());
        }
    }

    if (cert.large_b.bound != make_ratio(bound_m, bound_m + 1))
        flag("certificate", "large-b bound is not M/(M+1)");
    else if (cert.large_b.bound >= 1)
        flag("certificate", "large-b bound is not below 1");

    out.ok = out.failures.empty();
    return out;
}

}  // namespace pchi
