#include "pchi/oracle.hpp"

#include <json.hpp>

#include "pchi/certify.hpp"
#include "pchi/parser.hpp"

namespace pchi {

Integer candidate_numerator(const Ratio& mid, const Natural& q) {
    return floor_of(mid * q + make_ratio(1, 2));
}

ExclusionReport exclude_rationals(const ChiSpec& spec, const Natural& max_denominator) {
    if (max_denominator < 1)
        throw std::invalid_argument("exclude_rationals requires Q >= 1");
    if (classify(spec) == SeriesClass::EventuallyZero)
        throw RationalSeriesError(*rational_shortcut(spec));

    const Natural q_max = max_denominator;
    const Ratio width_requirement = make_ratio(1, 2 * q_max * q_max);
    Ratio eps = make_ratio(1, 4 * q_max * q_max);

    ValueEnclosure enc{};
    std::vector<ExclusionWitness> witnesses;
    bool excluded = false;
    for (int attempt = 0; attempt <= 6; ++attempt) {
        enc = enclose_to_width(spec, eps);
        const Ratio mid = (enc.interval.lo + enc.interval.hi) / 2;
        witnesses.clear();
        witnesses.reserve(to_ulong(q_max));
        excluded = true;
        for (Natural q = 1; q <= q_max; ++q) {
            Integer p = candidate_numerator(mid, q);
            Ratio candidate = make_ratio(p, q);
            if (candidate < enc.interval.lo) {
                witnesses.push_back({q, p, WitnessSide::Below, enc.interval.lo - candidate});
            } else if (candidate > enc.interval.hi) {
                witnesses.push_back({q, p, WitnessSide::Above, candidate - enc.interval.hi});
            } else {
                witnesses.push_back({q, p, WitnessSide::Inside, Ratio(0)});
                excluded = false;
                break;
            }
        }
        if (excluded) break;
        eps /= 65536;  // the candidate was merely too close; shrink hard
    }

    return ExclusionReport{spec,
                           q_max,
                           enc.interval,
                           enc.terms_used,
                           enc.interval.hi - enc.interval.lo,
                           width_requirement,
                           excluded ? ExclusionResult::ProvenExcluded
                                    : ExclusionResult::Inconclusive,
                           std::move(witnesses)};
}

Ratio geometric_tail_closed_form(const Natural& bound_m, const Natural& b) {
    if (b < 1) throw std::invalid_argument("geometric_tail_closed_form requires b >= 1");
    const Ratio common_ratio = make_ratio(1, b + 1);
    const Ratio series_factor = Ratio(1) / (Ratio(1) - common_ratio);
    return Ratio(bound_m) * series_factor * common_ratio;
}

Ratio deep_tail_probe(const ChiSpec& spec, const Natural& terms, const Natural& depth) {
    if (depth < 1) throw std::invalid_argument("deep_tail_probe requires depth >= 1");
    const unsigned long first = to_ulong(terms) + 1;
    const unsigned long last = to_ulong(terms + depth);
    Integer num = 0;
    Integer weight = 1;  // (N+depth)!/n!
    for (unsigned long n = last; n >= first; --n) {
        num += chi_at(spec, n) * weight;
        weight *= n;
    }
    return make_ratio(num, factorial(Natural(last)));
}

std::string exclusion_report_to_json(const ExclusionReport& report) {
    using ordered_json = nlohmann::ordered_json;
    ordered_json j;
    j["format_version"] = "1";
    j["spec"] = render_spec(report.spec);
    j["max_denominator"] = natural_string(report.max_denominator);
    j["width"] = ratio_string(report.width);
    j["width_requirement"] = ratio_string(report.width_requirement);
    j["enclosure"] = ordered_json{{"lo", ratio_string(report.enclosure.lo)},
                                  {"hi", ratio_string(report.enclosure.hi)},
                                  {"terms_used", natural_string(report.terms_used)}};
    j["result"] = report.result == ExclusionResult::ProvenExcluded ? "proven-excluded"
                                                                   : "inconclusive";
    ordered_json witnesses = ordered_json::array();
    for (const auto& w : report.witnesses) {
        const char* side = w.side == WitnessSide::Below   ? "below"
                           : w.side == WitnessSide::Above ? "above"
                                                          : "inside";
        witnesses.push_back(ordered_json{{"q", natural_string(w.q)},
                                         {"p", w.p.get_str()},
                                         {"side", side},
                                         {"margin", ratio_string(w.margin)}});
    }
    j["witnesses"] = std::move(witnesses);
    return j.dump(2) + "\n";
}

}  // namespace pchi
