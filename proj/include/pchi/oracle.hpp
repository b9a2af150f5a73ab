// Independent brute-force checks: finite-denominator rational exclusion and
// exact tail probes. These deliberately avoid the certifier's code paths so
// they can serve as ground truth for it.

#pragma once

#include <string>
#include <vector>

#include "pchi/eval.hpp"
#include "pchi/series.hpp"

namespace pchi {

enum class ExclusionResult { ProvenExcluded, Inconclusive };

enum class WitnessSide { Below, Above, Inside };

struct ExclusionWitness {
    Natural q;
    Integer p;         // the only numerator that can reach the enclosure
    WitnessSide side;  // where p/q landed relative to [lo, hi]
    Ratio margin;      // exact distance to the violated endpoint (0 for Inside)
};

struct ExclusionReport {
    ChiSpec spec;
    Natural max_denominator;  // Q
    Interval enclosure;
    Natural terms_used;
    Ratio width;              // hi - lo, exact
    Ratio width_requirement;  // 1/(2*Q^2): makes one candidate per q sufficient
    ExclusionResult result;
    std::vector<ExclusionWitness> witnesses;
};

// Nearest integer to q * mid (ties round up); the only p for which p/q can
// intersect an enclosure narrower than 1/(2*Q^2).
Integer candidate_numerator(const Ratio& mid, const Natural& q);

// Proves no rational with denominator <= Q lies in an enclosure of the
// series value, by exact comparison of the per-q candidate against the
// endpoints. Refines and retries up to 6 times; a cap hit reports
// Inconclusive, never a false exclusion. Requires Q >= 1 and a spec with a
// nonzero cycle (throws RationalSeriesError otherwise).
ExclusionReport exclude_rationals(const ChiSpec& spec, const Natural& max_denominator);

// M * sum_{n>=1} (1+b)^(-n) evaluated step by step in closed form; equals
// M/b exactly and cross-checks theorem_bound.
Ratio geometric_tail_closed_form(const Natural& bound_m, const Natural& b);

// Exact sum_{n=N+1}^{N+depth} chi(n)/n!: a lower bound on the true tail,
// used to probe tail_bound soundness. Requires depth >= 1.
Ratio deep_tail_probe(const ChiSpec& spec, const Natural& terms, const Natural& depth);

// JSON mirroring the certificate conventions (decimal-string naturals,
// "num/den" rationals, fixed field order, newline-terminated).
std::string exclusion_report_to_json(const ExclusionReport& report);

}  // namespace pchi
