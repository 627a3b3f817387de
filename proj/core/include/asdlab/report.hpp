#pragma once

#include <string>
#include <vector>

#include "asdlab/curve.hpp"
#include "asdlab/engine.hpp"
#include "asdlab/frobenius.hpp"

namespace asdlab {

// One named batch of check records, e.g. all records for the form f2.
struct ReportSection {
    std::string form;
    CongruenceReport rep;
};

// Everything reported for one prime. `mode` distinguishes the eigen
// congruence runs from the annihilator/aggregate runs; the convention
// fields are meaningful only in the latter.
struct PrimeReport {
    WeierstrassCurve curve{};
    long p = 0;
    int k = 0;
    std::string mode; // "eigen-congruence" or "annihilator"
    bool scaled = false;
    TwistConvention twist = TwistConvention::None;
    int exp_c = 0;
    long trunc = 0;
    int precision = 0;
    long trunc_budget = 0;
    int precision_budget = 0;
    std::vector<ReportSection> sections;

    CongruenceReport combined() const;
};

// Stable schema, one object per prime:
//   { "curve": [a1,a2,a3,a4,a6], "p": .., "k": ..,
//     "checks": [ { "form", "kind", "n", "l", "required_exponent",
//                   "observed_valuation", "status", "note"? } ... ],
//     "conventions": {..}, "sizes": {..}, "summary": {..},
//     "versions": {..} }
// The top level is always an array, one element per prime.
std::string report_json(const std::vector<PrimeReport>& reports,
                        int indent = 2);

// One human line per prime: counts and the overall verdict.
std::string report_summary_lines(const std::vector<PrimeReport>& reports);

// 0 if every record passed or was skipped; 1 on any fail or inconclusive.
int report_exit_code(const std::vector<PrimeReport>& reports);

} // namespace asdlab
