#include "asdlab/report.hpp"

#include <sstream>

#include <gmp.h>

#include "json.hpp"

#ifndef ASDLAB_VERSION
#define ASDLAB_VERSION "0.0.0"
#endif

namespace asdlab {

using nlohmann::json;

CongruenceReport PrimeReport::combined() const {
    CongruenceReport all;
    for (const auto& s : sections) all.merge(s.rep);
    return all;
}

namespace {

json record_json(const std::string& form, const CheckRecord& r) {
    json j{{"form", form},
           {"kind", kind_name(r.kind)},
           {"n", r.n},
           {"l", r.l},
           {"required_exponent", r.required_exponent},
           {"observed_valuation", r.observed_valuation},
           {"coprime", r.coprime},
           {"status", status_name(r.status)}};
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

json prime_json(const PrimeReport& pr) {
    json checks = json::array();
    for (const auto& s : pr.sections)
        for (const auto& r : s.rep.records)
            checks.push_back(record_json(s.form, r));

    json conventions{{"mode", pr.mode}};
    if (pr.mode == "annihilator") {
        conventions["scaled"] = pr.scaled;
        conventions["twist"] = twist_name(pr.twist);
        conventions["exp_c"] = pr.exp_c;
        conventions["name"] = convention_name(
            ConventionChoice{pr.scaled, pr.twist, pr.exp_c});
    }

    CongruenceReport all = pr.combined();
    json summary{{"total", all.total},
                 {"passed", all.passed},
                 {"failed", all.failed},
                 {"skipped", all.skipped},
                 {"inconclusive", all.inconclusive}};

    json sizes{{"trunc", pr.trunc},
               {"precision", pr.precision},
               {"trunc_budget", pr.trunc_budget},
               {"precision_budget", pr.precision_budget}};

    json versions{{"asdlab", ASDLAB_VERSION},
                  {"gmp", gmp_version},
                  {"report_format", 1}};

    return json{{"curve",
                 {pr.curve.a1.get_si(), pr.curve.a2.get_si(),
                  pr.curve.a3.get_si(), pr.curve.a4.get_si(),
                  pr.curve.a6.get_si()}},
                {"p", pr.p},
                {"k", pr.k},
                {"checks", checks},
                {"conventions", conventions},
                {"sizes", sizes},
                {"summary", summary},
                {"versions", versions}};
}

} // namespace

std::string report_json(const std::vector<PrimeReport>& reports, int indent) {
    json out = json::array();
    for (const auto& pr : reports) out.push_back(prime_json(pr));
    return out.dump(indent) + "\n";
}

std::string report_summary_lines(const std::vector<PrimeReport>& reports) {
    std::ostringstream os;
    for (const auto& pr : reports) {
        CongruenceReport all = pr.combined();
        const char* verdict = all.failed > 0          ? "FAIL"
                              : all.inconclusive > 0  ? "INCONCLUSIVE"
                              : all.passed > 0        ? "pass"
                                                      : "skipped";
        os << "p=" << pr.p << ": " << all.total << " checks, " << all.passed
           << " passed, " << all.failed << " failed, " << all.inconclusive
           << " inconclusive, " << all.skipped << " skipped -> " << verdict
           << "\n";
    }
    return os.str();
}

int report_exit_code(const std::vector<PrimeReport>& reports) {
    for (const auto& pr : reports) {
        CongruenceReport all = pr.combined();
        if (all.failed > 0 || all.inconclusive > 0) return 1;
    }
    return 0;
}

} // namespace asdlab
