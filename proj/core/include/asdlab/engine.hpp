#pragma once
#include <string>
#include <vector>

#include "asdlab/curve.hpp"
#include "asdlab/frobenius.hpp"
#include "asdlab/series.hpp"

namespace asdlab {

// A record can legitimately end in four states. Pass demands both that the
// observed valuation clears the required exponent and that the working
// precision B can certify it; a capped valuation below the requirement is
// Inconclusive, never Pass. A valuation that is exactly known (below B) and
// too small is a definite Fail regardless of B.
enum class CheckStatus { Pass, Fail, Inconclusive, Skipped };
std::string status_name(CheckStatus s);

enum class CheckKind { ThetaImage, EigenCongruence, Annihilator, Aggregate };
std::string kind_name(CheckKind k);

struct CheckRecord {
    CheckKind kind;
    long n = 0;
    int l = 0;
    std::string left;  // residue entering the comparison, decimal
    std::string right; // what it is compared against
    int required_exponent = 0;
    int observed_valuation = -1; // -1: not computable (window shortfall)
    bool coprime = true;         // p does not divide n
    CheckStatus status = CheckStatus::Inconclusive;
    std::string note;
};

struct CongruenceReport {
    std::vector<CheckRecord> records;
    long total = 0, passed = 0, failed = 0, skipped = 0, inconclusive = 0;

    void add(CheckRecord r);
    void merge(const CongruenceReport& o);

    // no failures and nothing left undecided
    bool all_passed() const { return failed == 0 && inconclusive == 0; }
    // every record decided, and decided positively
    bool clean_pass() const { return total > 0 && passed == total; }
};

// Shared knobs for a batch of checks. precision/trunc describe the data the
// caller built and are validated against the series actually passed in;
// twist and exp_c select the normalization used by the scaled checks.
struct CheckConfig {
    long p = 0;
    int k = 0;
    std::vector<int> l_values;
    std::vector<long> n_values;
    int precision = 0;
    long trunc = 0;
    TwistConvention twist = TwistConvention::None;
    int exp_c = 1;
    bool skip_supersingular = true;

    void validate() const; // throws ConfigError
};

// Precision budget: enough digits for the deepest congruence, for the theta
// exponents over the whole window, for the annihilator degree, plus slack.
int required_precision(long p, int k, int max_l, long trunc, int M);

// Smallest truncation exposing a_{n p^{l+i}} for n <= max_n, l <= max_l,
// i <= M. Throws ConfigError if it does not fit in a long.
long required_trunc(long p, long max_n, int max_l, int M);

// Coefficientwise criterion for g lying in the image of theta^{k+1}: a
// p-integral preimage h with g = theta^{k+1}(h) forces
// a_n(g) = n^{k+1} a_n(h), so val(a_n(g)) >= (k+1) val_p(n) for n >= 1 and
// a_0(g) = 0 to working precision. One record per stored index.
template <class R>
CongruenceReport theta_image_test(const Series<R>& g, int k);

// val(a_{n p^{l+1}}(f) - lambda a_{n p^l}(f)) >= (k+1) l for each configured
// (n, l). Indices beyond trunc(f) degrade to Inconclusive records.
template <class R>
CongruenceReport eigen_congruence_check(const Series<R>& f,
                                        const typename R::Elem& lambda,
                                        const CheckConfig& cfg);

// g = sum_i r_i U_p^i(f) for R(X) = sum_i r_i X^i (scaled = false), or the
// normalized variant g = sum_i r_{M-i} p^{c (M-i)} U_p^i(f) (scaled = true),
// followed by theta_image_test(g, k). A window too short to leave any output
// coefficient yields a single Inconclusive record.
template <class R>
CongruenceReport annihilator_check(const Series<R>& f,
                                   const AnnihilatorPoly& poly,
                                   const CheckConfig& cfg,
                                   bool scaled = false);

// val(sum_i e_{M-i} p^{c (M-i)} a_{n p^{l+i}}(f)) >= l (k+1), the coefficient
// shadow of the scaled annihilator, for each configured (n, l).
template <class R>
CongruenceReport corollary_aggregate_check(const Series<R>& f,
                                           const AnnihilatorPoly& poly,
                                           const CheckConfig& cfg);

// One normalization choice: the convention-free R(U_p) form (scaled = false,
// twist/exp_c ignored) or a scaled form with the given twist and exponent.
struct ConventionChoice {
    bool scaled = false;
    TwistConvention twist = TwistConvention::None;
    int exp_c = 1;
};
std::string convention_name(const ConventionChoice& c);
bool operator==(const ConventionChoice& a, const ConventionChoice& b);

// Tries the convention-free annihilator plus every (twist, c) combination
// from {None, TateTimesP} x {1, k+1} on the scaled annihilator and aggregate
// checks for all three basis forms, anchored by the three eigen congruences
// with untwisted eigenvalues. Returns every passer. The eigen anchor and the
// convention-free variant must pass on honest data; if either fails,
// NoConventionPassesError.
template <class R>
std::vector<ConventionChoice> calibrate(const Series<R>& f1,
                                        const Series<R>& f2,
                                        const Series<R>& f3,
                                        const WeierstrassCurve& E, long p,
                                        int k, const CheckConfig& base);

} // namespace asdlab
