#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "asdlab/cache.hpp"
#include "asdlab/report.hpp"

namespace asdlab {

// Shared configuration for the command entry points. Zero overrides mean
// "size from the budget formulas"; explicit undersized overrides are allowed
// and degrade to inconclusive records rather than being rejected, so a
// deliberately starved run is still an honest run.
struct RunConfig {
    std::array<long, 5> curve{1, -1, 0, -2, -1};
    std::vector<long> primes{11};
    int k = 2;
    int l_max = 2;
    long n_max = 8;
    long trunc_override = 0;
    int prec_override = 0;
    std::string out_path;  // JSON destination; empty writes JSON to stdout
    std::string cache_dir; // already resolved against ASDLAB_CACHE
    std::string twist = "tate"; // none | tate
    std::string exp_c = "k1";   // 1 | k1
    std::string ring = "padic"; // padic | exact
    bool with_q = false;        // enlarge by (X-1)(X-p^{k+1})
    long j0 = 0;                // custom pole; 0 keeps the built-in basis
    std::vector<std::string> form_terms; // coeff:m:a:b:c per term
    bool sabotage_u = false; // negative control: eigenvalues shifted by p
    bool empty_poly = false; // negative control: annihilator = 1

    WeierstrassCurve curve_model() const;
    TwistConvention twist_convention() const;
    int exp_c_value() const; // resolves "k1" to k + 1
};

// "11,23,29" and "5-50" (all primes in the range), mixed freely.
std::vector<long> parse_primes(const std::string& text);

// p, a_p and the reduction type per prime, as a text table.
int cmd_ap(const RunConfig& cfg, std::ostream& out);

// Eigen congruences a_{n p^{l+1}} = lambda_i a_{n p^l} mod p^{(k+1) l} for
// the basis forms at each ordinary prime; supersingular and bad primes are
// reported as skipped rows.
int cmd_check_zhang(const RunConfig& cfg, std::ostream& out);

// Charpoly annihilator and aggregate checks at each ordinary prime, for the
// built-in basis or a custom form given by --j0/--form-term.
int cmd_check_theorem(const RunConfig& cfg, std::ostream& out);

} // namespace asdlab
