#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "asdlab/commands.hpp"
#include "asdlab/errors.hpp"

namespace {

struct CommandSlot {
    asdlab::RunConfig cfg;
    std::string primes_text;
    std::string cache_flag;
};

void add_curve_option(CLI::App* cmd, asdlab::RunConfig& cfg) {
    cmd->add_option_function<std::vector<long>>(
           "--curve",
           [&cfg](const std::vector<long>& v) {
               if (v.size() != 5)
                   throw CLI::ValidationError(
                       "--curve", "expected five integers a1,a2,a3,a4,a6");
               std::copy(v.begin(), v.end(), cfg.curve.begin());
           },
           "Weierstrass coefficients a1,a2,a3,a4,a6 (default: the j = -3375 "
           "curve)")
        ->delimiter(',');
}

void add_prime_option(CLI::App* cmd, CommandSlot& slot) {
    cmd->add_option("--p", slot.primes_text,
                    "primes: comma list and/or lo-hi ranges, e.g. 11,23 or "
                    "5-50")
        ->default_val("11");
}

void add_check_options(CLI::App* cmd, CommandSlot& slot) {
    auto& cfg = slot.cfg;
    add_curve_option(cmd, cfg);
    add_prime_option(cmd, slot);
    cmd->add_option("--k", cfg.k, "symmetric power (built-in basis: 2)")
        ->capture_default_str();
    cmd->add_option("--lmax", cfg.l_max, "largest congruence level l")
        ->capture_default_str();
    cmd->add_option("--nmax", cfg.n_max, "largest window index n")
        ->capture_default_str();
    cmd->add_option("--trunc", cfg.trunc_override,
                    "override the q-expansion truncation (0 = budget)");
    cmd->add_option("--prec", cfg.prec_override,
                    "override the p-adic precision (0 = budget)");
    cmd->add_option("--out", cfg.out_path,
                    "write the JSON report here instead of stdout");
    cmd->add_option("--cache", slot.cache_flag,
                    "series cache directory (env ASDLAB_CACHE wins)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact p-adic congruence checks between meromorphic "
                 "modular forms and elliptic-curve Frobenius data"};
    app.require_subcommand(1);
    app.set_config("--config", "",
                   "key = value file; command-line flags win");

    CommandSlot ap_slot, zhang_slot, theorem_slot;

    CLI::App* ap = app.add_subcommand(
        "ap", "tabulate a_p and the reduction type per prime");
    add_curve_option(ap, ap_slot.cfg);
    add_prime_option(ap, ap_slot);

    CLI::App* zhang = app.add_subcommand(
        "check-zhang",
        "eigen congruences for the three basis forms at ordinary primes");
    add_check_options(zhang, zhang_slot);
    zhang->add_option("--ring", zhang_slot.cfg.ring,
                      "coefficient ring: padic | exact (exact caps trunc at "
                      "500)")
        ->check(CLI::IsMember({"padic", "exact"}))
        ->capture_default_str();
    zhang->add_flag("--sabotage-u", zhang_slot.cfg.sabotage_u,
                    "negative control: shift every eigenvalue by p")
        ->group("");

    theorem_slot.cfg.l_max = 1;
    theorem_slot.cfg.n_max = 3;
    CLI::App* theorem = app.add_subcommand(
        "check-theorem",
        "charpoly annihilator and aggregate checks at ordinary primes");
    add_check_options(theorem, theorem_slot);
    theorem->add_option("--twist", theorem_slot.cfg.twist,
                        "charpoly root normalization: none | tate")
        ->check(CLI::IsMember({"none", "tate"}))
        ->capture_default_str();
    theorem->add_option("--expc", theorem_slot.cfg.exp_c,
                        "scaling exponent constant: 1 | k1 (k1 = k + 1)")
        ->check(CLI::IsMember({"1", "k1"}))
        ->capture_default_str();
    theorem->add_flag("--with-q", theorem_slot.cfg.with_q,
                      "enlarge the annihilator by (X-1)(X-p^{k+1})");
    theorem->add_option("--j0", theorem_slot.cfg.j0,
                        "pole of a custom form (with --form-term)");
    theorem->add_option("--form-term", theorem_slot.cfg.form_terms,
                        "custom form term coeff:m:a:b:c; repeatable");
    theorem->add_flag("--empty-poly", theorem_slot.cfg.empty_poly,
                      "negative control: annihilator polynomial = 1")
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        auto finish = [](CommandSlot& slot) {
            if (!slot.primes_text.empty())
                slot.cfg.primes = asdlab::parse_primes(slot.primes_text);
            slot.cfg.cache_dir = asdlab::resolve_cache_dir(slot.cache_flag);
        };
        if (app.got_subcommand(ap)) {
            finish(ap_slot);
            return asdlab::cmd_ap(ap_slot.cfg, std::cout);
        }
        if (app.got_subcommand(zhang)) {
            finish(zhang_slot);
            return asdlab::cmd_check_zhang(zhang_slot.cfg, std::cout);
        }
        finish(theorem_slot);
        return asdlab::cmd_check_theorem(theorem_slot.cfg, std::cout);
    } catch (const asdlab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
