#include "asdlab/commands.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "asdlab/classical.hpp"

namespace asdlab {

WeierstrassCurve RunConfig::curve_model() const {
    return WeierstrassCurve{mpz_class(curve[0]), mpz_class(curve[1]),
                            mpz_class(curve[2]), mpz_class(curve[3]),
                            mpz_class(curve[4])};
}

TwistConvention RunConfig::twist_convention() const {
    if (twist == "none") return TwistConvention::None;
    if (twist == "tate") return TwistConvention::TateTimesP;
    throw ConfigError("unknown twist convention '" + twist + "'");
}

int RunConfig::exp_c_value() const {
    if (exp_c == "1") return 1;
    if (exp_c == "k1") return k + 1;
    throw ConfigError("unknown exponent constant '" + exp_c +
                      "' (expected 1 or k1)");
}

std::vector<long> parse_primes(const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string tok;
    auto to_long = [](const std::string& s) {
        try {
            size_t used = 0;
            long v = std::stol(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw ConfigError("bad prime token '" + s + "'");
        }
    };
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        auto dash = tok.find('-', 1);
        if (dash != std::string::npos) {
            long lo = to_long(tok.substr(0, dash));
            long hi = to_long(tok.substr(dash + 1));
            for (long q = std::max(2L, lo); q <= hi; ++q)
                if (is_prime(q)) out.push_back(q);
        } else {
            long q = to_long(tok);
            if (q < 2 || !is_prime(q))
                throw ConfigError("'" + tok + "' is not prime");
            out.push_back(q);
        }
    }
    if (out.empty()) throw ConfigError("empty prime list");
    return out;
}

namespace {

struct Sizing {
    long trunc = 0;
    int precision = 0;
    long trunc_budget = 0;
    int precision_budget = 0;
};

Sizing resolve_sizes(const RunConfig& cfg, long p, int M) {
    Sizing sz;
    sz.trunc_budget = required_trunc(p, cfg.n_max, cfg.l_max, M);
    sz.trunc = cfg.trunc_override > 0 ? cfg.trunc_override : sz.trunc_budget;
    sz.precision_budget = required_precision(p, cfg.k, cfg.l_max, sz.trunc, M);
    sz.precision =
        cfg.prec_override > 0 ? cfg.prec_override : sz.precision_budget;
    return sz;
}

CheckConfig engine_config(const RunConfig& cfg, long p, const Sizing& sz) {
    CheckConfig ec;
    ec.p = p;
    ec.k = cfg.k;
    for (int l = 1; l <= cfg.l_max; ++l) ec.l_values.push_back(l);
    for (long n = 1; n <= cfg.n_max; ++n) ec.n_values.push_back(n);
    ec.precision = sz.precision;
    ec.trunc = sz.trunc;
    ec.twist = cfg.twist_convention();
    ec.exp_c = cfg.exp_c_value();
    ec.validate();
    return ec;
}

CheckRecord skipped_record(CheckKind kind, const std::string& note) {
    CheckRecord r;
    r.kind = kind;
    r.status = CheckStatus::Skipped;
    r.note = note;
    return r;
}

// Reduction handling shared by the check commands: fills three skipped
// sections and returns true when the prime cannot carry the checks.
bool skip_sections(const WeierstrassCurve& E, long p, CheckKind kind,
                   const std::vector<std::string>& names, PrimeReport& pr,
                   FrobeniusQuadratic& frob) {
    std::string note;
    try {
        frob = frobenius_ap(E, p);
        if (!frob.ordinary)
            note = "supersingular: a_p = " + std::to_string(frob.a_p);
    } catch (const BadReductionError&) {
        note = "bad reduction";
    }
    if (note.empty()) return false;
    for (const auto& name : names) {
        ReportSection s{name, {}};
        s.rep.add(skipped_record(kind, note));
        pr.sections.push_back(std::move(s));
    }
    return true;
}

std::array<Series<PadicCoeffRing>, 3> basis_cached(const SeriesCache& cache,
                                                   long p, int B, long N) {
    auto specs = zhang_specs();
    std::array<CacheKey, 3> keys;
    std::array<std::optional<Series<PadicCoeffRing>>, 3> hit;
    bool all = true;
    for (int i = 0; i < 3; ++i) {
        keys[static_cast<size_t>(i)] =
            CacheKey{specs[static_cast<size_t>(i)].id(), p, B, N + 1};
        hit[static_cast<size_t>(i)] =
            cache.load(keys[static_cast<size_t>(i)]);
        all = all && hit[static_cast<size_t>(i)].has_value();
    }
    if (all)
        return {std::move(*hit[0]), std::move(*hit[1]), std::move(*hit[2])};
    PadicCoeffRing ring(p, B);
    auto basis = zhang_basis(N, ring);
    for (int i = 0; i < 3; ++i)
        cache.store(keys[static_cast<size_t>(i)],
                    basis[static_cast<size_t>(i)]);
    return basis;
}

Series<PadicCoeffRing> mero_form_cached(const SeriesCache& cache,
                                        const MeroFormSpec& spec, long p,
                                        int B, long N) {
    long c = spec.terms[0].m + spec.terms[0].c;
    for (const auto& t : spec.terms)
        c = std::min(c, static_cast<long>(t.m + t.c));
    CacheKey key{spec.id(), p, B, N + c};
    if (auto got = cache.load(key)) return std::move(*got);
    PadicCoeffRing ring(p, B);
    auto f = mero_form(spec, N, ring);
    CacheKey actual{spec.id(), p, B, f.trunc()};
    cache.store(actual, f);
    return f;
}

MeroTerm parse_term(const std::string& text) {
    std::stringstream ss(text);
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(ss, part, ':')) parts.push_back(part);
    if (parts.size() != 5)
        throw ConfigError("form term '" + text +
                          "' is not coeff:m:a:b:c");
    MeroTerm t;
    if (mpz_set_str(t.coefficient.get_mpz_t(), parts[0].c_str(), 10) != 0)
        throw ConfigError("bad coefficient in form term '" + text + "'");
    try {
        t.m = std::stoi(parts[1]);
        t.a = std::stoi(parts[2]);
        t.b = std::stoi(parts[3]);
        t.c = std::stoi(parts[4]);
    } catch (const std::exception&) {
        throw ConfigError("bad exponent in form term '" + text + "'");
    }
    return t;
}

void emit(const RunConfig& cfg, const std::vector<PrimeReport>& reports,
          std::ostream& out) {
    std::string body = report_json(reports);
    if (cfg.out_path.empty()) {
        out << body;
        return;
    }
    std::ofstream f(cfg.out_path, std::ios::trunc);
    if (!f) throw ConfigError("cannot write report to " + cfg.out_path);
    f << body;
    out << report_summary_lines(reports);
}

} // namespace

int cmd_ap(const RunConfig& cfg, std::ostream& out) {
    WeierstrassCurve E = cfg.curve_model();
    out << std::setw(8) << "p" << std::setw(12) << "a_p"
        << "  reduction\n";
    for (long p : cfg.primes) {
        try {
            FrobeniusQuadratic f = frobenius_ap(E, p);
            out << std::setw(8) << p << std::setw(12) << f.a_p << "  "
                << (f.ordinary ? "ordinary" : "supersingular") << "\n";
        } catch (const BadReductionError&) {
            out << std::setw(8) << p << std::setw(12) << "-"
                << "  bad reduction\n";
        } catch (const ConfigError&) {
            out << std::setw(8) << p << std::setw(12) << "-"
                << "  unsupported (p <= 3)\n";
        }
    }
    return 0;
}

int cmd_check_zhang(const RunConfig& cfg, std::ostream& out) {
    if (cfg.k != 2)
        throw ConfigError("check-zhang: the built-in basis has k = 2");
    if (cfg.ring != "padic" && cfg.ring != "exact")
        throw ConfigError("unknown ring mode '" + cfg.ring + "'");
    WeierstrassCurve E = cfg.curve_model();
    SeriesCache cache(cfg.cache_dir);
    const std::vector<std::string> names{"f1", "f2", "f3"};

    std::vector<PrimeReport> reports;
    for (long p : cfg.primes) {
        PrimeReport pr;
        pr.curve = E;
        pr.p = p;
        pr.k = cfg.k;
        pr.mode = "eigen-congruence";
        FrobeniusQuadratic frob{};
        if (skip_sections(E, p, CheckKind::EigenCongruence, names, pr, frob)) {
            reports.push_back(std::move(pr));
            continue;
        }
        // the eigen defect reads a_{n p^{l+1}}, one level past l
        Sizing sz = resolve_sizes(cfg, p, 1);
        pr.trunc = sz.trunc;
        pr.precision = sz.precision;
        pr.trunc_budget = sz.trunc_budget;
        pr.precision_budget = sz.precision_budget;
        CheckConfig ec = engine_config(cfg, p, sz);
        PadicContext ctx(p, sz.precision);
        UpSpectrum spec = up_spectrum(frob, cfg.k, ctx);

        if (cfg.ring == "exact") {
            if (sz.trunc > 500)
                throw ConfigError(
                    "check-zhang: the exact ring mode is capped at trunc "
                    "500, requested " +
                    std::to_string(sz.trunc));
            IntegerRing ring(p, sz.precision);
            auto basis = zhang_basis(sz.trunc, ring);
            for (int i = 0; i < 3; ++i) {
                mpz_class lam = spec.lambdas[static_cast<size_t>(i)].value();
                if (cfg.sabotage_u) lam += p;
                pr.sections.push_back(
                    {names[static_cast<size_t>(i)],
                     eigen_congruence_check(basis[static_cast<size_t>(i)],
                                            lam, ec)});
            }
        } else {
            auto basis = basis_cached(cache, p, sz.precision, sz.trunc);
            const PadicCoeffRing& ring = basis[0].ring();
            for (int i = 0; i < 3; ++i) {
                auto lam = ring.from_mpz(
                    spec.lambdas[static_cast<size_t>(i)].value());
                if (cfg.sabotage_u) lam = ring.add(lam, ring.from_long(p));
                pr.sections.push_back(
                    {names[static_cast<size_t>(i)],
                     eigen_congruence_check(basis[static_cast<size_t>(i)],
                                            lam, ec)});
            }
        }
        reports.push_back(std::move(pr));
    }
    emit(cfg, reports, out);
    return report_exit_code(reports);
}

int cmd_check_theorem(const RunConfig& cfg, std::ostream& out) {
    WeierstrassCurve E = cfg.curve_model();
    SeriesCache cache(cfg.cache_dir);

    const bool custom = cfg.j0 != 0 || !cfg.form_terms.empty();
    MeroFormSpec custom_spec;
    if (custom) {
        if (cfg.j0 == 0)
            throw ConfigError("--form-term requires --j0");
        if (cfg.form_terms.empty())
            throw ConfigError("--j0 requires at least one --form-term");
        custom_spec.k = cfg.k;
        custom_spec.j0 = cfg.j0;
        for (const auto& t : cfg.form_terms)
            custom_spec.terms.push_back(parse_term(t));
        custom_spec.validate();
    } else if (cfg.k != 2) {
        throw ConfigError("check-theorem: the built-in basis has k = 2");
    }
    std::vector<std::string> names =
        custom ? std::vector<std::string>{"custom"}
               : std::vector<std::string>{"f1", "f2", "f3"};

    std::vector<PrimeReport> reports;
    for (long p : cfg.primes) {
        PrimeReport pr;
        pr.curve = E;
        pr.p = p;
        pr.k = cfg.k;
        pr.mode = "annihilator";
        pr.scaled = true;
        pr.twist = cfg.twist_convention();
        pr.exp_c = cfg.exp_c_value();
        FrobeniusQuadratic frob{};
        if (skip_sections(E, p, CheckKind::Annihilator, names, pr, frob)) {
            reports.push_back(std::move(pr));
            continue;
        }
        const int M =
            cfg.empty_poly ? 0 : (cfg.k + 1) + (cfg.with_q ? 2 : 0);
        Sizing sz = resolve_sizes(cfg, p, M);
        pr.trunc = sz.trunc;
        pr.precision = sz.precision;
        pr.trunc_budget = sz.trunc_budget;
        pr.precision_budget = sz.precision_budget;
        CheckConfig ec = engine_config(cfg, p, sz);
        PadicContext ctx(p, sz.precision);
        UpSpectrum spec = up_spectrum(frob, cfg.k, ctx);

        AnnihilatorPoly poly = residue_charpoly(spec, ec.twist);
        if (cfg.with_q)
            poly = product_coeffs(poly,
                                  classical_q_poly({}, 1, cfg.k, ctx));
        if (cfg.empty_poly)
            poly = AnnihilatorPoly{{PadicInt(ctx, 1)},
                                   PolyProvenance::ClassicalPart};

        std::vector<Series<PadicCoeffRing>> forms;
        if (custom) {
            forms.push_back(
                mero_form_cached(cache, custom_spec, p, sz.precision,
                                 sz.trunc));
        } else {
            auto basis = basis_cached(cache, p, sz.precision, sz.trunc);
            forms.assign(basis.begin(), basis.end());
        }
        for (size_t i = 0; i < forms.size(); ++i) {
            CongruenceReport rep = annihilator_check(forms[i], poly, ec, true);
            rep.merge(corollary_aggregate_check(forms[i], poly, ec));
            pr.sections.push_back({names[i], std::move(rep)});
        }
        reports.push_back(std::move(pr));
    }
    emit(cfg, reports, out);
    return report_exit_code(reports);
}

} // namespace asdlab
