#include "asdlab/engine.hpp"

#include <algorithm>
#include <optional>

namespace asdlab {

std::string status_name(CheckStatus s) {
    switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Inconclusive: return "inconclusive";
    default: return "skipped";
    }
}

std::string kind_name(CheckKind k) {
    switch (k) {
    case CheckKind::ThetaImage: return "theta-image";
    case CheckKind::EigenCongruence: return "eigen-congruence";
    case CheckKind::Annihilator: return "annihilator";
    default: return "aggregate";
    }
}

void CongruenceReport::add(CheckRecord r) {
    ++total;
    switch (r.status) {
    case CheckStatus::Pass: ++passed; break;
    case CheckStatus::Fail: ++failed; break;
    case CheckStatus::Skipped: ++skipped; break;
    default: ++inconclusive; break;
    }
    records.push_back(std::move(r));
}

void CongruenceReport::merge(const CongruenceReport& o) {
    records.insert(records.end(), o.records.begin(), o.records.end());
    total += o.total;
    passed += o.passed;
    failed += o.failed;
    skipped += o.skipped;
    inconclusive += o.inconclusive;
}

void CheckConfig::validate() const {
    if (p < 5 || !is_prime(p))
        throw ConfigError("check config: p = " + std::to_string(p) +
                          " is not a prime > 3");
    if (k < 0) throw ConfigError("check config: negative k");
    if (exp_c < 0) throw ConfigError("check config: negative exponent constant");
    for (int l : l_values)
        if (l < 0) throw ConfigError("check config: negative l");
    for (long n : n_values)
        if (n < 1) throw ConfigError("check config: n must be >= 1");
}

int required_precision(long p, int k, int max_l, long trunc, int M) {
    if (p < 2 || k < 0 || max_l < 0 || trunc < 1 || M < 0)
        throw ConfigError("required_precision: bad arguments");
    int e = 0;
    __int128 pw = 1;
    while (pw < trunc) {
        pw *= p;
        ++e;
    }
    return (k + 1) * max_l + (k + 1) * e + M + 4;
}

long required_trunc(long p, long max_n, int max_l, int M) {
    if (p < 2 || max_n < 1 || max_l < 0 || M < 0)
        throw ConfigError("required_trunc: bad arguments");
    __int128 v = max_n;
    for (int i = 0; i < max_l + M + 1; ++i) {
        v *= p;
        if (v > (static_cast<__int128>(1) << 62))
            throw ConfigError("required_trunc: index range overflows");
    }
    return static_cast<long>(v / p) + 1;
}

namespace {

// Pass needs both the margin and the precision to certify it; a valuation
// capped at B below the requirement stays undecided, an exactly-known one
// below the requirement is a hard failure.
CheckStatus judge(int observed, int required, int B) {
    if (B >= required && observed >= required) return CheckStatus::Pass;
    if (observed < std::min(required, B)) return CheckStatus::Fail;
    return CheckStatus::Inconclusive;
}

int index_val(long n, long p) {
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

} // namespace

template <class R>
CongruenceReport theta_image_test(const Series<R>& g, int k) {
    if (k < 0) throw ConfigError("theta_image_test: negative k");
    if (g.offset() < 0)
        throw ConfigError(
            "theta_image_test: series with a pole has no theta preimage");
    const R& ring = g.ring();
    const int B = ring.precision();
    CongruenceReport rep;
    for (long n = g.offset(); n < g.trunc(); ++n) {
        CheckRecord r;
        r.kind = CheckKind::ThetaImage;
        r.n = n;
        const auto& a = g.coeff(n);
        r.left = ring.to_mpz(a).get_str();
        r.right = "0";
        r.coprime = n % ring.prime() != 0;
        r.observed_valuation = ring.val(a);
        r.required_exponent = n == 0 ? B : (k + 1) * index_val(n, ring.prime());
        r.status = judge(r.observed_valuation, r.required_exponent, B);
        rep.add(r);
    }
    return rep;
}

template <class R>
CongruenceReport eigen_congruence_check(const Series<R>& f,
                                        const typename R::Elem& lambda,
                                        const CheckConfig& cfg) {
    cfg.validate();
    const R& ring = f.ring();
    if (cfg.p != ring.prime())
        throw RingMismatchError("eigen_congruence_check: config p = " +
                                std::to_string(cfg.p) + " vs " +
                                ring.describe());
    if (f.offset() < 0)
        throw ConfigError("eigen_congruence_check: series with a pole");
    const int B = ring.precision();
    CongruenceReport rep;
    for (int l : cfg.l_values) {
        for (long n : cfg.n_values) {
            CheckRecord r;
            r.kind = CheckKind::EigenCongruence;
            r.n = n;
            r.l = l;
            r.coprime = n % cfg.p != 0;
            r.required_exponent = (cfg.k + 1) * l;
            __int128 i0 = n;
            for (int t = 0; t < l; ++t) i0 *= cfg.p;
            __int128 i1 = i0 * cfg.p;
            if (i1 >= f.trunc()) {
                r.note = "a_{n p^{l+1}} is beyond the stored window";
                rep.add(r); // default status: Inconclusive
                continue;
            }
            auto a1 = f.at(static_cast<long>(i1));
            auto rhs = ring.mul(lambda, f.at(static_cast<long>(i0)));
            r.left = ring.to_mpz(a1).get_str();
            r.right = ring.to_mpz(rhs).get_str();
            r.observed_valuation = ring.val(ring.sub(a1, rhs));
            r.status = judge(r.observed_valuation, r.required_exponent, B);
            rep.add(r);
        }
    }
    return rep;
}

namespace {

template <class R>
typename R::Elem poly_term_coeff(const R& ring, const AnnihilatorPoly& poly,
                                 int i, bool scaled, int exp_c) {
    const int M = poly.degree();
    if (scaled)
        return ring.mul(ring.from_mpz(poly.coeffs[M - i].value()),
                        ring.prime_power(exp_c * (M - i)));
    return ring.from_mpz(poly.coeffs[i].value());
}

void require_poly_prime(const AnnihilatorPoly& poly, long p,
                        const char* where) {
    if (poly.coeffs.empty())
        throw ConfigError(std::string(where) + ": empty polynomial");
    if (poly.coeffs[0].context().prime() != p)
        throw RingMismatchError(std::string(where) + ": polynomial over p = " +
                                std::to_string(
                                    poly.coeffs[0].context().prime()) +
                                " applied at p = " + std::to_string(p));
}

} // namespace

template <class R>
CongruenceReport annihilator_check(const Series<R>& f,
                                   const AnnihilatorPoly& poly,
                                   const CheckConfig& cfg, bool scaled) {
    cfg.validate();
    const R& ring = f.ring();
    if (cfg.p != ring.prime())
        throw RingMismatchError("annihilator_check: config p = " +
                                std::to_string(cfg.p) + " vs " +
                                ring.describe());
    require_poly_prime(poly, ring.prime(), "annihilator_check");
    const int M = poly.degree();

    std::optional<Series<R>> acc;
    Series<R> cur = f;
    for (int i = 0; i <= M; ++i) {
        auto ci = poly_term_coeff(ring, poly, i, scaled, cfg.exp_c);
        Series<R> term = scale(ci, cur);
        acc = acc ? add(*acc, term) : std::move(term);
        if (i < M) cur = u_p(cur, cfg.p);
    }

    CongruenceReport rep = theta_image_test(*acc, cfg.k);
    if (rep.total == 0) {
        CheckRecord r;
        r.kind = CheckKind::Annihilator;
        r.note = "window exhausted after " + std::to_string(M) +
                 " U_p applications";
        rep.add(r); // Inconclusive: a starved run must not pass
    }
    return rep;
}

template <class R>
CongruenceReport corollary_aggregate_check(const Series<R>& f,
                                           const AnnihilatorPoly& poly,
                                           const CheckConfig& cfg) {
    cfg.validate();
    const R& ring = f.ring();
    if (cfg.p != ring.prime())
        throw RingMismatchError("corollary_aggregate_check: config p = " +
                                std::to_string(cfg.p) + " vs " +
                                ring.describe());
    if (f.offset() < 0)
        throw ConfigError("corollary_aggregate_check: series with a pole");
    require_poly_prime(poly, ring.prime(), "corollary_aggregate_check");
    const int M = poly.degree();
    const int B = ring.precision();

    CongruenceReport rep;
    for (int l : cfg.l_values) {
        for (long n : cfg.n_values) {
            CheckRecord r;
            r.kind = CheckKind::Aggregate;
            r.n = n;
            r.l = l;
            r.coprime = n % cfg.p != 0;
            r.required_exponent = l * (cfg.k + 1);
            __int128 top = n;
            for (int t = 0; t < l + M; ++t) top *= cfg.p;
            if (top >= f.trunc()) {
                r.note = "a_{n p^{l+M}} is beyond the stored window";
                rep.add(r);
                continue;
            }
            auto s = ring.zero();
            __int128 idx = n;
            for (int t = 0; t < l; ++t) idx *= cfg.p;
            for (int i = 0; i <= M; ++i) {
                auto ci = poly_term_coeff(ring, poly, i, true, cfg.exp_c);
                s = ring.add(s, ring.mul(ci, f.at(static_cast<long>(idx))));
                idx *= cfg.p;
            }
            r.left = ring.to_mpz(s).get_str();
            r.right = "0";
            r.observed_valuation = ring.val(s);
            r.status = judge(r.observed_valuation, r.required_exponent, B);
            rep.add(r);
        }
    }
    return rep;
}

std::string convention_name(const ConventionChoice& c) {
    if (!c.scaled) return "convention-free";
    return twist_name(c.twist) + ",c=" + std::to_string(c.exp_c);
}

bool operator==(const ConventionChoice& a, const ConventionChoice& b) {
    if (a.scaled != b.scaled) return false;
    if (!a.scaled) return true;
    return a.twist == b.twist && a.exp_c == b.exp_c;
}

template <class R>
std::vector<ConventionChoice> calibrate(const Series<R>& f1,
                                        const Series<R>& f2,
                                        const Series<R>& f3,
                                        const WeierstrassCurve& E, long p,
                                        int k, const CheckConfig& base) {
    base.validate();
    require_same_ring(f1, f2);
    require_same_ring(f1, f3);
    const R& ring = f1.ring();
    if (p != ring.prime())
        throw RingMismatchError("calibrate: p = " + std::to_string(p) +
                                " vs " + ring.describe());
    if (k != 2)
        throw ConfigError("calibrate: the three-form basis fixes k = 2");

    FrobeniusQuadratic frob = frobenius_ap(E, p);
    PadicContext ctx(p, ring.precision());
    UpSpectrum spec = up_spectrum(frob, k, ctx); // throws on supersingular p
    const Series<R>* fs[3] = {&f1, &f2, &f3};

    // Anchor: the three eigen congruences with untwisted eigenvalues. These
    // are convention-independent facts about the data; if they fail, no
    // normalization gymnastics can be trusted.
    for (int i = 0; i < 3; ++i) {
        auto lam = ring.from_mpz(spec.lambdas[static_cast<size_t>(i)].value());
        if (!eigen_congruence_check(*fs[i], lam, base).clean_pass())
            throw NoConventionPassesError(
                "calibrate: eigen congruence fails for form " +
                std::to_string(i + 1) + " at p = " + std::to_string(p));
    }

    std::vector<ConventionChoice> out;

    AnnihilatorPoly plain = residue_charpoly(spec, TwistConvention::None);
    for (int i = 0; i < 3; ++i) {
        if (!annihilator_check(*fs[i], plain, base, false).clean_pass())
            throw NoConventionPassesError(
                "calibrate: the convention-free annihilator fails for form " +
                std::to_string(i + 1) + " at p = " + std::to_string(p));
    }
    out.push_back(ConventionChoice{false, TwistConvention::None, 0});

    for (TwistConvention tw :
         {TwistConvention::None, TwistConvention::TateTimesP}) {
        AnnihilatorPoly rpoly = residue_charpoly(spec, tw);
        for (int c : {1, k + 1}) {
            CheckConfig cfg = base;
            cfg.twist = tw;
            cfg.exp_c = c;
            bool ok = true;
            for (int i = 0; i < 3 && ok; ++i) {
                ok = annihilator_check(*fs[i], rpoly, cfg, true).clean_pass() &&
                     corollary_aggregate_check(*fs[i], rpoly, cfg)
                         .clean_pass();
            }
            if (ok) out.push_back(ConventionChoice{true, tw, c});
        }
    }
    return out;
}

template CongruenceReport theta_image_test<PadicCoeffRing>(
    const Series<PadicCoeffRing>&, int);
template CongruenceReport theta_image_test<IntegerRing>(
    const Series<IntegerRing>&, int);
template CongruenceReport eigen_congruence_check<PadicCoeffRing>(
    const Series<PadicCoeffRing>&, const PadicCoeffRing::Elem&,
    const CheckConfig&);
template CongruenceReport eigen_congruence_check<IntegerRing>(
    const Series<IntegerRing>&, const IntegerRing::Elem&, const CheckConfig&);
template CongruenceReport annihilator_check<PadicCoeffRing>(
    const Series<PadicCoeffRing>&, const AnnihilatorPoly&, const CheckConfig&,
    bool);
template CongruenceReport annihilator_check<IntegerRing>(
    const Series<IntegerRing>&, const AnnihilatorPoly&, const CheckConfig&,
    bool);
template CongruenceReport corollary_aggregate_check<PadicCoeffRing>(
    const Series<PadicCoeffRing>&, const AnnihilatorPoly&, const CheckConfig&);
template CongruenceReport corollary_aggregate_check<IntegerRing>(
    const Series<IntegerRing>&, const AnnihilatorPoly&, const CheckConfig&);
template std::vector<ConventionChoice> calibrate<PadicCoeffRing>(
    const Series<PadicCoeffRing>&, const Series<PadicCoeffRing>&,
    const Series<PadicCoeffRing>&, const WeierstrassCurve&, long, int,
    const CheckConfig&);
template std::vector<ConventionChoice> calibrate<IntegerRing>(
    const Series<IntegerRing>&, const Series<IntegerRing>&,
    const Series<IntegerRing>&, const WeierstrassCurve&, long, int,
    const CheckConfig&);

} // namespace asdlab
