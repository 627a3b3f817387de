#include "asdlab/frobenius.hpp"

namespace asdlab {

std::string twist_name(TwistConvention t) {
    return t == TwistConvention::None ? "none" : "tate";
}

namespace {

std::vector<PadicInt> times_linear(const std::vector<PadicInt>& c,
                                   const PadicInt& root) {
    // multiply by (X - root)
    std::vector<PadicInt> out;
    out.reserve(c.size() + 1);
    out.push_back(-(root * c[0]));
    for (size_t i = 1; i < c.size(); ++i)
        out.push_back(c[i - 1] - root * c[i]);
    out.push_back(c.back());
    return out;
}

} // namespace

UpSpectrum up_spectrum(const FrobeniusQuadratic& frob, int k,
                       const PadicContext& ctx) {
    if (k < 0) throw ConfigError("up_spectrum: negative symmetric power");
    if (ctx.prime() != frob.p)
        throw RingMismatchError("up_spectrum: context prime " +
                                std::to_string(ctx.prime()) +
                                " vs curve data at p = " +
                                std::to_string(frob.p));
    if (!frob.ordinary)
        throw SupersingularPrimeError(
            "up_spectrum: p = " + std::to_string(frob.p) +
            " is not ordinary (p | a_p)");
    if (ctx.precision() <= k)
        throw InsufficientPrecisionError(
            "up_spectrum: need precision > k = " + std::to_string(k) +
            " to resolve the top eigenvalue valuation");

    UpSpectrum s{frob.p, k, unit_root(frob.a_p, ctx), {}};
    PadicInt pp(ctx, frob.p);
    for (int a = 0; a <= k; ++a) {
        PadicInt lam = s.u.pow(k - 2 * a) * pp.pow(a);
        if (lam.valuation() != a)
            throw Error("up_spectrum: eigenvalue valuation drifted");
        s.lambdas.push_back(lam);
    }
    PadicInt prod(ctx, 1);
    for (const auto& l : s.lambdas) prod = prod * l;
    if (prod != pp.pow(static_cast<long>(k) * (k + 1) / 2))
        throw Error("up_spectrum: eigenvalue product is not p^{k(k+1)/2}");
    return s;
}

AnnihilatorPoly residue_charpoly(const UpSpectrum& spec,
                                 TwistConvention twist) {
    PadicContext ctx = spec.u.context();
    std::vector<PadicInt> c{PadicInt(ctx, 1)};
    PadicInt pp(ctx, spec.p);
    for (const auto& lam : spec.lambdas) {
        PadicInt root = twist == TwistConvention::TateTimesP ? pp * lam : lam;
        c = times_linear(c, root);
    }
    return {std::move(c), PolyProvenance::ResiduePiece};
}

AnnihilatorPoly classical_q_poly(const std::vector<long>& cusp_eigen_aps,
                                 int num_eisenstein, int k,
                                 const PadicContext& ctx) {
    if (k < 0) throw ConfigError("classical_q_poly: negative symmetric power");
    if (num_eisenstein < 0)
        throw ConfigError("classical_q_poly: negative Eisenstein count");
    mpz_class pk1;
    mpz_ui_pow_ui(pk1.get_mpz_t(), static_cast<unsigned long>(ctx.prime()),
                  static_cast<unsigned long>(k + 1));
    for (long ap : cusp_eigen_aps) {
        if (mpz_class(ap) * ap > 4 * pk1)
            throw ConfigError("classical_q_poly: a_p = " + std::to_string(ap) +
                              " violates the weight-" + std::to_string(k + 2) +
                              " Hasse bound");
    }
    PadicInt one(ctx, 1), pw(ctx, pk1);
    std::vector<PadicInt> c{one};
    for (long ap : cusp_eigen_aps) {
        // times X^2 - a_p X + p^{k+1}
        PadicInt a(ctx, ap);
        std::vector<PadicInt> out(c.size() + 2, PadicInt(ctx, 0));
        for (size_t i = 0; i < c.size(); ++i) {
            out[i] = out[i] + pw * c[i];
            out[i + 1] = out[i + 1] - a * c[i];
            out[i + 2] = out[i + 2] + c[i];
        }
        c = std::move(out);
    }
    for (int i = 0; i < num_eisenstein; ++i) {
        c = times_linear(c, one);
        c = times_linear(c, pw);
    }
    return {std::move(c), PolyProvenance::ClassicalPart};
}

AnnihilatorPoly product_coeffs(const AnnihilatorPoly& P,
                               const AnnihilatorPoly& Q) {
    const auto& a = P.coeffs;
    const auto& b = Q.coeffs;
    if (a.empty() || b.empty())
        throw ConfigError("product_coeffs: empty polynomial");
    std::vector<PadicInt> out(a.size() + b.size() - 1,
                              PadicInt(a[0].context(), 0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = out[i + j] + a[i] * b[j];
    return {std::move(out), PolyProvenance::Product};
}

} // namespace asdlab
