#include "doctest.h"

#include <gmpxx.h>
#include <vector>

#include "asdlab/curve.hpp"
#include "asdlab/frobenius.hpp"
#include "asdlab/padic.hpp"

using namespace asdlab;

namespace {

mpz_class eval_poly_mod(const std::vector<mpz_class>& c, const mpz_class& y,
                        const mpz_class& m) {
    mpz_class acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = (acc * y + *it) % m;
    return acc;
}

// Read the valuation-a root back out of an annihilator polynomial using only
// its coefficients: substitute X = p^a Y, strip the p-content, scan for the
// (required unique) simple unit root mod p, Newton-lift it, and undo the
// substitution. Checks the result against `expect` at the precision that
// survives the content strip.
void check_root_recovery(const AnnihilatorPoly& R, const PadicInt& expect,
                         int a) {
    long p = expect.context().prime();
    int B = expect.context().precision();
    REQUIRE(B > a * R.degree() + 5);

    const auto& c = R.coeffs;
    std::vector<mpz_class> S(c.size());
    mpz_class pa = 1, pstep;
    mpz_ui_pow_ui(pstep.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(a));
    for (size_t i = 0; i < c.size(); ++i) {
        S[i] = c[i].value() * pa;
        pa *= pstep;
    }

    long v = -1;
    for (const auto& s : S)
        if (s != 0) {
            long w = *integer_valuation(s, p);
            if (v < 0 || w < v) v = w;
        }
    REQUIRE(v >= 0);
    int t = B - static_cast<int>(v);
    REQUIRE(t >= 5);

    mpz_class m, pv;
    mpz_ui_pow_ui(m.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(t));
    mpz_ui_pow_ui(pv.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(v));
    std::vector<mpz_class> T(S.size()), D;
    for (size_t i = 0; i < S.size(); ++i) T[i] = (S[i] / pv) % m;
    for (size_t i = 1; i < T.size(); ++i)
        D.push_back((mpz_class(static_cast<long>(i)) * T[i]) % m);

    long seed = -1;
    mpz_class pz(p);
    for (long y0 = 1; y0 < p; ++y0) {
        if (eval_poly_mod(T, y0, pz) == 0 && eval_poly_mod(D, y0, pz) != 0) {
            REQUIRE(seed == -1); // the slope decomposition leaves one unit root
            seed = y0;
        }
    }
    REQUIRE(seed != -1);

    mpz_class y(seed);
    for (int it = 0; it < 64; ++it) {
        mpz_class fy = eval_poly_mod(T, y, m);
        if (fy == 0) break;
        mpz_class dy = eval_poly_mod(D, y, m), inv;
        REQUIRE(mpz_invert(inv.get_mpz_t(), dy.get_mpz_t(), m.get_mpz_t()) !=
                0);
        y = ((y - fy * inv) % m + m) % m;
    }
    REQUIRE(eval_poly_mod(T, y, m) == 0);

    mpz_class got = (y * pstep) % m;
    CHECK(got == expect.value() % m);
}

PadicInt eval_at(const AnnihilatorPoly& R, const PadicInt& x) {
    PadicInt acc(x.context(), 0), pw(x.context(), 1);
    for (const auto& ci : R.coeffs) {
        acc = acc + ci * pw;
        pw = pw * x;
    }
    return acc;
}

} // namespace

TEST_CASE("trivial symmetric power k = 0") {
    PadicContext ctx(11, 8);
    auto frob = frobenius_ap(zhang_curve(), 11);
    auto s = up_spectrum(frob, 0, ctx);
    REQUIRE(s.lambdas.size() == 1);
    CHECK(s.lambdas[0] == PadicInt(ctx, 1));

    auto R = residue_charpoly(s, TwistConvention::None);
    REQUIRE(R.degree() == 1);
    CHECK(R.coeffs[0] == PadicInt(ctx, -1));
    CHECK(R.coeffs[1] == PadicInt(ctx, 1));
    CHECK(R.provenance == PolyProvenance::ResiduePiece);

    auto Rt = residue_charpoly(s, TwistConvention::TateTimesP);
    CHECK(Rt.coeffs[0] == PadicInt(ctx, -11));
}

TEST_CASE("zhang curve p = 11 k = 2 spectrum") {
    PadicContext ctx(11, 20);
    auto frob = frobenius_ap(zhang_curve(), 11);
    REQUIRE(frob.ordinary);
    CHECK(frob.a_p == 4);

    auto s = up_spectrum(frob, 2, ctx);
    CHECK(s.u.value() % 121 == 92); // unit root of X^2 - 4X + 11 mod 11^2
    CHECK((s.u * s.u - PadicInt(ctx, 4) * s.u + PadicInt(ctx, 11)).is_zero());

    REQUIRE(s.lambdas.size() == 3);
    CHECK(s.lambdas[0] == s.u * s.u);
    CHECK(s.lambdas[1] == PadicInt(ctx, 11));
    CHECK(s.lambdas[2] == PadicInt(ctx, 121) * s.u.pow(-2));
    for (int a = 0; a <= 2; ++a) CHECK(s.lambdas[a].valuation() == a);
    CHECK(s.lambdas[0] * s.lambdas[1] * s.lambdas[2] ==
          PadicInt(ctx, 11).pow(3));
}

TEST_CASE("higher symmetric power valuation ladder") {
    PadicContext ctx(23, 12);
    auto s = up_spectrum(frobenius_ap(zhang_curve(), 23), 4, ctx);
    REQUIRE(s.lambdas.size() == 5);
    for (int a = 0; a <= 4; ++a) CHECK(s.lambdas[a].valuation() == a);
    CHECK(s.lambdas[2] == PadicInt(ctx, 23 * 23));
}

TEST_CASE("residue charpoly roots and twist") {
    PadicContext ctx(11, 18);
    auto s = up_spectrum(frobenius_ap(zhang_curve(), 11), 2, ctx);
    PadicInt pp(ctx, 11);

    auto R = residue_charpoly(s, TwistConvention::None);
    REQUIRE(R.degree() == 3);
    CHECK(R.coeffs[3] == PadicInt(ctx, 1));
    CHECK(R.coeffs[0] == -pp.pow(3));
    for (const auto& lam : s.lambdas) CHECK(eval_at(R, lam).is_zero());

    auto Rt = residue_charpoly(s, TwistConvention::TateTimesP);
    REQUIRE(Rt.degree() == 3);
    CHECK(Rt.coeffs[3] == PadicInt(ctx, 1));
    CHECK(Rt.coeffs[0] == -pp.pow(6));
    for (const auto& lam : s.lambdas) CHECK(eval_at(Rt, pp * lam).is_zero());

    CHECK(twist_name(TwistConvention::None) == "none");
    CHECK(twist_name(TwistConvention::TateTimesP) == "tate");
}

TEST_CASE("root recovery from coefficients alone") {
    PadicContext ctx(11, 20);
    auto s = up_spectrum(frobenius_ap(zhang_curve(), 11), 2, ctx);
    PadicInt pp(ctx, 11);

    auto R = residue_charpoly(s, TwistConvention::None);
    for (int a = 0; a <= 2; ++a) check_root_recovery(R, s.lambdas[a], a);

    auto Rt = residue_charpoly(s, TwistConvention::TateTimesP);
    for (int a = 0; a <= 2; ++a)
        check_root_recovery(Rt, pp * s.lambdas[a], a + 1);

    // the classical quadratic at k = 0 is X^2 - a_p X + p itself, so the
    // recovered unit root must match the Hensel lift
    auto C = classical_q_poly({4}, 0, 0, ctx);
    check_root_recovery(C, s.u, 0);
}

TEST_CASE("classical factor assembly") {
    PadicContext ctx(11, 12);

    auto E = classical_q_poly({}, 1, 2, ctx); // (X - 1)(X - 11^3)
    REQUIRE(E.degree() == 2);
    CHECK(E.coeffs[0] == PadicInt(ctx, 1331));
    CHECK(E.coeffs[1] == PadicInt(ctx, -1332));
    CHECK(E.coeffs[2] == PadicInt(ctx, 1));
    CHECK(E.provenance == PolyProvenance::ClassicalPart);

    auto one = classical_q_poly({}, 0, 2, ctx);
    REQUIRE(one.degree() == 0);
    CHECK(one.coeffs[0] == PadicInt(ctx, 1));

    auto C = classical_q_poly({0}, 0, 2, ctx); // X^2 + 11^3
    REQUIRE(C.degree() == 2);
    CHECK(C.coeffs[0] == PadicInt(ctx, 1331));
    CHECK(C.coeffs[1].is_zero());
    CHECK(C.coeffs[2] == PadicInt(ctx, 1));

    auto C2 = classical_q_poly({4, -10}, 1, 2, ctx);
    REQUIRE(C2.degree() == 6);
    CHECK(C2.coeffs[6] == PadicInt(ctx, 1));
    CHECK(C2.coeffs[0] == PadicInt(ctx, 11).pow(9));
    CHECK(eval_at(C2, PadicInt(ctx, 1)).is_zero());
    CHECK(eval_at(C2, PadicInt(ctx, 1331)).is_zero());
}

TEST_CASE("hasse bound on classical eigenvalue data") {
    PadicContext ctx(5, 10);
    CHECK_THROWS_AS(classical_q_poly({5}, 0, 0, ctx), ConfigError); // 25 > 20
    CHECK_NOTHROW(classical_q_poly({4}, 0, 0, ctx));
    CHECK_NOTHROW(classical_q_poly({-4}, 0, 0, ctx));
    CHECK_THROWS_AS(classical_q_poly({}, -1, 0, ctx), ConfigError);
}

TEST_CASE("spectrum preconditions") {
    auto frob11 = frobenius_ap(zhang_curve(), 11);
    CHECK_THROWS_AS(up_spectrum(frob11, 2, PadicContext(23, 10)),
                    RingMismatchError);
    CHECK_THROWS_AS(up_spectrum(frob11, 2, PadicContext(11, 2)),
                    InsufficientPrecisionError);
    CHECK_NOTHROW(up_spectrum(frob11, 2, PadicContext(11, 3)));
    CHECK_THROWS_AS(up_spectrum(frob11, -1, PadicContext(11, 10)),
                    ConfigError);

    auto frob5 = frobenius_ap(zhang_curve(), 5);
    REQUIRE(!frob5.ordinary);
    CHECK_THROWS_AS(up_spectrum(frob5, 2, PadicContext(5, 10)),
                    SupersingularPrimeError);
}

TEST_CASE("annihilator product") {
    PadicContext ctx(11, 14);
    auto s = up_spectrum(frobenius_ap(zhang_curve(), 11), 2, ctx);
    auto R = residue_charpoly(s, TwistConvention::None);
    auto E = classical_q_poly({}, 1, 2, ctx);

    auto P = product_coeffs(R, E);
    REQUIRE(P.degree() == 5);
    CHECK(P.provenance == PolyProvenance::Product);
    CHECK(P.coeffs[5] == PadicInt(ctx, 1));
    CHECK(eval_at(P, s.lambdas[0]).is_zero());
    CHECK(eval_at(P, PadicInt(ctx, 1)).is_zero());
    CHECK(eval_at(P, PadicInt(ctx, 1331)).is_zero());
}
