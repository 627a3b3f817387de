#include "asdlab/classical.hpp"
#include "doctest.h"

using namespace asdlab;

namespace {

using PSeries = Series<PadicCoeffRing>;
using ZSeries = Series<IntegerRing>;

// Ramanujan tau, n = 1..12.
const long kTau[] = {1,      -24,     252,     -1472,  4830,   -6048,
                     -16744, 84480,   -113643, -115920, 534612, -370944};

// Literal eta-product: q * prod_{n>=1} (1 - q^n)^24, naive multiplication.
ZSeries delta_eta_oracle(long N, const IntegerRing& Z) {
    ZSeries f(Z, 0, std::vector<mpz_class>(static_cast<size_t>(N - 1), 0));
    f.set(0, 1);
    for (long n = 1; n < N - 1; ++n) {
        std::vector<mpz_class> g(static_cast<size_t>(N - 1), 0);
        g[0] = 1;
        g[static_cast<size_t>(n)] = -1;
        ZSeries gn(Z, 0, std::move(g));
        for (int rep = 0; rep < 24; ++rep) f = f * gn;
    }
    return ZSeries(Z, 1, std::move(f.data()));
}

} // namespace

TEST_CASE("sigma sieve") {
    auto s3 = sigma_table(3, 10);
    CHECK(s3[1] == 1);
    CHECK(s3[2] == 9);
    CHECK(s3[6] == 252);
    auto s5 = sigma_table(5, 3);
    CHECK(s5[2] == 33);
    CHECK_THROWS_AS(sigma_table(0, 10), ConfigError);
    CHECK_THROWS_AS(sigma_table(40, 1000000), ConfigError); // would overflow
}

TEST_CASE("Eisenstein expansions") {
    IntegerRing Z(5, 4);
    ZSeries e4 = eisenstein(4, 4, Z);
    CHECK(e4.coeff(0) == 1);
    CHECK(e4.coeff(1) == 240);
    CHECK(e4.coeff(2) == 2160);
    CHECK(e4.coeff(3) == 240 * 28);
    ZSeries e6 = eisenstein(6, 3, Z);
    CHECK(e6.coeff(0) == 1);
    CHECK(e6.coeff(1) == -504);
    CHECK(e6.coeff(2) == -504 * 33);
    CHECK_THROWS_AS(eisenstein(8, 4, Z), ConfigError);
}

TEST_CASE("delta: tau values and both construction routes") {
    IntegerRing Z(11, 6);
    ZSeries d = delta(14, Z);
    CHECK(d.offset() == 1);
    for (int n = 1; n <= 12; ++n) CHECK(d.coeff(n) == kTau[n - 1]);
    CHECK(identical(delta_via_eisenstein(14, Z), d));

    PadicCoeffRing R(11, 6);
    CHECK(identical(delta_via_eisenstein(40, R), delta(40, R)));
}

TEST_CASE("delta equals the literal eta product") {
    IntegerRing Z(5, 4);
    const long N = 40;
    CHECK(identical(delta(N, Z), delta_eta_oracle(N, Z)));
}

TEST_CASE("j expansion and defining identity") {
    IntegerRing Z(7, 4);
    const long N = 30;
    ZSeries j = j_series(N, Z);
    CHECK(j.offset() == -1);
    CHECK(j.trunc() == N);
    CHECK(j.coeff(-1) == 1);
    CHECK(j.coeff(0) == 744);
    CHECK(j.coeff(1) == 196884);
    CHECK(j.coeff(2) == 21493760);

    // j * Delta = E4^3 on the shared window
    ZSeries d = delta(N + 1, Z);
    ZSeries lhs = j * d;
    ZSeries rhs = series_pow(eisenstein(4, N, Z), 3);
    CHECK(identical(lhs, rhs));

    // 1728 Delta = E4^3 - E6^2 is the delta_via_eisenstein route, checked
    // against the eta route above; assert the scaled identity directly too.
    ZSeries e4 = eisenstein(4, N, Z);
    ZSeries e6 = eisenstein(6, N, Z);
    ZSeries diff = series_pow(e4, 3) - series_pow(e6, 2);
    ZSeries d1728 = scale(Z.from_long(1728), delta(N, Z));
    CHECK(agree_on_overlap(diff, d1728));
}

TEST_CASE("mero form: the simple pole at j0 = -3375") {
    IntegerRing Z(11, 6);
    const long N = 30;
    auto specs = zhang_specs();
    specs[0].validate();
    ZSeries f1 = mero_form(specs[0], N, Z);
    CHECK(f1.offset() == 1);
    CHECK(Z.is_zero(f1.at(0)));
    CHECK(f1.coeff(1) == 1);
    CHECK(f1.coeff(2) == -3879); // 216 - 4095

    // E4 * Delta starts q + 216 q^2; 1/(E4^3 + 3375 Delta) starts 1 - 4095 q.
    ZSeries e4 = eisenstein(4, N, Z);
    ZSeries dl = delta(N + 1, Z);
    ZSeries prod = e4 * dl;
    CHECK(prod.coeff(1) == 1);
    CHECK(prod.coeff(2) == 216);
    ZSeries w = inverse(series_pow(e4, 3) + scale(Z.from_long(3375), dl));
    CHECK(w.coeff(0) == 1);
    CHECK(w.coeff(1) == -4095);

    // (j + 3375) f1 = E4 exactly on the shared window
    ZSeries j = j_series(N, Z);
    ZSeries jp(Z, -1, j.data());
    jp.set(0, jp.coeff(0) + 3375);
    CHECK(agree_on_overlap(jp * f1, e4));
}

TEST_CASE("mero form: spec validation") {
    auto specs = zhang_specs();
    for (auto& s : specs) s.validate();
    MeroFormSpec bad = specs[0];
    bad.j0 = 1728;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = specs[0];
    bad.terms[0].a = 2; // weight bookkeeping off
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = specs[0];
    bad.terms.clear();
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = specs[0];
    bad.terms[0].m = 0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("zhang basis: displayed coefficients and shared assembly") {
    const long N = 120;
    IntegerRing Z(11, 8);
    auto specs = zhang_specs();
    auto basis = zhang_basis(N, Z);
    for (int i = 0; i < 3; ++i) {
        ZSeries direct = mero_form(specs[i], N, Z);
        CHECK(identical(basis[static_cast<size_t>(i)], direct));
        CHECK(Z.is_zero(basis[static_cast<size_t>(i)].at(0)));
    }
    // same through the modular ring
    PadicCoeffRing R(11, 8);
    auto pbasis = zhang_basis(N, R);
    for (int i = 0; i < 3; ++i)
        CHECK(identical(to_padic(basis[static_cast<size_t>(i)], 8),
                        pbasis[static_cast<size_t>(i)]));
}

TEST_CASE("mero form: cleared denominators") {
    IntegerRing Z(5, 4);
    const long N = 40;
    auto specs = zhang_specs();
    ZSeries f2 = mero_form(specs[1], N, Z);
    ZSeries e4 = eisenstein(4, N, Z);
    ZSeries j = j_series(N, Z);
    ZSeries jp(Z, -1, j.data());
    jp.set(0, jp.coeff(0) + 3375);
    // f2 (j+3375)^2 = 19 E4 (j+3375) - 91125 E4
    ZSeries lhs = f2 * series_pow(jp, 2);
    ZSeries rhs = sub(scale(Z.from_long(19), e4 * jp),
                      scale(Z.from_long(91125), e4));
    CHECK(agree_on_overlap(lhs, rhs));
    ZSeries f3 = mero_form(specs[2], N, Z);
    ZSeries lhs3 = f3 * series_pow(jp, 3);
    ZSeries rhs3 = add(sub(scale(Z.from_long(1399), e4 * series_pow(jp, 2)),
                           scale(Z.from_long(19008675), e4 * jp)),
                       scale(Z.from_long(54251268750L), e4));
    CHECK(agree_on_overlap(lhs3, rhs3));
}
