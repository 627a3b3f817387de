#pragma once
#include <gmpxx.h>
#include <string>
#include <vector>

#include "asdlab/errors.hpp"

namespace asdlab {

// Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q.
struct WeierstrassCurve {
    mpz_class a1, a2, a3, a4, a6;

    mpz_class b2() const { return a1 * a1 + 4 * a2; }
    mpz_class b4() const { return 2 * a4 + a1 * a3; }
    mpz_class b6() const { return a3 * a3 + 4 * a6; }
    mpz_class b8() const {
        return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 -
               a4 * a4;
    }
    mpz_class c4() const { return b2() * b2() - 24 * b4(); }
    mpz_class c6() const {
        return -b2() * b2() * b2() + 36 * b2() * b4() - 216 * b6();
    }
    mpz_class discriminant() const;
    mpq_class j_invariant() const; // requires discriminant != 0

    std::string str() const;
};

WeierstrassCurve zhang_curve(); // y^2 + xy = x^3 - x^2 - 2x - 1, j = -3375
WeierstrassCurve short_curve(const mpz_class& A, const mpz_class& B);

struct FrobeniusQuadratic {
    long p;
    long a_p;
    bool ordinary; // p does not divide a_p
};

// Coefficients reduced to [0, p); BadReductionError when p divides the
// discriminant, ConfigError unless p is a prime > 3.
WeierstrassCurve reduce_curve(const WeierstrassCurve& c, long p);

// |C(F_p)| including the point at infinity, by completing the square and
// summing the quadratic character of 4x^3 + b2 x^2 + 2 b4 x + b6.
long count_points(const WeierstrassCurve& c, long p);

FrobeniusQuadratic frobenius_ap(const WeierstrassCurve& c, long p);

// All j in F_p carrying a supersingular curve, by point-counting the
// j-parameterized model and its quadratic twist.
std::vector<long> supersingular_j_list(long p);

// Supersingular j-invariants over the algebraic closure (all of them live in
// F_p^2): roots lambda of the Hasse polynomial sum_i C((p-1)/2, i)^2 lambda^i
// of the Legendre curve, pushed through j(lambda) = 256 (l^2-l+1)^3 / (l^2
// (l-1)^2). total is the distinct-j count the mass formula brackets;
// rational is the sublist lying in F_p, which must reproduce
// supersingular_j_list.
struct SupersingularClosure {
    long total;
    std::vector<long> rational;
};
SupersingularClosure supersingular_closure(long p);

} // namespace asdlab
