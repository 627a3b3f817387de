#pragma once
#include <gmpxx.h>
#include <optional>
#include <string>

#include "asdlab/errors.hpp"

namespace asdlab {

// Exponent of p in n, exact. n = 0 has infinite valuation, reported as nullopt.
std::optional<long> integer_valuation(const mpz_class& n, long p);

bool is_prime(long n);

// Ambient ring Z/p^B with p prime > 3 and B >= 1. Residues are kept in
// canonical form 0 <= x < p^B; a stored zero therefore only certifies
// valuation >= B, which is what PadicInt::valuation() reports for it.
class PadicContext {
public:
    PadicContext(long p, int precision);

    long prime() const { return p_; }
    int precision() const { return b_; }
    const mpz_class& modulus() const { return modulus_; }

    bool operator==(const PadicContext& o) const {
        return p_ == o.p_ && b_ == o.b_;
    }
    bool operator!=(const PadicContext& o) const { return !(*this == o); }

    std::string describe() const;

private:
    long p_;
    int b_;
    mpz_class modulus_; // p^B
};

// One element of Z/p^B. Mixed-precision arithmetic reduces to the smaller B;
// mixing different primes throws RingMismatchError.
class PadicInt {
public:
    PadicInt(PadicContext ctx, const mpz_class& value);
    PadicInt(PadicContext ctx, long value);

    const PadicContext& context() const { return ctx_; }
    const mpz_class& value() const { return v_; } // canonical representative

    bool is_zero() const { return v_ == 0; }
    bool is_unit() const;

    // In [0, B]; the zero residue reports B (i.e. "at least B").
    int valuation() const;

    PadicInt inverse() const; // throws NotAUnitError on valuation > 0
    PadicInt pow(long e) const; // e < 0 inverts first
    PadicInt reduced_to(int precision) const; // precision <= B

    PadicInt operator-() const;
    friend PadicInt operator+(const PadicInt& a, const PadicInt& b);
    friend PadicInt operator-(const PadicInt& a, const PadicInt& b);
    friend PadicInt operator*(const PadicInt& a, const PadicInt& b);
    friend bool operator==(const PadicInt& a, const PadicInt& b);
    friend bool operator!=(const PadicInt& a, const PadicInt& b) {
        return !(a == b);
    }

    std::string str() const;

private:
    PadicContext ctx_;
    mpz_class v_;
};

// x^-1 mod p^B for a unit x.
PadicInt padic_inverse(const PadicInt& x);

// Unit root of X^2 - a_p X + p in Z/p^B, by Newton lifting from the seed
// a_p mod p with precision doubling each step. Requires p coprime to a_p
// (otherwise SupersingularPrimeError: both roots have positive valuation).
PadicInt unit_root(const mpz_class& a_p, const PadicContext& ctx);

} // namespace asdlab
