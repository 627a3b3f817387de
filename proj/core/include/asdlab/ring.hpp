#pragma once
#include <gmpxx.h>
#include <cstdint>
#include <string>
#include <vector>

#include "asdlab/errors.hpp"
#include "asdlab/padic.hpp"

namespace asdlab {

static_assert(GMP_LIMB_BITS == 64, "64-bit GMP limbs assumed");

using u128 = unsigned __int128;

inline std::uint64_t lo64(u128 x) { return static_cast<std::uint64_t>(x); }
inline std::uint64_t hi64(u128 x) { return static_cast<std::uint64_t>(x >> 64); }
inline u128 make_u128(std::uint64_t hi, std::uint64_t lo) {
    return (static_cast<u128>(hi) << 64) | lo;
}

mpz_class u128_to_mpz(u128 x);
u128 mpz_to_u128(const mpz_class& x); // requires 0 <= x < 2^128
std::string u128_str(u128 x);

// Coefficient ring Z/p^B with residues packed into 128-bit words, used for
// q-expansion work. Bulk products go through Kronecker substitution: pack the
// residue vectors into big integers, one mpz_mul, unpack and reduce slotwise.
// Schoolbook remains available as the reference route (and for short inputs).
// The packing needs p^B < 2^126; larger B belongs to PadicInt, not to series.
class PadicCoeffRing {
public:
    using Elem = u128;

    PadicCoeffRing(long p, int precision);
    explicit PadicCoeffRing(const PadicContext& ctx)
        : PadicCoeffRing(ctx.prime(), ctx.precision()) {}

    long prime() const { return p_; }
    int precision() const { return b_; }
    u128 modulus() const { return m_; }
    PadicContext context() const { return PadicContext(p_, b_); }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % m_; }
    Elem from_long(long long v) const;
    Elem from_mpz(const mpz_class& v) const;
    Elem from_u128(u128 v) const { return v % m_; }
    mpz_class to_mpz(Elem x) const { return u128_to_mpz(x); }

    bool is_zero(Elem x) const { return x == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }

    Elem add(Elem a, Elem b) const {
        u128 s = a + b; // < 2^127, no wrap
        return s >= m_ ? s - m_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : m_ - (b - a); }
    Elem neg(Elem a) const { return a == 0 ? 0 : m_ - a; }
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const; // throws NotAUnitError
    Elem prime_power(int e) const; // p^e mod p^B (zero once e >= B)
    Elem div_exact(Elem a, long d) const; // d must be a unit (p does not divide d)

    // In [0, B]; zero reports B.
    int val(Elem x) const;

    bool same(const PadicCoeffRing& o) const {
        return p_ == o.p_ && b_ == o.b_;
    }
    std::string describe() const;

    std::vector<Elem> poly_mul(const std::vector<Elem>& a,
                               const std::vector<Elem>& b) const;
    std::vector<Elem> poly_mul_schoolbook(const std::vector<Elem>& a,
                                          const std::vector<Elem>& b) const;

private:
    long p_;
    int b_;
    u128 m_;
    mp_limb_t mlimbs_[2];
    int mlimbs_n_;
    mpz_class mz_; // modulus as mpz, for inversion

    std::vector<Elem> poly_mul_kronecker(const std::vector<Elem>& a,
                                         const std::vector<Elem>& b) const;
};

// Plain integers, for exact cross-checks at small truncation. Carries the
// same (p, B) bookkeeping as the p-adic ring so that reported valuations cap
// identically and the two rings produce comparable check records.
class IntegerRing {
public:
    using Elem = mpz_class;

    IntegerRing(long p, int precision_cap);

    long prime() const { return p_; }
    int precision() const { return cap_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_long(long long v) const { return mpz_class(static_cast<long>(v)); }
    Elem from_mpz(const mpz_class& v) const { return v; }
    Elem from_u128(u128 v) const { return u128_to_mpz(v); }
    mpz_class to_mpz(const Elem& x) const { return x; }

    bool is_zero(const Elem& x) const { return x == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const; // units of Z are +-1
    Elem prime_power(int e) const;
    Elem div_exact(const Elem& a, long d) const; // must divide exactly

    int val(const Elem& x) const; // capped at B, zero reports B

    bool same(const IntegerRing& o) const {
        return p_ == o.p_ && cap_ == o.cap_;
    }
    std::string describe() const;

    std::vector<Elem> poly_mul(const std::vector<Elem>& a,
                               const std::vector<Elem>& b) const;
    std::vector<Elem> poly_mul_schoolbook(const std::vector<Elem>& a,
                                          const std::vector<Elem>& b) const {
        return poly_mul(a, b);
    }

private:
    long p_;
    int cap_;
};

} // namespace asdlab
