#include "asdlab/padic.hpp"

#include <sstream>

namespace asdlab {

std::optional<long> integer_valuation(const mpz_class& n, long p) {
    if (p < 2)
        throw ConfigError("integer_valuation: p must be at least 2");
    if (n == 0)
        return std::nullopt;
    mpz_class rest;
    mpz_class pz(p);
    // mpz_remove strips every factor of p and returns how many it removed.
    mp_bitcnt_t e = mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t());
    return static_cast<long>(e);
}

bool is_prime(long n) {
    mpz_class z(n);
    return mpz_probab_prime_p(z.get_mpz_t(), 30) != 0;
}

namespace {

mpz_class reduce(const mpz_class& v, const mpz_class& m) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t()); // sign of m, i.e. >= 0
    return r;
}

} // namespace

PadicContext::PadicContext(long p, int precision) : p_(p), b_(precision) {
    if (p <= 3)
        throw ConfigError("PadicContext: p must be a prime > 3");
    if (!is_prime(p))
        throw ConfigError("PadicContext: p = " + std::to_string(p) +
                          " is not prime");
    if (precision < 1)
        throw ConfigError("PadicContext: precision must be >= 1");
    mpz_ui_pow_ui(modulus_.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(precision));
}

std::string PadicContext::describe() const {
    return "Z/" + std::to_string(p_) + "^" + std::to_string(b_);
}

PadicInt::PadicInt(PadicContext ctx, const mpz_class& value)
    : ctx_(std::move(ctx)), v_(reduce(value, ctx_.modulus())) {}

PadicInt::PadicInt(PadicContext ctx, long value)
    : PadicInt(std::move(ctx), mpz_class(value)) {}

bool PadicInt::is_unit() const {
    return v_ != 0 && !mpz_divisible_ui_p(v_.get_mpz_t(),
                                          static_cast<unsigned long>(ctx_.prime()));
}

int PadicInt::valuation() const {
    if (v_ == 0)
        return ctx_.precision();
    auto e = integer_valuation(v_, ctx_.prime());
    return static_cast<int>(*e); // v_ != 0, canonical, so e <= B
}

PadicInt PadicInt::inverse() const {
    if (!is_unit())
        throw NotAUnitError("padic_inverse: " + v_.get_str() +
                            " has positive valuation in " + ctx_.describe());
    mpz_class r;
    int ok = mpz_invert(r.get_mpz_t(), v_.get_mpz_t(),
                        ctx_.modulus().get_mpz_t());
    if (!ok) // unreachable for a unit, kept as a hard stop
        throw NotAUnitError("padic_inverse: no inverse");
    return PadicInt(ctx_, r);
}

PadicInt PadicInt::pow(long e) const {
    if (e < 0)
        return inverse().pow(-e);
    mpz_class r;
    mpz_powm_ui(r.get_mpz_t(), v_.get_mpz_t(), static_cast<unsigned long>(e),
                ctx_.modulus().get_mpz_t());
    return PadicInt(ctx_, r);
}

PadicInt PadicInt::reduced_to(int precision) const {
    if (precision > ctx_.precision())
        throw ConfigError("reduced_to: cannot raise precision");
    return PadicInt(PadicContext(ctx_.prime(), precision), v_);
}

namespace {

// Common context for a binary op: same prime, min precision.
PadicContext merged(const PadicContext& a, const PadicContext& b) {
    if (a.prime() != b.prime())
        throw RingMismatchError("PadicInt: mixed primes " + a.describe() +
                                " vs " + b.describe());
    if (a.precision() == b.precision())
        return a;
    return PadicContext(a.prime(), std::min(a.precision(), b.precision()));
}

} // namespace

PadicInt PadicInt::operator-() const {
    return PadicInt(ctx_, ctx_.modulus() - v_);
}

PadicInt operator+(const PadicInt& a, const PadicInt& b) {
    return PadicInt(merged(a.ctx_, b.ctx_), a.v_ + b.v_);
}

PadicInt operator-(const PadicInt& a, const PadicInt& b) {
    return PadicInt(merged(a.ctx_, b.ctx_), a.v_ - b.v_);
}

PadicInt operator*(const PadicInt& a, const PadicInt& b) {
    return PadicInt(merged(a.ctx_, b.ctx_), a.v_ * b.v_);
}

bool operator==(const PadicInt& a, const PadicInt& b) {
    return a.ctx_ == b.ctx_ && a.v_ == b.v_;
}

std::string PadicInt::str() const {
    std::ostringstream os;
    os << v_.get_str() << " (" << ctx_.describe() << ")";
    return os.str();
}

PadicInt padic_inverse(const PadicInt& x) { return x.inverse(); }

PadicInt unit_root(const mpz_class& a_p, const PadicContext& ctx) {
    const long p = ctx.prime();
    if (mpz_divisible_ui_p(a_p.get_mpz_t(), static_cast<unsigned long>(p)))
        throw SupersingularPrimeError(
            "unit_root: p | a_p at p = " + std::to_string(p) +
            ", X^2 - a_p X + p has no unit root");

    // f(X) = X^2 - a_p X + p, f'(X) = 2X - a_p. At the seed u = a_p mod p the
    // derivative is a_p mod p, a unit, so the Newton step is well defined and
    // each iteration doubles the exponent of the achieved congruence.
    const int B = ctx.precision();
    int have = 1;
    mpz_class pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), 1);
    mpz_class u = reduce(a_p, pk);
    while (have < B) {
        have = std::min(2 * have, B);
        mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p),
                      static_cast<unsigned long>(have));
        mpz_class f = u * u - a_p * u + p;
        mpz_class fp = 2 * u - a_p;
        mpz_class fpinv;
        if (!mpz_invert(fpinv.get_mpz_t(), fp.get_mpz_t(), pk.get_mpz_t()))
            throw Error("unit_root: derivative not invertible (unexpected)");
        u = reduce(u - f * fpinv, pk);
    }
    PadicInt root(ctx, u);
    // Sanity: the lifted value really is a root to full precision.
    mpz_class check = reduce(u * u - a_p * u + p, ctx.modulus());
    if (check != 0)
        throw Error("unit_root: Newton iteration failed to converge");
    return root;
}

} // namespace asdlab
