#include "asdlab/ring.hpp"

#include <algorithm>
#include <cstring>

namespace asdlab {

mpz_class u128_to_mpz(u128 x) {
    std::uint64_t w[2] = {lo64(x), hi64(x)};
    mpz_class r;
    mpz_import(r.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, w);
    return r;
}

u128 mpz_to_u128(const mpz_class& x) {
    size_t n = mpz_size(x.get_mpz_t());
    const mp_limb_t* l = mpz_limbs_read(x.get_mpz_t());
    u128 r = 0;
    if (n > 0) r = l[0];
    if (n > 1) r |= static_cast<u128>(l[1]) << 64;
    return r;
}

std::string u128_str(u128 x) {
    if (x == 0) return "0";
    std::string s;
    while (x > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(x % 10)));
        x /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

PadicCoeffRing::PadicCoeffRing(long p, int precision) : p_(p), b_(precision) {
    PadicContext probe(p, precision); // validates p prime > 3, B >= 1
    mz_ = probe.modulus();
    mpz_class lim = mpz_class(1) << 126;
    if (mz_ >= lim)
        throw ConfigError("coefficient modulus " + probe.describe() +
                          " exceeds 2^126; lower the precision or use the exact ring");
    m_ = mpz_to_u128(mz_);
    mlimbs_[0] = lo64(m_);
    mlimbs_[1] = hi64(m_);
    mlimbs_n_ = mlimbs_[1] != 0 ? 2 : 1;
}

PadicCoeffRing::Elem PadicCoeffRing::from_long(long long v) const {
    __int128 r = static_cast<__int128>(v) % static_cast<__int128>(m_);
    if (r < 0) r += static_cast<__int128>(m_);
    return static_cast<u128>(r);
}

PadicCoeffRing::Elem PadicCoeffRing::from_mpz(const mpz_class& v) const {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), mz_.get_mpz_t());
    return mpz_to_u128(r);
}

PadicCoeffRing::Elem PadicCoeffRing::mul(Elem a, Elem b) const {
    if (mlimbs_n_ == 1) {
        // modulus fits one limb, so do the residues
        return (u128)(((u128)(lo64(a)) * lo64(b)) % mlimbs_[0]);
    }
    mp_limb_t A[2] = {lo64(a), hi64(a)};
    mp_limb_t B[2] = {lo64(b), hi64(b)};
    mp_limb_t R[4], Q[3], rem[2];
    mpn_mul_n(R, A, B, 2);
    mpn_tdiv_qr(Q, rem, 0, R, 4, mlimbs_, 2);
    return make_u128(rem[1], rem[0]);
}

PadicCoeffRing::Elem PadicCoeffRing::inv(Elem a) const {
    mpz_class az = u128_to_mpz(a), r;
    if (mpz_invert(r.get_mpz_t(), az.get_mpz_t(), mz_.get_mpz_t()) == 0)
        throw NotAUnitError(u128_str(a) + " is not a unit in " + describe());
    return mpz_to_u128(r);
}

PadicCoeffRing::Elem PadicCoeffRing::prime_power(int e) const {
    if (e < 0) throw ConfigError("prime_power: negative exponent");
    if (e >= b_) return 0;
    u128 r = 1;
    for (int i = 0; i < e; ++i) r *= static_cast<u128>(p_);
    return r;
}

PadicCoeffRing::Elem PadicCoeffRing::div_exact(Elem a, long d) const {
    return mul(a, inv(from_long(d)));
}

int PadicCoeffRing::val(Elem x) const {
    if (x == 0) return b_;
    int v = 0;
    while (x % static_cast<u128>(p_) == 0) {
        x /= static_cast<u128>(p_);
        ++v;
    }
    return v;
}

std::string PadicCoeffRing::describe() const {
    return "Z/" + std::to_string(p_) + "^" + std::to_string(b_);
}

std::vector<PadicCoeffRing::Elem>
PadicCoeffRing::poly_mul_schoolbook(const std::vector<Elem>& a,
                                    const std::vector<Elem>& b) const {
    if (a.empty() || b.empty()) return {};
    std::vector<Elem> out(a.size() + b.size() - 1, 0);
    for (size_t k = 0; k < out.size(); ++k) {
        // 5 limbs absorb up to 2^64 products of two sub-2^126 residues
        mp_limb_t acc[5] = {0, 0, 0, 0, 0};
        size_t ilo = k >= b.size() ? k - b.size() + 1 : 0;
        size_t ihi = std::min(k, a.size() - 1);
        for (size_t i = ilo; i <= ihi; ++i) {
            mp_limb_t A[2] = {lo64(a[i]), hi64(a[i])};
            mp_limb_t B[2] = {lo64(b[k - i]), hi64(b[k - i])};
            mp_limb_t R[4];
            mpn_mul_n(R, A, B, 2);
            mp_limb_t carry = mpn_add(acc, acc, 5, R, 4);
            (void)carry;
        }
        if (mlimbs_n_ == 1) {
            out[k] = mpn_mod_1(acc, 5, mlimbs_[0]);
        } else {
            mp_limb_t Q[4], rem[2];
            mpn_tdiv_qr(Q, rem, 0, acc, 5, mlimbs_, 2);
            out[k] = make_u128(rem[1], rem[0]);
        }
    }
    return out;
}

namespace {

int ceil_log2(size_t n) {
    int b = 0;
    size_t v = 1;
    while (v < n) {
        v <<= 1;
        ++b;
    }
    return b;
}

} // namespace

std::vector<PadicCoeffRing::Elem>
PadicCoeffRing::poly_mul_kronecker(const std::vector<Elem>& a,
                                   const std::vector<Elem>& b) const {
    const size_t la = a.size(), lb = b.size();
    const size_t outlen = la + lb - 1;

    // Slot width: products are < m^2 and at most min(la,lb) of them stack per
    // output coefficient, plus one guard bit.
    int mbits = 0;
    {
        u128 t = m_;
        while (t > 0) {
            t >>= 1;
            ++mbits;
        }
    }
    const int slot_bits = 2 * mbits + ceil_log2(std::min(la, lb)) + 1;
    const int S = (slot_bits + 63) / 64;

    std::vector<mp_limb_t> A(la * S, 0), B(lb * S, 0);
    for (size_t i = 0; i < la; ++i) {
        A[i * S] = lo64(a[i]);
        if (S > 1) A[i * S + 1] = hi64(a[i]);
    }
    for (size_t i = 0; i < lb; ++i) {
        B[i * S] = lo64(b[i]);
        if (S > 1) B[i * S + 1] = hi64(b[i]);
    }

    auto trimmed = [](const std::vector<mp_limb_t>& v) {
        size_t n = v.size();
        while (n > 0 && v[n - 1] == 0) --n;
        return n;
    };
    const size_t na = trimmed(A), nb = trimmed(B);
    std::vector<Elem> out(outlen, 0);
    if (na == 0 || nb == 0) return out;

    mpz_t az, bz;
    mpz_roinit_n(az, A.data(), static_cast<mp_size_t>(na));
    mpz_roinit_n(bz, B.data(), static_cast<mp_size_t>(nb));
    mpz_class prod;
    mpz_mul(prod.get_mpz_t(), az, bz);

    const mp_limb_t* pl = mpz_limbs_read(prod.get_mpz_t());
    const size_t pn = mpz_size(prod.get_mpz_t());

    std::vector<mp_limb_t> slot(S), Q(S);
    for (size_t k = 0; k < outlen; ++k) {
        const size_t base = k * S;
        for (int j = 0; j < S; ++j)
            slot[j] = base + j < pn ? pl[base + j] : 0;
        if (mlimbs_n_ == 1) {
            out[k] = mpn_mod_1(slot.data(), S, mlimbs_[0]);
        } else {
            mp_limb_t rem[2];
            mpn_tdiv_qr(Q.data(), rem, 0, slot.data(), S, mlimbs_, 2);
            out[k] = make_u128(rem[1], rem[0]);
        }
    }
    return out;
}

std::vector<PadicCoeffRing::Elem>
PadicCoeffRing::poly_mul(const std::vector<Elem>& a,
                         const std::vector<Elem>& b) const {
    if (a.empty() || b.empty()) return {};
    if (std::min(a.size(), b.size()) <= 24) return poly_mul_schoolbook(a, b);
    return poly_mul_kronecker(a, b);
}

IntegerRing::IntegerRing(long p, int precision_cap) : p_(p), cap_(precision_cap) {
    PadicContext probe(p, precision_cap); // same validation as the modular ring
    (void)probe;
}

IntegerRing::Elem IntegerRing::inv(const Elem& a) const {
    if (a == 1 || a == -1) return a;
    throw NotAUnitError(a.get_str() + " is not a unit in Z");
}

IntegerRing::Elem IntegerRing::prime_power(int e) const {
    if (e < 0) throw ConfigError("prime_power: negative exponent");
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p_),
                  static_cast<unsigned long>(e));
    return r;
}

IntegerRing::Elem IntegerRing::div_exact(const Elem& a, long d) const {
    mpz_class dz(d);
    if (!mpz_divisible_p(a.get_mpz_t(), dz.get_mpz_t()))
        throw Error("div_exact: " + a.get_str() + " is not divisible by " +
                    std::to_string(d));
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), dz.get_mpz_t());
    return q;
}

int IntegerRing::val(const Elem& x) const {
    auto v = integer_valuation(x, p_);
    if (!v) return cap_;
    return static_cast<int>(std::min<long>(*v, cap_));
}

std::string IntegerRing::describe() const {
    return "Z (p=" + std::to_string(p_) + ", cap " + std::to_string(cap_) + ")";
}

std::vector<IntegerRing::Elem>
IntegerRing::poly_mul(const std::vector<Elem>& a,
                      const std::vector<Elem>& b) const {
    if (a.empty() || b.empty()) return {};
    std::vector<Elem> out(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(),
                       b[j].get_mpz_t());
    }
    return out;
}

} // namespace asdlab
