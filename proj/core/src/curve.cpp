#include "asdlab/curve.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "asdlab/padic.hpp"

namespace asdlab {

mpz_class WeierstrassCurve::discriminant() const {
    mpz_class B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
    return -B2 * B2 * B8 - 8 * B4 * B4 * B4 - 27 * B6 * B6 + 9 * B2 * B4 * B6;
}

mpq_class WeierstrassCurve::j_invariant() const {
    mpz_class d = discriminant();
    if (d == 0) throw ConfigError("j_invariant: singular curve");
    mpz_class C4 = c4();
    mpq_class j(C4 * C4 * C4, d);
    j.canonicalize();
    return j;
}

std::string WeierstrassCurve::str() const {
    return "[" + a1.get_str() + "," + a2.get_str() + "," + a3.get_str() + "," +
           a4.get_str() + "," + a6.get_str() + "]";
}

WeierstrassCurve zhang_curve() { return {1, -1, 0, -2, -1}; }

WeierstrassCurve short_curve(const mpz_class& A, const mpz_class& B) {
    return {0, 0, 0, A, B};
}

namespace {

void require_usable_prime(long p, const char* who) {
    if (p <= 3 || !is_prime(p))
        throw ConfigError(std::string(who) + ": need a prime > 3, got " +
                          std::to_string(p));
}

long mod_ui(const mpz_class& v, long p) {
    return static_cast<long>(mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p)));
}

long powmod(long base, long e, long p) {
    unsigned long long r = 1, b = static_cast<unsigned long long>(base % p);
    while (e > 0) {
        if (e & 1) r = static_cast<unsigned long long>(
                       (static_cast<unsigned __int128>(r) * b) % static_cast<unsigned long long>(p));
        b = static_cast<unsigned long long>(
            (static_cast<unsigned __int128>(b) * b) % static_cast<unsigned long long>(p));
        e >>= 1;
    }
    return static_cast<long>(r);
}

long invmod(long a, long p) { return powmod(a, p - 2, p); }

// quadratic character table: chi[0] = 0, squares 1, non-squares -1
std::vector<int8_t> chi_table(long p) {
    std::vector<int8_t> chi(static_cast<size_t>(p), -1);
    chi[0] = 0;
    for (long i = 1; i <= (p - 1) / 2; ++i)
        chi[static_cast<size_t>((i * i) % p)] = 1;
    return chi;
}

} // namespace

WeierstrassCurve reduce_curve(const WeierstrassCurve& c, long p) {
    require_usable_prime(p, "reduce_curve");
    if (mod_ui(c.discriminant(), p) == 0)
        throw BadReductionError("curve " + c.str() + " at p = " +
                                std::to_string(p));
    return {mod_ui(c.a1, p), mod_ui(c.a2, p), mod_ui(c.a3, p),
            mod_ui(c.a4, p), mod_ui(c.a6, p)};
}

long count_points(const WeierstrassCurve& c, long p) {
    WeierstrassCurve r = reduce_curve(c, p);
    const long B2 = mod_ui(r.b2(), p), B4 = mod_ui(r.b4(), p),
               B6 = mod_ui(r.b6(), p);
    auto chi = chi_table(p);
    long count = p + 1;
    for (long x = 0; x < p; ++x) {
        // 4x^3 + b2 x^2 + 2 b4 x + b6 by Horner; intermediate values < ~5p^2
        long g = ((4 * x + B2) % p) * x % p;
        g = ((g + 2 * B4) % p) * x % p;
        g = (g + B6) % p;
        count += chi[static_cast<size_t>(g)];
    }
    return count;
}

FrobeniusQuadratic frobenius_ap(const WeierstrassCurve& c, long p) {
    long ap = p + 1 - count_points(c, p);
    return {p, ap, ap % p != 0};
}

namespace {

// j-parameterized model: j=0 and j=1728 are the CM corners, otherwise
// A = 3j(1728-j), B = 2j(1728-j)^2 has j-invariant j.
WeierstrassCurve model_for_j(long j, long p) {
    long j1728 = 1728 % p;
    if (j == 0) return short_curve(0, 1);
    if (j == j1728) return short_curve(1, 0);
    long t = ((j1728 - j) % p + p) % p;
    long A = 3 * j % p * t % p;
    long B = 2 * j % p * t % p * t % p;
    return short_curve(A, B);
}

} // namespace

std::vector<long> supersingular_j_list(long p) {
    require_usable_prime(p, "supersingular_j_list");
    auto chi = chi_table(p);
    long d = 2;
    while (chi[static_cast<size_t>(d)] != -1) ++d;
    std::vector<long> out;
    for (long j = 0; j < p; ++j) {
        WeierstrassCurve e = model_for_j(j, p);
        if (frobenius_ap(e, p).a_p != 0) continue;
        // same test on the quadratic twist (A d^2, B d^3)
        mpz_class A2 = e.a4 * d % p * d % p;
        mpz_class B2 = e.a6 * d % p * d % p * d % p;
        if (frobenius_ap(short_curve(A2, B2), p).a_p != 0) continue;
        out.push_back(j);
    }
    return out;
}

SupersingularClosure supersingular_closure(long p) {
    require_usable_prime(p, "supersingular_closure");
    const long m = (p - 1) / 2;

    // Hasse polynomial coefficients C(m,i)^2 mod p, ascending
    std::vector<long> H(static_cast<size_t>(m + 1));
    long binom = 1;
    for (long i = 0; i <= m; ++i) {
        H[static_cast<size_t>(i)] = binom * binom % p;
        if (i < m)
            binom = binom * ((m - i) % p) % p * invmod(i + 1, p) % p;
    }

    auto chi = chi_table(p);
    long d = 2;
    while (chi[static_cast<size_t>(d)] != -1) ++d;

    // F_p^2 = F_p(t), t^2 = d
    struct F2 {
        long a, b;
    };
    auto mul = [p, d](F2 u, F2 v) {
        return F2{(u.a * v.a + u.b * v.b % p * d) % p,
                  (u.a * v.b + u.b * v.a) % p};
    };
    auto addc = [p](F2 u, long c) { return F2{(u.a + c) % p, u.b}; };
    auto is_zero = [](F2 u) { return u.a == 0 && u.b == 0; };
    auto inv2 = [p](F2 u, long dd) {
        long n = ((u.a * u.a - u.b % p * u.b % p * dd) % p + p) % p;
        long ni = invmod(n, p);
        return F2{u.a * ni % p, (p - u.b) % p * ni % p};
    };

    std::set<std::pair<long, long>> js;
    for (long a = 0; a < p; ++a) {
        for (long b = 0; b < p; ++b) {
            if (b == 0 && (a == 0 || a == 1)) continue; // lambda != 0, 1
            F2 lam{a, b};
            F2 acc{0, 0};
            for (long i = m; i >= 0; --i)
                acc = addc(mul(acc, lam), H[static_cast<size_t>(i)]);
            if (!is_zero(acc)) continue;
            // j = 256 (l^2 - l + 1)^3 / (l^2 (l - 1)^2)
            F2 l2 = mul(lam, lam);
            F2 t{((l2.a - lam.a + 1) % p + p) % p, ((l2.b - lam.b) % p + p) % p};
            F2 num = mul(mul(t, t), t);
            num = {num.a * (256 % p) % p, num.b * (256 % p) % p};
            F2 lm1{(lam.a + p - 1) % p, lam.b};
            F2 den = mul(l2, mul(lm1, lm1));
            F2 j = mul(num, inv2(den, d));
            js.insert({j.a, j.b});
        }
    }
    SupersingularClosure out;
    out.total = static_cast<long>(js.size());
    for (const auto& [ja, jb] : js)
        if (jb == 0) out.rational.push_back(ja);
    std::sort(out.rational.begin(), out.rational.end());
    return out;
}

} // namespace asdlab
