#include "asdlab/classical.hpp"

#include <sstream>

namespace asdlab {

std::vector<u128> sigma_table(int k, long N) {
    if (k < 1) throw ConfigError("sigma_table: k must be >= 1");
    if (N < 1) throw ConfigError("sigma_table: N must be >= 1");
    int nbits = 0;
    for (long t = N; t > 0; t >>= 1) ++nbits;
    if ((k + 1) * nbits >= 127)
        throw ConfigError("sigma_table: sigma_k(n) may overflow 128 bits");
    std::vector<u128> s(static_cast<size_t>(N), 0); // s[n] = sigma_k(n), s[0] unused
    for (long d = 1; d < N; ++d) {
        u128 dk = 1;
        for (int i = 0; i < k; ++i) dk *= static_cast<u128>(d);
        for (long m = d; m < N; m += d) s[static_cast<size_t>(m)] += dk;
    }
    return s;
}

void MeroFormSpec::validate() const {
    if (k < 0) throw ConfigError("MeroFormSpec: negative symmetric power");
    if (j0 == 0 || j0 == 1728)
        throw ConfigError("MeroFormSpec: pole at an elliptic point of the j-line");
    if (terms.empty()) throw ConfigError("MeroFormSpec: no terms");
    for (const auto& t : terms) {
        if (t.m < 1) throw ConfigError("MeroFormSpec: pole order must be >= 1");
        if (t.a < 0 || t.b < 0 || t.c < 0)
            throw ConfigError("MeroFormSpec: negative numerator exponent");
        if (4 * t.a + 6 * t.b + 12 * t.c != k + 2 + 12 * t.m)
            throw ConfigError(
                "MeroFormSpec: numerator weight " +
                std::to_string(4 * t.a + 6 * t.b + 12 * t.c) +
                " does not match k + 2 + 12m = " +
                std::to_string(k + 2 + 12 * t.m));
    }
}

std::string MeroFormSpec::id() const {
    std::ostringstream os;
    os << "k" << k << "_j0_" << j0.get_str();
    for (const auto& t : terms)
        os << "_t" << t.coefficient.get_str() << "." << t.m << "." << t.a
           << "." << t.b << "." << t.c;
    return os.str();
}

std::array<MeroFormSpec, 3> zhang_specs() {
    MeroFormSpec f1{2, mpz_class(-3375), {{mpz_class(1), 1, 1, 0, 1}}};
    MeroFormSpec f2{2,
                    mpz_class(-3375),
                    {{mpz_class(19), 1, 1, 0, 1},
                     {mpz_class(-91125), 2, 1, 0, 2}}};
    MeroFormSpec f3{2,
                    mpz_class(-3375),
                    {{mpz_class(1399), 1, 1, 0, 1},
                     {mpz_class(-19008675), 2, 1, 0, 2},
                     {mpz_class(54251268750L), 3, 1, 0, 3}}};
    return {f1, f2, f3};
}

template <class R>
Series<R> eisenstein(int k, long N, const R& ring) {
    if (N < 1) throw ConfigError("eisenstein: N must be >= 1");
    long weight_factor;
    int sk;
    if (k == 4) {
        weight_factor = 240;
        sk = 3;
    } else if (k == 6) {
        weight_factor = -504;
        sk = 5;
    } else {
        throw ConfigError("eisenstein: weight " + std::to_string(k) +
                          " not supported (only 4 and 6)");
    }
    auto sig = sigma_table(sk, N);
    typename R::Elem mult = ring.from_long(weight_factor);
    std::vector<typename R::Elem> c(static_cast<size_t>(N), ring.zero());
    c[0] = ring.one();
    for (long n = 1; n < N; ++n)
        c[static_cast<size_t>(n)] =
            ring.mul(mult, ring.from_u128(sig[static_cast<size_t>(n)]));
    return Series<R>(ring, 0, std::move(c));
}

// Delta = q * (phi^3)^8 with phi^3 = sum_{t>=0} (-1)^t (2t+1) q^{t(t+1)/2},
// three squarings of a sparse seed.
template <class R>
Series<R> delta(long N, const R& ring) {
    if (N < 2) throw ConfigError("delta: N must be >= 2");
    const long L = N - 1;
    std::vector<typename R::Elem> cube(static_cast<size_t>(L), ring.zero());
    for (long t = 0;; ++t) {
        long e = t * (t + 1) / 2;
        if (e >= L) break;
        long v = 2 * t + 1;
        cube[static_cast<size_t>(e)] = ring.from_long(t % 2 == 0 ? v : -v);
    }
    Series<R> s(ring, 0, std::move(cube));
    Series<R> s2 = s * s;
    Series<R> s4 = s2 * s2;
    Series<R> s8 = s4 * s4;
    return Series<R>(ring, 1, std::move(s8.data()));
}

template <class R>
Series<R> delta_via_eisenstein(long N, const R& ring) {
    if (N < 2) throw ConfigError("delta_via_eisenstein: N must be >= 2");
    Series<R> e4 = eisenstein(4, N, ring);
    Series<R> e6 = eisenstein(6, N, ring);
    Series<R> num = series_pow(e4, 3) - series_pow(e6, 2);
    if (!ring.is_zero(num.coeff(0)))
        throw Error("delta_via_eisenstein: constant term did not cancel");
    std::vector<typename R::Elem> c;
    c.reserve(static_cast<size_t>(N - 1));
    for (long n = 1; n < N; ++n)
        c.push_back(ring.div_exact(num.coeff(n), 1728));
    return Series<R>(ring, 1, std::move(c));
}

template <class R>
Series<R> j_series(long N, const R& ring) {
    if (N < 2) throw ConfigError("j_series: N must be >= 2");
    Series<R> e4 = eisenstein(4, N + 1, ring); // length N+1
    Series<R> d = delta(N + 2, ring);          // window [1, N+2), length N+1
    return series_pow(e4, 3) * inverse(d);     // window [-1, N)
}

template <class R>
Series<R> mero_form(const MeroFormSpec& spec, long N, const R& ring) {
    spec.validate();
    if (N < 2) throw ConfigError("mero_form: N must be >= 2");
    Series<R> e4 = eisenstein(4, N, ring);
    Series<R> e6 = eisenstein(6, N, ring);
    Series<R> dl = delta(N + 1, ring); // window [1, N+1), length N
    Series<R> denom =
        series_pow(e4, 3) - scale(ring.from_mpz(spec.j0), dl); // unit, [0, N)
    Series<R> w = inverse(denom);

    bool first = true;
    Series<R> acc(ring, 0, {});
    for (const auto& t : spec.terms) {
        Series<R> term = series_pow(w, t.m);
        if (t.a > 0) term = term * series_pow(e4, t.a);
        if (t.b > 0) term = term * series_pow(e6, t.b);
        if (t.c > 0) term = term * series_pow(dl, t.c);
        term = scale(ring.from_mpz(t.coefficient), term);
        acc = first ? term : add(acc, term);
        first = false;
    }
    return acc;
}

// The three basis forms share E4, Delta and one unit inversion; each extra
// pole order costs two length-N products.
template <class R>
std::array<Series<R>, 3> zhang_basis(long N, const R& ring) {
    if (N < 3) throw ConfigError("zhang_basis: N must be >= 3");
    Series<R> e4 = eisenstein(4, N, ring);
    Series<R> dl = delta(N + 1, ring);
    Series<R> denom = series_pow(e4, 3) + scale(ring.from_long(3375), dl);
    Series<R> w = inverse(denom);

    Series<R> t1 = (e4 * dl) * w;  // E4 D / (E4^3 + 3375 D), window [1, N+1)
    Series<R> t2 = (t1 * w) * dl;  // pole order 2, window [2, N+2)
    Series<R> t3 = (t2 * w) * dl;  // pole order 3, window [3, N+3)

    Series<R> f2 = add(scale(ring.from_long(19), t1),
                       scale(ring.from_long(-91125), t2));
    Series<R> f3 = add(add(scale(ring.from_long(1399), t1),
                           scale(ring.from_long(-19008675), t2)),
                       scale(ring.from_long(54251268750L), t3));
    return {std::move(t1), std::move(f2), std::move(f3)};
}

template Series<PadicCoeffRing> eisenstein(int, long, const PadicCoeffRing&);
template Series<IntegerRing> eisenstein(int, long, const IntegerRing&);
template Series<PadicCoeffRing> delta(long, const PadicCoeffRing&);
template Series<IntegerRing> delta(long, const IntegerRing&);
template Series<PadicCoeffRing> delta_via_eisenstein(long, const PadicCoeffRing&);
template Series<IntegerRing> delta_via_eisenstein(long, const IntegerRing&);
template Series<PadicCoeffRing> j_series(long, const PadicCoeffRing&);
template Series<IntegerRing> j_series(long, const IntegerRing&);
template Series<PadicCoeffRing> mero_form(const MeroFormSpec&, long,
                                          const PadicCoeffRing&);
template Series<IntegerRing> mero_form(const MeroFormSpec&, long,
                                       const IntegerRing&);
template std::array<Series<PadicCoeffRing>, 3> zhang_basis(long,
                                                           const PadicCoeffRing&);
template std::array<Series<IntegerRing>, 3> zhang_basis(long,
                                                        const IntegerRing&);

} // namespace asdlab
