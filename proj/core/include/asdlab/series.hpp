#pragma once
#include <algorithm>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "asdlab/errors.hpp"
#include "asdlab/ring.hpp"

namespace asdlab {

// Truncated Laurent q-expansion: coefficients for exponents in
// [offset, trunc), offset possibly negative (j starts at q^-1). coeff() is
// strict -- asking outside the stored window is an error, never a silent
// zero; at() grants the one legitimate exception, exponents below the
// offset, which really are zero. trunc is exclusive.
template <class R>
class Series {
public:
    using Elem = typename R::Elem;

    Series(R ring, long offset, std::vector<Elem> coeffs)
        : ring_(std::move(ring)), offset_(offset), coeffs_(std::move(coeffs)) {}

    static Series zero_to(const R& ring, long trunc) {
        if (trunc < 0) throw ConfigError("zero_to: negative truncation");
        return Series(ring, 0, std::vector<Elem>(static_cast<size_t>(trunc),
                                                 ring.zero()));
    }

    static Series monomial(const R& ring, long exponent, const Elem& value,
                           long trunc) {
        if (trunc <= exponent)
            throw ConfigError("monomial: truncation at or below the exponent");
        std::vector<Elem> c(static_cast<size_t>(trunc - exponent), ring.zero());
        c[0] = value;
        return Series(ring, exponent, std::move(c));
    }

    const R& ring() const { return ring_; }
    long offset() const { return offset_; }
    long trunc() const { return offset_ + static_cast<long>(coeffs_.size()); }
    long length() const { return static_cast<long>(coeffs_.size()); }
    const std::vector<Elem>& data() const { return coeffs_; }
    std::vector<Elem>& data() { return coeffs_; }

    // Strict accessor: only stored exponents.
    const Elem& coeff(long n) const {
        if (n < offset_ || n >= trunc())
            throw InsufficientTruncationError(
                "coefficient of q^" + std::to_string(n) +
                " not stored (window [" + std::to_string(offset_) + ", " +
                std::to_string(trunc()) + "))");
        return coeffs_[static_cast<size_t>(n - offset_)];
    }

    // Below the offset the coefficient is exactly zero; above trunc it is
    // unknown and still an error.
    Elem at(long n) const {
        if (n < offset_) return ring_.zero();
        return coeff(n);
    }

    void set(long n, const Elem& v) {
        if (n < offset_ || n >= trunc())
            throw InsufficientTruncationError("set: exponent outside window");
        coeffs_[static_cast<size_t>(n - offset_)] = v;
    }

    bool is_zero() const {
        for (const Elem& c : coeffs_)
            if (!ring_.is_zero(c)) return false;
        return true;
    }

    Series truncated(long new_trunc) const {
        if (new_trunc > trunc())
            throw InsufficientTruncationError(
                "truncated: cannot extend a series (have trunc " +
                std::to_string(trunc()) + ", asked " +
                std::to_string(new_trunc) + ")");
        long keep = std::max<long>(0, new_trunc - offset_);
        return Series(ring_, offset_,
                      std::vector<Elem>(coeffs_.begin(), coeffs_.begin() + keep));
    }

private:
    R ring_;
    long offset_;
    std::vector<Elem> coeffs_;
};

template <class R>
void require_same_ring(const Series<R>& f, const Series<R>& g) {
    if (!f.ring().same(g.ring()))
        throw RingMismatchError("series over " + f.ring().describe() + " and " +
                                g.ring().describe() + " cannot be combined");
}

// Product truncation: with f known mod q^Nf and g mod q^Ng, the product is
// trustworthy up to min(Nf + off_g, Ng + off_f) -- the shorter window wins.
template <class R>
Series<R> operator*(const Series<R>& f, const Series<R>& g) {
    require_same_ring(f, g);
    long keep = std::min(f.length(), g.length());
    long off = f.offset() + g.offset();
    if (f.length() == 0 || g.length() == 0)
        return Series<R>(f.ring(), off, {});
    auto prod = f.ring().poly_mul(f.data(), g.data());
    prod.resize(static_cast<size_t>(keep));
    return Series<R>(f.ring(), off, std::move(prod));
}

template <class R>
Series<R> add(const Series<R>& f, const Series<R>& g) {
    require_same_ring(f, g);
    long off = std::min(f.offset(), g.offset());
    long tr = std::max(off, std::min(f.trunc(), g.trunc()));
    std::vector<typename R::Elem> c;
    c.reserve(static_cast<size_t>(tr - off));
    for (long n = off; n < tr; ++n) c.push_back(f.ring().add(f.at(n), g.at(n)));
    return Series<R>(f.ring(), off, std::move(c));
}

template <class R>
Series<R> sub(const Series<R>& f, const Series<R>& g) {
    return add(f, scale(f.ring().from_long(-1), g));
}

template <class R>
Series<R> operator+(const Series<R>& f, const Series<R>& g) {
    return add(f, g);
}

template <class R>
Series<R> operator-(const Series<R>& f, const Series<R>& g) {
    return sub(f, g);
}

template <class R>
Series<R> scale(const typename R::Elem& s, const Series<R>& f) {
    std::vector<typename R::Elem> c = f.data();
    for (auto& x : c) x = f.ring().mul(s, x);
    return Series<R>(f.ring(), f.offset(), std::move(c));
}

namespace detail {

template <class R>
std::vector<typename R::Elem> invert_schoolbook(
    const R& ring, const std::vector<typename R::Elem>& d) {
    using Elem = typename R::Elem;
    const size_t L = d.size();
    Elem b0 = ring.inv(d[0]);
    std::vector<Elem> w(L, ring.zero());
    w[0] = b0;
    for (size_t n = 1; n < L; ++n) {
        Elem s = ring.zero();
        for (size_t i = 1; i <= n; ++i)
            s = ring.add(s, ring.mul(d[i], w[n - i]));
        w[n] = ring.neg(ring.mul(b0, s));
    }
    return w;
}

// Newton: w <- w(2 - dw), doubling the correct length each pass.
template <class R>
std::vector<typename R::Elem> invert_newton(
    const R& ring, const std::vector<typename R::Elem>& d) {
    using Elem = typename R::Elem;
    const size_t L = d.size();
    std::vector<Elem> w{ring.inv(d[0])};
    size_t t = 1;
    while (t < L) {
        size_t t2 = std::min(2 * t, L);
        std::vector<Elem> dpref(d.begin(), d.begin() + t2);
        std::vector<Elem> e = ring.poly_mul(dpref, w);
        e.resize(t2, ring.zero());
        e[0] = ring.sub(ring.from_long(2), e[0]);
        for (size_t i = 1; i < t2; ++i) e[i] = ring.neg(e[i]);
        std::vector<Elem> w2 = ring.poly_mul(w, e);
        w2.resize(t2, ring.zero());
        w = std::move(w2);
        t = t2;
    }
    return w;
}

} // namespace detail

// Inverse of a series whose leading stored coefficient is a unit; the result
// starts at -offset and keeps the same length.
template <class R>
Series<R> inverse(const Series<R>& f) {
    if (f.length() == 0)
        throw InsufficientTruncationError("inverse: empty series");
    const R& ring = f.ring();
    const auto& d = f.data();
    std::vector<typename R::Elem> w =
        f.length() <= 512 ? detail::invert_schoolbook(ring, d)
                          : detail::invert_newton(ring, d);
    return Series<R>(ring, -f.offset(), std::move(w));
}

// theta = q d/dq.
template <class R>
Series<R> theta(const Series<R>& f) {
    std::vector<typename R::Elem> c = f.data();
    for (long i = 0; i < f.length(); ++i)
        c[static_cast<size_t>(i)] = f.ring().mul(
            c[static_cast<size_t>(i)], f.ring().from_long(f.offset() + i));
    return Series<R>(f.ring(), f.offset(), std::move(c));
}

// U_p: a_n -> a_{pn}. Windows shrink by a factor p (rounded up).
template <class R>
Series<R> u_p(const Series<R>& f, long p) {
    if (p != f.ring().prime())
        throw RingMismatchError("u_p: operator prime " + std::to_string(p) +
                                " does not match " + f.ring().describe());
    if (f.offset() < 0)
        throw ConfigError("u_p: series with negative offset");
    auto cdiv = [p](long n) { return (n + p - 1) / p; };
    long no = cdiv(f.offset()), nt = cdiv(f.trunc());
    std::vector<typename R::Elem> c;
    c.reserve(static_cast<size_t>(std::max<long>(0, nt - no)));
    for (long n = no; n < nt; ++n) c.push_back(f.coeff(n * p));
    return Series<R>(f.ring(), no, std::move(c));
}

// V at weight k: q -> q^p with the p^k normalisation, so the image of a_n
// sits at pn with value p^k a_n. Windows stretch by a factor p.
template <class R>
Series<R> v_operator(const Series<R>& f, long p, int k) {
    if (p != f.ring().prime())
        throw RingMismatchError("v_operator: operator prime " +
                                std::to_string(p) + " does not match " +
                                f.ring().describe());
    if (f.offset() < 0)
        throw ConfigError("v_operator: series with negative offset");
    if (k < 0) throw ConfigError("v_operator: negative weight");
    const R& ring = f.ring();
    typename R::Elem pk = ring.prime_power(k);
    long no = p * f.offset(), nt = p * f.trunc();
    std::vector<typename R::Elem> c(static_cast<size_t>(nt - no), ring.zero());
    for (long m = f.offset(); m < f.trunc(); ++m)
        c[static_cast<size_t>(p * m - no)] = ring.mul(pk, f.coeff(m));
    return Series<R>(ring, no, std::move(c));
}

// f^e by binary powering; the min-rule keeps every partial product at the
// length of f, so the window stays offset*e + [0, length).
template <class R>
Series<R> series_pow(const Series<R>& f, int e) {
    if (e < 0) throw ConfigError("series_pow: negative exponent");
    if (e == 0) {
        std::vector<typename R::Elem> c(static_cast<size_t>(f.length()),
                                        f.ring().zero());
        if (!c.empty()) c[0] = f.ring().one();
        return Series<R>(f.ring(), 0, std::move(c));
    }
    Series<R> acc = f;
    std::vector<bool> bits; // exponent bits below the leading one
    for (int t = e; t > 1; t >>= 1) bits.push_back(t & 1);
    for (auto it = bits.rbegin(); it != bits.rend(); ++it) {
        acc = acc * acc;
        if (*it) acc = acc * f;
    }
    return acc;
}

template <class R>
bool identical(const Series<R>& f, const Series<R>& g) {
    if (!f.ring().same(g.ring()) || f.offset() != g.offset() ||
        f.length() != g.length())
        return false;
    for (long i = 0; i < f.length(); ++i)
        if (!f.ring().eq(f.data()[static_cast<size_t>(i)],
                         g.data()[static_cast<size_t>(i)]))
            return false;
    return true;
}

// Agreement on the overlap of the two windows.
template <class R>
bool agree_on_overlap(const Series<R>& f, const Series<R>& g) {
    require_same_ring(f, g);
    long lo = std::max(f.offset(), g.offset());
    long hi = std::min(f.trunc(), g.trunc());
    for (long n = lo; n < hi; ++n)
        if (!f.ring().eq(f.coeff(n), g.coeff(n))) return false;
    return true;
}

Series<PadicCoeffRing> reduced_to(const Series<PadicCoeffRing>& f,
                                  int precision);
Series<PadicCoeffRing> to_padic(const Series<IntegerRing>& f, int precision);

void write_series(std::ostream& os, const Series<PadicCoeffRing>& f);
void write_series(std::ostream& os, const Series<IntegerRing>& f);
Series<PadicCoeffRing> read_padic_series(std::istream& is);

} // namespace asdlab
