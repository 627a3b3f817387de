#include "asdlab/series.hpp"

namespace asdlab {

Series<PadicCoeffRing> reduced_to(const Series<PadicCoeffRing>& f,
                                  int precision) {
    if (precision > f.ring().precision())
        throw InsufficientPrecisionError(
            "reduced_to: cannot raise precision from " +
            std::to_string(f.ring().precision()) + " to " +
            std::to_string(precision));
    PadicCoeffRing r(f.ring().prime(), precision);
    std::vector<PadicCoeffRing::Elem> c;
    c.reserve(f.data().size());
    for (auto x : f.data()) c.push_back(x % r.modulus());
    return Series<PadicCoeffRing>(r, f.offset(), std::move(c));
}

Series<PadicCoeffRing> to_padic(const Series<IntegerRing>& f, int precision) {
    PadicCoeffRing r(f.ring().prime(), precision);
    std::vector<PadicCoeffRing::Elem> c;
    c.reserve(f.data().size());
    for (const auto& x : f.data()) c.push_back(r.from_mpz(x));
    return Series<PadicCoeffRing>(r, f.offset(), std::move(c));
}

void write_series(std::ostream& os, const Series<PadicCoeffRing>& f) {
    os << "ring padic " << f.ring().prime() << " " << f.ring().precision()
       << "\n";
    os << "range " << f.offset() << " " << f.trunc() << "\n";
    for (auto x : f.data()) os << u128_str(x) << "\n";
}

void write_series(std::ostream& os, const Series<IntegerRing>& f) {
    os << "ring exact " << f.ring().prime() << " " << f.ring().precision()
       << "\n";
    os << "range " << f.offset() << " " << f.trunc() << "\n";
    for (const auto& x : f.data()) os << x.get_str() << "\n";
}

Series<PadicCoeffRing> read_padic_series(std::istream& is) {
    std::string tag, kind;
    long p = 0, offset = 0, trunc = 0;
    int b = 0;
    if (!(is >> tag >> kind >> p >> b) || tag != "ring" || kind != "padic")
        throw ConfigError("series stream: bad ring header");
    if (!(is >> tag >> offset >> trunc) || tag != "range")
        throw ConfigError("series stream: bad range header");
    if (trunc < offset) throw ConfigError("series stream: negative length");
    PadicCoeffRing r(p, b);
    std::vector<PadicCoeffRing::Elem> c;
    c.reserve(static_cast<size_t>(trunc - offset));
    mpz_class x;
    for (long n = offset; n < trunc; ++n) {
        std::string word;
        if (!(is >> word))
            throw ConfigError("series stream: truncated coefficient list");
        if (mpz_set_str(x.get_mpz_t(), word.c_str(), 10) != 0)
            throw ConfigError("series stream: bad coefficient '" + word + "'");
        c.push_back(r.from_mpz(x));
    }
    return Series<PadicCoeffRing>(r, offset, std::move(c));
}

} // namespace asdlab
