#pragma once
#include <array>
#include <string>
#include <vector>

#include "asdlab/series.hpp"

namespace asdlab {

// sigma_k(n) for 1 <= n < N by divisor sieve. Values are exact in 128 bits,
// which bounds (k+1)*log2(N) by 128 -- plenty for k in {1,3,5} at any
// truncation this project reaches.
std::vector<u128> sigma_table(int k, long N);

// One term coefficient * E4^a E6^b Delta^c / (j - j0)^m of a meromorphic
// weight-(k+2) form with its only pole above j0. Clearing denominators via
// j - j0 = (E4^3 - j0 Delta)/Delta turns the term into
// coefficient * E4^a E6^b Delta^c * (E4^3 - j0 Delta)^-m, so the numerator
// carries weight k + 2 + 12m and everything is a power-series inversion of a
// unit series.
struct MeroTerm {
    mpz_class coefficient;
    int m; // pole order, >= 1
    int a, b, c; // numerator exponents for E4, E6, Delta
};

struct MeroFormSpec {
    int k; // symmetric power; the form has weight k + 2
    mpz_class j0; // pole location; 0 and 1728 are refused
    std::vector<MeroTerm> terms;

    void validate() const; // throws ConfigError
    std::string id() const; // stable key for caching
};

// The weight-4 basis with pole above j0 = -3375:
// f1 = E4/(j+3375),
// f2 = 19 f1 - 91125 E4/(j+3375)^2,
// f3 = 1399 f1 - 19008675 E4/(j+3375)^2 + 54251268750 E4/(j+3375)^3.
std::array<MeroFormSpec, 3> zhang_specs();

// Window conventions: eisenstein lives on [0, N); delta on [1, N);
// j_series on [-1, N); mero_form and zhang_basis on [c, N + c) where c >= 0
// is the least Delta-exponent among the terms (c = 1 for the basis above),
// so every result is trustworthy at least up to q^N.
template <class R> Series<R> eisenstein(int k, long N, const R& ring);
template <class R> Series<R> delta(long N, const R& ring);
template <class R> Series<R> delta_via_eisenstein(long N, const R& ring);
template <class R> Series<R> j_series(long N, const R& ring);
template <class R>
Series<R> mero_form(const MeroFormSpec& spec, long N, const R& ring);
template <class R> std::array<Series<R>, 3> zhang_basis(long N, const R& ring);

} // namespace asdlab
