#pragma once
#include <string>
#include <vector>

#include "asdlab/curve.hpp"
#include "asdlab/padic.hpp"

namespace asdlab {

// Placement of the cohomological shift: None keeps the raw symmetric-power
// eigenvalues, TateTimesP multiplies every root by p. Which one the source
// data obeys is decided empirically by the engine's calibration.
enum class TwistConvention { None, TateTimesP };
std::string twist_name(TwistConvention t);

// Eigenvalues lambda_a = u^{k-2a} p^a (a = 0..k) of U_p on the k-th
// symmetric power attached to an ordinary prime; u is the unit root of
// X^2 - a_p X + p. val(lambda_a) = a and the product is p^{k(k+1)/2}.
struct UpSpectrum {
    long p;
    int k;
    PadicInt u;
    std::vector<PadicInt> lambdas;
};

enum class PolyProvenance { ResiduePiece, ClassicalPart, Product };

// Monic polynomial, coefficients ascending, used as a U_p annihilator.
struct AnnihilatorPoly {
    std::vector<PadicInt> coeffs;
    PolyProvenance provenance;
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

// Requires frob ordinary and precision > k (so that val(lambda_k) = k is
// representable). Context prime must match frob.p.
UpSpectrum up_spectrum(const FrobeniusQuadratic& frob, int k,
                       const PadicContext& ctx);

// prod_a (X - r_a) with r_a = lambda_a or p*lambda_a per the convention.
AnnihilatorPoly residue_charpoly(const UpSpectrum& spec, TwistConvention twist);

// prod_cusp (X^2 - a_p X + p^{k+1}) * [(X-1)(X - p^{k+1})]^num_eisenstein.
// Both Eisenstein stabilization eigenvalues are included deliberately: any
// multiple of an annihilator still annihilates, and the safe enlargement
// avoids asserting which of the two Frobenius picks. Cusp a_p data must
// satisfy the weight-(k+2) Hasse bound a_p^2 <= 4 p^{k+1}.
AnnihilatorPoly classical_q_poly(const std::vector<long>& cusp_eigen_aps,
                                 int num_eisenstein, int k,
                                 const PadicContext& ctx);

AnnihilatorPoly product_coeffs(const AnnihilatorPoly& P,
                               const AnnihilatorPoly& Q);

} // namespace asdlab
