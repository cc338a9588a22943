#ifndef INFRANIL_SPECTRA_HPP
#define INFRANIL_SPECTRA_HPP

#include <optional>
#include <vector>

#include "infranil/matrix.hpp"
#include "infranil/roots.hpp"

namespace infranil {

// Certified classification of the spectrum of the linear part.
struct SpectralProfile {
    int dim = 0;
    Polynomial charPoly;
    std::vector<RootEnclosure> eigenvalues;
    bool isHyperbolic = false;
    bool isNilpotent = false;
    bool hasEigenvalueOne = false;
    long p = 0;  // real eigenvalues > 1, with multiplicity
    long n = 0;  // real eigenvalues < -1, with multiplicity
    // Certified interval around Sp of the full exterior power; [1, 1] in
    // the nilpotent case.  Absent when the map is not hyperbolic.
    std::optional<QInterval> wedgeSpectralRadius;
    std::optional<QInterval> asymptoticNielsen;
};

// Exact classification: hyperbolicity by the symbolic unit-circle test,
// nilpotency from the characteristic polynomial, p and n by Sturm counts.
SpectralProfile classify(const RationalMatrix& d, unsigned precision_bits = 32);

// Certified interval around the product of the eigenvalue moduli that
// exceed 1; [1, 1] when none do.  Throws NotHyperbolic on modulus-1
// eigenvalues.
QInterval wedge_spectral_radius(const RationalMatrix& d, const SpectralProfile& profile,
                                const Rational& max_width = pow2(-32));

// max(1, wedge spectral radius) as a certified interval; requires that 1
// is not an eigenvalue.
QInterval asymptotic_nielsen(const RationalMatrix& d, unsigned precision_bits = 32);

}  // namespace infranil

#endif
