#ifndef INFRANIL_COHOMOLOGY_HPP
#define INFRANIL_COHOMOLOGY_HPP

#include <optional>
#include <vector>

#include "infranil/lie_algebra.hpp"
#include "infranil/matrix.hpp"
#include "infranil/rational_function.hpp"
#include "infranil/roots.hpp"

namespace infranil {

// Rational cohomology of the Chevalley-Eilenberg complex with the induced
// action of the linear part on each degree.
struct CohomologySpectrum {
    std::vector<long> bettiNumbers;  // b_0..b_dim
    // Per-degree eigenvalue enclosures of the induced map.
    std::vector<std::vector<RootEnclosure>> actionEigenvalues;
    // Induced map on H^i in an elimination-determined basis (absent when
    // b_i = 0) and its characteristic polynomial.
    std::vector<std::optional<RationalMatrix>> inducedMaps;
    std::vector<Polynomial> inducedCharPolys;
};

// CE differential d^i: Lambda^i g* -> Lambda^(i+1) g* as rows over the
// lexicographic wedge basis; empty row list at the top degree.
std::vector<std::vector<Rational>> cochain_differential(const LieAlgebraData& l, int i);

// Betti numbers and the action of the dual of the i-th exterior power of
// d on each cohomology space.  Requires a valid nilpotent Lie algebra and
// d compatible with the bracket (D[x,y] = [Dx,Dy], checked exactly).
CohomologySpectrum cohomology_action(const LieAlgebraData& l, const RationalMatrix& d,
                                     unsigned precision_bits = 32);

// L(f^k) = sum_i (-1)^i Tr((D^i)^k) for k = 1..count, exact.
std::vector<Rational> lefschetz_numbers(const CohomologySpectrum& spec, int count);

// prod_ij (1 - lambda_ij z)^((-1)^(i+1)) assembled from the induced
// characteristic polynomials, never through individual roots.
RationalFunction lefschetz_zeta(const CohomologySpectrum& spec);

// Zeta function from user-supplied per-degree rational eigenvalue lists
// (the infra-nilmanifold route, where cohomology data is an input).
RationalFunction zeta_from_eigenvalue_lists(const std::vector<std::vector<Rational>>& per_degree);

}  // namespace infranil

#endif
