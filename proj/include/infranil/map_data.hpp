#ifndef INFRANIL_MAP_DATA_HPP
#define INFRANIL_MAP_DATA_HPP

#include <optional>
#include <string>
#include <vector>

#include "infranil/lie_algebra.hpp"
#include "infranil/matrix.hpp"

namespace infranil {

// Finite multiplicatively closed set of invertible matrices containing
// the identity (the holonomy representation on the Lie algebra).
struct HolonomyData {
    std::vector<RationalMatrix> matrices;
    std::size_t size() const { return matrices.size(); }
};

// Validates invertibility, inserts the identity when missing, and checks
// closure under multiplication.
HolonomyData make_holonomy(std::vector<RationalMatrix> matrices, int dim);

// Per-degree eigenvalue lists for a Lefschetz zeta function supplied as
// input (the infra-nilmanifold route).
using CohomologyEigenData = std::vector<std::vector<Rational>>;

struct MapData {
    int dim = 0;
    RationalMatrix linearPart;
    HolonomyData holonomy;
    int gammaPlusIndex = 1;  // [Gamma : Gamma_+], 1 or 2
    std::optional<CohomologyEigenData> fCohomology;
    std::optional<CohomologyEigenData> fPlusCohomology;
    std::optional<LieAlgebraData> brackets;  // absent => abelian

    bool trivial_holonomy() const { return holonomy.size() == 1; }
};

// Structural checks shared by the parser and direct construction.
void validate_map_data(const MapData& map);

// For each A in F, is there A' in F with D A = A' D?  Failures come back
// as warning strings (the input may not be realizable).
std::vector<std::string> semiconjugacy_warnings(const MapData& map);

}  // namespace infranil

#endif
