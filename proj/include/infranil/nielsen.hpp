#ifndef INFRANIL_NIELSEN_HPP
#define INFRANIL_NIELSEN_HPP

#include <optional>
#include <vector>

#include "infranil/map_data.hpp"
#include "infranil/rational_function.hpp"
#include "infranil/recurrence.hpp"
#include "infranil/roots.hpp"
#include "infranil/spectra.hpp"

namespace infranil {

// N(f^k) by the holonomy averaging formula
//   N(f^k) = (1/#F) sum_{A in F} |det(I - A D^k)|,
// evaluated exactly.  Throws NonIntegerAverage when the average is not an
// integer (the input is then not realizable as an infra-nilmanifold map).
Int nielsen_number(const MapData& map, long k);

// [N(f^1), ..., N(f^K)].
std::vector<Int> nielsen_sequence(const MapData& map, long k_max);

struct ExpTerm {
    Int coeff;           // certified integer a_i
    RootEnclosure base;  // lambda_i
};

// N(f^k) = sum a_i lambda_i^k with a_1 >= 1 and a real positive dominant
// base; terms ordered by decreasing modulus upper bound.
struct ExponentialSum {
    std::vector<ExpTerm> terms;
    int m = 0;
    RecurrenceFit fit;
    std::vector<Rational> sequence;  // the Nielsen numbers the fit was trained on

    Rational eval(long k) const;  // exact when all bases are rational
};

ExponentialSum exponential_sum_form(const MapData& map);
ExponentialSum exponential_sum_form(const MapData& map, const SpectralProfile& profile);

// N_f(z) = prod (1 - lambda_i z)^(-a_i) as an exact rational function,
// assembled through the recurrence (Pade + exact log-derivative
// certificate), never through individual irrational roots.
RationalFunction nielsen_zeta_from_sum(const ExponentialSum& sum);

// The parity table: selects the cell by (p mod 2, n mod 2, [Gamma:Gamma_+])
// and combines L_f and L_{f+} accordingly (including the z -> -z column).
RationalFunction nielsen_zeta_from_table(const RationalFunction& lf,
                                         const std::optional<RationalFunction>& lf_plus, long p,
                                         long n, int gamma_plus_index);

struct ReidemeisterStatus {
    bool finite = false;
    bool valueEqualsNielsen = false;
    std::optional<Int> value;  // R(f) = N(f) when finite
};

// R(f) is infinite iff some A in F has det(I - A D) = 0; when finite it
// equals N(f).
ReidemeisterStatus reidemeister_status(const MapData& map);

}  // namespace infranil

#endif
