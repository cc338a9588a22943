#ifndef INFRANIL_HPER_HPP
#define INFRANIL_HPER_HPP

#include <optional>
#include <set>
#include <vector>

#include "infranil/nielsen.hpp"

namespace infranil {

// Audit record of the constructive cofinite bound: every selection made
// while executing the growth argument, so the bound can be replayed.
struct HPerBoundTrace {
    Rational lambda1Lower;  // certified rational lower bound > 1 on lambda_1
    Rational mu;            // midpoint of (1, lambda1Lower)
    Rational epsilon;       // (lambda1Lower - mu) / (lambda1Lower + mu)
    long k0 = 0;            // least k with |a_i/a_1| |lambda_i/lambda_1|^k < eps/m for i >= 2
    long l0 = 0;            // least l >= k0 with N(f^l) above all earlier values
    Rational tauLower;      // certified lower bound of min_l (N(f^l0)/N(f^l))^(1/(l0-l))
    Rational nu;            // min(mu, (1 + tauLower)/2)
    long k0prime = 0;       // least k with nu^(2^(k-1)) > k
    Int m0;                 // max(2^k0prime, 2 l0 + 1)
};

enum class HPerMode {
    NonNilpotentHyperbolic,
    NilpotentHyperbolic,
};

struct HPerReport {
    HPerMode mode = HPerMode::NonNilpotentHyperbolic;
    long maxK = 0;
    std::set<long> certifiedPeriods;    // ABLSS-certified k in [1, maxK]
    std::optional<Int> cofiniteFrom;    // m0 (non-nilpotent mode)
    std::optional<HPerBoundTrace> trace;
    bool nilpotentConclusion = false;   // HPer(f) = {1}
};

// N(f^k) > sum over prime divisors p of k of N(f^(k/p)); the sum is empty
// for k = 1.  seq holds N(f^1).. and must reach index k.
bool ablss_certify(const std::vector<Int>& seq, long k);

// Executes the growth argument with deterministic selection rules and
// returns the audited constants; requires a hyperbolic, non-nilpotent
// linear part with sum and profile consistent.
HPerBoundTrace hper_bound(const MapData& map, const ExponentialSum& sum,
                          const SpectralProfile& profile);

// Nilpotent linear part: HPer(f) = {1}; also re-checks N(f^k) = 1 for
// k = 1..maxK by direct averaging.
HPerReport nilpotent_shortcut(const MapData& map, long max_k = 40);

// Full report: dispatches on the spectral classification, certifies every
// k <= maxK by the ABLSS inequality, attaches the cofinite bound, and
// enforces that everything in [m0, maxK] is certified.
HPerReport hper_report(const MapData& map, long max_k);

}  // namespace infranil

#endif
