#ifndef INFRANIL_RECURRENCE_HPP
#define INFRANIL_RECURRENCE_HPP

#include <vector>

#include "infranil/polynomial.hpp"
#include "infranil/rational.hpp"

namespace infranil {

// Minimal linear recurrence fitted to a sequence.  connection holds the
// coefficients c_1..c_order of s[n] = c_1 s[n-1] + ... + c_order s[n-order];
// recurrencePolynomial is the monic characteristic polynomial
// z^order - c_1 z^(order-1) - ... - c_order.
struct RecurrenceFit {
    int order = 0;
    Polynomial recurrencePolynomial;
    std::vector<Rational> connection;
    int trainingLength = 0;
    bool validated = false;
};

// Berlekamp-Massey over exact rationals on all terms but the last
// holdout (8 when available), then exact validation against the holdout.
// Throws ValidationFailed when the held-out terms break the recurrence.
RecurrenceFit find_recurrence(const std::vector<Rational>& seq);

// Continues the sequence to target_len terms using the fitted recurrence.
std::vector<Rational> extend_sequence(const RecurrenceFit& fit, std::vector<Rational> seq,
                                      std::size_t target_len);

// Requested sequence length for recurrence recovery at the given ambient
// dimension: 2 * (2^dim + 2) + 8.
long recurrence_term_budget(int dim);

}  // namespace infranil

#endif
