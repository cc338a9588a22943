#ifndef INFRANIL_RATIONAL_FUNCTION_HPP
#define INFRANIL_RATIONAL_FUNCTION_HPP

#include <vector>

#include "infranil/polynomial.hpp"
#include "infranil/rational.hpp"

namespace infranil {

// Reduced rational function with value 1 at z = 0: gcd(num, den) = 1 and
// both constant terms equal 1, which makes the representation canonical.
struct RationalFunction {
    Polynomial num = Polynomial::constant(Rational(1));
    Polynomial den = Polynomial::constant(Rational(1));

    // Reduces and normalizes; requires num(0) == den(0) != 0.
    static RationalFunction make(const Polynomial& num, const Polynomial& den);
    static RationalFunction one() { return {}; }

    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction reciprocal() const;
    // z -> -z
    RationalFunction substitute_neg() const;
    bool operator==(const RationalFunction& o) const { return num == o.num && den == o.den; }

    // Taylor coefficients of num/den up to z^order inclusive.
    std::vector<Rational> taylor(int order) const;
    // Coefficients s_1..s_K with (log f)' = sum s_k z^(k-1): for a zeta
    // function these are the underlying fixed-point counts.
    std::vector<Rational> log_derivative_sequence(int count) const;

    std::string str() const;
};

// Truncated power-series helpers (vectors of ascending coefficients of
// length order + 1).
std::vector<Rational> series_mul(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                 int order);
std::vector<Rational> series_inverse(const std::vector<Rational>& a, int order);
// exp of a series with zero constant term.
std::vector<Rational> series_exp(const std::vector<Rational>& a, int order);

}  // namespace infranil

#endif
