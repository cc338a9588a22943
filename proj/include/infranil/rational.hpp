#ifndef INFRANIL_RATIONAL_HPP
#define INFRANIL_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <utility>

#include "infranil/errors.hpp"

namespace infranil {

// All quantities with exact values live on these two types.  The rational
// backend keeps denominator > 0 and gcd(num, den) = 1 after every
// operation.  Expression templates are off so arithmetic yields concrete
// values.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline Int numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

// Parses "p", "-p" or "p/q"; q must be nonzero.
Rational parse_rational(std::string_view text);

// Canonical rendering: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& q);
std::string to_string(const Int& n);

Int floor_int(const Rational& q);
Int ceil_int(const Rational& q);

// Nearest multiple of 2^-bits (ties toward +inf); keeps dyadic numbers small.
Rational dyadic_round(const Rational& x, unsigned bits);

inline Rational pow2(long e) {
    Rational r(1);
    if (e >= 0) return Rational(Int(1) << e);
    return Rational(Int(1), Int(1) << (-e));
}

// floor(sqrt(n)) for n >= 0.
Int isqrt_floor(const Int& n);

// Bounds lo <= sqrt(x) <= hi with hi - lo <= eps, all rational; x >= 0.
std::pair<Rational, Rational> sqrt_bounds(const Rational& x, const Rational& eps);

// Closed rational interval; the exact case is lo == hi.
struct QInterval {
    Rational lo;
    Rational hi;

    QInterval() = default;
    QInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}
    static QInterval point(const Rational& v) { return {v, v}; }

    Rational width() const { return hi - lo; }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool intersects(const QInterval& o) const { return lo <= o.hi && o.lo <= hi; }
    bool is_point() const { return lo == hi; }

    // Product of intervals with non-negative endpoints.
    QInterval mul_nonneg(const QInterval& o) const { return {lo * o.lo, hi * o.hi}; }
};

}  // namespace infranil

#endif
