#include "infranil/rational.hpp"

#include <boost/multiprecision/integer.hpp>

namespace infranil {

Rational parse_rational(std::string_view text) {
    auto bad = [&](const char* why) -> ParseError {
        return ParseError("MalformedRational",
                          std::string("malformed rational \"") + std::string(text) + "\": " + why);
    };
    if (text.empty()) throw bad("empty");
    const auto slash = text.find('/');
    auto parse_int = [&](std::string_view part) -> Int {
        if (part.empty()) throw bad("empty component");
        std::size_t i = 0;
        if (part[0] == '+' || part[0] == '-') i = 1;
        if (i == part.size()) throw bad("sign without digits");
        for (std::size_t j = i; j < part.size(); ++j)
            if (part[j] < '0' || part[j] > '9') throw bad("non-digit character");
        return Int(std::string(part));
    };
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    if (text.find('/', slash + 1) != std::string_view::npos) throw bad("multiple slashes");
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0) throw bad("zero denominator");
    return Rational(num, den);
}

std::string to_string(const Rational& q) {
    if (is_integer(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

std::string to_string(const Int& n) { return n.str(); }

Int floor_int(const Rational& q) {
    Int n = numerator(q), d = denominator(q);
    Int quo = n / d;
    if (n % d != 0 && n < 0) --quo;
    return quo;
}

Int ceil_int(const Rational& q) { return -floor_int(-q); }

Rational dyadic_round(const Rational& x, unsigned bits) {
    Int scaled = floor_int(x * pow2(bits) + Rational(1, 2));
    return Rational(scaled) * pow2(-static_cast<long>(bits));
}

Int isqrt_floor(const Int& n) {
    if (n < 0) throw DomainError("NegativeSqrt", "isqrt of negative value");
    return boost::multiprecision::sqrt(n);
}

std::pair<Rational, Rational> sqrt_bounds(const Rational& x, const Rational& eps) {
    if (x < 0) throw DomainError("NegativeSqrt", "sqrt_bounds of negative value");
    if (x == 0) return {Rational(0), Rational(0)};
    const Int n = numerator(x), d = denominator(x);
    // sqrt(x) = sqrt(n*d) / d; scale by 4^t so the gap 1/(d*2^t) <= eps.
    unsigned t = 0;
    {
        Rational gap(1, d);
        while (gap > eps) {
            gap /= 2;
            ++t;
        }
    }
    Int scaled = n * d;
    scaled <<= 2 * t;
    Int s = isqrt_floor(scaled);
    Rational denom = Rational(d) * pow2(t);
    Rational lo = Rational(s) / denom;
    Rational hi = Rational(s + 1) / denom;
    if (lo * lo == x) hi = lo;  // exact square
    return {lo, hi};
}

}  // namespace infranil
