#include "infranil/rational_function.hpp"

namespace infranil {

RationalFunction RationalFunction::make(const Polynomial& num_in, const Polynomial& den_in) {
    if (num_in.is_zero() || den_in.is_zero())
        throw DomainError("ZeroPolynomial", "rational function with zero numerator or denominator");
    const Rational n0 = num_in.eval(Rational(0));
    const Rational d0 = den_in.eval(Rational(0));
    if (n0 == 0 || d0 == 0 || n0 != d0)
        throw DomainError("ZetaNormalization",
                          "rational function does not have value 1 at z = 0");
    Polynomial g = poly_gcd(num_in, den_in);
    Polynomial n = num_in.divexact(g.monic());
    Polynomial d = den_in.divexact(g.monic());
    RationalFunction out;
    out.num = n / n.eval(Rational(0));
    out.den = d / d.eval(Rational(0));
    return out;
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return make(num * o.num, den * o.den);
}

RationalFunction RationalFunction::reciprocal() const { return make(den, num); }

RationalFunction RationalFunction::substitute_neg() const {
    return make(num.substitute_neg(), den.substitute_neg());
}

std::vector<Rational> RationalFunction::taylor(int order) const {
    std::vector<Rational> n(order + 1, Rational(0)), d(order + 1, Rational(0));
    for (int k = 0; k <= std::min(order, num.degree()); ++k) n[k] = num.coeff(k);
    for (int k = 0; k <= std::min(order, den.degree()); ++k) d[k] = den.coeff(k);
    return series_mul(n, series_inverse(d, order), order);
}

std::vector<Rational> RationalFunction::log_derivative_sequence(int count) const {
    // f'/f = (num' den - num den') / (num den)
    const Polynomial p = num.derivative() * den - num * den.derivative();
    const Polynomial q = num * den;
    std::vector<Rational> pv(count, Rational(0)), qv(count, Rational(0));
    for (int k = 0; k < count; ++k) {
        pv[k] = p.coeff(k);
        qv[k] = q.coeff(k);
    }
    auto series = series_mul(pv, series_inverse(qv, count - 1), count - 1);
    std::vector<Rational> out(count);
    for (int k = 1; k <= count; ++k) out[k - 1] = series[k - 1];
    return out;
}

std::string RationalFunction::str() const {
    return "(" + num.str() + ") / (" + den.str() + ")";
}

std::vector<Rational> series_mul(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                 int order) {
    std::vector<Rational> out(order + 1, Rational(0));
    for (int i = 0; i <= order && i < static_cast<int>(a.size()); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= order && j < static_cast<int>(b.size()); ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

std::vector<Rational> series_inverse(const std::vector<Rational>& a, int order) {
    if (a.empty() || a[0] == 0)
        throw DomainError("SeriesInverse", "series inverse needs a unit constant term");
    std::vector<Rational> out(order + 1, Rational(0));
    out[0] = Rational(1) / a[0];
    for (int k = 1; k <= order; ++k) {
        Rational acc(0);
        for (int j = 1; j <= k && j < static_cast<int>(a.size()); ++j) acc += a[j] * out[k - j];
        out[k] = -acc / a[0];
    }
    return out;
}

std::vector<Rational> series_exp(const std::vector<Rational>& a, int order) {
    if (!a.empty() && a[0] != 0)
        throw DomainError("SeriesExp", "series exp needs a zero constant term");
    std::vector<Rational> out(order + 1, Rational(0));
    out[0] = 1;
    for (int k = 1; k <= order; ++k) {
        Rational acc(0);
        for (int j = 1; j <= k && j < static_cast<int>(a.size()); ++j)
            acc += Rational(j) * a[j] * out[k - j];
        out[k] = acc / Rational(k);
    }
    return out;
}

}  // namespace infranil
