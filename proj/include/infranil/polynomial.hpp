#ifndef INFRANIL_POLYNOMIAL_HPP
#define INFRANIL_POLYNOMIAL_HPP

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "infranil/rational.hpp"

namespace infranil {

// Dense univariate polynomial over the rationals, coefficients in
// ascending degree.  The zero polynomial has an empty coefficient vector
// and degree -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }
    Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { normalize(); }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(const Rational& v) { return Polynomial({v}); }
    // z^k
    static Polynomial monomial(int k, const Rational& coeff = Rational(1));
    // Monic product of (z - r) over the given rational roots.
    static Polynomial from_roots(const std::vector<Rational>& roots);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rational& leading() const;
    const Rational& operator[](int k) const;
    Rational coeff(int k) const { return k >= 0 && k <= degree() ? c_[k] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& s) const;
    Polynomial operator/(const Rational& s) const;
    bool operator==(const Polynomial& o) const { return c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return c_ != o.c_; }

    Polynomial derivative() const;
    // Quotient and remainder; divisor must be nonzero.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
    // Exact division; throws if the remainder is nonzero.
    Polynomial divexact(const Polynomial& divisor) const;

    // z^deg * p(1/z): coefficient vector reversed.
    Polynomial reversed() const;
    // p(-z)
    Polynomial substitute_neg() const;
    Polynomial monic() const;
    // Integer-coefficient multiple with coefficient gcd 1 and positive
    // leading coefficient.
    Polynomial primitive() const;
    Polynomial pow(unsigned e) const;

    std::string str(char var = 'z') const;

private:
    void normalize();
    std::vector<Rational> c_;
};

// gcd as a primitive integer polynomial with positive leading coefficient
// (constant 1 for coprime inputs).
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// Yun decomposition: list of (primitive squarefree factor, multiplicity),
// multiplicities ascending; the product of factor^mult equals the primitive
// part of p up to a positive rational scalar.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p);

Polynomial squarefree_part(const Polynomial& p);

// Sturm chain of the squarefree part of p: counts distinct real roots.
class SturmChain {
public:
    explicit SturmChain(const Polynomial& p);

    // Distinct real roots in (a, b]; requires a <= b.
    long count(const Rational& a, const Rational& b) const;
    long count_all() const;
    long count_above(const Rational& a) const;  // (a, +inf)
    long count_below(const Rational& b) const;  // (-inf, b]

private:
    long variations_at(const Rational& x) const;
    long variations_at_pos_inf() const;
    long variations_at_neg_inf() const;
    std::vector<Polynomial> chain_;
};

// Real roots of p in (a, +inf) / (-inf, a) counted with multiplicity;
// a itself is excluded even when it is a root.
long real_roots_above_with_multiplicity(const Polynomial& p, const Rational& a);
long real_roots_below_with_multiplicity(const Polynomial& p, const Rational& a);

// True iff p has at least one complex root of modulus exactly 1, decided
// symbolically: gcd with the reversed polynomial, the palindromic factor,
// the w = z + 1/z substitution, and a Sturm count on [-2, 2].
bool unit_circle_root_test(const Polynomial& p);

}  // namespace infranil

#endif
