#include "infranil/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace infranil {

void Polynomial::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::monomial(int k, const Rational& coeff) {
    if (coeff == 0) return Polynomial();
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = coeff;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::from_roots(const std::vector<Rational>& roots) {
    Polynomial p = constant(Rational(1));
    for (const auto& r : roots) p = p * Polynomial({-r, Rational(1)});
    return p;
}

const Rational& Polynomial::leading() const {
    if (is_zero()) throw DomainError("ZeroPolynomial", "leading coefficient of zero polynomial");
    return c_.back();
}

const Rational& Polynomial::operator[](int k) const { return c_.at(k); }

Rational Polynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> v(c_);
    for (auto& q : v) q = -q;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Rational& s) const {
    std::vector<Rational> v(c_);
    for (auto& q : v) q *= s;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator/(const Rational& s) const {
    if (s == 0) throw DomainError("DivisionByZero", "polynomial divided by zero scalar");
    return *this * (Rational(1) / s);
}

Polynomial Polynomial::derivative() const {
    if (degree() < 1) return Polynomial();
    std::vector<Rational> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Polynomial(std::move(v));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw DomainError("DivisionByZero", "polynomial division by zero");
    std::vector<Rational> rem(c_);
    const int dd = divisor.degree();
    const Rational& lead = divisor.leading();
    int dr = static_cast<int>(rem.size()) - 1;
    while (dr >= 0 && rem[dr] == 0) --dr;
    if (dr < dd) return {Polynomial(), Polynomial(std::vector<Rational>(rem.begin(), rem.begin() + (dr + 1)))};
    std::vector<Rational> quo(dr - dd + 1, Rational(0));
    for (int k = dr - dd; k >= 0; --k) {
        Rational q = rem[k + dd] / lead;
        quo[k] = q;
        if (q == 0) continue;
        for (int j = 0; j <= dd; ++j) rem[k + j] -= q * divisor.c_[j];
    }
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::divexact(const Polynomial& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw DomainError("InexactDivision", "polynomial division not exact");
    return q;
}

Polynomial Polynomial::reversed() const {
    std::vector<Rational> v(c_.rbegin(), c_.rend());
    return Polynomial(std::move(v));
}

Polynomial Polynomial::substitute_neg() const {
    std::vector<Rational> v(c_);
    for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) throw DomainError("ZeroPolynomial", "monic of zero polynomial");
    return *this / leading();
}

Polynomial Polynomial::primitive() const {
    if (is_zero()) return Polynomial();
    Int den_lcm = 1;
    for (const auto& q : c_)
        if (q != 0) den_lcm = boost::multiprecision::lcm(den_lcm, denominator(q));
    Int content = 0;
    std::vector<Rational> v(c_);
    for (auto& q : v) {
        q *= Rational(den_lcm);
        content = boost::multiprecision::gcd(content, numerator(q));
    }
    if (content == 0) return Polynomial();
    if (v.back() < 0) content = -content;
    for (auto& q : v) q /= Rational(content);
    return Polynomial(std::move(v));
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial acc = constant(Rational(1));
    Polynomial base = *this;
    while (e) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1u;
    }
    return acc;
}

std::string Polynomial::str(char var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= degree(); ++k) {
        const Rational& a = c_[k];
        if (a == 0) continue;
        Rational mag = a < 0 ? Rational(-a) : a;
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        const bool unit = (mag == 1);
        if (k == 0) {
            os << to_string(mag);
        } else {
            if (!unit) os << to_string(mag) << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a.primitive();
    Polynomial y = b.primitive();
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.degree() < y.degree()) std::swap(x, y);
    // Primitive PRS keeps coefficients integral and small.
    while (!y.is_zero()) {
        Polynomial r = x.divmod(y).second;
        x = y;
        y = r.primitive();
    }
    return x.primitive();
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p) {
    if (p.is_zero()) throw DomainError("ZeroPolynomial", "squarefree decomposition of zero");
    std::vector<std::pair<Polynomial, int>> out;
    Polynomial f = p.primitive();
    if (f.degree() == 0) return out;
    // Yun's algorithm.  v and w are always divided by the same polynomial
    // so scalar factors stay coherent between them.
    Polynomial fp = f.derivative();
    Polynomial d = poly_gcd(f, fp).monic();
    Polynomial v = f.divexact(d);
    Polynomial w = fp.divexact(d);
    int i = 1;
    while (v.degree() > 0) {
        Polynomial z = w - v.derivative();
        Polynomial g = poly_gcd(v, z);
        if (g.degree() > 0) out.emplace_back(g.primitive(), i);
        Polynomial gm = g.monic();
        v = v.divexact(gm);
        w = z.divexact(gm);
        ++i;
    }
    return out;
}

Polynomial squarefree_part(const Polynomial& p) {
    Polynomial out = Polynomial::constant(Rational(1));
    for (const auto& [factor, mult] : squarefree_decomposition(p)) out = out * factor;
    return out.primitive();
}

namespace {

int sign_of(const Rational& q) { return q == 0 ? 0 : (q < 0 ? -1 : 1); }

long count_variations(const std::vector<int>& signs) {
    long v = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

}  // namespace

namespace {

// Rescale by a positive rational only: Sturm chains may not change signs.
Polynomial positive_scale(const Polynomial& p) {
    if (p.is_zero()) return p;
    Polynomial prim = p.primitive();  // positive leading coefficient
    return p.leading() < 0 ? -prim : prim;
}

}  // namespace

SturmChain::SturmChain(const Polynomial& p) {
    Polynomial f = squarefree_part(p);
    if (f.degree() < 1) {
        chain_.push_back(f);
        return;
    }
    chain_.push_back(f);
    chain_.push_back(positive_scale(f.derivative()));
    while (chain_.back().degree() > 0) {
        Polynomial r = chain_[chain_.size() - 2].divmod(chain_.back()).second;
        if (r.is_zero()) break;  // cannot happen for squarefree input
        chain_.push_back(positive_scale(-r));
    }
}

long SturmChain::variations_at(const Rational& x) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& q : chain_) signs.push_back(sign_of(q.eval(x)));
    return count_variations(signs);
}

long SturmChain::variations_at_pos_inf() const {
    std::vector<int> signs;
    for (const auto& q : chain_) signs.push_back(q.is_zero() ? 0 : sign_of(q.leading()));
    return count_variations(signs);
}

long SturmChain::variations_at_neg_inf() const {
    std::vector<int> signs;
    for (const auto& q : chain_) {
        if (q.is_zero()) {
            signs.push_back(0);
            continue;
        }
        int s = sign_of(q.leading());
        if (q.degree() % 2 == 1) s = -s;
        signs.push_back(s);
    }
    return count_variations(signs);
}

long SturmChain::count(const Rational& a, const Rational& b) const {
    if (a > b) throw DomainError("BadInterval", "Sturm count with a > b");
    return variations_at(a) - variations_at(b);
}

long SturmChain::count_all() const { return variations_at_neg_inf() - variations_at_pos_inf(); }

long SturmChain::count_above(const Rational& a) const {
    return variations_at(a) - variations_at_pos_inf();
}

long SturmChain::count_below(const Rational& b) const {
    return variations_at_neg_inf() - variations_at(b);
}

long real_roots_above_with_multiplicity(const Polynomial& p, const Rational& a) {
    long total = 0;
    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        Polynomial f = factor;
        // Strip a root at the endpoint so the open interval is counted.
        if (f.eval(a) == 0) f = f.divexact(Polynomial({-a, Rational(1)}));
        if (f.degree() < 1) continue;
        total += mult * SturmChain(f).count_above(a);
    }
    return total;
}

long real_roots_below_with_multiplicity(const Polynomial& p, const Rational& a) {
    long total = 0;
    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        Polynomial f = factor;
        if (f.eval(a) == 0) f = f.divexact(Polynomial({-a, Rational(1)}));
        if (f.degree() < 1) continue;
        // After stripping, a is not a root, so (-inf, a] counts (-inf, a).
        total += mult * SturmChain(f).count_below(a);
    }
    return total;
}

bool unit_circle_root_test(const Polynomial& p) {
    if (p.is_zero()) throw DomainError("ZeroPolynomial", "unit circle test on zero polynomial");
    if (p.degree() == 0) return false;
    if (p.eval(Rational(1)) == 0 || p.eval(Rational(-1)) == 0) return true;

    Polynomial g = poly_gcd(p, p.reversed());
    if (g.degree() <= 0) return false;

    // g divides p and p(+-1) != 0, so g is palindromic of even degree 2m.
    const int deg = g.degree();
    if (deg % 2 != 0) throw CertificationError("SelfReciprocal", "odd-degree palindromic factor");
    for (int i = 0; i <= deg; ++i)
        if (g[i] != g[deg - i])
            throw CertificationError("SelfReciprocal", "gcd factor is not palindromic");

    // g(z) / z^m = c_m + sum_{k>=1} c_{m+k} (z^k + z^-k); substitute
    // v_k(w) = z^k + z^-k with v_0 = 2, v_1 = w, v_{k+1} = w v_k - v_{k-1}.
    const int m = deg / 2;
    Polynomial h = Polynomial::constant(g[m]);
    Polynomial v_prev = Polynomial::constant(Rational(2));
    Polynomial v_cur = Polynomial({Rational(0), Rational(1)});
    for (int k = 1; k <= m; ++k) {
        h = h + v_cur * g[m + k];
        Polynomial v_next = Polynomial({Rational(0), Rational(1)}) * v_cur - v_prev;
        v_prev = v_cur;
        v_cur = v_next;
    }

    // Roots of h in [-2, 2] correspond to modulus-1 root pairs; w = +-2
    // would mean z = +-1, already excluded, so h(+-2) != 0.
    return SturmChain(h).count(Rational(-2), Rational(2)) > 0;
}

}  // namespace infranil
