#include "infranil/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace infranil {

RationalMatrix::RationalMatrix(int dim, std::vector<Rational> entries)
    : dim_(dim), a_(std::move(entries)) {
    if (dim < 1) throw DomainError("BadDimension", "matrix dimension must be >= 1");
    if (a_.size() != static_cast<std::size_t>(dim) * dim)
        throw DomainError("BadDimension", "entry count does not match dimension");
}

RationalMatrix RationalMatrix::identity(int dim) {
    RationalMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
    if (dim_ != o.dim_) throw DomainError("BadDimension", "matrix addition dimension mismatch");
    RationalMatrix r(dim_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
    if (dim_ != o.dim_) throw DomainError("BadDimension", "matrix subtraction dimension mismatch");
    RationalMatrix r(dim_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (dim_ != o.dim_) throw DomainError("BadDimension", "matrix product dimension mismatch");
    RationalMatrix r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int k = 0; k < dim_; ++k) {
            const Rational& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < dim_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

RationalMatrix RationalMatrix::operator*(const Rational& s) const {
    RationalMatrix r(dim_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * s;
    return r;
}

RationalMatrix RationalMatrix::pow(unsigned long e) const {
    RationalMatrix acc = identity(dim_);
    RationalMatrix base = *this;
    while (e) {
        if (e & 1ul) acc = acc * base;
        base = base * base;
        e >>= 1ul;
    }
    return acc;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Rational RationalMatrix::trace() const {
    Rational t(0);
    for (int i = 0; i < dim_; ++i) t += at(i, i);
    return t;
}

bool RationalMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rational& q) { return q == 0; });
}

std::string RationalMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < dim_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < dim_; ++j) os << (j ? " " : "") << to_string(at(i, j));
    }
    os << "]";
    return os.str();
}

namespace {

// Bareiss fraction-free elimination on an integer matrix.
Int bareiss_det(std::vector<std::vector<Int>> m) {
    const int n = static_cast<int>(m.size());
    Int sign = 1;
    Int prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return Int(0);
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace

Rational det(const RationalMatrix& m) {
    const int n = m.dim();
    std::vector<std::vector<Int>> im(n, std::vector<Int>(n));
    Rational scale(1);
    for (int i = 0; i < n; ++i) {
        Int lcm = 1;
        for (int j = 0; j < n; ++j) lcm = boost::multiprecision::lcm(lcm, denominator(m.at(i, j)));
        scale *= Rational(lcm);
        for (int j = 0; j < n; ++j) {
            const Rational v = m.at(i, j) * Rational(lcm);
            im[i][j] = numerator(v);
        }
    }
    return Rational(bareiss_det(std::move(im))) / scale;
}

Polynomial char_poly(const RationalMatrix& m) {
    const int n = m.dim();
    // Interpolate det(tI - M) at t = 0..n.
    std::vector<Rational> xs, ys;
    for (int t = 0; t <= n; ++t) {
        RationalMatrix shifted = RationalMatrix::identity(n) * Rational(t) - m;
        xs.emplace_back(t);
        ys.push_back(det(shifted));
    }
    // Lagrange interpolation.
    Polynomial result;
    for (int i = 0; i <= n; ++i) {
        Polynomial basis = Polynomial::constant(Rational(1));
        Rational denom(1);
        for (int j = 0; j <= n; ++j) {
            if (j == i) continue;
            basis = basis * Polynomial({-xs[j], Rational(1)});
            denom *= xs[i] - xs[j];
        }
        result = result + basis * (ys[i] / denom);
    }
    if (result.degree() != n || result.leading() != 1)
        throw CertificationError("CharPoly", "characteristic polynomial not monic of full degree");
    return result;
}

std::vector<std::vector<int>> lex_subsets(int n, int i) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(i);
    if (i == 0) {
        out.emplace_back();
        return out;
    }
    for (int k = 0; k < i; ++k) cur[k] = k;
    while (true) {
        out.push_back(cur);
        int pos = i - 1;
        while (pos >= 0 && cur[pos] == n - i + pos) --pos;
        if (pos < 0) break;
        ++cur[pos];
        for (int k = pos + 1; k < i; ++k) cur[k] = cur[k - 1] + 1;
    }
    return out;
}

RationalMatrix exterior_power(const RationalMatrix& m, int i) {
    const int n = m.dim();
    if (i < 0 || i > n) throw DomainError("BadExteriorOrder", "exterior power order out of range");
    const auto subsets = lex_subsets(n, i);
    const int sz = static_cast<int>(subsets.size());
    RationalMatrix out(std::max(sz, 1));
    if (i == 0) {
        out.at(0, 0) = 1;
        return out;
    }
    for (int r = 0; r < sz; ++r)
        for (int c = 0; c < sz; ++c) {
            RationalMatrix minor(i);
            for (int a = 0; a < i; ++a)
                for (int b = 0; b < i; ++b) minor.at(a, b) = m.at(subsets[r][a], subsets[c][b]);
            out.at(r, c) = det(minor);
        }
    return out;
}

namespace {

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<int> rref(std::vector<std::vector<Rational>>& rows, int ncols) {
    std::vector<int> pivots;
    int r = 0;
    const int nrows = static_cast<int>(rows.size());
    for (int c = 0; c < ncols && r < nrows; ++c) {
        int sel = -1;
        for (int i = r; i < nrows; ++i)
            if (rows[i][c] != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(rows[r], rows[sel]);
        const Rational inv = rows[r][c];
        for (int j = c; j < ncols; ++j) rows[r][j] /= inv;
        for (int i = 0; i < nrows; ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const Rational f = rows[i][c];
            for (int j = c; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int rank(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) return 0;
    auto copy = rows;
    return static_cast<int>(rref(copy, static_cast<int>(rows[0].size())).size());
}

std::vector<std::vector<Rational>> nullspace(const std::vector<std::vector<Rational>>& rows,
                                             int ncols) {
    auto copy = rows;
    if (copy.empty()) copy.emplace_back(ncols, Rational(0));
    const auto pivots = rref(copy, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int c = 0; c < ncols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Rational> v(ncols, Rational(0));
        v[c] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -copy[r][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> rows,
                                                  std::vector<Rational> rhs) {
    const int nrows = static_cast<int>(rows.size());
    if (nrows == 0) return std::vector<Rational>{};
    const int ncols = static_cast<int>(rows[0].size());
    for (int i = 0; i < nrows; ++i) rows[i].push_back(rhs[i]);
    auto pivots = rref(rows, ncols + 1);
    // Inconsistent iff a pivot lands in the rhs column.
    if (!pivots.empty() && pivots.back() == ncols) return std::nullopt;
    std::vector<Rational> x(ncols, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = rows[r][ncols];
    return x;
}

}  // namespace infranil
