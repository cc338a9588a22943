#ifndef INFRANIL_MATRIX_HPP
#define INFRANIL_MATRIX_HPP

#include <optional>
#include <string>
#include <vector>

#include "infranil/polynomial.hpp"
#include "infranil/rational.hpp"

namespace infranil {

// Dense square matrix of exact rationals, row-major.
class RationalMatrix {
public:
    RationalMatrix() : dim_(0) {}
    explicit RationalMatrix(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim) {
        if (dim < 1) throw DomainError("BadDimension", "matrix dimension must be >= 1");
    }
    RationalMatrix(int dim, std::vector<Rational> entries);

    static RationalMatrix identity(int dim);

    int dim() const { return dim_; }
    const Rational& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * dim_ + j]; }
    Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * dim_ + j]; }

    RationalMatrix operator+(const RationalMatrix& o) const;
    RationalMatrix operator-(const RationalMatrix& o) const;
    RationalMatrix operator*(const RationalMatrix& o) const;
    RationalMatrix operator*(const Rational& s) const;
    bool operator==(const RationalMatrix& o) const { return dim_ == o.dim_ && a_ == o.a_; }

    RationalMatrix pow(unsigned long e) const;
    RationalMatrix transpose() const;
    Rational trace() const;
    bool is_zero() const;

    std::string str() const;

private:
    int dim_;
    std::vector<Rational> a_;
};

// Exact determinant via fraction-free (Bareiss) elimination on a
// denominator-cleared integer matrix.
Rational det(const RationalMatrix& m);

// Monic char polynomial det(zI - M), exact (interpolation through the
// already-exact determinant).
Polynomial char_poly(const RationalMatrix& m);

// i-th compound matrix: C(dim,i) x C(dim,i) matrix of i x i minors with
// rows/columns indexed by lexicographically ordered i-subsets.  Its
// eigenvalues are the i-fold products of distinct eigenvalues of m.
RationalMatrix exterior_power(const RationalMatrix& m, int i);

// Lexicographically ordered i-subsets of {0, ..., n-1}.
std::vector<std::vector<int>> lex_subsets(int n, int i);

// Rank over the rationals.
int rank(const std::vector<std::vector<Rational>>& rows);

// Basis of the nullspace of the matrix with the given rows (entries per
// column), as column vectors.
std::vector<std::vector<Rational>> nullspace(const std::vector<std::vector<Rational>>& rows,
                                             int ncols);

// Solves A x = b for one consistent system; nullopt when inconsistent.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> rows,
                                                  std::vector<Rational> rhs);

}  // namespace infranil

#endif
