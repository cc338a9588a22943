#ifndef INFRANIL_LIE_ALGEBRA_HPP
#define INFRANIL_LIE_ALGEBRA_HPP

#include <optional>
#include <string>
#include <vector>

#include "infranil/matrix.hpp"
#include "infranil/rational.hpp"

namespace infranil {

// Structure constants of a nilpotent Lie algebra on basis x_0..x_{dim-1}:
// [x_i, x_j] = sum_k c(i,j,k) x_k.
class LieAlgebraData {
public:
    explicit LieAlgebraData(int dim);
    static LieAlgebraData abelian(int dim) { return LieAlgebraData(dim); }

    int dim() const { return dim_; }
    const Rational& c(int i, int j, int k) const {
        return c_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
    }
    void set_c(int i, int j, int k, const Rational& v);

    // [x_i, x_j] as a coefficient vector.
    std::vector<Rational> bracket_basis(int i, int j) const;
    // Bilinear extension.
    std::vector<Rational> bracket(const std::vector<Rational>& u,
                                  const std::vector<Rational>& v) const;

private:
    int dim_;
    std::vector<Rational> c_;
};

// First violated identity (antisymmetry, Jacobi, or nilpotency), with
// indices; nullopt when the data is a valid nilpotent Lie algebra.
std::optional<std::string> lie_algebra_violation(const LieAlgebraData& l);

inline bool validate_lie_algebra(const LieAlgebraData& l) {
    return !lie_algebra_violation(l).has_value();
}

}  // namespace infranil

#endif
