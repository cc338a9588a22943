#include "infranil/lie_algebra.hpp"

#include <sstream>

namespace infranil {

LieAlgebraData::LieAlgebraData(int dim) : dim_(dim) {
    if (dim < 1) throw DomainError("BadDimension", "Lie algebra dimension must be >= 1");
    c_.assign(static_cast<std::size_t>(dim) * dim * dim, Rational(0));
}

void LieAlgebraData::set_c(int i, int j, int k, const Rational& v) {
    if (i < 0 || j < 0 || k < 0 || i >= dim_ || j >= dim_ || k >= dim_)
        throw DomainError("BadIndex", "structure constant index out of range");
    c_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k] = v;
}

std::vector<Rational> LieAlgebraData::bracket_basis(int i, int j) const {
    std::vector<Rational> out(dim_);
    for (int k = 0; k < dim_; ++k) out[k] = c(i, j, k);
    return out;
}

std::vector<Rational> LieAlgebraData::bracket(const std::vector<Rational>& u,
                                              const std::vector<Rational>& v) const {
    std::vector<Rational> out(dim_, Rational(0));
    for (int i = 0; i < dim_; ++i) {
        if (u[i] == 0) continue;
        for (int j = 0; j < dim_; ++j) {
            if (v[j] == 0) continue;
            const Rational f = u[i] * v[j];
            for (int k = 0; k < dim_; ++k) out[k] += f * c(i, j, k);
        }
    }
    return out;
}

std::optional<std::string> lie_algebra_violation(const LieAlgebraData& l) {
    const int d = l.dim();
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j)
            for (int k = 0; k < d; ++k)
                if (l.c(i, j, k) != -l.c(j, i, k)) {
                    std::ostringstream os;
                    os << "antisymmetry fails at c(" << i << "," << j << "," << k << ")";
                    return os.str();
                }
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            for (int k = j + 1; k < d; ++k) {
                // [[x_i,x_j],x_k] + [[x_j,x_k],x_i] + [[x_k,x_i],x_j]
                std::vector<Rational> ek(d, Rational(0)), ei(d, Rational(0)), ej(d, Rational(0));
                ek[k] = 1;
                ei[i] = 1;
                ej[j] = 1;
                auto t1 = l.bracket(l.bracket_basis(i, j), ek);
                auto t2 = l.bracket(l.bracket_basis(j, k), ei);
                auto t3 = l.bracket(l.bracket_basis(k, i), ej);
                for (int m = 0; m < d; ++m)
                    if (t1[m] + t2[m] + t3[m] != 0) {
                        std::ostringstream os;
                        os << "Jacobi identity fails on (x" << i << ", x" << j << ", x" << k
                           << ") in coordinate " << m;
                        return os.str();
                    }
            }
    // Lower central series must reach zero.
    std::vector<std::vector<Rational>> layer;
    for (int i = 0; i < d; ++i) {
        std::vector<Rational> e(d, Rational(0));
        e[i] = 1;
        layer.push_back(std::move(e));
    }
    int prev_rank = d;
    for (int step = 0; step <= d; ++step) {
        std::vector<std::vector<Rational>> next;
        for (int i = 0; i < d; ++i) {
            std::vector<Rational> ei(d, Rational(0));
            ei[i] = 1;
            for (const auto& v : layer) next.push_back(l.bracket(ei, v));
        }
        const int r = next.empty() ? 0 : rank(next);
        if (r == 0) return std::nullopt;
        if (r >= prev_rank) return std::string("lower central series does not terminate");
        // Reduce to an independent spanning subset.
        std::vector<std::vector<Rational>> basis;
        for (auto& v : next) {
            basis.push_back(v);
            if (rank(basis) < static_cast<int>(basis.size())) basis.pop_back();
        }
        layer = std::move(basis);
        prev_rank = r;
    }
    return std::string("lower central series does not terminate");
}

}  // namespace infranil
