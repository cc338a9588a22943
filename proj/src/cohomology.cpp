#include "infranil/cohomology.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace infranil {

namespace {

// Sign of sorting (k, u_1.., u_m) with u ascending and k not in u:
// (-1)^(number of u's below k); zero when k collides with u.
int insertion_sign(int k, const std::vector<int>& u) {
    int below = 0;
    for (int x : u) {
        if (x == k) return 0;
        if (x < k) ++below;
    }
    return below % 2 == 0 ? 1 : -1;
}

}  // namespace

std::vector<std::vector<Rational>> cochain_differential(const LieAlgebraData& l, int i) {
    const int d = l.dim();
    if (i < 0 || i > d) throw DomainError("BadDegree", "cochain degree out of range");
    if (i == d) return {};
    const auto rows_idx = lex_subsets(d, i + 1);
    const auto cols_idx = lex_subsets(d, i);
    std::map<std::vector<int>, int> col_of;
    for (std::size_t c = 0; c < cols_idx.size(); ++c) col_of[cols_idx[c]] = static_cast<int>(c);

    std::vector<std::vector<Rational>> rows(rows_idx.size(),
                                            std::vector<Rational>(cols_idx.size(), Rational(0)));
    // (d phi)(x_T) = sum_{s<t} (-1)^(s+t) phi([x_{T_s}, x_{T_t}], x_{T minus s,t})
    for (std::size_t r = 0; r < rows_idx.size(); ++r) {
        const auto& t = rows_idx[r];
        for (std::size_t s = 0; s < t.size(); ++s)
            for (std::size_t u = s + 1; u < t.size(); ++u) {
                const int sign_st = ((s + u) % 2 == 0) ? 1 : -1;
                std::vector<int> rest;
                for (std::size_t w = 0; w < t.size(); ++w)
                    if (w != s && w != u) rest.push_back(t[w]);
                for (int k = 0; k < d; ++k) {
                    const Rational& coef = l.c(t[s], t[u], k);
                    if (coef == 0) continue;
                    const int ins = insertion_sign(k, rest);
                    if (ins == 0) continue;
                    std::vector<int> key = rest;
                    key.push_back(k);
                    std::sort(key.begin(), key.end());
                    rows[r][col_of.at(key)] += Rational(sign_st * ins) * coef;
                }
            }
    }
    return rows;
}

namespace {

// Column-space basis vectors of the given rows-matrix (as vectors in the
// row-length space of its transpose).
std::vector<std::vector<Rational>> column_space(const std::vector<std::vector<Rational>>& rows,
                                                int ncols) {
    std::vector<std::vector<Rational>> cols;
    if (rows.empty()) return cols;
    for (int c = 0; c < ncols; ++c) {
        std::vector<Rational> v(rows.size());
        for (std::size_t r = 0; r < rows.size(); ++r) v[r] = rows[r][c];
        cols.push_back(std::move(v));
        if (rank(cols) < static_cast<int>(cols.size())) cols.pop_back();
    }
    return cols;
}

std::vector<Rational> apply_rows(const std::vector<std::vector<Rational>>& rows,
                                 const std::vector<Rational>& v) {
    std::vector<Rational> out(rows.size(), Rational(0));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < v.size(); ++c) out[r] += rows[r][c] * v[c];
    return out;
}

}  // namespace

CohomologySpectrum cohomology_action(const LieAlgebraData& l, const RationalMatrix& d,
                                     unsigned precision_bits) {
    const int dim = l.dim();
    if (d.dim() != dim) throw DomainError("BadDimension", "endomorphism dimension mismatch");
    if (auto why = lie_algebra_violation(l))
        throw DomainError("InvalidLieAlgebra", *why);

    // D[x_i, x_j] = [D x_i, D x_j], exactly.
    std::vector<std::vector<Rational>> d_rows(dim, std::vector<Rational>(dim));
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) d_rows[r][c] = d.at(r, c);
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
            std::vector<Rational> di(dim), dj(dim);
            for (int r = 0; r < dim; ++r) {
                di[r] = d.at(r, i);
                dj[r] = d.at(r, j);
            }
            const auto lhs = apply_rows(d_rows, l.bracket_basis(i, j));
            const auto rhs = l.bracket(di, dj);
            if (lhs != rhs) {
                std::ostringstream os;
                os << "D[x" << i << ",x" << j << "] != [Dx" << i << ",Dx" << j << "]";
                throw DomainError("NotEndomorphism", os.str());
            }
        }

    CohomologySpectrum spec;
    std::vector<std::vector<std::vector<Rational>>> diffs(dim + 1);
    for (int i = 0; i <= dim; ++i) diffs[i] = cochain_differential(l, i);

    for (int i = 0; i <= dim; ++i) {
        const auto subsets = lex_subsets(dim, i);
        const int space_dim = static_cast<int>(subsets.size());

        // ker d^i
        std::vector<std::vector<Rational>> kernel;
        if (diffs[i].empty()) {
            for (int c = 0; c < space_dim; ++c) {
                std::vector<Rational> e(space_dim, Rational(0));
                e[c] = 1;
                kernel.push_back(std::move(e));
            }
        } else {
            kernel = nullspace(diffs[i], space_dim);
        }
        // im d^(i-1)
        std::vector<std::vector<Rational>> image;
        if (i > 0 && !diffs[i - 1].empty())
            image = column_space(diffs[i - 1], static_cast<int>(lex_subsets(dim, i - 1).size()));

        // Extend the image basis to a basis of the kernel; the complement
        // represents H^i.
        std::vector<std::vector<Rational>> combined = image;
        std::vector<std::vector<Rational>> complement;
        for (const auto& v : kernel) {
            combined.push_back(v);
            if (rank(combined) < static_cast<int>(combined.size())) {
                combined.pop_back();
            } else {
                complement.push_back(v);
            }
        }
        const long betti = static_cast<long>(complement.size());
        spec.bettiNumbers.push_back(betti);

        if (betti == 0) {
            spec.inducedMaps.emplace_back(std::nullopt);
            spec.inducedCharPolys.push_back(Polynomial::constant(Rational(1)));
            spec.actionEigenvalues.emplace_back();
            continue;
        }

        // Action on cochains is the transpose of the i-th compound.
        const RationalMatrix action = exterior_power(d, i).transpose();
        // Solve [image | complement] x = action * c for each complement
        // vector; the complement block of x is the induced matrix column.
        std::vector<std::vector<Rational>> solve_rows(space_dim);
        for (int r = 0; r < space_dim; ++r) {
            solve_rows[r].reserve(combined.size());
            for (const auto& v : combined) solve_rows[r].push_back(v[r]);
        }
        const std::size_t image_sz = image.size();
        RationalMatrix induced(static_cast<int>(betti));
        for (long c = 0; c < betti; ++c) {
            std::vector<Rational> w(space_dim, Rational(0));
            for (int r = 0; r < space_dim; ++r) {
                for (int k = 0; k < space_dim; ++k) w[r] += action.at(r, k) * complement[c][k];
            }
            auto x = solve_linear(solve_rows, w);
            if (!x)
                throw CertificationError("CohomologyAction",
                                         "induced action left the kernel subspace");
            for (long r = 0; r < betti; ++r) induced.at(r, c) = (*x)[image_sz + r];
        }
        spec.inducedMaps.emplace_back(induced);
        spec.inducedCharPolys.push_back(char_poly(induced));
        spec.actionEigenvalues.push_back(
            isolate_roots(spec.inducedCharPolys.back(), pow2(-static_cast<long>(precision_bits))));
    }
    return spec;
}

std::vector<Rational> lefschetz_numbers(const CohomologySpectrum& spec, int count) {
    if (count < 1) throw DomainError("BadCount", "Lefschetz iterate count must be >= 1");
    std::vector<Rational> out(count, Rational(0));
    for (std::size_t i = 0; i < spec.inducedMaps.size(); ++i) {
        if (!spec.inducedMaps[i]) continue;
        const RationalMatrix& m = *spec.inducedMaps[i];
        const int sign = (i % 2 == 0) ? 1 : -1;
        RationalMatrix power = m;
        for (int k = 1; k <= count; ++k) {
            out[k - 1] += Rational(sign) * power.trace();
            if (k < count) power = power * m;
        }
    }
    return out;
}

RationalFunction lefschetz_zeta(const CohomologySpectrum& spec) {
    Polynomial num = Polynomial::constant(Rational(1));
    Polynomial den = Polynomial::constant(Rational(1));
    for (std::size_t i = 0; i < spec.inducedCharPolys.size(); ++i) {
        const Polynomial& cp = spec.inducedCharPolys[i];
        if (cp.degree() < 1) continue;
        // det(I - z D^i) is the reversed characteristic polynomial.
        const Polynomial factor = cp.reversed();
        if (i % 2 == 1) {
            num = num * factor;
        } else {
            den = den * factor;
        }
    }
    return RationalFunction::make(num, den);
}

RationalFunction zeta_from_eigenvalue_lists(const std::vector<std::vector<Rational>>& per_degree) {
    Polynomial num = Polynomial::constant(Rational(1));
    Polynomial den = Polynomial::constant(Rational(1));
    for (std::size_t i = 0; i < per_degree.size(); ++i) {
        for (const Rational& lambda : per_degree[i]) {
            const Polynomial factor({Rational(1), -lambda});
            if (i % 2 == 1) {
                num = num * factor;
            } else {
                den = den * factor;
            }
        }
    }
    return RationalFunction::make(num, den);
}

}  // namespace infranil
