#include "infranil/nielsen.hpp"

#include <algorithm>
#include <sstream>

namespace infranil {

namespace {

Rational rabs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace

HolonomyData make_holonomy(std::vector<RationalMatrix> matrices, int dim) {
    const RationalMatrix id = RationalMatrix::identity(dim);
    for (const auto& m : matrices) {
        if (m.dim() != dim)
            throw ParseError("HolonomyDimension", "holonomy matrix dimension mismatch");
        if (det(m) == 0)
            throw ParseError("HolonomyNotInvertible",
                             "holonomy matrix " + m.str() + " is singular");
    }
    bool has_id = false;
    for (const auto& m : matrices) has_id = has_id || m == id;
    if (!has_id) matrices.insert(matrices.begin(), id);
    for (const auto& a : matrices)
        for (const auto& b : matrices) {
            const RationalMatrix prod = a * b;
            if (std::find(matrices.begin(), matrices.end(), prod) == matrices.end())
                throw ParseError("HolonomyNotClosed",
                                 "holonomy is not closed under multiplication: " + a.str() +
                                     " * " + b.str() + " is missing");
        }
    return HolonomyData{std::move(matrices)};
}

void validate_map_data(const MapData& map) {
    if (map.dim < 1) throw ParseError("BadDimension", "dimension must be >= 1");
    if (map.linearPart.dim() != map.dim)
        throw ParseError("BadDimension", "linear part dimension mismatch");
    if (map.gammaPlusIndex != 1 && map.gammaPlusIndex != 2)
        throw ParseError("BadGammaPlusIndex", "gammaPlusIndex must be 1 or 2");
    if (map.gammaPlusIndex == 1 && map.fPlusCohomology)
        throw ParseError("LfPlusMismatch",
                         "fPlusCohomology is only meaningful when gammaPlusIndex is 2");
    if (map.holonomy.size() == 0)
        throw ParseError("EmptyHolonomy", "holonomy must contain the identity");
    for (const auto& data : {map.fCohomology, map.fPlusCohomology}) {
        if (data && static_cast<int>(data->size()) != map.dim + 1)
            throw ParseError("CohomologyDataShape",
                             "cohomology eigenvalue data needs dim + 1 degree lists");
    }
    if (map.brackets && map.brackets->dim() != map.dim)
        throw ParseError("BadDimension", "bracket data dimension mismatch");
}

std::vector<std::string> semiconjugacy_warnings(const MapData& map) {
    std::vector<std::string> warnings;
    const RationalMatrix& d = map.linearPart;
    for (const auto& a : map.holonomy.matrices) {
        const RationalMatrix da = d * a;
        bool ok = false;
        for (const auto& ap : map.holonomy.matrices)
            if (da == ap * d) {
                ok = true;
                break;
            }
        if (!ok)
            warnings.push_back("no A' in F with D*A = A'*D for A = " + a.str() +
                               "; the map data may not be realizable");
    }
    return warnings;
}

Int nielsen_number(const MapData& map, long k) {
    if (k < 1) throw DomainError("BadIterate", "iterate must be >= 1");
    const RationalMatrix dk = map.linearPart.pow(static_cast<unsigned long>(k));
    const RationalMatrix id = RationalMatrix::identity(map.dim);
    Rational sum(0);
    for (const auto& a : map.holonomy.matrices) sum += rabs(det(id - a * dk));
    const Rational avg = sum / Rational(static_cast<long>(map.holonomy.size()));
    if (!is_integer(avg))
        throw DomainError("NonIntegerAverage",
                          "averaging formula gave the non-integer " + to_string(avg) +
                              " at k = " + std::to_string(k) +
                              "; the (holonomy, linear part) data is not realizable as an "
                              "infra-nilmanifold map");
    return numerator(avg);
}

std::vector<Int> nielsen_sequence(const MapData& map, long k_max) {
    if (k_max < 1) throw DomainError("BadIterate", "sequence length must be >= 1");
    std::vector<Int> out;
    out.reserve(k_max);
    const RationalMatrix id = RationalMatrix::identity(map.dim);
    RationalMatrix dk = map.linearPart;
    for (long k = 1; k <= k_max; ++k) {
        Rational sum(0);
        for (const auto& a : map.holonomy.matrices) sum += rabs(det(id - a * dk));
        const Rational avg = sum / Rational(static_cast<long>(map.holonomy.size()));
        if (!is_integer(avg))
            throw DomainError("NonIntegerAverage",
                              "averaging formula gave the non-integer " + to_string(avg) +
                                  " at k = " + std::to_string(k) +
                                  "; the (holonomy, linear part) data is not realizable as an "
                                  "infra-nilmanifold map");
        out.push_back(numerator(avg));
        if (k < k_max) dk = dk * map.linearPart;
    }
    return out;
}

Rational ExponentialSum::eval(long k) const {
    Rational acc(0);
    for (const auto& t : terms) {
        if (!t.base.exact())
            throw DomainError("IrrationalBase", "exact evaluation needs rational bases");
        Rational p(1);
        for (long i = 0; i < k; ++i) p *= t.base.re;
        acc += Rational(t.coeff) * p;
    }
    return acc;
}

namespace {

// T(z) = sum_{k>=1} N_k z^k = A(z)/B(z) with B the reversed recurrence
// polynomial; A has degree <= order and A(0) = 0.
std::pair<Polynomial, Polynomial> generating_function(const RecurrenceFit& fit,
                                                      const std::vector<Rational>& seq) {
    const Polynomial b = fit.recurrencePolynomial.reversed();
    const int order = fit.order;
    if (static_cast<int>(seq.size()) < order)
        throw DomainError("InsufficientSequence", "sequence shorter than the recurrence order");
    std::vector<Rational> a(order + 1, Rational(0));
    for (int j = 1; j <= order; ++j) {
        Rational acc(0);
        for (int i = 0; i <= j - 1; ++i) {
            // B_i * N_{j-i}, N_0 = 0
            if (i <= b.degree()) acc += b.coeff(i) * seq[j - i - 1];
        }
        a[j] = acc;
    }
    return {Polynomial(std::move(a)), b};
}

// Certified integer residue a_i = -lambda * A(1/lambda) / B'(1/lambda).
Int certified_coefficient(const Polynomial& a, const Polynomial& bprime, RootEnclosure& root) {
    if (root.exact()) {
        const Rational lambda = root.re;
        const Rational inv = Rational(1) / lambda;
        const Rational denom = bprime.eval(inv);
        if (denom == 0)
            throw CertificationError("LemmaViolation", "derivative vanished at a recurrence root");
        const Rational value = -lambda * a.eval(inv) / denom;
        if (!is_integer(value))
            throw CertificationError("LemmaViolation",
                                     "coefficient " + to_string(value) + " is not an integer");
        return numerator(value);
    }
    Rational target = root.radius;
    for (int round = 0; round < 64; ++round) {
        const DiskC lam = DiskC::from_enclosure(root);
        if (lam.center_abs_lower() > lam.rad) {
            const DiskC inv = lam.recip();
            const DiskC denom = eval_poly_disk(bprime, inv);
            if (denom.center_abs_lower() > denom.rad) {
                const DiskC value =
                    (DiskC::point(Rational(0)) - lam) * eval_poly_disk(a, inv) / denom;
                if (auto n = disk_unique_integer(value)) return *n;
            }
        }
        target /= 16;
        refine_enclosure(root, target);
    }
    throw CertificationError("LemmaViolation",
                             "could not certify an integer coefficient for an exponential-sum "
                             "term");
}

}  // namespace

ExponentialSum exponential_sum_form(const MapData& map) {
    return exponential_sum_form(map, classify(map.linearPart));
}

ExponentialSum exponential_sum_form(const MapData& map, const SpectralProfile& profile) {
    if (!profile.isHyperbolic)
        throw DomainError("NotHyperbolic", "exponential-sum form needs a hyperbolic linear part");
    if (profile.isNilpotent)
        throw DomainError("NilpotentInput",
                          "nilpotent linear part: N(f^k) = 1, use the nilpotent shortcut");

    const long budget = recurrence_term_budget(map.dim);
    const std::vector<Int> ints = nielsen_sequence(map, budget);
    ExponentialSum sum;
    sum.sequence.reserve(ints.size());
    for (const auto& v : ints) sum.sequence.emplace_back(v);
    sum.fit = find_recurrence(sum.sequence);
    if (sum.fit.order == 0)
        throw CertificationError("LemmaViolation", "Nielsen sequence fitted an empty recurrence");

    auto [a_poly, b_poly] = generating_function(sum.fit, sum.sequence);
    const Polynomial bprime = b_poly.derivative();

    auto roots = isolate_roots(sum.fit.recurrencePolynomial, pow2(-32));
    for (auto& root : roots) {
        if (root.multiplicity != 1)
            throw CertificationError("LemmaViolation",
                                     "minimal recurrence polynomial is not squarefree");
        ExpTerm term;
        term.coeff = certified_coefficient(a_poly, bprime, root);
        if (term.coeff == 0)
            throw CertificationError("LemmaViolation", "zero coefficient on a recurrence root");
        term.base = root;
        sum.terms.push_back(std::move(term));
    }

    // Order by decreasing modulus upper bound; conjugates tie and are
    // broken by center coordinates.
    const Rational eps = pow2(-40);
    std::stable_sort(sum.terms.begin(), sum.terms.end(), [&](const ExpTerm& x, const ExpTerm& y) {
        const Rational ux = modulus_interval(x.base, eps).hi;
        const Rational uy = modulus_interval(y.base, eps).hi;
        if (ux != uy) return ux > uy;
        if (x.base.re != y.base.re) return x.base.re > y.base.re;
        return x.base.im > y.base.im;
    });
    sum.m = static_cast<int>(sum.terms.size());

    // Certify the dominance structure: lambda_1 real, positive, strictly
    // larger in modulus than every other base, a_1 >= 1, and consistent
    // with Sp of the full exterior power.
    ExpTerm& lead = sum.terms.front();
    if (!lead.base.is_real || (lead.base.exact() ? lead.base.re <= 0
                                                 : lead.base.re - lead.base.radius <= 0))
        throw CertificationError("LemmaViolation", "dominant base is not certified real positive");
    if (lead.coeff < 1)
        throw CertificationError("LemmaViolation", "dominant coefficient is below 1");
    if (profile.wedgeSpectralRadius) {
        const QInterval mi = modulus_interval(lead.base, pow2(-40));
        if (!mi.intersects(*profile.wedgeSpectralRadius))
            throw CertificationError("LemmaViolation",
                                     "dominant base does not meet the wedge spectral radius");
    }
    for (std::size_t i = 1; i < sum.terms.size(); ++i) {
        Rational tol = pow2(-40);
        for (int round = 0;; ++round) {
            const QInterval dom = modulus_interval(lead.base, tol);
            const QInterval other = modulus_interval(sum.terms[i].base, tol);
            if (dom.lo > other.hi) break;
            if (round >= 64)
                throw CertificationError("LemmaViolation",
                                         "dominant base modulus is not strictly maximal");
            tol /= 4;
            if (!lead.base.exact()) refine_enclosure(lead.base, tol);
            if (!sum.terms[i].base.exact()) refine_enclosure(sum.terms[i].base, tol);
        }
    }
    return sum;
}

RationalFunction nielsen_zeta_from_sum(const ExponentialSum& sum) {
    long deg_num = 0, deg_den = 0;
    for (const auto& t : sum.terms) {
        if (t.coeff > 0) {
            deg_den += static_cast<long>(t.coeff);
        } else {
            deg_num += static_cast<long>(-t.coeff);
        }
    }
    const int order = static_cast<int>(deg_num + deg_den);

    // Taylor series of N_f = exp(sum N_k z^k / k) to the Pade order.
    auto seq = extend_sequence(sum.fit, sum.sequence, std::max<std::size_t>(order, 1));
    std::vector<Rational> log_series(order + 1, Rational(0));
    for (int k = 1; k <= order; ++k) log_series[k] = seq[k - 1] / Rational(k);
    const std::vector<Rational> f = series_exp(log_series, order);

    // Solve for the denominator V (V(0) = 1) with (F V) zero in degrees
    // deg_num+1 .. deg_num+deg_den.
    Polynomial v = Polynomial::constant(Rational(1));
    if (deg_den > 0) {
        std::vector<std::vector<Rational>> rows;
        std::vector<Rational> rhs;
        for (long j = deg_num + 1; j <= deg_num + deg_den; ++j) {
            std::vector<Rational> row(deg_den, Rational(0));
            for (long t = 1; t <= deg_den; ++t)
                if (j - t >= 0) row[t - 1] = f[j - t];
            rows.push_back(std::move(row));
            rhs.push_back(-f[j]);
        }
        auto x = solve_linear(rows, rhs);
        if (!x) throw CertificationError("ZetaAssembly", "Pade system is inconsistent");
        std::vector<Rational> vc(deg_den + 1, Rational(0));
        vc[0] = 1;
        for (long t = 1; t <= deg_den; ++t) vc[t] = (*x)[t - 1];
        v = Polynomial(std::move(vc));
    }
    // U = truncation of F V to degree deg_num.
    std::vector<Rational> vv(v.coeffs());
    const auto fv = series_mul(f, vv, order);
    std::vector<Rational> uc(deg_num + 1, Rational(0));
    for (long k = 0; k <= deg_num; ++k) uc[k] = fv[k];
    const Polynomial u(std::move(uc));

    // Exact certificate: (U'V - UV') z B == A U V makes the log
    // derivative of U/V equal the generating function of the sequence.
    auto [a_poly, b_poly] = generating_function(sum.fit, sum.sequence);
    const Polynomial lhs =
        (u.derivative() * v - u * v.derivative()) * Polynomial({Rational(0), Rational(1)}) *
        b_poly;
    const Polynomial rhs_poly = a_poly * u * v;
    if (lhs != rhs_poly)
        throw CertificationError("ZetaAssembly",
                                 "log-derivative certificate failed for the assembled zeta "
                                 "function");
    return RationalFunction::make(u, v);
}

RationalFunction nielsen_zeta_from_table(const RationalFunction& lf,
                                         const std::optional<RationalFunction>& lf_plus, long p,
                                         long n, int gamma_plus_index) {
    if (gamma_plus_index != 1 && gamma_plus_index != 2)
        throw DomainError("BadGammaPlusIndex", "gammaPlusIndex must be 1 or 2");
    if (gamma_plus_index == 2 && !lf_plus)
        throw DomainError("MissingLfPlus",
                          "the index-2 table column needs the Lefschetz zeta function of the "
                          "lift f+");
    if (gamma_plus_index == 1 && lf_plus)
        throw DomainError("LfPlusMismatch", "L_{f+} supplied but [Gamma:Gamma_+] = 1");
    if (p < 0 || n < 0) throw DomainError("BadParity", "p and n must be non-negative");
    const bool pe = p % 2 == 0;
    const bool ne = n % 2 == 0;
    if (gamma_plus_index == 1) {
        if (pe && ne) return lf;
        if (pe && !ne) return lf.substitute_neg().reciprocal();
        if (!pe && ne) return lf.reciprocal();
        return lf.substitute_neg();
    }
    if (pe && ne) return *lf_plus * lf.reciprocal();
    if (pe && !ne) return lf.substitute_neg() * lf_plus->substitute_neg().reciprocal();
    if (!pe && ne) return lf * lf_plus->reciprocal();
    return lf_plus->substitute_neg() * lf.substitute_neg().reciprocal();
}

ReidemeisterStatus reidemeister_status(const MapData& map) {
    const RationalMatrix id = RationalMatrix::identity(map.dim);
    ReidemeisterStatus st;
    st.finite = true;
    for (const auto& a : map.holonomy.matrices)
        if (det(id - a * map.linearPart) == 0) st.finite = false;
    if (st.finite) {
        st.valueEqualsNielsen = true;
        st.value = nielsen_number(map, 1);
    }
    return st;
}

}  // namespace infranil
