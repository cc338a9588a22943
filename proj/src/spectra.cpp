#include "infranil/spectra.hpp"

namespace infranil {

namespace {

bool is_power_of_z(const Polynomial& p) {
    for (int k = 0; k < p.degree(); ++k)
        if (p.coeff(k) != 0) return false;
    return true;
}

// Certified strict comparison of |root| against 1; refines as needed.
// Only sound when no root has modulus exactly 1.
bool modulus_exceeds_one(RootEnclosure& e) {
    Rational eps = e.exact() ? Rational(1) : e.radius;
    for (int round = 0; round < 4096; ++round) {
        const QInterval mi = modulus_interval(e, eps);
        if (mi.lo > 1) return true;
        if (mi.hi < 1) return false;
        eps /= 2;
        if (!e.exact()) refine_enclosure(e, eps);
    }
    throw CertificationError("ModulusDecision", "could not separate eigenvalue modulus from 1");
}

QInterval expanding_modulus_product(std::vector<RootEnclosure>& eigs, const Rational& max_width) {
    std::vector<std::size_t> expanding;
    for (std::size_t i = 0; i < eigs.size(); ++i)
        if (modulus_exceeds_one(eigs[i])) expanding.push_back(i);
    if (expanding.empty()) return QInterval::point(Rational(1));

    Rational eps = pow2(-32);
    for (int round = 0; round < 4096; ++round) {
        QInterval prod = QInterval::point(Rational(1));
        for (std::size_t i : expanding) {
            for (int rep = 0; rep < eigs[i].multiplicity; ++rep)
                prod = prod.mul_nonneg(modulus_interval(eigs[i], eps));
        }
        if (prod.width() <= max_width) return prod;
        eps /= 4;
        for (std::size_t i : expanding)
            if (!eigs[i].exact()) refine_enclosure(eigs[i], eps);
    }
    throw CertificationError("ModulusDecision", "spectral radius interval did not narrow");
}

}  // namespace

SpectralProfile classify(const RationalMatrix& d, unsigned precision_bits) {
    SpectralProfile prof;
    prof.dim = d.dim();
    prof.charPoly = char_poly(d);
    prof.isNilpotent = is_power_of_z(prof.charPoly);
    prof.hasEigenvalueOne = prof.charPoly.eval(Rational(1)) == 0;
    prof.isHyperbolic = !unit_circle_root_test(prof.charPoly);
    prof.p = real_roots_above_with_multiplicity(prof.charPoly, Rational(1));
    prof.n = real_roots_below_with_multiplicity(prof.charPoly, Rational(-1));
    prof.eigenvalues = isolate_roots(prof.charPoly, pow2(-static_cast<long>(precision_bits)));
    if (prof.isNilpotent) {
        prof.wedgeSpectralRadius = QInterval::point(Rational(1));
        prof.asymptoticNielsen = QInterval::point(Rational(1));
    } else if (prof.isHyperbolic) {
        auto eigs = prof.eigenvalues;
        const QInterval w =
            expanding_modulus_product(eigs, pow2(-static_cast<long>(precision_bits)));
        prof.wedgeSpectralRadius = w;
        if (!prof.hasEigenvalueOne) prof.asymptoticNielsen = w;
    }
    return prof;
}

QInterval wedge_spectral_radius(const RationalMatrix& d, const SpectralProfile& profile,
                                const Rational& max_width) {
    if (d.dim() != profile.dim)
        throw DomainError("BadDimension", "profile does not match the matrix");
    if (!profile.isHyperbolic)
        throw DomainError("NotHyperbolic",
                          "wedge spectral radius needs a hyperbolic linear part (an eigenvalue "
                          "of modulus 1 exists)");
    if (profile.isNilpotent) return QInterval::point(Rational(1));
    auto eigs = profile.eigenvalues;
    return expanding_modulus_product(eigs, max_width);
}

QInterval asymptotic_nielsen(const RationalMatrix& d, unsigned precision_bits) {
    SpectralProfile prof = classify(d, precision_bits);
    if (prof.hasEigenvalueOne)
        throw DomainError("EigenvalueOne", "asymptotic Nielsen number needs 1 off the spectrum");
    if (!prof.isHyperbolic)
        throw DomainError("NotHyperbolic",
                          "asymptotic Nielsen number is only certified for hyperbolic maps");
    if (prof.isNilpotent) return QInterval::point(Rational(1));
    return *prof.wedgeSpectralRadius;
}

}  // namespace infranil
