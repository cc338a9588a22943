#ifndef INFRANIL_ROOTS_HPP
#define INFRANIL_ROOTS_HPP

#include <optional>
#include <vector>

#include "infranil/polynomial.hpp"
#include "infranil/rational.hpp"

namespace infranil {

// Certified complex root enclosure: the closed disk of the given center
// and radius contains exactly `multiplicity` roots (with multiplicity) of
// the source polynomial.  radius == 0 means the center is the root
// exactly (rational roots only, so im == 0 then).
struct RootEnclosure {
    Rational re;
    Rational im;
    Rational radius;
    int multiplicity = 1;
    bool is_real = false;
    // Squarefree primitive factor with exactly one (simple) root in the
    // disk; drives refinement.
    Polynomial factor;

    bool exact() const { return radius == 0; }
    RootEnclosure conjugate() const;
};

// Disjoint enclosures covering all complex roots of p, radii <= precision,
// multiplicities summing to deg p.  Rational roots come back exact
// (radius 0) whenever the leading-coefficient divisor search finds them;
// monic inputs always do.
std::vector<RootEnclosure> isolate_roots(const Polynomial& p, const Rational& precision);

// Shrinks the enclosure radius to <= target, keeping the same root.
void refine_enclosure(RootEnclosure& e, const Rational& target);

// Rational bounds lo <= |root| <= hi with the sqrt-induced slack <= eps
// (total width eps + 2 * radius).  Exact enclosures give a point interval.
QInterval modulus_interval(const RootEnclosure& e, const Rational& eps);

// Complex disk with exact rational center, used for certified arithmetic
// over enclosure values.
struct DiskC {
    Rational re;
    Rational im;
    Rational rad;

    static DiskC point(const Rational& x, const Rational& y = Rational(0)) {
        return {x, y, Rational(0)};
    }
    static DiskC from_enclosure(const RootEnclosure& e) { return {e.re, e.im, e.radius}; }

    DiskC operator+(const DiskC& o) const;
    DiskC operator-(const DiskC& o) const;
    DiskC operator*(const DiskC& o) const;
    DiskC recip() const;  // requires 0 outside the disk
    DiskC operator/(const DiskC& o) const { return *this * o.recip(); }

    // Upper bound on |center|.
    Rational center_abs_upper() const;
    // Lower bound on |center|.
    Rational center_abs_lower() const;
};

DiskC eval_poly_disk(const Polynomial& p, const DiskC& z);

// Unique integer in the disk when the disk is narrow enough to pin one
// (radius < 1/2 and 0 within the imaginary spread); nullopt otherwise.
std::optional<Int> disk_unique_integer(const DiskC& d);

}  // namespace infranil

#endif
