#include <doctest.h>

#include <algorithm>
#include <random>

#include "infranil/roots.hpp"

using namespace infranil;

namespace {

Rational q(long n, long d = 1) { return Rational(n) / Rational(d); }

bool encloses(const std::vector<RootEnclosure>& encs, const Rational& x, const Rational& y) {
    for (const auto& e : encs) {
        const Rational dx = x - e.re, dy = y - e.im;
        if (dx * dx + dy * dy <= e.radius * e.radius) return true;
    }
    return false;
}

int total_multiplicity(const std::vector<RootEnclosure>& encs) {
    int t = 0;
    for (const auto& e : encs) t += e.multiplicity;
    return t;
}

bool pairwise_disjoint(const std::vector<RootEnclosure>& encs) {
    for (std::size_t i = 0; i < encs.size(); ++i)
        for (std::size_t j = i + 1; j < encs.size(); ++j) {
            const Rational dx = encs[i].re - encs[j].re;
            const Rational dy = encs[i].im - encs[j].im;
            const Rational rr = encs[i].radius + encs[j].radius;
            if (dx * dx + dy * dy <= rr * rr) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("rational roots come back exact") {
    auto encs = isolate_roots(Polynomial({q(6), q(-5), q(1)}), pow2(-20));
    REQUIRE(encs.size() == 2);
    CHECK(encs[0].exact());
    CHECK(encs[0].re == q(2));
    CHECK(encs[1].exact());
    CHECK(encs[1].re == q(3));
    CHECK(pairwise_disjoint(encs));
}

TEST_CASE("conjugate pair around +-i") {
    auto encs = isolate_roots(Polynomial({q(1), q(0), q(1)}), pow2(-20));
    REQUIRE(encs.size() == 2);
    CHECK(encloses(encs, q(0), q(1)));
    CHECK(encloses(encs, q(0), q(-1)));
    for (const auto& e : encs) {
        CHECK_FALSE(e.is_real);
        CHECK(e.radius <= pow2(-20));
    }
    CHECK(pairwise_disjoint(encs));
}

TEST_CASE("irrational quadratic roots") {
    // z^2 - 3z + 1: roots (3 +- sqrt(5))/2
    auto encs = isolate_roots(Polynomial({q(1), q(-3), q(1)}), pow2(-20));
    REQUIRE(encs.size() == 2);
    // sqrt(5) in [2.2360679, 2.2360680]
    const Rational lo1 = (q(3) - q(22360680, 10000000)) / 2;
    const Rational hi1 = (q(3) - q(22360679, 10000000)) / 2;
    CHECK(encs[0].is_real);
    CHECK(encs[0].re - encs[0].radius <= hi1);
    CHECK(encs[0].re + encs[0].radius >= lo1);
    CHECK(encs[1].is_real);
    CHECK(encs[1].re + encs[1].radius >= (q(3) + q(22360679, 10000000)) / 2);
    CHECK(total_multiplicity(encs) == 2);
}

TEST_CASE("multiplicities from repeated factors") {
    // (z-1)^2 (z^2+1)
    Polynomial p = Polynomial({q(-1), q(1)}).pow(2) * Polynomial({q(1), q(0), q(1)});
    auto encs = isolate_roots(p, pow2(-16));
    REQUIRE(encs.size() == 3);
    CHECK(total_multiplicity(encs) == 4);
    bool saw_double = false;
    for (const auto& e : encs)
        if (e.multiplicity == 2) {
            saw_double = true;
            CHECK(e.exact());
            CHECK(e.re == q(1));
        }
    CHECK(saw_double);
    CHECK(pairwise_disjoint(encs));
}

TEST_CASE("zero roots and denominators") {
    // z^2 (2z - 1): roots 0 (double), 1/2
    Polynomial p = Polynomial({q(0), q(0), q(1)}) * Polynomial({q(-1), q(2)});
    auto encs = isolate_roots(p, pow2(-16));
    REQUIRE(encs.size() == 2);
    CHECK(encs[0].exact());
    CHECK(encs[0].re == q(0));
    CHECK(encs[0].multiplicity == 2);
    CHECK(encs[1].exact());
    CHECK(encs[1].re == q(1, 2));
}

TEST_CASE("refinement keeps the root and shrinks") {
    auto encs = isolate_roots(Polynomial({q(1), q(-3), q(1)}), pow2(-8));
    auto e = encs[1];
    const Rational before_lo = e.re - e.radius, before_hi = e.re + e.radius;
    refine_enclosure(e, pow2(-120));
    CHECK(e.radius <= pow2(-120));
    CHECK(e.re >= before_lo);
    CHECK(e.re <= before_hi);
    // golden digits of (3+sqrt(5))/2 = 2.6180339887...
    CHECK(e.re - e.radius <= q(26180340, 10000000));
    CHECK(e.re + e.radius >= q(26180339, 10000000));
}

TEST_CASE("modulus interval") {
    auto encs = isolate_roots(Polynomial({q(6), q(-5), q(1)}), pow2(-20));
    auto mi = modulus_interval(encs[1], pow2(-20));
    CHECK(mi.lo == q(3));
    CHECK(mi.hi == q(3));

    auto pair_encs = isolate_roots(Polynomial({q(5), q(-2), q(1)}), pow2(-20));  // 1 +- 2i
    auto pm = modulus_interval(pair_encs[0], pow2(-20));
    // |1 + 2i| = sqrt(5) ~ 2.2360679
    CHECK(pm.lo <= q(22360680, 10000000));
    CHECK(pm.hi >= q(22360679, 10000000));
    CHECK(pm.hi - pm.lo <= pow2(-18));
}

TEST_CASE("unit circle test agrees with the enclosure oracle on a seeded corpus") {
    std::mt19937_64 rng(0xC0FFEE);
    std::uniform_int_distribution<long> coeff(-9, 9);
    std::uniform_int_distribution<int> degree(1, 8);
    int checked = 0;
    for (int iter = 0; checked < 100; ++iter) {
        const int deg = degree(rng);
        std::vector<Rational> cs(deg + 1);
        for (auto& c : cs) c = q(coeff(rng));
        if (cs[deg] == 0) cs[deg] = q(1);
        Polynomial p(cs);
        if (p.degree() < 1) continue;
        ++checked;

        const bool symbolic = unit_circle_root_test(p);

        // Oracle: refine enclosures until each disk is strictly inside or
        // outside the unit circle, or give up and call it "on".
        bool oracle = false;
        auto encs = isolate_roots(p, pow2(-40));
        for (auto& e : encs) {
            bool resolved = false;
            for (int bits = 40; bits <= 160; bits *= 2) {
                refine_enclosure(e, pow2(-bits));
                auto mi = modulus_interval(e, pow2(-bits));
                if (mi.hi < 1 || mi.lo > 1) {
                    resolved = true;
                    break;
                }
            }
            if (!resolved) {
                oracle = true;
                break;
            }
        }
        CAPTURE(p.str());
        CHECK(symbolic == oracle);
    }
}

TEST_CASE("disk arithmetic basics") {
    DiskC a{q(1), q(2), q(1, 100)};
    DiskC b{q(3), q(-1), q(1, 100)};
    DiskC prod = a * b;
    CHECK(prod.re == q(5));
    CHECK(prod.im == q(5));
    CHECK(prod.rad > 0);

    DiskC inv = b.recip();
    // 1/(3 - i) = (3 + i)/10
    CHECK(inv.re == q(3, 10));
    CHECK(inv.im == q(1, 10));

    DiskC tight{q(7), q(1, 1000), q(1, 100)};
    auto n = disk_unique_integer(tight);
    REQUIRE(n.has_value());
    CHECK(*n == 7);
    DiskC wide{q(7), q(0), q(2)};
    CHECK_FALSE(disk_unique_integer(wide).has_value());
    DiskC off_axis{q(7), q(5), q(1, 100)};
    CHECK_FALSE(disk_unique_integer(off_axis).has_value());
}
