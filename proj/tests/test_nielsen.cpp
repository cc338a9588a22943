#include <doctest.h>

#include "corpus.hpp"
#include "infranil/cohomology.hpp"
#include "infranil/nielsen.hpp"

using namespace infranil;
using corpus::q;

namespace {

Int ipow(long base, long e) {
    Int acc = 1;
    for (long i = 0; i < e; ++i) acc *= base;
    return acc;
}

}  // namespace

TEST_CASE("averaging formula examples") {
    CHECK(nielsen_number(corpus::circle_doubling(), 3) == 7);
    CHECK(nielsen_number(corpus::klein_diag23(), 2) == 27);
    CHECK(nielsen_number(corpus::nilpotent_dim(3, true), 5) == 1);
}

TEST_CASE("sequences") {
    const auto doubling = nielsen_sequence(corpus::circle_doubling(), 5);
    CHECK(doubling == std::vector<Int>{1, 3, 7, 15, 31});

    const auto klein = nielsen_sequence(corpus::klein_diag23(), 3);
    CHECK(klein == std::vector<Int>{3, 27, 189});

    const auto nil = nielsen_sequence(corpus::nilpotent_dim(4, false), 4);
    CHECK(nil == std::vector<Int>{1, 1, 1, 1});

    const auto cat = nielsen_sequence(corpus::cat_map(), 4);
    CHECK(cat == std::vector<Int>{1, 5, 16, 45});

    const auto flip = nielsen_sequence(corpus::flip_diag23(), 3);
    CHECK(flip == std::vector<Int>{7, 37, 217});
}

TEST_CASE("non-integer average is rejected with a diagnostic") {
    MapData half = corpus::make_map(RationalMatrix(1, {q(1, 2)}));
    CHECK_THROWS_WITH_AS(nielsen_number(half, 1), doctest::Contains("not realizable"),
                         DomainError);
}

TEST_CASE("exponential sum: circle doubling") {
    auto sum = exponential_sum_form(corpus::circle_doubling());
    REQUIRE(sum.m == 2);
    CHECK(sum.terms[0].coeff == 1);
    CHECK(sum.terms[0].base.exact());
    CHECK(sum.terms[0].base.re == 2);
    CHECK(sum.terms[1].coeff == -1);
    CHECK(sum.terms[1].base.re == 1);
    CHECK(sum.fit.validated);
}

TEST_CASE("exponential sum: 6^k - 3^k with lambda1 matching the wedge radius") {
    const auto map = corpus::klein_diag23();
    const auto profile = classify(map.linearPart);
    auto sum = exponential_sum_form(map, profile);
    REQUIRE(sum.m == 2);
    CHECK(sum.terms[0].coeff == 1);
    CHECK(sum.terms[0].base.re == 6);
    CHECK(sum.terms[1].coeff == -1);
    CHECK(sum.terms[1].base.re == 3);
    REQUIRE(profile.wedgeSpectralRadius.has_value());
    CHECK(profile.wedgeSpectralRadius->lo == 6);
    CHECK(profile.wedgeSpectralRadius->hi == 6);
}

TEST_CASE("exponential sum: cat map has a conjugate quadratic block") {
    auto sum = exponential_sum_form(corpus::cat_map());
    REQUIRE(sum.m == 3);
    // base 1 carries coefficient -2; the two quadratic roots carry 1
    int unit_coeffs = 0;
    bool base_one_seen = false;
    for (const auto& t : sum.terms) {
        if (t.base.exact() && t.base.re == 1) {
            base_one_seen = true;
            CHECK(t.coeff == -2);
        } else {
            CHECK(t.coeff == 1);
            ++unit_coeffs;
        }
    }
    CHECK(base_one_seen);
    CHECK(unit_coeffs == 2);
    // lambda_1 = (3+sqrt 5)/2, real positive
    CHECK(sum.terms[0].base.is_real);
    CHECK(sum.terms[0].base.re - sum.terms[0].base.radius > 0);
}

TEST_CASE("exponential sum: complex expanding block certifies integer coefficients") {
    // N(f^k) = (5^k) - (1+2i)^k - (1-2i)^k + 1
    auto sum = exponential_sum_form(corpus::complex_expanding());
    REQUIRE(sum.m == 4);
    CHECK(sum.terms[0].base.exact());
    CHECK(sum.terms[0].base.re == 5);
    CHECK(sum.terms[0].coeff == 1);
    int complex_bases = 0;
    for (const auto& t : sum.terms)
        if (t.base.im != 0) {
            ++complex_bases;
            CHECK(t.coeff == -1);
        }
    CHECK(complex_bases == 2);
}

TEST_CASE("exponential sum rejects non-hyperbolic and nilpotent input") {
    CHECK_THROWS_AS(exponential_sum_form(corpus::rotation90()), DomainError);
    CHECK_THROWS_AS(exponential_sum_form(corpus::nilpotent_dim(3, false)), DomainError);
}

TEST_CASE("sum extrapolates beyond its training window") {
    for (auto& [name, map] : corpus::hyperbolic_corpus()) {
        CAPTURE(name);
        auto sum = exponential_sum_form(map);
        const long budget = static_cast<long>(sum.sequence.size());
        const auto truth = nielsen_sequence(map, budget + 10);
        auto extended = extend_sequence(sum.fit, sum.sequence, budget + 10);
        for (long k = budget; k < budget + 10; ++k) CHECK(extended[k] == Rational(truth[k]));
    }
}

TEST_CASE("non-vanishing across the hyperbolic corpus") {
    for (auto& [name, map] : corpus::hyperbolic_corpus()) {
        CAPTURE(name);
        const auto seq = nielsen_sequence(map, 50);
        for (const auto& v : seq) CHECK(v >= 1);
    }
}

TEST_CASE("zeta from sum: closed forms") {
    auto doubling = nielsen_zeta_from_sum(exponential_sum_form(corpus::circle_doubling()));
    CHECK(doubling ==
          RationalFunction::make(Polynomial({q(1), q(-1)}), Polynomial({q(1), q(-2)})));

    auto klein = nielsen_zeta_from_sum(exponential_sum_form(corpus::klein_diag23()));
    CHECK(klein == RationalFunction::make(Polynomial({q(1), q(-3)}), Polynomial({q(1), q(-6)})));

    // 6^k + 1: 1 / ((1-6z)(1-z))
    auto flip = nielsen_zeta_from_sum(exponential_sum_form(corpus::flip_diag23()));
    CHECK(flip == RationalFunction::make(Polynomial::constant(q(1)),
                                         Polynomial({q(1), q(-6)}) * Polynomial({q(1), q(-1)})));

    // cat map: (1-z)^2 / (1 - 3z + z^2)
    auto cat = nielsen_zeta_from_sum(exponential_sum_form(corpus::cat_map()));
    CHECK(cat == RationalFunction::make(Polynomial({q(1), q(-1)}).pow(2),
                                        Polynomial({q(1), q(-3), q(1)})));
}

TEST_CASE("zeta normalization and log-derivative recovery") {
    for (auto& [name, map] : corpus::hyperbolic_corpus()) {
        CAPTURE(name);
        auto sum = exponential_sum_form(map);
        auto zeta = nielsen_zeta_from_sum(sum);
        CHECK(zeta.num.eval(q(0)) == 1);
        CHECK(zeta.den.eval(q(0)) == 1);
        const auto back = zeta.log_derivative_sequence(20);
        const auto truth = nielsen_sequence(map, 20);
        for (int k = 0; k < 20; ++k) CHECK(back[k] == Rational(truth[k]));
    }
}

TEST_CASE("table cells, index 1") {
    const RationalFunction lf =
        RationalFunction::make(Polynomial({q(1), q(-2)}), Polynomial({q(1), q(-1)}));
    // p odd, n even: 1/L_f
    CHECK(nielsen_zeta_from_table(lf, std::nullopt, 1, 0, 1) == lf.reciprocal());
    // p even, n even: L_f
    CHECK(nielsen_zeta_from_table(lf, std::nullopt, 2, 0, 1) == lf);
    // p even, n odd: 1/L_f(-z) = (1+z)/(1+2z)
    CHECK(nielsen_zeta_from_table(lf, std::nullopt, 0, 1, 1) ==
          RationalFunction::make(Polynomial({q(1), q(1)}), Polynomial({q(1), q(2)})));
    // p odd, n odd: L_f(-z)
    CHECK(nielsen_zeta_from_table(lf, std::nullopt, 1, 1, 1) == lf.substitute_neg());
}

TEST_CASE("table cells, index 2") {
    const RationalFunction lf =
        RationalFunction::make(Polynomial({q(1), q(-2)}), Polynomial({q(1), q(-1)}));
    const RationalFunction lfp =
        RationalFunction::make(Polynomial({q(1), q(-4)}), Polynomial({q(1), q(-1)}));
    CHECK(nielsen_zeta_from_table(lf, lfp, 0, 0, 2) == lfp * lf.reciprocal());
    CHECK(nielsen_zeta_from_table(lf, lfp, 1, 0, 2) == lf * lfp.reciprocal());
    CHECK(nielsen_zeta_from_table(lf, lfp, 0, 1, 2) ==
          lf.substitute_neg() * lfp.substitute_neg().reciprocal());
    CHECK(nielsen_zeta_from_table(lf, lfp, 1, 1, 2) ==
          lfp.substitute_neg() * lf.substitute_neg().reciprocal());
    CHECK_THROWS_AS(nielsen_zeta_from_table(lf, std::nullopt, 0, 0, 2), DomainError);
    CHECK_THROWS_AS(nielsen_zeta_from_table(lf, lfp, 0, 0, 1), DomainError);
}

TEST_CASE("route equivalence on nilmanifold inputs") {
    // trivial holonomy, Gamma = Gamma+: the parity table applied to the
    // cohomology-route Lefschetz zeta equals the averaging-route zeta.
    struct Case {
        MapData map;
        LieAlgebraData algebra;
    };
    std::vector<Case> cases{{corpus::circle_doubling(), LieAlgebraData::abelian(1)},
                            {corpus::degree_minus_two(), LieAlgebraData::abelian(1)},
                            {corpus::torus_diag23(), LieAlgebraData::abelian(2)},
                            {corpus::cat_map(), LieAlgebraData::abelian(2)},
                            {corpus::torus_diag235(), LieAlgebraData::abelian(3)},
                            {corpus::heisenberg_224(), *corpus::heisenberg_224().brackets}};
    for (auto& cs : cases) {
        const auto profile = classify(cs.map.linearPart);
        const auto lf = lefschetz_zeta(cohomology_action(cs.algebra, cs.map.linearPart));
        const auto via_table =
            nielsen_zeta_from_table(lf, std::nullopt, profile.p, profile.n, 1);
        const auto via_sum = nielsen_zeta_from_sum(exponential_sum_form(cs.map, profile));
        CHECK(via_table == via_sum);
    }
}

TEST_CASE("lambda1 meets the wedge interval across the corpus") {
    for (auto& [name, map] : corpus::hyperbolic_corpus()) {
        CAPTURE(name);
        const auto profile = classify(map.linearPart);
        auto sum = exponential_sum_form(map, profile);
        REQUIRE(profile.wedgeSpectralRadius.has_value());
        const auto mi = modulus_interval(sum.terms[0].base, pow2(-30));
        CHECK(mi.intersects(*profile.wedgeSpectralRadius));
        CHECK(sum.terms[0].coeff >= 1);
    }
}

TEST_CASE("reidemeister status") {
    auto ident = reidemeister_status(corpus::identity1());
    CHECK_FALSE(ident.finite);
    CHECK_FALSE(ident.value.has_value());

    auto doubling = reidemeister_status(corpus::circle_doubling());
    CHECK(doubling.finite);
    CHECK(doubling.valueEqualsNielsen);
    CHECK(*doubling.value == 1);

    auto nil = reidemeister_status(corpus::nilpotent_dim(3, true));
    CHECK(nil.finite);
    CHECK(*nil.value == 1);
}

TEST_CASE("semiconjugacy diagnostic") {
    CHECK(semiconjugacy_warnings(corpus::klein_diag23()).empty());
    // D = [[0,1],[1,0]] swaps the axes; with F = {I, diag(1,-1)} there is
    // no A' with D A = A' D.
    MapData odd = corpus::make_map(corpus::matrix(2, {0, 1, 1, 0}),
                                   {corpus::matrix(2, {1, 0, 0, -1})});
    CHECK_FALSE(semiconjugacy_warnings(odd).empty());
}

TEST_CASE("closed-form sequence checks for the diagonal families") {
    const auto klein = nielsen_sequence(corpus::klein_diag23(), 12);
    const auto torus = nielsen_sequence(corpus::torus_diag23(), 12);
    const auto flip = nielsen_sequence(corpus::flip_diag23(), 12);
    for (long k = 1; k <= 12; ++k) {
        CHECK(klein[k - 1] == ipow(6, k) - ipow(3, k));
        CHECK(torus[k - 1] == (ipow(2, k) - 1) * (ipow(3, k) - 1));
        CHECK(flip[k - 1] == ipow(6, k) + 1);
    }
}
