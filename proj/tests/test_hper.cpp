#include <doctest.h>

#include "corpus.hpp"
#include "infranil/hper.hpp"

using namespace infranil;
using corpus::q;

TEST_CASE("ablss inequality") {
    const auto seq = nielsen_sequence(corpus::circle_doubling(), 10);
    CHECK(ablss_certify(seq, 1));  // empty prime sum
    CHECK(ablss_certify(seq, 2));  // 3 > 1
    CHECK(ablss_certify(seq, 6));  // 63 > 7 + 3

    const std::vector<Int> flat(10, Int(1));
    CHECK(ablss_certify(flat, 1));
    CHECK_FALSE(ablss_certify(flat, 2));  // 1 > 1 fails strictness

    CHECK_THROWS_AS(ablss_certify(flat, 11), DomainError);
    CHECK_THROWS_AS(ablss_certify(flat, 0), DomainError);
}

TEST_CASE("golden trace: circle doubling") {
    const auto map = corpus::circle_doubling();
    const auto profile = classify(map.linearPart);
    const auto sum = exponential_sum_form(map, profile);
    const auto tr = hper_bound(map, sum, profile);
    CHECK(tr.lambda1Lower == q(2));
    CHECK(tr.mu == q(3, 2));
    CHECK(tr.epsilon == q(1, 7));
    CHECK(tr.k0 == 4);
    CHECK(tr.l0 == 4);
    CHECK(tr.tauLower == q(15, 7));
    CHECK(tr.nu == q(3, 2));
    CHECK(tr.k0prime == 1);
    CHECK(tr.m0 == 9);
}

TEST_CASE("golden trace: klein 6^k - 3^k") {
    const auto map = corpus::klein_diag23();
    const auto profile = classify(map.linearPart);
    const auto sum = exponential_sum_form(map, profile);
    const auto tr = hper_bound(map, sum, profile);
    CHECK(tr.lambda1Lower == q(6));
    CHECK(tr.mu == q(7, 2));
    CHECK(tr.epsilon == q(5, 19));
    CHECK(tr.k0 == 3);
    CHECK(tr.l0 == 3);
    CHECK(tr.tauLower == q(7));
    CHECK(tr.nu == q(7, 2));
    CHECK(tr.k0prime == 1);
    CHECK(tr.m0 == 7);
}

TEST_CASE("trace invariants across the corpus") {
    for (auto& [name, map] : corpus::hyperbolic_corpus()) {
        CAPTURE(name);
        const auto profile = classify(map.linearPart);
        if (profile.isNilpotent) continue;
        const auto sum = exponential_sum_form(map, profile);
        const auto tr = hper_bound(map, sum, profile);
        CHECK(tr.lambda1Lower > 1);
        CHECK(tr.mu > 1);
        CHECK(tr.mu < tr.lambda1Lower);
        CHECK(tr.epsilon > 0);
        CHECK(tr.epsilon < 1);
        CHECK(tr.epsilon == (tr.lambda1Lower - tr.mu) / (tr.lambda1Lower + tr.mu));
        CHECK(tr.l0 >= tr.k0);
        CHECK(tr.nu > 1);
        CHECK(tr.nu <= tr.mu);
        CHECK(tr.nu <= (Rational(1) + tr.tauLower) / 2);
        CHECK(tr.m0 >= 2 * tr.l0 + 1);
        // nu^(2^(k0'-1)) > k0'
        Rational p = tr.nu;
        for (long i = 1; i < tr.k0prime; ++i) p *= p;
        CHECK(p > Rational(tr.k0prime));

        // l0 is the first strict running maximum at or after k0
        const auto seq = nielsen_sequence(map, tr.l0 + 1);
        Int before = 0;
        for (long j = 0; j < tr.l0 - 1; ++j) before = std::max(before, seq[j]);
        CHECK(seq[tr.l0 - 1] > before);
    }
}

TEST_CASE("growth lemma instances") {
    for (auto& [name, map] : corpus::hyperbolic_corpus()) {
        CAPTURE(name);
        const auto profile = classify(map.linearPart);
        if (profile.isNilpotent) continue;
        const auto sum = exponential_sum_form(map, profile);
        const auto tr = hper_bound(map, sum, profile);
        const auto seq = nielsen_sequence(map, std::max(tr.k0 + 20, tr.l0 + 20));

        // N(f^(k+n)) > mu^n N(f^k) for k in [k0, k0+10], n in [1, 10]
        for (long k = tr.k0; k <= tr.k0 + 10; ++k) {
            Rational mu_pow(1);
            for (long n = 1; n <= 10; ++n) {
                mu_pow *= tr.mu;
                CHECK(Rational(seq[k + n - 1]) > mu_pow * Rational(seq[k - 1]));
            }
        }
        // N(f^l) > nu^(l-k) N(f^k) for all k < l <= l0 + 20 (guaranteed
        // from l0 on; checked across the whole range on this corpus)
        for (long l = 2; l <= tr.l0 + 20; ++l) {
            Rational nu_pow(1);
            for (long k = l - 1; k >= 1; --k) {
                nu_pow *= tr.nu;
                CHECK(Rational(seq[l - 1]) > nu_pow * Rational(seq[k - 1]));
            }
        }
        // monotone from l0 on
        for (long k = tr.l0 + 1; k <= tr.l0 + 20; ++k) CHECK(seq[k - 1] > seq[k - 2]);
    }
}

TEST_CASE("bound soundness: ablss holds on [m0, m0+30]") {
    for (auto& [name, map] : corpus::hyperbolic_corpus()) {
        CAPTURE(name);
        const auto profile = classify(map.linearPart);
        if (profile.isNilpotent) continue;
        const auto sum = exponential_sum_form(map, profile);
        const auto tr = hper_bound(map, sum, profile);
        REQUIRE(tr.m0 <= 1000);  // desk scale for every curated example
        const long m0 = static_cast<long>(tr.m0);
        const auto seq = nielsen_sequence(map, m0 + 30);
        for (long k = m0; k <= m0 + 30; ++k) CHECK(ablss_certify(seq, k));
    }
}

TEST_CASE("nilpotent shortcut") {
    for (int dim = 2; dim <= 4; ++dim) {
        for (bool hol : {false, true}) {
            const auto map = corpus::nilpotent_dim(dim, hol);
            const auto rep = nilpotent_shortcut(map, 50);
            CHECK(rep.mode == HPerMode::NilpotentHyperbolic);
            CHECK(rep.nilpotentConclusion);
            CHECK(rep.certifiedPeriods == std::set<long>{1});
            CHECK_FALSE(rep.cofiniteFrom.has_value());
            const auto seq = nielsen_sequence(map, 50);
            for (const auto& v : seq) CHECK(v == 1);
        }
    }
    CHECK_THROWS_AS(nilpotent_shortcut(corpus::circle_doubling(), 10), DomainError);
}

TEST_CASE("hper bound rejects nilpotent input") {
    const auto map = corpus::nilpotent_dim(3, false);
    const auto profile = classify(map.linearPart);
    ExponentialSum dummy;
    CHECK_THROWS_AS(hper_bound(map, dummy, profile), DomainError);
}

TEST_CASE("full report: circle doubling certifies everything up to 40") {
    const auto rep = hper_report(corpus::circle_doubling(), 40);
    CHECK(rep.mode == HPerMode::NonNilpotentHyperbolic);
    REQUIRE(rep.cofiniteFrom.has_value());
    CHECK(*rep.cofiniteFrom == 9);
    CHECK(rep.certifiedPeriods.size() == 40);
    for (long k = 1; k <= 40; ++k) CHECK(rep.certifiedPeriods.count(k) == 1);
    REQUIRE(rep.trace.has_value());
    CHECK(rep.trace->m0 == 9);
}

TEST_CASE("full report: klein example certifies everything up to 30") {
    const auto rep = hper_report(corpus::klein_diag23(), 30);
    CHECK(rep.certifiedPeriods.size() == 30);
    REQUIRE(rep.cofiniteFrom.has_value());
    CHECK(*rep.cofiniteFrom == 7);
}

TEST_CASE("full report: nilpotent input") {
    const auto rep = hper_report(corpus::nilpotent_dim(3, true), 10);
    CHECK(rep.mode == HPerMode::NilpotentHyperbolic);
    CHECK(rep.nilpotentConclusion);
    CHECK(rep.certifiedPeriods == std::set<long>{1});
}

TEST_CASE("full report rejects non-hyperbolic maps") {
    CHECK_THROWS_AS(hper_report(corpus::rotation90(), 10), DomainError);
    CHECK_THROWS_AS(hper_report(corpus::identity1(), 10), DomainError);
    CHECK_THROWS_AS(hper_report(corpus::sixth_root_companion(), 10), DomainError);
}

TEST_CASE("report consistency invariant holds on every corpus run") {
    for (auto& [name, map] : corpus::hyperbolic_corpus()) {
        CAPTURE(name);
        const auto rep = hper_report(map, 40);
        if (rep.cofiniteFrom) {
            for (long k = 1; k <= rep.maxK; ++k)
                if (Int(k) >= *rep.cofiniteFrom) CHECK(rep.certifiedPeriods.count(k) == 1);
        }
    }
}
