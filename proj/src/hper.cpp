#include "infranil/hper.hpp"

#include <algorithm>

namespace infranil {

namespace {

std::vector<long> distinct_prime_divisors(long k) {
    std::vector<long> primes;
    long m = k;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            primes.push_back(p);
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) primes.push_back(m);
    return primes;
}

Rational dyadic_floor(const Rational& x, unsigned bits) {
    return Rational(floor_int(x * pow2(bits))) * pow2(-static_cast<long>(bits));
}

// Certified check nu^e > threshold for nu > 1: exact for small e, lower
// bounds by round-down squaring otherwise.
bool pow_exceeds(const Rational& nu, const Int& e, const Rational& threshold) {
    if (e <= 64) {
        Rational p(1);
        for (Int i = 0; i < e; ++i) p *= nu;
        return p > threshold;
    }
    // e = 2^t here (the only callers use power-of-two exponents).
    Int r = e;
    int t = 0;
    while (r > 1) {
        r >>= 1;
        ++t;
    }
    Rational low = dyadic_floor(nu, 192);
    for (int i = 0; i < t; ++i) {
        low = dyadic_floor(low * low, 192);
        if (low > threshold) return true;  // lower bound already clears it
        if (low <= 1) return false;        // rounding collapsed the gap
    }
    return low > threshold;
}

}  // namespace

bool ablss_certify(const std::vector<Int>& seq, long k) {
    if (k < 1) throw DomainError("BadIterate", "period must be >= 1");
    if (static_cast<long>(seq.size()) < k)
        throw DomainError("InsufficientSequence",
                          "need N(f^1..k) to certify k = " + std::to_string(k));
    Int bound = 0;
    for (long p : distinct_prime_divisors(k)) bound += seq[k / p - 1];
    return seq[k - 1] > bound;
}

HPerBoundTrace hper_bound(const MapData& map, const ExponentialSum& sum,
                          const SpectralProfile& profile) {
    if (!profile.isHyperbolic)
        throw DomainError("NotHyperbolic", "the cofinite bound needs a hyperbolic linear part");
    if (profile.isNilpotent)
        throw DomainError("NilpotentInput", "nilpotent linear part: use the nilpotent shortcut");
    if (sum.terms.empty()) throw DomainError("EmptySum", "exponential sum has no terms");

    HPerBoundTrace trace;
    auto terms = sum.terms;  // refinable copies
    ExpTerm& lead = terms.front();

    // lambda_1 enters through a rational lower bound > 1 that also
    // strictly dominates every |lambda_i| upper bound.
    Rational eps = pow2(-32);
    std::vector<Rational> ratio_upper(terms.size(), Rational(0));
    for (int round = 0;; ++round) {
        const QInterval wedge = wedge_spectral_radius(map.linearPart, profile, eps);
        const QInterval lead_mi = modulus_interval(lead.base, eps);
        if (!lead_mi.intersects(wedge))
            throw CertificationError("LemmaViolation",
                                     "dominant base drifted away from the wedge spectral radius");
        trace.lambda1Lower = wedge.lo;
        bool ok = trace.lambda1Lower > 1;
        for (std::size_t i = 1; i < terms.size() && ok; ++i) {
            ratio_upper[i] = modulus_interval(terms[i].base, eps).hi / trace.lambda1Lower;
            ok = ratio_upper[i] < 1;
        }
        if (ok) break;
        if (round >= 64)
            throw CertificationError("LemmaViolation",
                                     "could not certify strict spectral domination");
        eps /= 4;
        for (auto& t : terms)
            if (!t.base.exact()) refine_enclosure(t.base, eps);
    }

    trace.mu = (Rational(1) + trace.lambda1Lower) / 2;
    trace.epsilon = (trace.lambda1Lower - trace.mu) / (trace.lambda1Lower + trace.mu);

    // k0: least k with |a_i/a_1| (|lambda_i| / lambda1Lower)^k < eps/m
    // for every i >= 2, via the certified upper bounds.
    const Rational target = trace.epsilon / Rational(sum.m);
    const Rational a1(lead.coeff);
    {
        std::vector<Rational> powers(terms.size(), Rational(1));
        for (long k = 1; k <= 100000; ++k) {
            bool all = true;
            for (std::size_t i = 1; i < terms.size(); ++i) {
                powers[i] *= ratio_upper[i];
                const Rational ai(terms[i].coeff < 0 ? -terms[i].coeff : terms[i].coeff);
                if (ai / a1 * powers[i] >= target) all = false;
            }
            if (all) {
                trace.k0 = k;
                break;
            }
        }
        if (trace.k0 == 0)
            throw CertificationError("LemmaViolation", "k0 scan exhausted its budget");
    }

    // l0: least l >= k0 whose Nielsen number strictly exceeds all earlier
    // ones.  The sequence is strictly increasing from k0 on, so this
    // terminates.
    std::vector<Int> seq = nielsen_sequence(map, trace.k0);
    Int prefix_max = 0;
    for (const Int& v : seq) prefix_max = std::max(prefix_max, v);
    for (long l = trace.k0;; ++l) {
        if (static_cast<long>(seq.size()) < l) {
            seq = nielsen_sequence(map, l);
        }
        Int before = 0;
        for (long j = 0; j < l - 1; ++j) before = std::max(before, seq[j]);
        if (seq[l - 1] > before) {
            trace.l0 = l;
            break;
        }
        if (l > trace.k0 + 100000)
            throw CertificationError("LemmaViolation", "l0 scan exhausted its budget");
    }

    // tauLower: certified rational lower bound of
    // min_{l < l0} (N(f^l0)/N(f^l))^(1/(l0-l)), to 2^-20; exact when the
    // exponent is 1.
    if (trace.l0 == 1) {
        // no earlier values; tau is vacuous, keep nu = mu
        trace.tauLower = trace.mu * 2 - 1;  // makes (1+tau)/2 = mu
    } else {
        bool first = true;
        for (long l = 1; l < trace.l0; ++l) {
            const long e = trace.l0 - l;
            const Rational ratio = Rational(seq[trace.l0 - 1]) / Rational(seq[l - 1]);
            Rational tl;
            if (e == 1) {
                tl = ratio;
            } else {
                Rational lo(1), hi = ratio;
                bool exact_hit = false;
                for (int it = 0; it < 20000; ++it) {
                    if (hi - lo <= pow2(-20) && lo > 1) break;
                    const Rational mid = (lo + hi) / 2;
                    Rational mp(1);
                    for (long j = 0; j < e; ++j) mp *= mid;
                    if (mp == ratio) {
                        tl = mid;
                        exact_hit = true;
                        break;
                    }
                    (mp < ratio ? lo : hi) = mid;
                }
                if (!exact_hit) tl = lo;
            }
            if (first || tl < trace.tauLower) {
                trace.tauLower = tl;
                first = false;
            }
        }
    }
    trace.nu = std::min(trace.mu, (Rational(1) + trace.tauLower) / 2);
    if (trace.nu <= 1)
        throw CertificationError("LemmaViolation", "growth rate nu did not exceed 1");

    // k0': least k with nu^(2^(k-1)) > k.
    for (long k = 1; k <= 200; ++k) {
        if (pow_exceeds(trace.nu, Int(1) << (k - 1), Rational(k))) {
            trace.k0prime = k;
            break;
        }
    }
    if (trace.k0prime == 0)
        throw CertificationError("LemmaViolation", "k0' scan exhausted its budget");

    trace.m0 = std::max(Int(Int(1) << trace.k0prime), Int(2 * trace.l0 + 1));
    return trace;
}

HPerReport nilpotent_shortcut(const MapData& map, long max_k) {
    const SpectralProfile profile = classify(map.linearPart);
    if (!profile.isNilpotent)
        throw DomainError("NotNilpotent", "nilpotent shortcut on a non-nilpotent linear part");
    if (max_k < 1) throw DomainError("BadIterate", "maxK must be >= 1");
    const auto seq = nielsen_sequence(map, max_k);
    for (long k = 1; k <= max_k; ++k)
        if (seq[k - 1] != 1)
            throw DomainError("NotRealizable",
                              "averaging formula gave N(f^" + std::to_string(k) + ") = " +
                                  to_string(seq[k - 1]) +
                                  " on a nilpotent linear part; a realizable map would give 1");
    HPerReport report;
    report.mode = HPerMode::NilpotentHyperbolic;
    report.maxK = max_k;
    report.certifiedPeriods = {1};
    report.nilpotentConclusion = true;
    return report;
}

HPerReport hper_report(const MapData& map, long max_k) {
    if (max_k < 1) throw DomainError("BadIterate", "maxK must be >= 1");
    const SpectralProfile profile = classify(map.linearPart);
    if (!profile.isHyperbolic)
        throw DomainError("NotHyperbolic",
                          "the linear part has an eigenvalue of modulus 1; homotopy minimal "
                          "period certification does not apply");
    if (profile.isNilpotent) return nilpotent_shortcut(map, max_k);

    const ExponentialSum sum = exponential_sum_form(map, profile);
    const HPerBoundTrace trace = hper_bound(map, sum, profile);
    const auto seq = nielsen_sequence(map, max_k);

    HPerReport report;
    report.mode = HPerMode::NonNilpotentHyperbolic;
    report.maxK = max_k;
    for (long k = 1; k <= max_k; ++k)
        if (ablss_certify(seq, k)) report.certifiedPeriods.insert(k);
    report.cofiniteFrom = trace.m0;
    report.trace = trace;

    // The bound must be consistent with direct certification.
    for (long k = 1; k <= max_k; ++k) {
        if (Int(k) >= trace.m0 && !report.certifiedPeriods.count(k))
            throw CertificationError("ReportInconsistency",
                                     "k = " + std::to_string(k) +
                                         " lies beyond the cofinite bound but failed the "
                                         "certification inequality");
    }
    return report;
}

}  // namespace infranil
