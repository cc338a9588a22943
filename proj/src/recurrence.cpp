#include "infranil/recurrence.hpp"

#include <algorithm>

namespace infranil {

namespace {

// Minimal LFSR over Q: returns the connection polynomial coefficients
// C(x) = 1 + C[1] x + ... + C[L] x^L with s[n] + sum C[i] s[n-i] = 0.
std::pair<int, std::vector<Rational>> berlekamp_massey(const std::vector<Rational>& s) {
    const int n = static_cast<int>(s.size());
    std::vector<Rational> C{Rational(1)}, B{Rational(1)};
    int L = 0, m = 1;
    Rational b(1);
    for (int i = 0; i < n; ++i) {
        Rational d = s[i];
        for (int j = 1; j <= L; ++j)
            if (j < static_cast<int>(C.size())) d += C[j] * s[i - j];
        if (d == 0) {
            ++m;
        } else if (2 * L <= i) {
            std::vector<Rational> T = C;
            const Rational coef = d / b;
            if (C.size() < B.size() + m) C.resize(B.size() + m, Rational(0));
            for (std::size_t j = 0; j < B.size(); ++j) C[j + m] -= coef * B[j];
            L = i + 1 - L;
            B = std::move(T);
            b = d;
            m = 1;
        } else {
            const Rational coef = d / b;
            if (C.size() < B.size() + m) C.resize(B.size() + m, Rational(0));
            for (std::size_t j = 0; j < B.size(); ++j) C[j + m] -= coef * B[j];
            ++m;
        }
    }
    C.resize(L + 1, Rational(0));
    return {L, C};
}

bool recurrence_holds_at(const std::vector<Rational>& seq, const std::vector<Rational>& conn,
                         std::size_t n) {
    Rational acc(0);
    for (std::size_t i = 0; i < conn.size(); ++i) acc += conn[i] * seq[n - 1 - i];
    return acc == seq[n];
}

}  // namespace

RecurrenceFit find_recurrence(const std::vector<Rational>& seq) {
    if (seq.empty()) throw DomainError("EmptySequence", "find_recurrence needs a nonempty sequence");
    const std::size_t holdout = seq.size() > 8 ? 8 : 0;
    const std::size_t train = seq.size() - holdout;

    std::vector<Rational> prefix(seq.begin(), seq.begin() + train);
    auto [L, C] = berlekamp_massey(prefix);

    RecurrenceFit fit;
    fit.order = L;
    fit.trainingLength = static_cast<int>(train);
    fit.connection.resize(L);
    for (int i = 1; i <= L; ++i) fit.connection[i - 1] = -C[i];
    // Characteristic polynomial z^L - c_1 z^(L-1) - ... - c_L.
    std::vector<Rational> coeffs(L + 1, Rational(0));
    coeffs[L] = 1;
    for (int i = 1; i <= L; ++i) coeffs[L - i] = -fit.connection[i - 1];
    fit.recurrencePolynomial = Polynomial(std::move(coeffs));

    if (holdout > 0) {
        for (std::size_t nidx = std::max<std::size_t>(train, L); nidx < seq.size(); ++nidx) {
            if (static_cast<int>(nidx) < L) continue;
            if (!recurrence_holds_at(seq, fit.connection, nidx))
                throw CertificationError(
                    "ValidationFailed",
                    "held-out terms break the fitted recurrence (term index " +
                        std::to_string(nidx) + "); sequence is not a finite exponential sum "
                        "at this length");
        }
        fit.validated = true;
    }
    return fit;
}

std::vector<Rational> extend_sequence(const RecurrenceFit& fit, std::vector<Rational> seq,
                                      std::size_t target_len) {
    if (static_cast<int>(seq.size()) < fit.order)
        throw DomainError("InsufficientSequence", "sequence shorter than recurrence order");
    while (seq.size() < target_len) {
        Rational next(0);
        for (int i = 0; i < fit.order; ++i) next += fit.connection[i] * seq[seq.size() - 1 - i];
        if (fit.order == 0) next = 0;
        seq.push_back(std::move(next));
    }
    return seq;
}

long recurrence_term_budget(int dim) {
    if (dim < 1) throw DomainError("BadDimension", "dimension must be >= 1");
    if (dim > 24) throw DomainError("BadDimension", "dimension too large for the term budget");
    return 2 * ((1L << dim) + 2) + 8;
}

}  // namespace infranil
