#pragma once

// Coefficientwise verification of the generating-function identities: the
// exponential generating function of each E-table row, the closed form
// exp(1 - sqrt(1-2x)) / sqrt(1-2x) for the sigma = 1 sequence, and the
// second-order differential equation that closed form satisfies. All
// comparisons are exact; a mismatch is report data, not an error.

#include <optional>
#include <string>

#include "giftcount/etable.hpp"
#include "giftcount/guards.hpp"
#include "giftcount/power_series.hpp"
#include "giftcount/rational.hpp"
#include "giftcount/sequences.hpp"

namespace giftcount {

struct EgfMismatch {
    long index = 0;
    Rational expected;
    Rational got;
};

struct EgfCheckReport {
    std::string identity;
    long orders_checked = 0;
    std::optional<EgfMismatch> first_mismatch;
    bool ok() const { return !first_mismatch.has_value(); }
};

// Expands (y + y^2/2! + ... + y^(sigma+1)/(sigma+1)!)^n / n! and compares
// k! times the coefficient of y^k against the E-table row.
inline EgfCheckReport check_egf_e(unsigned sigma, unsigned n, long N,
                                  const GuardLimits& guards = GuardLimits::from_env()) {
    EgfCheckReport report{"egf-e-row(sigma=" + std::to_string(sigma) +
                              ",n=" + std::to_string(n) + ")",
                          0, std::nullopt};
    const Polynomial base = block_polynomial(sigma);
    PowerSeries series = PowerSeries::one(N);
    {
        PowerSeries b(N);
        for (int j = 0; j <= base.degree() && j <= N; ++j) b.at(j) = base.coeff(j);
        for (unsigned i = 0; i < n; ++i) series = series * b;
    }
    Rational nfact(factorial(n));
    ETable table(sigma, n, guards);
    const long kmax = std::min<long>(N, static_cast<long>((sigma + 1) * n));
    report.orders_checked = kmax;
    for (long k = 0; k <= kmax; ++k) {
        Rational got = Rational(factorial(static_cast<unsigned>(k))) * series.coeff(k) / nfact;
        Rational expected(table.at(n, k));
        if (got != expected) {
            report.first_mismatch = EgfMismatch{k, expected, got};
            break;
        }
    }
    return report;
}

// Builds exp(1 - sqrt(1-2x)) / sqrt(1-2x) from series primitives and
// compares n! times the coefficient of x^n with the row-sum sequence.
inline EgfCheckReport check_egf_g1_closed_form(long N,
                                               const GuardLimits& guards = GuardLimits::from_env()) {
    if (N < 2) throw precondition_error("check_egf_g1_closed_form: N must be >= 2");
    EgfCheckReport report{"egf-g1-closed-form", N, std::nullopt};
    PowerSeries one_minus_2x(N);
    one_minus_2x.at(0) = 1;
    one_minus_2x.at(1) = -2;
    PowerSeries root = series_sqrt(one_minus_2x);
    PowerSeries exponent = PowerSeries::one(N) - root;  // constant term 0
    PowerSeries closed = series_exp(exponent) * series_reciprocal(root);
    SequenceRun g1 = g_by_sum(1, N, guards);
    Rational nfact(1);
    for (long n = 0; n <= N; ++n) {
        if (n > 0) nfact *= Rational(Int(n));
        Rational got = nfact * closed.coeff(n);
        Rational expected(g1.values[n]);
        if (got != expected) {
            report.first_mismatch = EgfMismatch{n, expected, got};
            break;
        }
    }
    return report;
}

// Forms the exponential generating function of the sigma = 1 sequence and
// checks f'' = 3 f' + 2x f'' + f coefficientwise to order N-2.
inline EgfCheckReport check_g1_ode(long N,
                                   const GuardLimits& guards = GuardLimits::from_env()) {
    if (N < 3) throw precondition_error("check_g1_ode: N must be >= 3");
    EgfCheckReport report{"g1-ode", N - 2, std::nullopt};
    SequenceRun g1 = g_by_sum(1, N, guards);
    PowerSeries f(N);
    Rational nfact(1);
    for (long n = 0; n <= N; ++n) {
        if (n > 0) nfact *= Rational(Int(n));
        f.at(n) = Rational(g1.values[n]) / nfact;
    }
    PowerSeries f1 = f.derivative();
    PowerSeries f2 = f1.derivative();
    PowerSeries rhs = Rational(3) * f1 + Rational(2) * (PowerSeries::x(N) * f2) + f;
    for (long m = 0; m <= N - 2; ++m) {
        if (f2.coeff(m) != rhs.coeff(m)) {
            report.first_mismatch = EgfMismatch{m, rhs.coeff(m), f2.coeff(m)};
            break;
        }
    }
    return report;
}

} // namespace giftcount
