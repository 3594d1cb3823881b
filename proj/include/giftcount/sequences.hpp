#pragma once

// The normalized playout counts G_sigma(n), computed by independent exact
// methods: row sums of the E-table, the direct multinomial sum, and the
// moment form of the integral representation (polynomial expansion with
// y^k replaced by k!). Also Bessel polynomial evaluation, which gives the
// sigma = 1 sequence at z = 1.

#include <string>
#include <vector>

#include "giftcount/errors.hpp"
#include "giftcount/etable.hpp"
#include "giftcount/guards.hpp"
#include "giftcount/integers.hpp"
#include "giftcount/polynomial.hpp"
#include "giftcount/rational.hpp"
#include "giftcount/recurrence.hpp"

namespace giftcount {

struct SequenceRun {
    unsigned sigma = 0;
    std::vector<Natural> values;  // index n
    std::string method;
};

// G_sigma(n) = sum of E_sigma(n, k) over the supported k range.
inline SequenceRun g_by_sum(unsigned sigma, long long nmax,
                            const GuardLimits& guards = GuardLimits::from_env()) {
    if (nmax < 0) throw precondition_error("g_by_sum: nmax must be >= 0");
    ETable t(sigma, static_cast<unsigned>(nmax), guards);
    SequenceRun run{sigma, {}, "sum"};
    run.values.reserve(nmax + 1);
    for (long long n = 0; n <= nmax; ++n)
        run.values.push_back(t.row_sum(static_cast<unsigned>(n)));
    return run;
}

// Direct multinomial sum over (i_1..i_n) in [1, sigma+1]^n, divided by n!.
// Exponential in n, so guarded.
inline Natural g_multinomial(unsigned sigma, long long n,
                             const GuardLimits& guards = GuardLimits::from_env()) {
    if (n < 0) throw precondition_error("g_multinomial: n must be >= 0");
    if (n > guards.max_multinomial_n)
        throw guard_error("g_multinomial: n = " + std::to_string(n) +
                          " exceeds guard max_multinomial_n = " +
                          std::to_string(guards.max_multinomial_n) +
                          " (set GIFTCOUNT_GUARD_MAX to raise)");
    if (n == 0) return Natural(1);
    std::vector<unsigned> part(n, 1);
    Natural total;
    for (;;) {
        unsigned long long weight = 0;
        for (unsigned v : part) weight += v;
        Natural term = factorial(static_cast<unsigned>(weight));
        for (unsigned v : part) term = divide_exact(term, factorial(v));
        total += term;
        // odometer over [1, sigma+1]^n
        long long pos = n - 1;
        while (pos >= 0 && part[pos] == sigma + 1) part[pos--] = 1;
        if (pos < 0) break;
        ++part[pos];
    }
    return divide_exact(total, factorial(static_cast<unsigned>(n)));
}

// Expansion of the block generating polynomial y + y^2/2! + ... +
// y^(sigma+1)/(sigma+1)! raised to the n-th power; exposed because the
// generating-function checks compare against the same coefficients.
inline Polynomial block_polynomial(unsigned sigma) {
    std::vector<Rational> c(sigma + 2);
    for (unsigned j = 1; j <= sigma + 1; ++j)
        c[j] = Rational(Int(1), factorial(j).value());
    return Polynomial(std::move(c));
}

// Moment method: expand the n-th power exactly, replace y^k by k!, divide
// by n!. The division must be exact.
inline SequenceRun g_moments_run(unsigned sigma, long long nmax) {
    if (nmax < 0) throw precondition_error("g_moments: nmax must be >= 0");
    const Polynomial base = block_polynomial(sigma);
    SequenceRun run{sigma, {Natural(1)}, "moments"};
    Polynomial power = Polynomial::constant(Rational(1));
    Rational nfact(1);
    for (long long n = 1; n <= nmax; ++n) {
        power = power * base;
        nfact *= Rational(Int(n));
        Rational acc;
        for (int k = 0; k <= power.degree(); ++k)
            acc += power.coeff(k) * Rational(factorial(static_cast<unsigned>(k)));
        Rational value = acc / nfact;
        if (!value.is_integer() || value.is_negative())
            throw inconsistency_error("g_moments: non-integral value at n = " +
                                      std::to_string(n));
        run.values.push_back(value.to_natural());
    }
    return run;
}

inline Natural g_moments(unsigned sigma, long long n) {
    if (sigma < 1) throw precondition_error("g_moments: sigma must be >= 1");
    return g_moments_run(sigma, n).values.back();
}

// Runs a built-in (or guessed) recurrence with initial values generated by
// the row-sum method, never transcribed from elsewhere.
inline SequenceRun g_by_recurrence(const RecurrenceSpec& spec, unsigned sigma,
                                   long long nmax,
                                   const GuardLimits& guards = GuardLimits::from_env()) {
    const long long need = std::max<long long>(spec.valid_from,
                                               static_cast<long long>(spec.order()));
    SequenceRun initial = g_by_sum(sigma, std::min(nmax, need - 1), guards);
    if (nmax < need) return SequenceRun{sigma, std::move(initial.values), spec.name};
    return SequenceRun{sigma, run_recurrence(spec, std::move(initial.values), nmax),
                       spec.name};
}

// Bessel polynomial y_n(z) = sum_{i=0..n} (n+i)! z^i / ((n-i)! i! 2^i).
inline Rational bessel_y(unsigned n, const Rational& z) {
    Rational sum;
    Rational term(1);  // i = 0
    for (unsigned i = 0;; ++i) {
        sum += term;
        if (i == n) break;
        // (n+i+1)! / (n-i-1)! = (n+i)!/(n-i)! * (n+i+1)(n-i)
        term = term * Rational(Int(n + i + 1) * Int(n - i)) * z /
               Rational(Int(2) * Int(i + 1));
    }
    return sum;
}

} // namespace giftcount
