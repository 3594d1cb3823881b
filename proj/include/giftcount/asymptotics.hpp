#pragma once

// Asymptotic leading term r(n) = e * ((sigma+1)n)! / (n! ((sigma+1)!)^n) and
// the refined four-term expansion for sigma = 2. Everything stays an exact
// rational until the final division by e, which is itself replaced by a
// rational approximation with a known tail bound.

#include <string>

#include "giftcount/decimal.hpp"
#include "giftcount/errors.hpp"
#include "giftcount/integers.hpp"
#include "giftcount/rational.hpp"
#include "giftcount/sequences.hpp"

namespace giftcount {

// Truncated Taylor value of e. Once J! exceeds 2*10^digits the remaining
// tail is below 2/(J+1)!, so |e - result| < 10^-digits.
inline Rational rational_e(int digits) {
    const Int bound = 2 * pow10(digits);
    Rational sum(1);  // j = 0 term
    Int fact = 1;
    for (unsigned j = 1;; ++j) {
        fact *= j;
        sum += Rational(Int(1), fact);
        if (fact > bound) break;
    }
    return sum;
}

// G * n! * ((sigma+1)!)^n / ((sigma+1)n)!  -- the method-independent part of
// G_sigma(n) / r(n); dividing it by e gives the ratio itself.
inline Rational leading_ratio_times_e(unsigned sigma, unsigned n, const Natural& g) {
    Rational num = Rational(g) * Rational(factorial(n)) *
                   Rational(natural_pow(factorial(sigma + 1), n));
    return num / Rational(factorial((sigma + 1) * n));
}

// G_sigma(n) / r(n) as a decimal string.
inline std::string asymptotic_ratio(unsigned sigma, unsigned n, const SequenceRun& values,
                                    int significant = 40) {
    if (n >= values.values.size())
        throw precondition_error("asymptotic_ratio: n beyond the computed range");
    Rational q = leading_ratio_times_e(sigma, n, values.values[n]);
    Rational e = rational_e(significant + 15);
    return decimal_string(q / e, significant);
}

// 1 + 1/(3n) + 1/(54 n^2) - 8/(81 n^3), exact.
inline Rational sigma2_correction_factor(unsigned n) {
    if (n < 1) throw precondition_error("sigma2_correction_factor: n must be >= 1");
    Int m(n);
    return Rational(1) + Rational(Int(1), 3 * m) + Rational(Int(1), 54 * m * m) -
           Rational(Int(8), 81 * m * m * m);
}

// Four-term refined approximation of G_2(n): e (3n)!/(n! 6^n) times the
// correction factor, rendered as a decimal string.
inline std::string asymptotic_sigma2(unsigned n, int significant = 40) {
    Rational r = Rational(factorial(3 * n)) /
                 (Rational(factorial(n)) * Rational(natural_pow(Natural(6), n)));
    Rational e = rational_e(significant + 15);
    return decimal_string(e * r * sigma2_correction_factor(n), significant);
}

} // namespace giftcount
