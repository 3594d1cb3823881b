#pragma once

// Decimal rendering of exact rationals, round-half-up at the last kept digit.
// Used only at the output boundary; all comparisons elsewhere stay rational.

#include <string>

#include "giftcount/errors.hpp"
#include "giftcount/integers.hpp"
#include "giftcount/rational.hpp"

namespace giftcount {

inline Int pow10(long e) {
    Int r = 1;
    for (long j = 0; j < e; ++j) r *= 10;
    return r;
}

namespace detail {

// floor(log10(p/r)) for p, r > 0.
inline long floor_log10(const Int& p, const Int& r) {
    long guess = static_cast<long>(p.str().size()) - static_cast<long>(r.str().size());
    auto at_least = [&](long e) {  // p/r >= 10^e ?
        return e >= 0 ? p >= r * pow10(e) : p * pow10(-e) >= r;
    };
    while (!at_least(guess)) --guess;
    while (at_least(guess + 1)) ++guess;
    return guess;
}

} // namespace detail

inline std::string decimal_string(const Rational& q, int significant) {
    if (significant < 1) throw precondition_error("decimal_string: need >= 1 digit");
    if (q.is_zero()) return "0";
    const bool neg = q.is_negative();
    const Int p = neg ? -q.numerator() : q.numerator();
    const Int r = q.denominator();

    long exp10 = detail::floor_log10(p, r);
    // Round p/r to `significant` digits: d = round(p/r * 10^k), k = sig-1-exp10.
    auto rounded = [&](long e10) -> Int {
        long k = significant - 1 - e10;
        Int num = p, den = r;
        if (k >= 0) num *= pow10(k); else den *= pow10(-k);
        return (2 * num + den) / (2 * den);  // half-up
    };
    Int d = rounded(exp10);
    std::string digits = d.str();
    if (static_cast<long>(digits.size()) > significant) {  // rounding carried over
        ++exp10;
        d = rounded(exp10);
        digits = d.str();
    }

    std::string out;
    if (exp10 >= 0 && exp10 < significant && exp10 <= 40) {
        out = digits.substr(0, exp10 + 1);
        if (exp10 + 1 < significant) out += "." + digits.substr(exp10 + 1);
    } else if (exp10 < 0 && exp10 >= -6) {
        out = "0." + std::string(-exp10 - 1, '0') + digits;
    } else {
        out = digits.substr(0, 1);
        if (digits.size() > 1) out += "." + digits.substr(1);
        out += "e" + std::string(exp10 >= 0 ? "+" : "") + std::to_string(exp10);
    }
    return neg ? "-" + out : out;
}

} // namespace giftcount
