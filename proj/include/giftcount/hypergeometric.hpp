#pragma once

// Exact evaluation of terminating hypergeometric series. A series terminates
// when some upper parameter is a nonpositive integer; the sum then runs until
// the corresponding Pochhammer factor vanishes, and every term is an exact
// rational.

#include <optional>
#include <vector>

#include "giftcount/errors.hpp"
#include "giftcount/rational.hpp"

namespace giftcount {

struct HypSpec {
    std::vector<Rational> upper;
    std::vector<Rational> lower;
    Rational argument;
};

inline Rational hyp_terminating(const HypSpec& spec) {
    // Termination index: smallest -a over nonpositive-integer upper params.
    std::optional<Int> stop;
    for (const Rational& a : spec.upper) {
        if (a.is_integer() && a.numerator() <= 0) {
            Int m = -a.numerator();
            if (!stop || m < *stop) stop = m;
        }
    }
    if (!stop)
        throw precondition_error("hyp_terminating: no nonpositive-integer upper parameter");
    for (const Rational& b : spec.lower) {
        if (b.is_integer() && b.numerator() <= 0 && -b.numerator() < *stop)
            throw precondition_error(
                "hyp_terminating: lower parameter vanishes before termination");
    }

    const long last = stop->convert_to<long>();
    Rational sum;
    Rational term = 1;
    for (long m = 0; m <= last; ++m) {
        sum += term;
        if (m == last) break;
        Rational num = spec.argument;
        for (const Rational& a : spec.upper) num *= a + Rational(m);
        Rational den = Rational(m + 1);
        for (const Rational& b : spec.lower) den *= b + Rational(m);
        term = term * num / den;
    }
    return sum;
}

} // namespace giftcount
