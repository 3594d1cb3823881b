#pragma once

// Polynomial-coefficient linear recurrences: the generic evaluation engine,
// relation checking, and the built-in Type C / Type D recurrences for the
// normalized playout counts G_sigma(n), sigma = 1..4. Type C recurrences have
// unit leading coefficient; Type D recurrences have a polynomial leading
// coefficient and order exactly sigma+1.

#include <optional>
#include <string>
#include <vector>

#include "giftcount/errors.hpp"
#include "giftcount/integers.hpp"
#include "giftcount/polynomial.hpp"
#include "giftcount/rational.hpp"

namespace giftcount {

struct RecurrenceSpec {
    std::string name;
    Polynomial lhs;               // multiplies a(n)
    std::vector<Polynomial> rhs;  // rhs[i-1] multiplies a(n-i)
    long long valid_from = 0;     // smallest n at which the relation is asserted

    std::size_t order() const { return rhs.size(); }

    int max_degree() const {
        int d = lhs.degree();
        for (const auto& p : rhs) d = std::max(d, p.degree());
        return d;
    }

    // Homogeneous form, e.g. "a(n) - (2*n - 1)*a(n-1) - a(n-2) = 0".
    std::string relation_string() const {
        auto term = [](const Polynomial& p, const std::string& a) -> std::string {
            if (p == Polynomial({Rational(1)})) return a;
            if (p.degree() == 0) return p.coeff(0).str() + "*" + a;
            return "(" + p.str() + ")*" + a;
        };
        std::string out = term(lhs, "a(n)");
        for (std::size_t i = 0; i < rhs.size(); ++i) {
            if (rhs[i].is_zero()) continue;
            const Polynomial& p = rhs[i];
            const std::string a = "a(n-" + std::to_string(i + 1) + ")";
            bool negate = p.degree() == 0 && p.coeff(0).is_negative();
            out += negate ? " + " + term(Rational(-1) * p, a) : " - " + term(p, a);
        }
        return out + " = 0";
    }
};

// Smallest m >= at_least such that p has no integer root >= m. Scans up to
// the Cauchy bound on the roots of p, beyond which p cannot vanish.
inline long long first_clear_of_integer_roots(const Polynomial& p, long long at_least) {
    if (p.is_zero()) throw precondition_error("root scan: zero polynomial");
    if (p.degree() == 0) return at_least;
    Rational bound(1);
    for (int j = 0; j < p.degree(); ++j) {
        Rational q = (p.coeff(j) / p.leading()).abs();
        if (q > bound) bound = q;
    }
    // Cauchy: all roots have |x| <= 1 + max |c_j / c_deg|.
    long long scan_to = 2 + (bound.numerator() / bound.denominator()).convert_to<long long>();
    long long clear = at_least;
    for (long long m = at_least; m <= scan_to; ++m)
        if (p(Int(m)).is_zero()) clear = m + 1;
    return clear;
}

inline void validate_spec(const RecurrenceSpec& spec) {
    if (spec.order() < 1) throw precondition_error(spec.name + ": order must be >= 1");
    if (spec.lhs.is_zero()) throw precondition_error(spec.name + ": zero lhs");
    if (first_clear_of_integer_roots(spec.lhs, spec.valid_from) != spec.valid_from)
        throw precondition_error(spec.name + ": lhs has an integer root >= valid_from");
}

// Extends `initial` up to index nmax using the recurrence, with exact
// rational division by the leading coefficient at every step. The quotient
// must come out a nonnegative integer; anything else means the spec and the
// initial values do not belong together.
inline std::vector<Natural> run_recurrence(const RecurrenceSpec& spec,
                                           std::vector<Natural> initial,
                                           long long nmax) {
    const long long need = std::max<long long>(spec.valid_from,
                                               static_cast<long long>(spec.order()));
    if (static_cast<long long>(initial.size()) < need)
        throw precondition_error(spec.name + ": need at least " +
                                 std::to_string(need) + " initial values");
    if (static_cast<long long>(initial.size()) > nmax + 1) {
        initial.resize(nmax + 1);
        return initial;
    }
    for (long long n = static_cast<long long>(initial.size()); n <= nmax; ++n) {
        Rational lead = spec.lhs(Int(n));
        if (lead.is_zero())
            throw singularity_error(spec.name + ": leading coefficient vanishes at n = " +
                                    std::to_string(n));
        Rational acc;
        for (std::size_t i = 1; i <= spec.order(); ++i) {
            const Natural& prev = initial[n - i];  // n >= valid_from >= order
            acc += spec.rhs[i - 1](Int(n)) * Rational(prev);
        }
        Rational value = acc / lead;
        if (!value.is_integer() || value.is_negative())
            throw inconsistency_error(spec.name + ": non-integral term at n = " +
                                      std::to_string(n) + " (spec/initials mismatch)");
        initial.push_back(value.to_natural());
    }
    return initial;
}

// First index n >= valid_from at which the relation
// lhs(n)*a(n) - sum_i rhs_i(n)*a(n-i) = 0 fails, or nullopt.
inline std::optional<long long> verify_spec_on_terms(const RecurrenceSpec& spec,
                                                     const std::vector<Natural>& terms) {
    if (terms.size() <= spec.order())
        throw precondition_error(spec.name + ": need more terms than the order");
    const long long start = std::max<long long>(spec.valid_from,
                                                static_cast<long long>(spec.order()));
    for (long long n = start; n < static_cast<long long>(terms.size()); ++n) {
        Rational acc = spec.lhs(Int(n)) * Rational(terms[n]);
        for (std::size_t i = 1; i <= spec.order(); ++i)
            acc -= spec.rhs[i - 1](Int(n)) * Rational(terms[n - i]);
        if (!acc.is_zero()) return n;
    }
    return std::nullopt;
}

namespace detail {

inline Polynomial poly(std::initializer_list<Rational> ascending) {
    return Polynomial(ascending);
}

inline Rational rat(long long num, long long den = 1) {
    return Rational(Int(num), Int(den));
}

} // namespace detail

// The eight built-in recurrences, coefficients transcribed term by term.
// Type D for sigma = 1 coincides with Type C. The printed source for the
// Type C sigma = 4 recurrence lists its last two terms both against
// a(n-11); the penultimate one actually belongs to a(n-10) (the degrees
// step down 4,4,4,4,4,4,4,3,2,1,0 across lags 1..11), and the recurrence
// only reproduces the sequence with that reading.
inline std::vector<RecurrenceSpec> builtin_recurrences() {
    using detail::poly;
    using detail::rat;
    std::vector<RecurrenceSpec> specs;

    const Polynomial one({rat(1)});

    // sigma = 1: a(n) = (2n-1) a(n-1) + a(n-2), n >= 2.
    RecurrenceSpec c1{"TypeC-sigma1", one,
                      {poly({rat(-1), rat(2)}), one},
                      2};
    specs.push_back(c1);

    // sigma = 2, order 4, unit leading coefficient, n >= 4.
    specs.push_back(RecurrenceSpec{
        "TypeC-sigma2", one,
        {poly({rat(-3, 2), rat(-9, 2), rat(9, 2)}),
         poly({rat(10), rat(-12), rat(9, 2)}),
         poly({rat(-25, 2), rat(6)}),
         poly({rat(5, 2)})},
        4});

    // sigma = 3, order 7, unit leading coefficient, n >= 7.
    specs.push_back(RecurrenceSpec{
        "TypeC-sigma3", one,
        {poly({rat(-49, 6), rat(10, 3), rat(-16), rat(32, 3)}),
         poly({rat(-650, 3), rat(1157, 3), rat(-236), rat(48)}),
         poly({rat(-511, 3), rat(641, 3), rat(-382, 3), rat(80, 3)}),
         poly({rat(-7915, 6), rat(2696, 3), rat(-218), rat(64, 3)}),
         poly({rat(6853, 6), rat(-490), rat(56)}),
         poly({rat(-1703, 6), rat(56)}),
         poly({rat(58, 3)})},
        7});

    // sigma = 4, order 11, unit leading coefficient, n >= 11.
    specs.push_back(RecurrenceSpec{
        "TypeC-sigma4", one,
        {poly({rat(-543, 24), rat(-300, 24), rat(625, 24), rat(-1250, 24), rat(625, 24)}),
         poly({rat(180003, 72), rat(-473075, 72), rat(447500, 72), rat(-184000, 72),
               rat(27500, 72)}),
         poly({rat(8048577, 864), rat(-12016800, 864), rat(7679675, 864),
               rat(-2546500, 864), rat(336875, 864)}),
         poly({rat(1325759504, 2592), rat(-1304291160, 2592), rat(476892700, 2592),
               rat(-77581625, 2592), rat(4833125, 2592)}),
         poly({rat(-5033477363, 7776), rat(3123850885, 7776), rat(-605973450, 7776),
               rat(28316750, 7776), rat(1700625, 7776)}),
         poly({rat(6818722190, 7776), rat(-3610058445, 7776), rat(704577200, 7776),
               rat(-64380500, 7776), rat(2670000, 7776)}),
         poly({rat(3561765885, 7776), rat(-2252744530, 7776), rat(517392050, 7776),
               rat(-51976000, 7776), rat(2002500, 7776)}),
         poly({rat(-4301927039, 7776), rat(1640828980, 7776), rat(-209915400, 7776),
               rat(9078000, 7776)}),
         poly({rat(390747263, 2592), rat(-91413680, 2592), rat(5393400, 2592)}),
         poly({rat(-14522219, 972), rat(1593990, 972)}),
         poly({rat(310343, 648)})},
        11});

    // Type D, sigma = 1: same relation as Type C.
    RecurrenceSpec d1 = c1;
    d1.name = "TypeD-sigma1";
    specs.push_back(d1);

    // Type D, sigma = 2, order 3: (n-2) a(n) = n(9n^2-27n+17)/2 a(n-1)
    // + (6n^2-15n+13/2) a(n-2) + (5n-5)/2 a(n-3), n >= 3.
    specs.push_back(RecurrenceSpec{
        "TypeD-sigma2", poly({rat(-2), rat(1)}),
        {poly({rat(0), rat(17, 2), rat(-27, 2), rat(9, 2)}),
         poly({rat(13, 2), rat(-15), rat(6)}),
         poly({rat(-5, 2), rat(5, 2)})},
        3});

    // Type D, sigma = 3, order 4, leading coefficient
    // 3(64n^3 - 360n^2 + 762n - 547).
    {
        RecurrenceSpec d3{
            "TypeD-sigma3",
            poly({rat(-1641), rat(2286), rat(-1080), rat(192)}),
            {poly({rat(2381), rat(-10888), rat(36972), rat(-58384), rat(42304),
                   rat(-14592), rat(2048)}),
             poly({rat(-5365), rat(54186), rat(-110788), rat(92200), rat(-35616),
                   rat(5376)}),
             poly({rat(10514), rat(-45620), rat(52616), rat(-27552), rat(5376)}),
             poly({rat(-2349), rat(6786), rat(-4872), rat(1856)})},
            0};
        d3.valid_from = first_clear_of_integer_roots(d3.lhs, 4);
        specs.push_back(d3);
    }

    // Type D, sigma = 4, order 5, leading coefficient 72*(degree-6 polynomial).
    {
        Polynomial lead = Rational(72) * poly({rat(1513065336), rat(-4329975510),
                                               rat(4945130775), rat(-3019737375),
                                               rat(1070031875), rat(-209150000),
                                               rat(16687500)});
        RecurrenceSpec d4{
            "TypeD-sigma4",
            lead,
            {poly({rat(-57348303408), rat(-700627863570), rat(5483042423925),
                   rat(-17235043672875), rat(30632133843750), rat(-33185759803125),
                   rat(22781118187500), rat(-10081802109375), rat(2821911328125),
                   rat(-454734375000), rat(31289062500)}),
             poly({rat(1197797898465), rat(2737777538500), rat(-33225357802500),
                   rat(84513872351000), rat(-107513140175625), rat(81505745228125),
                   rat(-39078979093750), rat(11724386562500), rat(-1990540625000),
                   rat(141843750000)}),
             poly({rat(-2609871946015), rat(-6693899844450), rat(47445915625400),
                   rat(-86115353337125), rat(80090937641250), rat(-45548278450000),
                   rat(16127100406250), rat(-3168622500000), rat(252815625000)}),
             poly({rat(802753105180), rat(4396729093865), rat(-17664322875275),
                   rat(23960112482875), rat(-16990061751250), rat(7757225837500),
                   rat(-1999129125000), rat(199248750000)}),
             poly({rat(-48634580313), rat(-573345040895), rat(1621184408800),
                   rat(-1734293884125), rat(957510585625), rat(-380170175000),
                   rat(58189312500)})},
            0};
        d4.valid_from = first_clear_of_integer_roots(d4.lhs, 5);
        specs.push_back(d4);
    }

    for (const auto& s : specs) validate_spec(s);
    return specs;
}

inline RecurrenceSpec builtin_recurrence(const std::string& name) {
    for (auto& s : builtin_recurrences())
        if (s.name == name) return s;
    throw precondition_error("no built-in recurrence named " + name);
}

} // namespace giftcount
