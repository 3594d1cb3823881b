#pragma once

// Rediscovers polynomial-coefficient linear recurrences from raw sequence
// terms by exact linear algebra. Candidate (order, degree) cells are searched
// lexicographically, low order first; a candidate must annihilate the fitted
// window and a held-out guard suffix before it is returned. Returned specs
// are normalized to integer coefficient polynomials with content 1 and a
// positive leading coefficient on the left side.

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "giftcount/errors.hpp"
#include "giftcount/integers.hpp"
#include "giftcount/linalg.hpp"
#include "giftcount/polynomial.hpp"
#include "giftcount/rational.hpp"
#include "giftcount/recurrence.hpp"

namespace giftcount {

struct GuessQuery {
    std::vector<Natural> terms;
    unsigned max_order = 3;
    unsigned max_degree = 3;
    unsigned guard_terms = 10;  // verified but never fitted
};

namespace detail {

// Scale a rational solution vector to integer polynomials, divide out the
// content, and make the left-side leading coefficient positive.
inline std::optional<RecurrenceSpec> spec_from_solution(
    const std::vector<Rational>& x, unsigned order, unsigned degree) {
    Int lcm_den = 1;
    for (const Rational& v : x)
        lcm_den = boost::multiprecision::lcm(lcm_den, v.denominator());
    std::vector<Int> scaled;
    scaled.reserve(x.size());
    Int content = 0;
    for (const Rational& v : x) {
        Int w = v.numerator() * (lcm_den / v.denominator());
        content = boost::multiprecision::gcd(content, w);
        scaled.push_back(std::move(w));
    }
    if (content == 0) return std::nullopt;  // trivial vector

    auto coeff_poly = [&](unsigned lag) {
        std::vector<Rational> c(degree + 1);
        for (unsigned j = 0; j <= degree; ++j)
            c[j] = Rational(scaled[lag * (degree + 1) + j] / content);
        return Polynomial(std::move(c));
    };

    Polynomial lhs = coeff_poly(0);
    if (lhs.is_zero()) return std::nullopt;  // effectively lower order, shifted
    std::vector<Polynomial> rhs;
    rhs.reserve(order);
    const Rational sign = lhs.leading().is_negative() ? Rational(-1) : Rational(1);
    lhs = sign * lhs;
    for (unsigned i = 1; i <= order; ++i) rhs.push_back(Rational(-1) * sign * coeff_poly(i));

    RecurrenceSpec spec{"guessed-order" + std::to_string(order) + "-degree" +
                            std::to_string(degree),
                        std::move(lhs), std::move(rhs), 0};
    spec.valid_from = first_clear_of_integer_roots(spec.lhs, order);
    return spec;
}

// Relation check over every admissible index of `terms`, ignoring valid_from
// (a guessed relation must hold wherever all its lags exist).
inline bool annihilates(const RecurrenceSpec& spec, const std::vector<Natural>& terms) {
    for (long long n = static_cast<long long>(spec.order());
         n < static_cast<long long>(terms.size()); ++n) {
        Rational acc = spec.lhs(Int(n)) * Rational(terms[n]);
        for (std::size_t i = 1; i <= spec.order(); ++i)
            acc -= spec.rhs[i - 1](Int(n)) * Rational(terms[n - i]);
        if (!acc.is_zero()) return false;
    }
    return true;
}

} // namespace detail

inline std::optional<RecurrenceSpec> guess_recurrence(const GuessQuery& q) {
    const std::size_t needed =
        static_cast<std::size_t>(q.max_order + 1) * (q.max_degree + 1) +
        q.max_order + q.guard_terms;
    if (q.max_order < 1) throw precondition_error("guess_recurrence: max_order must be >= 1");
    if (q.terms.size() < needed)
        throw precondition_error("guess_recurrence: need at least " +
                                 std::to_string(needed) + " terms, got " +
                                 std::to_string(q.terms.size()));
    const std::size_t fit_len = q.terms.size() - q.guard_terms;

    for (unsigned order = 1; order <= q.max_order; ++order) {
        for (unsigned degree = 0; degree <= q.max_degree; ++degree) {
            const std::size_t unknowns =
                static_cast<std::size_t>(order + 1) * (degree + 1);
            // One equation per n in [order, fit_len): sum over lags i of
            // n^j * a(n-i) * c_{i,j} = 0.
            std::vector<std::vector<Int>> m;
            m.reserve(fit_len - order);
            for (std::size_t n = order; n < fit_len; ++n) {
                std::vector<Int> row;
                row.reserve(unknowns);
                for (unsigned i = 0; i <= order; ++i) {
                    const Int& a = q.terms[n - i].value();
                    Int npow = 1;
                    for (unsigned j = 0; j <= degree; ++j) {
                        row.push_back(a * npow);
                        npow *= n;
                    }
                }
                m.push_back(std::move(row));
            }
            for (const auto& x : nullspace_basis(std::move(m))) {
                auto spec = detail::spec_from_solution(x, order, degree);
                if (!spec) continue;
                if (detail::annihilates(*spec, q.terms)) return spec;
            }
        }
    }
    return std::nullopt;
}

} // namespace giftcount
