#pragma once

// Independent exact methods for E_sigma(n,k), plus pointwise validators for
// the identities the table must satisfy. Every method returns 0 outside the
// support n <= k <= (sigma+1)*n and agrees with exhaustive enumeration.

#include <algorithm>
#include <string>
#include <vector>

#include "giftcount/errors.hpp"
#include "giftcount/etable.hpp"
#include "giftcount/hypergeometric.hpp"
#include "giftcount/integers.hpp"
#include "giftcount/rational.hpp"

namespace giftcount {

namespace detail {

inline bool e_out_of_support(unsigned sigma, long long n, long long k) {
    return n < 0 || k < 0 || k < n ||
           k > static_cast<long long>(sigma + 1) * n;
}

}  // namespace detail

// Sum over block-size multiplicity vectors (nu_1..nu_{sigma+1}) with
// sum nu_i = n and sum i*nu_i = k of k! / (prod nu_i! * prod (i!)^nu_i).
inline Natural e_multinomial(unsigned sigma, long long n, long long k) {
    if (detail::e_out_of_support(sigma, n, k)) return Natural(0);
    Natural total;
    std::vector<unsigned long long> nu(sigma + 2, 0);
    // Choose nu for sizes sigma+1 down to 2; size 1 absorbs the remainder.
    auto rec = [&](auto&& self, unsigned size, long long blocks_left,
                   long long weight_left) -> void {
        if (size == 1) {
            if (weight_left != blocks_left) return;  // nu_1 blocks of weight 1
            nu[1] = static_cast<unsigned long long>(blocks_left);
            Natural den(1);
            for (unsigned i = 1; i <= sigma + 1; ++i) {
                if (nu[i] == 0) continue;
                den *= factorial(static_cast<unsigned>(nu[i]));
                den *= natural_pow(factorial(i), static_cast<unsigned>(nu[i]));
            }
            total += divide_exact(factorial(static_cast<unsigned>(k)), den);
            return;
        }
        const long long max_count =
            std::min<long long>(blocks_left, weight_left / size);
        for (long long c = 0; c <= max_count; ++c) {
            nu[size] = static_cast<unsigned long long>(c);
            self(self, size - 1, blocks_left - c, weight_left - c * size);
        }
        nu[size] = 0;
    };
    rec(rec, sigma + 1, n, k);
    return total;
}

// Power-series coefficient recurrence for the n-th power of the block
// generating polynomial, run along increasing k with exact rational
// intermediates. Returns the row E(n, n..k_to). Every step must come out a
// nonnegative integer; anything else is an implementation bug.
inline std::vector<Natural> e_miller_row(unsigned sigma, long long n, long long k_to) {
    if (n < 0 || k_to < n) return {};
    std::vector<Natural> row;
    row.reserve(k_to - n + 1);
    row.push_back(Natural(1));  // E(n, n)
    for (long long j = 1; j <= k_to - n; ++j) {
        if (sigma == 0 || j > static_cast<long long>(sigma) * n) {
            row.push_back(Natural(0));  // beyond the support
            continue;
        }
        Rational s;
        const long long imax = std::min<long long>(sigma, j);
        for (long long i = 1; i <= imax; ++i) {
            Rational w(Int((n + 1) * i - j),
                       factorial(static_cast<unsigned>(i + 1)).value() *
                           factorial(static_cast<unsigned>(n + j - i)).value());
            s += w * Rational(row[j - i]);
        }
        Rational value = s * Rational(factorial(static_cast<unsigned>(n + j))) / Rational(Int(j));
        if (!value.is_integer() || value.is_negative())
            throw inconsistency_error("e_miller: non-integral intermediate at k=" +
                                      std::to_string(n + j));
        row.push_back(value.to_natural());
    }
    return row;
}

inline Natural e_miller(unsigned sigma, long long n, long long k) {
    if (detail::e_out_of_support(sigma, n, k)) return Natural(0);
    if (k == n) return Natural(1);
    if (sigma == 0) return Natural(0);
    return e_miller_row(sigma, n, k).back();
}

// Closed form for sigma = 1: k! / ((2n-k)! (k-n)! 2^(k-n)).
inline Natural e1_closed(long long n, long long k) {
    if (detail::e_out_of_support(1, n, k)) return Natural(0);
    Natural den = factorial(static_cast<unsigned>(2 * n - k)) *
                  factorial(static_cast<unsigned>(k - n)) *
                  natural_pow(Natural(2), static_cast<unsigned>(k - n));
    return divide_exact(factorial(static_cast<unsigned>(k)), den);
}

// Single-index sum for sigma = 2, over the number c of size-3 blocks.
inline Natural e2_sum(long long n, long long k) {
    if (detail::e_out_of_support(2, n, k)) return Natural(0);
    const long long eta = k - n;
    Natural total;
    for (long long c = std::max<long long>(0, eta - n); 2 * c <= eta; ++c) {
        Natural den = factorial(static_cast<unsigned>(n - eta + c)) *
                      factorial(static_cast<unsigned>(eta - 2 * c)) *
                      factorial(static_cast<unsigned>(c)) *
                      natural_pow(Natural(2), static_cast<unsigned>(eta - c)) *
                      natural_pow(Natural(3), static_cast<unsigned>(c));
        total += divide_exact(factorial(static_cast<unsigned>(k)), den);
    }
    return total;
}

namespace detail {

inline Rational e2_hyp_low(long long n, long long eta) {  // valid for eta <= n
    Rational pre(factorial(static_cast<unsigned>(n + eta)).value(),
                 factorial(static_cast<unsigned>(eta)).value() *
                     factorial(static_cast<unsigned>(n - eta)).value() *
                     natural_pow(Natural(2), static_cast<unsigned>(eta)).value());
    HypSpec spec{{Rational(Int(-eta), 2), Rational(Int(-eta + 1), 2)},
                 {Rational(Int(n - eta + 1))},
                 Rational(8, 3)};
    return pre * hyp_terminating(spec);
}

inline Rational e2_hyp_high(long long n, long long eta) {  // valid for eta >= n
    Rational pre(factorial(static_cast<unsigned>(eta + n)).value(),
                 factorial(static_cast<unsigned>(2 * n - eta)).value() *
                     factorial(static_cast<unsigned>(eta - n)).value() *
                     natural_pow(Natural(2), static_cast<unsigned>(n)).value() *
                     natural_pow(Natural(3), static_cast<unsigned>(eta - n)).value());
    HypSpec spec{{Rational(Int(eta - 2 * n), 2), Rational(Int(eta - 2 * n + 1), 2)},
                 {Rational(Int(eta - n + 1))},
                 Rational(8, 3)};
    return pre * hyp_terminating(spec);
}

}  // namespace detail

// Terminating-2F1 evaluation for sigma = 2; the two branches overlap at
// eta = n, where both are computed and must agree.
inline Natural e2_hypergeometric(long long n, long long k) {
    if (detail::e_out_of_support(2, n, k)) return Natural(0);
    const long long eta = k - n;
    Rational value;
    if (eta < n) {
        value = detail::e2_hyp_low(n, eta);
    } else if (eta > n) {
        value = detail::e2_hyp_high(n, eta);
    } else {
        value = detail::e2_hyp_low(n, eta);
        if (value != detail::e2_hyp_high(n, eta))
            throw inconsistency_error("e2_hypergeometric: branches disagree at eta = n = " +
                                      std::to_string(n));
    }
    if (!value.is_integer() || value.is_negative())
        throw inconsistency_error("e2_hypergeometric: non-integral value at (" +
                                  std::to_string(n) + "," + std::to_string(k) + ")");
    return value.to_natural();
}

struct IdentityViolation {
    std::string identity;
    long long n = 0;
    long long k = 0;
};

struct ValidationReport {
    unsigned sigma = 0;
    unsigned max_n = 0;
    unsigned long long cells_checked = 0;
    std::vector<IdentityViolation> violations;
    bool ok() const { return violations.empty(); }
};

// Pointwise validation of the table identities for sigma = 1 and sigma = 2,
// under the zero-for-negative-arguments convention. Violations are returned
// as data, never thrown.
inline ValidationReport validate_e_identities(unsigned sigma, unsigned max_n,
                                              const GuardLimits& guards = GuardLimits::from_env()) {
    if (sigma != 1 && sigma != 2)
        throw precondition_error("validate_e_identities: sigma must be 1 or 2");
    ValidationReport report{sigma, max_n, 0, {}};
    ETable t(sigma, max_n, guards);
    auto e = [&](long long n, long long k) -> Int { return t.at(n, k).value(); };

    if (sigma == 1) {
        // two-term row recurrence: E(n,k) = E(n-1,k-1) + (k-1) E(n-1,k-2)
        for (long long n = 1; n <= max_n; ++n)
            for (long long k = 0; k <= 2 * n + 2; ++k) {
                ++report.cells_checked;
                if (e(n, k) != e(n - 1, k - 1) + (k - 1) * e(n - 1, k - 2))
                    report.violations.push_back({"e1-two-term", n, k});
            }
        // second-order identity: E(n,k) = (2n-1) E(n-1,k-2) + E(n-2,k-2)
        for (long long n = 2; n <= max_n; ++n)
            for (long long k = 0; k <= 2 * n + 2; ++k) {
                ++report.cells_checked;
                if (e(n, k) != (2 * n - 1) * e(n - 1, k - 2) + e(n - 2, k - 2))
                    report.violations.push_back({"e1-second-order", n, k});
            }
    } else {
        // eight-term identity for sigma = 2, cleared of denominators.
        for (long long n = 4; n <= max_n; ++n)
            for (long long k = 0; k <= 3 * n + 4; ++k) {
                ++report.cells_checked;
                Int rhs = (9 * n * n - 9 * n + 2) * e(n - 1, k - 3) -
                          5 * e(n - 1, k - 1) +
                          (9 * n * n - 36 * n + 35) * e(n - 2, k - 4) +
                          12 * (n - 1) * e(n - 2, k - 3) -
                          3 * e(n - 2, k - 2) +
                          6 * (2 * n - 5) * e(n - 3, k - 4) +
                          5 * e(n - 3, k - 3) +
                          5 * e(n - 4, k - 4);
                if (2 * e(n, k) != rhs)
                    report.violations.push_back({"e2-eight-term", n, k});
            }
    }
    return report;
}

} // namespace giftcount
