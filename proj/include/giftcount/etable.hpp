#pragma once

// Dense triangle of E_sigma(n,k): the number of partitions of {1..k} into
// exactly n blocks of size at most sigma+1. Row n is supported on
// n <= k <= (sigma+1)*n; all other indices (negative ones included) read as 0.

#include <string>
#include <vector>

#include "giftcount/errors.hpp"
#include "giftcount/guards.hpp"
#include "giftcount/integers.hpp"

namespace giftcount {

class ETable {
public:
    ETable(unsigned sigma, unsigned max_n,
           const GuardLimits& guards = GuardLimits::from_env())
        : sigma_(sigma), max_n_(max_n),
          width_(static_cast<unsigned long long>(sigma + 1) * max_n + 1) {
        const unsigned long long cells = width_ * (max_n + 1ull);
        if (cells > guards.max_table_cells)
            throw guard_error("E-table: " + std::to_string(cells) +
                              " cells exceeds guard max_table_cells = " +
                              std::to_string(guards.max_table_cells) +
                              " (set GIFTCOUNT_GUARD_MAX to raise)");
        v_.assign(cells, Natural());
        cell(0, 0) = Natural(1);
        // Fill row by row: classify by the block containing the largest
        // element; a block of size i+1 leaves binomial(k-1, i) choices.
        for (unsigned n = 1; n <= max_n_; ++n) {
            cell(n, n) = Natural(1);
            const unsigned long long kmax = static_cast<unsigned long long>(sigma_ + 1) * n;
            for (unsigned long long k = n + 1; k <= kmax; ++k) {
                const unsigned long long imax =
                    std::min<unsigned long long>(sigma_, k - n);
                Natural acc;
                for (unsigned long long i = 0; i <= imax; ++i)
                    acc += binomial(k - 1, i) * at(static_cast<long long>(n) - 1,
                                                   static_cast<long long>(k - 1 - i));
                cell(n, k) = std::move(acc);
            }
        }
    }

    unsigned sigma() const { return sigma_; }
    unsigned max_n() const { return max_n_; }

    // Zero outside the stored triangle, matching the convention that
    // negative (or oversized) arguments contribute nothing.
    const Natural& at(long long n, long long k) const {
        static const Natural zero;
        if (n < 0 || k < 0 || n > max_n_ || static_cast<unsigned long long>(k) >= width_)
            return zero;
        return v_[static_cast<unsigned long long>(n) * width_ + k];
    }

    Natural row_sum(unsigned n) const {
        Natural s;
        const unsigned long long kmax = static_cast<unsigned long long>(sigma_ + 1) * n;
        for (unsigned long long k = n; k <= kmax; ++k)
            s += at(n, static_cast<long long>(k));
        return s;
    }

private:
    Natural& cell(unsigned long long n, unsigned long long k) {
        return v_[n * width_ + k];
    }

    unsigned sigma_;
    unsigned max_n_;
    unsigned long long width_;
    std::vector<Natural> v_;
};

// Table built via the block-of-the-largest-element recurrence.
inline ETable e_table_vertical(unsigned sigma, unsigned max_n,
                               const GuardLimits& guards = GuardLimits::from_env()) {
    return ETable(sigma, max_n, guards);
}

} // namespace giftcount
