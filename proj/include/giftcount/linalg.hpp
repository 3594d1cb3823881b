#pragma once

// Exact nullspace of an integer matrix via fraction-free (Bareiss)
// elimination. Division-free growth control without rational arithmetic in
// the forward pass; back substitution is done over the rationals per free
// column. Pivot choice is deterministic (first nonzero in column order), so
// the returned basis is reproducible.

#include <cstddef>
#include <vector>

#include "giftcount/errors.hpp"
#include "giftcount/integers.hpp"
#include "giftcount/rational.hpp"

namespace giftcount {

inline std::vector<std::vector<Rational>> nullspace_basis(
    std::vector<std::vector<Int>> m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    if (cols == 0) return {};

    std::vector<std::size_t> pivot_row;  // per pivot, in column order
    std::vector<std::size_t> pivot_col;
    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && m[pr][c] == 0) ++pr;
        if (pr == rows) continue;  // free column
        std::swap(m[pr], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m[i][j] = divide_exact(m[r][c] * m[i][j] - m[i][c] * m[r][j], prev);
            m[i][c] = 0;
        }
        prev = m[r][c];
        pivot_row.push_back(r);
        pivot_col.push_back(c);
        ++r;
    }

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> x(cols);
        x[f] = 1;
        for (std::size_t p = pivot_col.size(); p-- > 0;) {
            const std::size_t pr = pivot_row[p];
            const std::size_t pc = pivot_col[p];
            Rational acc;
            for (std::size_t j = pc + 1; j < cols; ++j) {
                if (x[j].is_zero()) continue;
                acc += Rational(m[pr][j]) * x[j];
            }
            x[pc] = -acc / Rational(m[pr][pc]);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

} // namespace giftcount
