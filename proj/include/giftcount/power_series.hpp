#pragma once

// Truncated formal power series with exact rational coefficients.
// The truncation order is explicit data: a series of order N stores the
// coefficients of x^0..x^N, and every binary operation truncates its result
// to the minimum order of the operands.

#include <cstddef>
#include <vector>

#include "giftcount/errors.hpp"
#include "giftcount/rational.hpp"

namespace giftcount {

class PowerSeries {
public:
    explicit PowerSeries(long order) {
        if (order < 0) throw precondition_error("PowerSeries: negative truncation order");
        c_.assign(static_cast<std::size_t>(order) + 1, Rational());
    }

    static PowerSeries from_coeffs(std::vector<Rational> coeffs) {
        if (coeffs.empty()) throw precondition_error("PowerSeries: empty coefficient list");
        PowerSeries s(static_cast<long>(coeffs.size()) - 1);
        s.c_ = std::move(coeffs);
        return s;
    }

    static PowerSeries one(long order) {
        PowerSeries s(order);
        s.c_[0] = 1;
        return s;
    }

    static PowerSeries x(long order) {
        PowerSeries s(order);
        if (order >= 1) s.c_[1] = 1;
        return s;
    }

    long order() const { return static_cast<long>(c_.size()) - 1; }

    const Rational& coeff(long j) const {
        static const Rational zero;
        if (j < 0 || j > order()) return zero;
        return c_[static_cast<std::size_t>(j)];
    }

    Rational& at(long j) {
        if (j < 0 || j > order()) throw precondition_error("PowerSeries: index out of range");
        return c_[static_cast<std::size_t>(j)];
    }

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
        PowerSeries r(std::min(a.order(), b.order()));
        for (long j = 0; j <= r.order(); ++j) r.at(j) = a.coeff(j) + b.coeff(j);
        return r;
    }

    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
        PowerSeries r(std::min(a.order(), b.order()));
        for (long j = 0; j <= r.order(); ++j) r.at(j) = a.coeff(j) - b.coeff(j);
        return r;
    }

    friend PowerSeries operator*(const Rational& s, const PowerSeries& a) {
        PowerSeries r(a.order());
        for (long j = 0; j <= r.order(); ++j) r.at(j) = s * a.coeff(j);
        return r;
    }

    // Loses one order, as it must for a truncated series.
    PowerSeries derivative() const {
        if (order() < 1) throw precondition_error("PowerSeries: derivative needs order >= 1");
        PowerSeries r(order() - 1);
        for (long j = 1; j <= order(); ++j) r.at(j - 1) = Rational(j) * coeff(j);
        return r;
    }

private:
    std::vector<Rational> c_;
};

// Exact Cauchy product, truncated to the minimum order of the inputs.
inline PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.order(), b.order()));
    for (long j = 0; j <= r.order(); ++j) {
        Rational s;
        for (long i = 0; i <= j; ++i) s += a.coeff(i) * b.coeff(j - i);
        r.at(j) = s;
    }
    return r;
}

inline PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    return series_mul(a, b);
}

// exp(a) for a series with zero constant term, via the first-order relation
// e' = a'e, i.e. m*e_m = sum_{j=1..m} j*a_j*e_{m-j}.
inline PowerSeries series_exp(const PowerSeries& a) {
    if (!a.coeff(0).is_zero())
        throw precondition_error("series_exp: constant term must be 0");
    PowerSeries e(a.order());
    e.at(0) = 1;
    for (long m = 1; m <= a.order(); ++m) {
        Rational s;
        for (long j = 1; j <= m; ++j) s += Rational(j) * a.coeff(j) * e.coeff(m - j);
        e.at(m) = s / Rational(m);
    }
    return e;
}

// Square root of a series with constant term 1: s_m follows from the
// convolution identity a_m = sum_j s_j s_{m-j}.
inline PowerSeries series_sqrt(const PowerSeries& a) {
    if (a.coeff(0) != Rational(1))
        throw precondition_error("series_sqrt: constant term must be 1");
    PowerSeries s(a.order());
    s.at(0) = 1;
    for (long m = 1; m <= a.order(); ++m) {
        Rational conv;
        for (long j = 1; j < m; ++j) conv += s.coeff(j) * s.coeff(m - j);
        s.at(m) = (a.coeff(m) - conv) / Rational(2);
    }
    return s;
}

// Multiplicative inverse of a series with nonzero constant term.
inline PowerSeries series_reciprocal(const PowerSeries& a) {
    if (a.coeff(0).is_zero())
        throw precondition_error("series_reciprocal: constant term must be nonzero");
    PowerSeries r(a.order());
    r.at(0) = Rational(1) / a.coeff(0);
    for (long m = 1; m <= a.order(); ++m) {
        Rational s;
        for (long j = 1; j <= m; ++j) s += a.coeff(j) * r.coeff(m - j);
        r.at(m) = -s / a.coeff(0);
    }
    return r;
}

inline bool series_equal_up_to(const PowerSeries& a, const PowerSeries& b, long m) {
    for (long j = 0; j <= m; ++j)
        if (a.coeff(j) != b.coeff(j)) return false;
    return true;
}

} // namespace giftcount
