#pragma once

// Arbitrary-precision integer substrate: a signed big integer alias plus a
// checked nonnegative wrapper used for all counts.

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <ostream>
#include <string>
#include <utility>

#include "giftcount/errors.hpp"

namespace giftcount {

using Int = boost::multiprecision::cpp_int;

// Nonnegative arbitrary-precision integer. Closed under addition and
// multiplication; subtraction throws if the result would be negative.
class Natural {
public:
    Natural() = default;

    template <std::integral T>
    Natural(T v) : v_(v) {
        if constexpr (std::is_signed_v<T>) {
            if (v < 0) throw precondition_error("Natural: negative value");
        }
    }

    explicit Natural(Int v) : v_(std::move(v)) {
        if (v_ < 0) throw precondition_error("Natural: negative value");
    }

    const Int& value() const { return v_; }
    bool is_zero() const { return v_.is_zero(); }

    Natural& operator+=(const Natural& o) { v_ += o.v_; return *this; }
    Natural& operator*=(const Natural& o) { v_ *= o.v_; return *this; }
    Natural& operator-=(const Natural& o) {
        if (o.v_ > v_) throw precondition_error("Natural: subtraction would be negative");
        v_ -= o.v_;
        return *this;
    }

    friend Natural operator+(Natural a, const Natural& b) { return a += b; }
    friend Natural operator*(Natural a, const Natural& b) { return a *= b; }
    friend Natural operator-(Natural a, const Natural& b) { return a -= b; }

    friend bool operator==(const Natural& a, const Natural& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Natural& a, const Natural& b) { return a.v_ != b.v_; }
    friend bool operator<(const Natural& a, const Natural& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Natural& a, const Natural& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Natural& a, const Natural& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Natural& a, const Natural& b) { return a.v_ >= b.v_; }

    unsigned long long to_ullong() const {
        if (v_ > Int(~0ull)) throw precondition_error("Natural: does not fit in 64 bits");
        return v_.convert_to<unsigned long long>();
    }

    std::string str() const { return v_.str(); }

    friend std::ostream& operator<<(std::ostream& os, const Natural& n) {
        return os << n.v_;
    }

private:
    Int v_ = 0;
};

inline Natural factorial(unsigned k) {
    Int r = 1;
    for (unsigned j = 2; j <= k; ++j) r *= j;
    return Natural(std::move(r));
}

// C(k, i); zero when i > k.
inline Natural binomial(unsigned long long k, unsigned long long i) {
    if (i > k) return Natural();
    if (i > k - i) i = k - i;
    Int r = 1;
    for (unsigned long long j = 1; j <= i; ++j) {
        r *= (k - i + j);
        r /= j;  // exact at every step
    }
    return Natural(std::move(r));
}

inline Int divide_exact(const Int& a, const Int& b) {
    if (b == 0) throw precondition_error("divide_exact: zero divisor");
    Int q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0) throw inconsistency_error("divide_exact: division is not exact");
    return q;
}

inline Natural divide_exact(const Natural& a, const Natural& b) {
    return Natural(divide_exact(a.value(), b.value()));
}

inline Natural natural_pow(const Natural& base, unsigned e) {
    Int r = 1;
    for (unsigned j = 0; j < e; ++j) r *= base.value();
    return Natural(std::move(r));
}

} // namespace giftcount
