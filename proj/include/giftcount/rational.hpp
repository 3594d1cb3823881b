#pragma once

// Exact rational numbers. Always reduced to lowest terms with a positive
// denominator, so equality is plain structural equality.

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <ostream>
#include <string>
#include <utility>

#include "giftcount/errors.hpp"
#include "giftcount/integers.hpp"

namespace giftcount {

class Rational {
public:
    Rational() = default;

    template <std::integral T>
    Rational(T v) : v_(v) {}

    Rational(const Int& v) : v_(v) {}
    Rational(const Natural& v) : v_(v.value()) {}

    Rational(Int num, Int den) {
        if (den == 0) throw precondition_error("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        v_ = boost::multiprecision::cpp_rational(std::move(num), std::move(den));
    }

    Int numerator() const { return boost::multiprecision::numerator(v_); }
    Int denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return boost::multiprecision::denominator(v_) == 1; }
    bool is_negative() const { return v_ < 0; }

    Int to_integer() const {
        if (!is_integer()) throw inconsistency_error("Rational: value is not an integer");
        return numerator();
    }

    Natural to_natural() const {
        Int n = to_integer();
        if (n < 0) throw inconsistency_error("Rational: value is negative");
        return Natural(std::move(n));
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw precondition_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational operator-() const {
        Rational r;
        r.v_ = -v_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return is_negative() ? -*this : *this; }

    std::string str() const {
        if (is_integer()) return numerator().str();
        return numerator().str() + "/" + denominator().str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.v_;
    }

private:
    boost::multiprecision::cpp_rational v_;
};

} // namespace giftcount
