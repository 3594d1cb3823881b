#pragma once

// Dense univariate polynomial with exact rational coefficients.
// Coefficient index equals the degree of n; the zero polynomial is empty.

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "giftcount/integers.hpp"
#include "giftcount/rational.hpp"

namespace giftcount {

class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    Polynomial(std::initializer_list<Rational> coeffs)
        : c_(coeffs.begin(), coeffs.end()) {
        trim();
    }

    static Polynomial constant(Rational v) { return Polynomial({std::move(v)}); }

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    const Rational& coeff(std::size_t j) const {
        static const Rational zero;
        return j < c_.size() ? c_[j] : zero;
    }

    const Rational& leading() const {
        static const Rational zero;
        return c_.empty() ? zero : c_.back();
    }

    const std::vector<Rational>& coeffs() const { return c_; }

    Rational operator()(const Int& n) const {  // Horner evaluation, exact
        Rational acc;
        for (std::size_t j = c_.size(); j-- > 0;) {
            acc = acc * Rational(n) + c_[j];
        }
        return acc;
    }

    Rational operator()(long long n) const { return (*this)(Int(n)); }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t j = 0; j < r.size(); ++j) r[j] = a.coeff(j) + b.coeff(j);
        return Polynomial(std::move(r));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t j = 0; j < r.size(); ++j) r[j] = a.coeff(j) - b.coeff(j);
        return Polynomial(std::move(r));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(r));
    }

    friend Polynomial operator*(const Rational& s, const Polynomial& p) {
        std::vector<Rational> r(p.c_.size());
        for (std::size_t j = 0; j < r.size(); ++j) r[j] = s * p.c_[j];
        return Polynomial(std::move(r));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return a.c_ != b.c_; }

    // Rendering like "9/2*n^2 - 9/2*n - 3/2"; "0" for the zero polynomial.
    std::string str(const std::string& var = "n") const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t j = c_.size(); j-- > 0;) {
            const Rational& c = c_[j];
            if (c.is_zero()) continue;
            Rational a = c.abs();
            if (out.empty()) {
                if (c.is_negative()) out += "-";
            } else {
                out += c.is_negative() ? " - " : " + ";
            }
            bool unit = (a == Rational(1));
            if (j == 0) {
                out += a.str();
            } else {
                if (!unit) out += a.str() + "*";
                out += var;
                if (j > 1) out += "^" + std::to_string(j);
            }
        }
        return out.empty() ? "0" : out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
        return os << p.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

// Exact value of p at n.
inline Rational poly_eval(const Polynomial& p, const Int& n) { return p(n); }

} // namespace giftcount
