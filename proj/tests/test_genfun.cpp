#include <catch2/catch_amalgamated.hpp>

#include "giftcount/genfun.hpp"

using namespace giftcount;

TEST_CASE("row generating function matches the table") {
    // sigma=1, n=2: coefficient of y^3 is 1/2, and 3! * 1/2 = 3 partitions
    auto r = check_egf_e(1, 2, 4);
    CHECK(r.ok());
    CHECK(r.orders_checked == 4);

    // n = 0 row: the empty product
    CHECK(check_egf_e(2, 0, 3).ok());
    CHECK(check_egf_e(3, 0, 0).ok());

    for (unsigned sigma = 0; sigma <= 3; ++sigma)
        for (unsigned n = 0; n <= 6; ++n) {
            auto report = check_egf_e(sigma, n, (sigma + 1) * n);
            INFO(report.identity);
            CHECK(report.ok());
        }
}

TEST_CASE("closed-form generating function for sigma = 1") {
    auto r = check_egf_g1_closed_form(40);
    CHECK(r.ok());
    CHECK(r.orders_checked == 40);
    CHECK(check_egf_g1_closed_form(2).ok());
    CHECK_THROWS_AS(check_egf_g1_closed_form(1), precondition_error);
}

TEST_CASE("differential equation for the sigma = 1 generating function") {
    auto r = check_g1_ode(40);
    CHECK(r.ok());
    CHECK(r.orders_checked == 38);
    CHECK(check_g1_ode(3).ok());  // smallest admissible window
    CHECK_THROWS_AS(check_g1_ode(2), precondition_error);
}

TEST_CASE("moment route and series route share coefficients") {
    // the polynomial power used by the moment method and the truncated series
    // used by the row check must produce identical coefficients
    for (unsigned sigma = 1; sigma <= 3; ++sigma) {
        Polynomial base = block_polynomial(sigma);
        Polynomial power = Polynomial::constant(Rational(1));
        const unsigned n = 4;
        for (unsigned i = 0; i < n; ++i) power = power * base;

        const long N = (sigma + 1) * n;
        PowerSeries series = PowerSeries::one(N);
        PowerSeries b(N);
        for (int j = 0; j <= base.degree(); ++j) b.at(j) = base.coeff(j);
        for (unsigned i = 0; i < n; ++i) series = series * b;

        for (long k = 0; k <= N; ++k)
            CHECK(series.coeff(k) == power.coeff(static_cast<std::size_t>(k)));
    }
}

TEST_CASE("a corrupted coefficient is caught and reported") {
    // build the series route by hand with one wrong value and confirm the
    // report pinpoints it
    SequenceRun g1 = g_by_sum(1, 6);
    PowerSeries f(6);
    Rational nfact(1);
    for (long n = 0; n <= 6; ++n) {
        if (n > 0) nfact *= Rational(Int(n));
        f.at(n) = Rational(g1.values[n]) / nfact;
    }
    f.at(4) += Rational(1, 7);
    PowerSeries f1 = f.derivative();
    PowerSeries f2 = f1.derivative();
    PowerSeries rhs = Rational(3) * f1 + Rational(2) * (PowerSeries::x(6) * f2) + f;
    bool mismatch = false;
    for (long m = 0; m <= 4 && !mismatch; ++m)
        mismatch = f2.coeff(m) != rhs.coeff(m);
    CHECK(mismatch);
}
