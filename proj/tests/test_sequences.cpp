#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "giftcount/asymptotics.hpp"
#include "giftcount/oracle.hpp"
#include "giftcount/recurrence.hpp"
#include "giftcount/sequences.hpp"

using namespace giftcount;

namespace {

std::vector<Natural> naturals(std::initializer_list<long long> v) {
    std::vector<Natural> out;
    for (long long x : v) out.push_back(Natural(x));
    return out;
}

} // namespace

TEST_CASE("row sums give the known sequences") {
    auto g1 = g_by_sum(1, 6);
    CHECK(g1.values == naturals({1, 2, 7, 37, 266, 2431, 27007}));
    CHECK(g1.method == "sum");

    auto g2 = g_by_sum(2, 4);
    CHECK(g2.values == naturals({1, 3, 31, 842, 45296}));

    auto g3 = g_by_sum(3, 2);
    CHECK(g3.values.back() == Natural(121));

    auto g0 = g_by_sum(0, 5);
    CHECK(g0.values == naturals({1, 1, 1, 1, 1, 1}));
}

TEST_CASE("first two values for every sigma") {
    for (unsigned sigma = 0; sigma <= 6; ++sigma) {
        auto run = g_by_sum(sigma, 1);
        CHECK(run.values[0] == Natural(1));
        CHECK(run.values[1] == Natural(sigma + 1));
    }
}

TEST_CASE("strict growth in sigma") {
    for (unsigned sigma = 0; sigma <= 3; ++sigma) {
        auto a = g_by_sum(sigma, 10);
        auto b = g_by_sum(sigma + 1, 10);
        for (long long n = 1; n <= 10; ++n) CHECK(a.values[n] < b.values[n]);
    }
}

TEST_CASE("multinomial sum method") {
    CHECK(g_multinomial(1, 2) == Natural(7));
    CHECK(g_multinomial(2, 1) == Natural(3));
    CHECK(g_multinomial(2, 3) == Natural(842));
    CHECK(g_multinomial(0, 5) == Natural(1));
    CHECK(g_multinomial(3, 0) == Natural(1));
    GuardLimits tight;
    tight.max_multinomial_n = 4;
    CHECK_THROWS_AS(g_multinomial(1, 5, tight), guard_error);
}

TEST_CASE("moment method") {
    CHECK(g_moments(1, 3) == Natural(37));
    CHECK(g_moments(2, 0) == Natural(1));
    CHECK(g_moments(2, 3) == Natural(842));
    auto run = g_moments_run(2, 12);
    CHECK(run.values == g_by_sum(2, 12).values);
}

TEST_CASE("method agreement across sigma and n") {
    for (unsigned sigma = 1; sigma <= 4; ++sigma) {
        auto sum = g_by_sum(sigma, 12);
        auto moments = g_moments_run(sigma, 12);
        CHECK(sum.values == moments.values);
        for (long long n = 0; n <= 6; ++n)
            CHECK(g_multinomial(sigma, n) == sum.values[n]);
    }
    for (unsigned sigma = 1; sigma <= 2; ++sigma) {
        auto sum = g_by_sum(sigma, 5);
        for (unsigned n = 0; n <= 5; ++n)
            if ((sigma + 1) * n <= 15)
                CHECK(count_gamma_sequences(sigma, n) == sum.values[n]);
    }
}

TEST_CASE("built-in recurrence specs have the stated shape") {
    auto specs = builtin_recurrences();
    REQUIRE(specs.size() == 8);

    auto find = [&](const std::string& name) -> const RecurrenceSpec& {
        for (const auto& s : specs)
            if (s.name == name) return s;
        FAIL("missing spec " + name);
        return specs[0];
    };

    const auto& c1 = find("TypeC-sigma1");
    CHECK(c1.order() == 2);
    CHECK(c1.valid_from == 2);
    CHECK(c1.rhs[0].str() == "2*n - 1");

    const auto& c2 = find("TypeC-sigma2");
    CHECK(c2.order() == 4);
    CHECK(c2.valid_from == 4);
    CHECK(c2.lhs == Polynomial({Rational(1)}));
    CHECK(c2.rhs[0] == Polynomial({Rational(-3, 2), Rational(-9, 2), Rational(9, 2)}));
    CHECK(c2.rhs[1] == Polynomial({Rational(10), Rational(-12), Rational(9, 2)}));
    CHECK(c2.rhs[2] == Polynomial({Rational(-25, 2), Rational(6)}));
    CHECK(c2.rhs[3] == Polynomial({Rational(5, 2)}));

    const auto& d2 = find("TypeD-sigma2");
    CHECK(d2.order() == 3);
    CHECK(d2.valid_from == 3);
    CHECK(d2.lhs == Polynomial({Rational(-2), Rational(1)}));
    CHECK(d2.rhs[0] ==
          Polynomial({Rational(0), Rational(17, 2), Rational(-27, 2), Rational(9, 2)}));
    CHECK(d2.rhs[1] == Polynomial({Rational(13, 2), Rational(-15), Rational(6)}));
    CHECK(d2.rhs[2] == Polynomial({Rational(-5, 2), Rational(5, 2)}));

    // Type D orders are exactly sigma + 1
    CHECK(find("TypeD-sigma1").order() == 2);
    CHECK(find("TypeD-sigma3").order() == 4);
    CHECK(find("TypeD-sigma4").order() == 5);
    CHECK(find("TypeD-sigma3").valid_from == 4);
    CHECK(find("TypeD-sigma4").valid_from == 5);

    CHECK(find("TypeC-sigma3").order() == 7);
    CHECK(find("TypeC-sigma3").valid_from == 7);
    CHECK(find("TypeC-sigma4").order() == 11);
    CHECK(find("TypeC-sigma4").valid_from == 11);
}

TEST_CASE("running recurrences from initial values") {
    auto c1 = builtin_recurrence("TypeC-sigma1");
    auto values = run_recurrence(c1, naturals({1, 2}), 6);
    CHECK(values == naturals({1, 2, 7, 37, 266, 2431, 27007}));

    auto d2 = builtin_recurrence("TypeD-sigma2");
    auto g2 = run_recurrence(d2, naturals({1, 3, 31}), 3);
    CHECK(g2.back() == Natural(842));

    // nmax below the first computed index echoes the initial prefix
    auto echo = run_recurrence(c1, naturals({1, 2, 7, 37}), 2);
    CHECK(echo == naturals({1, 2, 7}));

    CHECK_THROWS_AS(run_recurrence(c1, naturals({1}), 5), precondition_error);
    // wrong initial values cannot produce an exact division forever
    CHECK_THROWS_AS(run_recurrence(d2, naturals({1, 3, 30}), 10), inconsistency_error);
}

TEST_CASE("recurrences reproduce the row-sum sequence") {
    for (unsigned sigma = 1; sigma <= 4; ++sigma) {
        auto sum = g_by_sum(sigma, 30);
        for (std::string type : {"TypeC", "TypeD"}) {
            auto spec = builtin_recurrence(type + "-sigma" + std::to_string(sigma));
            auto run = g_by_recurrence(spec, sigma, 30);
            INFO(spec.name);
            CHECK(run.values == sum.values);
        }
    }
}

TEST_CASE("singularity and root scanning") {
    RecurrenceSpec bad{"bad", Polynomial({Rational(-5), Rational(1)}),  // n - 5
                       {Polynomial({Rational(1)})},
                       1};
    CHECK_THROWS_AS(validate_spec(bad), precondition_error);
    CHECK(first_clear_of_integer_roots(bad.lhs, 1) == 6);
    CHECK(first_clear_of_integer_roots(Polynomial({Rational(3)}), 2) == 2);
    CHECK_THROWS_AS(run_recurrence(bad, naturals({1, 1, 1, 1, 1}), 7), singularity_error);
}

TEST_CASE("bessel polynomial values") {
    CHECK(bessel_y(0, Rational(1)) == Rational(1));
    CHECK(bessel_y(0, Rational(5, 7)) == Rational(1));
    CHECK(bessel_y(2, Rational(1)) == Rational(7));
    CHECK(bessel_y(4, Rational(1)) == Rational(266));
    // y_2(z) = 1 + 3z + 3z^2
    CHECK(bessel_y(2, Rational(2)) == Rational(19));
    auto g1 = g_by_sum(1, 30);
    for (unsigned n = 0; n <= 30; ++n)
        CHECK(bessel_y(n, Rational(1)) == Rational(g1.values[n]));
}

TEST_CASE("asymptotic ratio approaches one from below at these sizes") {
    auto g1 = g_by_sum(1, 50);
    std::string r4 = asymptotic_ratio(1, 4, g1, 30);
    CHECK(r4.substr(0, 6) == "0.9319");  // 266/(105 e) = 0.93196...
    Rational e = rational_e(40);

    for (unsigned sigma = 1; sigma <= 3; ++sigma) {
        auto run = g_by_sum(sigma, 50);
        Rational q25 = leading_ratio_times_e(sigma, 25, run.values[25]);
        Rational q50 = leading_ratio_times_e(sigma, 50, run.values[50]);
        CHECK((q50 - e).abs() < (q25 - e).abs());
        CHECK(q50 > Rational(0));
    }
}

TEST_CASE("four-term expansion for sigma = 2") {
    CHECK(sigma2_correction_factor(3) ==
          Rational(1) + Rational(1, 9) + Rational(1, 486) - Rational(8, 2187));
    // correction tends to 1
    Rational big = sigma2_correction_factor(1000000);
    CHECK((big - Rational(1)).abs() < Rational(1, 1000000) * Rational(2));

    // relative error at n = 40 is at least 4x smaller than at n = 20
    auto g2 = g_by_sum(2, 40);
    Rational e = rational_e(40);
    auto rel_err_num = [&](unsigned n) {  // |q - e*corr| with q = G n! 6^n/(3n)!
        Rational q = leading_ratio_times_e(2, n, g2.values[n]);
        return (q - e * sigma2_correction_factor(n)).abs();
    };
    Rational c20 = sigma2_correction_factor(20);
    Rational c40 = sigma2_correction_factor(40);
    // err(40) <= err(20)/4  <=>  4 c20 |q40 - e c40| <= c40 |q20 - e c20|
    CHECK(Rational(4) * c20 * rel_err_num(40) <= c40 * rel_err_num(20));

    std::string s = asymptotic_sigma2(3, 30);
    CHECK(s.size() >= 30);
}
