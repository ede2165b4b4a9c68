#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fracollo/specfun.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

using namespace fracollo;

TEST_CASE("gamma_fn known values")
{
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-13));
    CHECK(gamma_fn(0.5) == doctest::Approx(1.7724538509055160).epsilon(1e-13));
    CHECK_THROWS_AS(gamma_fn(0.0), std::domain_error);
    CHECK_THROWS_AS(gamma_fn(-2.5), std::domain_error);
}

TEST_CASE("gamma_fn recurrence Gamma(z+1) = z Gamma(z)")
{
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> dist(0.1, 20.0);
    for (int i = 0; i < 1000; ++i) {
        const double z = dist(rng);
        const double lhs = gamma_fn(z + 1.0);
        const double rhs = z * gamma_fn(z);
        CHECK(std::fabs(lhs - rhs) <= 1e-12 * std::fabs(rhs));
    }
}

TEST_CASE("mittag_leffler special cases")
{
    CHECK(mittag_leffler(1.5, 0.0) == 1.0);
    CHECK(mittag_leffler(1.0, 1.0) == doctest::Approx(2.718281828459045).epsilon(1e-13));
    CHECK(mittag_leffler(2.0, -1.0) == doctest::Approx(0.5403023058681398).epsilon(1e-13));
    CHECK_THROWS_AS(mittag_leffler(-1.0, 0.5), std::domain_error);
    CHECK_THROWS_AS(mittag_leffler(1.0, 11.0), std::domain_error);
}

TEST_CASE("mittag_leffler order one is the exponential")
{
    for (int i = 0; i <= 200; ++i) {
        const double x = -1.0 + 2.0 * i / 200.0;
        const double expected = std::exp(x);
        CHECK(std::fabs(mittag_leffler(1.0, x) - expected) <= 1e-12 * std::fabs(expected));
    }
}

TEST_CASE("mittag_leffler reports non-convergence")
{
    // tiny order at the edge of the argument envelope: the terms grow far
    // beyond 500 before the gamma in the denominator takes over
    CHECK_THROWS_AS(mittag_leffler(0.05, 10.0), std::runtime_error);
}

TEST_CASE("truncated_power conventions")
{
    CHECK(truncated_power(-1.0, 2.5) == 0.0);
    CHECK(truncated_power(0.0, 0.5) == 0.0);
    CHECK(truncated_power(0.0, 0.0) == 1.0);
    CHECK(truncated_power(2.0, 1.5) == doctest::Approx(2.8284271247461903).epsilon(1e-15));
}

TEST_CASE("backward_diff basics")
{
    const auto cubeish = [](double t) { return t * t; };
    CHECK(backward_diff([](double t) { return std::sin(t); }, 0, 1.3) ==
          doctest::Approx(std::sin(1.3)));
    CHECK(backward_diff([](double t) { return t; }, 1, 3.7) == doctest::Approx(1.0));
    CHECK(backward_diff(cubeish, 2, 5.0) == doctest::Approx(2.0));
}

TEST_CASE("backward_diff annihilates low-degree monomials")
{
    // p is scaled so the lattice values stay O(1)
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> dist(0.0, 2.0);
    for (int n = 0; n <= 8; ++n) {
        const double span = n + 2.0;
        for (int deg = 0; deg <= n; ++deg) {
            const double x = dist(rng);
            const double value = backward_diff(
                [deg, span](double t) { return std::pow(t / span, deg); }, n + 1, x);
            CHECK(std::fabs(value) <= 1e-9);
        }
    }
}

TEST_CASE("binomial values and range")
{
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(7, 0) == 1);
    CHECK(binomial(5, 9) == 0);
    CHECK(binomial(5, -2) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK_THROWS_AS(binomial(68, 34), std::overflow_error);
    CHECK_NOTHROW(binomial(62, 31));
}

TEST_CASE("binomial satisfies Pascal's rule")
{
    for (int n = 1; n <= 30; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("FractionalOrder splits the order")
{
    const FractionalOrder half(0.5);
    CHECK(half.value() == 0.5);
    CHECK(half.ceil_order() == 1);
    CHECK(half.floor_order() == 0);

    const FractionalOrder mid(1.75);
    CHECK(mid.ceil_order() == 2);
    CHECK(mid.floor_order() == 1);

    CHECK_THROWS_AS(FractionalOrder(2.0), std::domain_error);
    CHECK_THROWS_AS(FractionalOrder(0.0), std::domain_error);
    CHECK_THROWS_AS(FractionalOrder(-0.5), std::domain_error);
}
