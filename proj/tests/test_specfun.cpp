#include "dosusy/errors.hpp"
#include "dosusy/specfun.hpp"
#include "gen.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace dosusy;

TEST_SUITE("specfun") {

TEST_CASE("gegenbauer reference values")
{
    CHECK(gegenbauer({0, 3.7, 0.7}) == 1.0);
    CHECK(gegenbauer({1, 1.5, 0.2}) == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(gegenbauer({2, 1.5, 0.5}) == doctest::Approx(0.375).epsilon(1e-15));
    // C_p^{1/2} is the Legendre polynomial: P_3(0.3) = (5 * 0.027 - 0.9) / 2.
    CHECK(gegenbauer({3, 0.5, 0.3}) == doctest::Approx(-0.3825).epsilon(1e-14));
    // C_p^1 is the Chebyshev U_p: U_4(cos t) = sin(5t)/sin(t).
    const double t = 0.4;
    CHECK(gegenbauer({4, 1.0, std::cos(t)}) == doctest::Approx(std::sin(5 * t) / std::sin(t)).epsilon(1e-13));
}

TEST_CASE("gegenbauer endpoints")
{
    // C_p^q(1) = (2q)_p / p!
    CHECK(gegenbauer({3, 1.5, 1.0}) == doctest::Approx(3.0 * 4.0 * 5.0 / 6.0).epsilon(1e-14));
    CHECK(gegenbauer({3, 1.5, -1.0}) == doctest::Approx(-10.0).epsilon(1e-14));
}

TEST_CASE("gegenbauer rejects bad arguments")
{
    CHECK_THROWS_AS(gegenbauer({-1, 1.0, 0.0}), DomainError);
    CHECK_THROWS_AS(gegenbauer({2, 1.0, 1.0000001}), DomainError);
    CHECK_THROWS_AS(gegenbauer({2, -0.5, 0.0}), DomainError);
}

TEST_CASE("binomial values and errors")
{
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(9, 0) == 1);
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(22, 11) == 705432);
    CHECK(binomial(60, 30) == 118264581564861424ULL);
    CHECK_THROWS_AS(binomial(3, 4), DomainError);
    CHECK_THROWS_AS(binomial(3, -1), DomainError);
    CHECK_THROWS_AS(binomial(200, 100), std::overflow_error);
}

TEST_CASE("property: three-term recurrence")
{
    gen::Source src(11);
    for (int i = 0; i < gen::kCases; ++i) {
        const int p = src.integer(1, 10);
        const double q = src.uniform(-0.45, 4.0);
        const double x = src.uniform(-1.0, 1.0);
        INFO("p=" << p << " q=" << q << " x=" << x);
        const double lhs = (p + 1) * gegenbauer({p + 1, q, x});
        const double rhs = 2.0 * (p + q) * x * gegenbauer({p, q, x}) - (p + 2.0 * q - 1.0) * gegenbauer({p - 1, q, x});
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));
    }
}

TEST_CASE("property: parity")
{
    gen::Source src(12);
    for (int i = 0; i < gen::kCases; ++i) {
        const int p = src.integer(0, 12);
        const double q = src.uniform(0.0, 3.0);
        const double x = src.uniform(-1.0, 1.0);
        INFO("p=" << p << " q=" << q << " x=" << x);
        const double sign = (p % 2) ? -1.0 : 1.0;
        CHECK(gegenbauer({p, q, -x}) == doctest::Approx(sign * gegenbauer({p, q, x})).epsilon(1e-14).scale(1.0));
    }
}

TEST_CASE("property: Pascal rule")
{
    gen::Source src(13);
    for (int i = 0; i < gen::kCases; ++i) {
        const int n = src.integer(1, 50);
        const int k = src.integer(1, n);
        INFO("n=" << n << " k=" << k);
        CHECK(binomial(n, k) == binomial(n - 1, k - 1) + (k <= n - 1 ? binomial(n - 1, k) : 0));
        CHECK(binomial(n, k) == binomial(n, n - k));
    }
}

}
