#include "dosusy/errors.hpp"
#include "dosusy/isospectral.hpp"
#include "dosusy/kernels.hpp"
#include "dosusy/numerics.hpp"
#include "dosusy/richardson.hpp"
#include "dosusy/verify.hpp"
#include "gen.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace dosusy;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

IsoFamily family(double kappa, int l, double lambda)
{
    return IsoFamily(DoParams::nodeless(kappa, l, lambda));
}

} // namespace

TEST_SUITE("isospectral") {

TEST_CASE("beta of rho")
{
    CHECK(beta_of_rho(1.0, 1.0) == Approx(kPi / 4).epsilon(1e-15));
    CHECK(beta_of_rho(1.0, 0.5) == Approx(kPi / 4).epsilon(1e-15));
    CHECK(beta_of_rho(std::sqrt(3.0), 1.0) == Approx(kPi / 3).epsilon(1e-15));
    CHECK_THROWS_AS(beta_of_rho(0.0, 1.0), DomainError);
}

TEST_CASE("I0 by quadrature")
{
    CHECK(i0_quadrature(1e-12, 2, 1.0) == Approx(0.0).scale(1.0));
    CHECK(i0_quadrature(1.0, 0, 1.0) == Approx(1.0 - kPi / 4).epsilon(1e-13));
    // kappa = 1/2, l = 0: f^2 = rho^2/(1+rho)^2, so I0 = rho - 2 ln(1+rho) + rho/(1+rho).
    CHECK(i0_quadrature(1.0, 0, 0.5) == Approx(1.5 - 2.0 * std::log(2.0)).epsilon(1e-13));
    CHECK_THROWS_AS(i0_quadrature(1.0, 0, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(i0_quadrature(-1.0, 0, 1.0), DomainError);
}

TEST_CASE("closed forms")
{
    CHECK(i0_closed_half(0.0, 3) == 0.0);
    CHECK(i0_closed_one(0.0, 3) == 0.0);
    CHECK(i0_closed_one(kPi / 4, 0) == Approx(1.0 - kPi / 4).epsilon(1e-14));
    CHECK(i0_closed_half(kPi / 4, 0) == Approx(i0_quadrature(1.0, 0, 0.5)).epsilon(1e-12));
    const double t = std::tan(1.2);
    CHECK(std::abs(i0_closed_half(1.2, 1) - i0_quadrature(t * t, 1, 0.5)) < 1e-9);
    CHECK(std::abs(i0_closed_one(1.0, 2) - i0_quadrature(std::tan(1.0), 2, 1.0)) < 1e-10);
    CHECK_THROWS_AS(i0_closed_half(-0.1, 0), DomainError);
    CHECK_THROWS_AS(i0_closed_one(kPi / 2, 0), DomainError);
}

TEST_CASE("stable I0 route")
{
    for (int l = 0; l <= 6; ++l) {
        for (const double kappa : {0.5, 1.0}) {
            INFO("l=" << l << " kappa=" << kappa);
            // Leading behaviour rho^{2l+3}/(2l+3) with relative correction O(rho^{2 kappa}).
            const double rho = 1e-4;
            const double lead = std::pow(rho, 2 * l + 3) / (2 * l + 3);
            CHECK(kernels::i0_stable(rho, l, kappa) == Approx(lead).epsilon(1e-2));
            CHECK(kernels::i0_stable(1e-30, l, kappa) >= 0.0);
            for (const double r : {0.3, 1.0, 7.0, 40.0}) {
                const double closed = kernels::i0_closed(r, l, kappa);
                CHECK(kernels::i0_stable(r, l, kappa) == Approx(closed).epsilon(1e-9));
            }
        }
    }
    // Series branch meets the elementary form at the switch point.
    CHECK(kernels::i0_stable(0.2499999, 0, 1.0) == Approx(0.25 - std::atan(0.25)).epsilon(1e-5));
    CHECK(kernels::i0_stable(0.2, 0, 0.5) == Approx(0.2 - 2.0 * std::log1p(0.2) + 0.2 / 1.2).epsilon(1e-12));
}

TEST_CASE("route selection")
{
    CHECK(family(0.5, 1, 1.0).route() == IsoFamily::I0Route::closed_half);
    CHECK(family(1.0, 1, 1.0).route() == IsoFamily::I0Route::closed_one);
    const auto quarter = family(0.25, 1, 1.0);
    CHECK(quarter.route() == IsoFamily::I0Route::quadrature);
    CHECK(quarter.i0(1.3) == Approx(i0_quadrature(1.3, 1, 0.25)).epsilon(1e-10));
    CHECK_THROWS_AS(IsoFamily(DoParams(1.0, 0, 2)), DomainError);
}

TEST_CASE("family quantities at rho = 1, l = 0, kappa = 1, lambda = 1")
{
    const auto fam = family(1.0, 0, 1.0);
    const double i0 = 1.0 - kPi / 4;
    CHECK(fam.v_general(1.0) == Approx(2.0 * (1.0 + i0)).epsilon(1e-14));
    CHECK(fam.superpotential_general(1.0) == Approx(-0.5 + 0.5 / (1.0 + i0)).epsilon(1e-14));
    CHECK(fam.radial_factor_bosonic(1.0) == Approx(std::sqrt(0.5) / (1.0 + i0)).epsilon(1e-14));
    // f'(1) = 1/2^(3/2) for l = 0.
    const double fp = std::pow(2.0, -1.5);
    const double expected = -0.75 - 4.0 * std::sqrt(0.5) * fp / (1.0 + i0) + 2.0 * 0.25 / ((1.0 + i0) * (1.0 + i0));
    CHECK(fam.u_bosonic(1.0) == Approx(expected).epsilon(1e-14));
    CHECK(fam.u_bosonic(1.0) == Approx(-1.2343912183191978).epsilon(1e-12));
}

TEST_CASE("large-lambda limit")
{
    const double lambda = 1e9;
    for (const double kappa : {0.5, 1.0}) {
        for (int l = 0; l <= 2; ++l) {
            const auto fam = family(kappa, l, lambda);
            for (const double rho : {0.2, 1.0, 4.0}) {
                INFO("kappa=" << kappa << " l=" << l << " rho=" << rho);
                const double f = radial_factor_f(rho, l, kappa);
                CHECK(fam.v_general(rho) == Approx(lambda / (f * f)).epsilon(1e-8));
                CHECK(std::abs(fam.superpotential_general(rho) - superpotential_w(rho, l, kappa)) < 1e-8);
                CHECK(std::abs(fam.u_bosonic(rho) - u_minus(rho, l, kappa)) < 1e-8);
                CHECK(fam.radial_factor_bosonic(rho) == Approx(f / lambda).epsilon(1e-8));
            }
        }
    }
}

TEST_CASE("small-rho behaviour")
{
    const auto fam = family(1.0, 2, 1.0);
    const double rho = 1e-4;
    CHECK(fam.u_bosonic(rho) == Approx(6.0 / (rho * rho)).epsilon(1e-6));
    CHECK(std::abs(fam.u_bosonic_correction(rho)) < 1e-12);
    CHECK(fam.i0(1e-12) >= 0.0);
}

TEST_CASE("zero mode of U_bos reproduces f_bos")
{
    for (const double kappa : {0.5, 1.0}) {
        for (int l = 0; l <= 2; ++l) {
            for (const double lambda : {1.0, 10.0}) {
                INFO("kappa=" << kappa << " l=" << l << " lambda=" << lambda);
                const auto fam = family(kappa, l, lambda);
                const double dev = verify::zero_mode_deviation([&](double r) { return fam.u_bosonic(r); },
                                                               [&](double r) { return fam.radial_factor_bosonic(r); }, l);
                CHECK(dev < 1e-5);
            }
        }
    }
}

TEST_CASE("property: closed forms agree with quadrature")
{
    gen::Source src(31);
    for (int i = 0; i < gen::kCases; ++i) {
        const int l = src.integer(0, 6);
        const double rho = src.log_uniform(0.01, 50.0);
        INFO("l=" << l << " rho=" << rho);
        CHECK(std::abs(i0_closed_half(beta_of_rho(rho, 0.5), l) - i0_quadrature(rho, l, 0.5, 1e-12)) < 1e-9);
        CHECK(std::abs(i0_closed_one(beta_of_rho(rho, 1.0), l) - i0_quadrature(rho, l, 1.0, 1e-12)) < 1e-9);
    }
}

TEST_CASE("property: I0 is non-decreasing")
{
    gen::Source src(32);
    for (int i = 0; i < gen::kCases; ++i) {
        const double kappa = src.kappa();
        const int l = src.integer(0, 5);
        const auto fam = family(kappa, l, 1.0);
        const double a = src.log_uniform(0.01, 50.0);
        const double b = a * src.uniform(1.0, 2.0);
        INFO("kappa=" << kappa << " l=" << l << " a=" << a << " b=" << b);
        CHECK(fam.i0(b) >= fam.i0(a));
        CHECK(fam.i0(a) >= 0.0);
    }
}

TEST_CASE("property: Riccati equation for V, extended precision oracle")
{
    gen::Source src(33);
    for (int i = 0; i < gen::kCases; ++i) {
        const long double kappa = src.kappa();
        const int l = src.integer(0, 2);
        const long double lambda = src.lambda();
        const long double rho = src.uniform(0.1, 10.0);
        INFO("kappa=" << static_cast<double>(kappa) << " l=" << l << " lambda=" << static_cast<double>(lambda)
                      << " rho=" << static_cast<double>(rho));
        auto v = [&](long double r) { return kernels::v_general(r, l, kappa, lambda); };
        const long double vp = numerics::richardson_derivative(v, rho, 1, 0.1L * rho);
        const long double res = -vp + 2.0L * kernels::superpotential_w(rho, l, kappa) * v(rho) + 1.0L;
        CHECK(static_cast<double>(std::abs(res)) < 1e-6);
    }
}

TEST_CASE("property: general and particular superpotentials share U+")
{
    gen::Source src(34);
    for (int i = 0; i < gen::kCases; ++i) {
        const double kappa = src.kappa();
        const int l = src.integer(0, 2);
        const double lambda = src.lambda();
        const double rho = src.uniform(0.1, 10.0);
        INFO("kappa=" << kappa << " l=" << l << " lambda=" << lambda << " rho=" << rho);
        const auto fam = family(kappa, l, lambda);
        auto big_w = [&](double r) { return fam.superpotential_general(r); };
        const double wp = numerics::derivative(big_w, rho, 1, 0.1 * rho);
        CHECK(std::abs(wp + big_w(rho) * big_w(rho) - u_plus(rho, l, kappa)) < 1e-6);
        CHECK(std::abs(big_w(rho) - (1.0 / fam.v_general(rho) + superpotential_w(rho, l, kappa))) < 1e-12);
    }
}

TEST_CASE("property: U_bos approaches U- as lambda grows")
{
    gen::Source src(35);
    const auto grid = numerics::linspace(0.1, 5.0, 200);
    for (int i = 0; i < 40; ++i) {
        const double kappa = src.kappa();
        const int l = src.integer(0, 3);
        const double lambda = src.log_uniform(0.1, 100.0);
        INFO("kappa=" << kappa << " l=" << l << " lambda=" << lambda);
        auto gap = [&](double lam) {
            const auto fam = family(kappa, l, lam);
            double m = 0.0;
            for (const double r : grid) m = std::max(m, std::abs(fam.u_bosonic(r) - u_minus(r, l, kappa)));
            return m;
        };
        CHECK(gap(10.0 * lambda) < gap(lambda));
    }
}

}
