#include "dosusy/do_core.hpp"
#include "dosusy/errors.hpp"
#include "dosusy/numerics.hpp"
#include "dosusy/verify.hpp"
#include "gen.hpp"

#include <doctest.h>

#include <cmath>

using namespace dosusy;
using doctest::Approx;

TEST_SUITE("do-core") {

TEST_CASE("coupling")
{
    CHECK(coupling_w(1, 1.0) == Approx(3.0));
    CHECK(coupling_w(1, 0.5) == Approx(2.0));
    CHECK(coupling_w(2, 1.0) == Approx(15.0));
    CHECK(nodeless_coupling(1, 1.0) == Approx(15.0));
    CHECK(nodeless_coupling(2, 0.5) == Approx(5.0 * 6.0));
    CHECK_THROWS_AS(coupling_w(0, 1.0), DomainError);
    CHECK_THROWS_AS(coupling_w(1, 0.0), DomainError);
    CHECK_THROWS_AS(coupling_w(1, -1.0), DomainError);
}

TEST_CASE("potential and xi")
{
    CHECK(potential_v(1.0, 1.0, 3.0) == Approx(-0.75).epsilon(1e-15));
    CHECK(std::abs(potential_v(1e6, 1.0, 3.0)) < 1e-11);
    CHECK(potential_v(1.0, 0.5, 2.0) == Approx(-0.5).epsilon(1e-15));
    CHECK(xi_of_rho(1.0, 0.7) == Approx(0.0).scale(1.0));
    CHECK(xi_of_rho(1e-8, 1.0) == Approx(1.0).epsilon(1e-15));
    CHECK(xi_of_rho(2.0, 1.0) == Approx(-0.6).epsilon(1e-15));
    CHECK_THROWS_AS(potential_v(0.0, 1.0, 3.0), DomainError);
    CHECK_THROWS_AS(xi_of_rho(-1.0, 1.0), DomainError);
    CHECK_THROWS_AS(potential_v(5e-13, 1.0, 3.0), DomainError);
}

TEST_CASE("radial states")
{
    CHECK(radial_wavefunction(1.0, DoParams(1.0, 0, 1)) == Approx(std::sqrt(0.5)).epsilon(1e-15));
    CHECK(std::abs(radial_wavefunction(1e-8, DoParams(1.0, 1, 2))) < 1e-7);
    CHECK(std::abs(radial_wavefunction(1e-8, DoParams(0.5, 1, 3))) < 1e-7);
    CHECK(radial_wavefunction(2.0, DoParams(1.0, 1, 2)) == Approx(2.0 * std::pow(5.0, -1.5)).epsilon(1e-15));
    CHECK(radial_factor_f(1.0, 0, 1.0) == Approx(std::sqrt(0.5)).epsilon(1e-15));
    CHECK(radial_factor_f(1e-10, 2, 1.0) < 1e-29);
    CHECK(radial_factor_f(1.0, 1, 0.5) == Approx(0.125).epsilon(1e-15));
    // Excited sector: one radial node, Gegenbauer degree 1.
    const DoParams excited(1.0, 0, 2);
    CHECK(excited.gegenbauer_degree() == 1);
    CHECK(excited.radial() == 1);
    CHECK_FALSE(excited.is_nodeless());
    CHECK(radial_wavefunction(1.0, excited) == Approx(0.0).scale(1.0));
    CHECK(radial_wavefunction(0.5, excited) * radial_wavefunction(2.0, excited) < 0.0);
}

TEST_CASE("parameter validation")
{
    CHECK_THROWS_AS(DoParams(1.0, 2, 2), DomainError);  // degree negative
    CHECK_THROWS_AS(DoParams(0.75, 1, 2), DomainError); // degree not integral
    CHECK_THROWS_AS(DoParams(1.0, 0, 1, -0.5), DomainError);
    CHECK_THROWS_AS(DoParams(1.0, 0, 1, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(DoParams(-1.0, 0, 1), DomainError);
    CHECK_THROWS_AS(DoParams(1.0, -1, 1), DomainError);
    CHECK(DoParams::nodeless(0.5, 2).N() == 5);
    CHECK(DoParams::nodeless(1.0, 3).principal() == 4);
    CHECK(DoParams::nodeless(0.25, 1).N() == 5);
    CHECK_THROWS_AS(DoParams::nodeless(0.3, 1), DomainError);
    CHECK(DoParams::nodeless(1.0, 1).with_lambda(7.0).lambda() == 7.0);
}

TEST_CASE("superpotential and partners")
{
    CHECK(superpotential_w(1.0, 0, 1.0) == Approx(-0.5).epsilon(1e-15));
    CHECK(superpotential_w(1.0, 1, 1.0) == Approx(-0.5).epsilon(1e-15));
    CHECK(superpotential_w(2.0, 0, 1.0) == Approx(-0.1).epsilon(1e-15));
    CHECK(u_minus(1.0, 0, 1.0) == Approx(-0.75).epsilon(1e-14));
    CHECK(u_minus(1.0, 1, 1.0) == Approx(-1.75).epsilon(1e-14));
    CHECK(u_minus(1e4, 2, 1.0) == Approx(6.0 / 1e8).epsilon(1e-6));
    // rho = 1, l = 0: W = -1/2, W' = 1.
    const double w = superpotential_w(1.0, 0, 1.0);
    CHECK(u_plus(1.0, 0, 1.0) == Approx(superpotential_w_prime(1.0, 0, 1.0) + w * w).epsilon(1e-14));
    CHECK(u_plus(1.0, 0, 1.0) == Approx(1.25).epsilon(1e-14));
    CHECK(std::abs(u_plus(1e6, 0, 1.0)) < 1e-11);
    const double fd = numerics::derivative([](double r) { return superpotential_w(r, 1, 1.0); }, 0.5, 1, 0.05);
    const double w5 = superpotential_w(0.5, 1, 1.0);
    CHECK(u_plus(0.5, 1, 1.0) == Approx(fd + w5 * w5).epsilon(1e-9));
    CHECK(radial_factor_f_prime(0.7, 2, 0.5) == Approx(-superpotential_w(0.7, 2, 0.5) * radial_factor_f(0.7, 2, 0.5)));
}

TEST_CASE("degeneracy")
{
    CHECK(degeneracy(1) == 1);
    CHECK(degeneracy(2) == 4);
    CHECK(degeneracy(5) == 25);
}

TEST_CASE("zero mode of U- reproduces f")
{
    for (const double kappa : {0.5, 1.0}) {
        for (int l = 0; l <= 2; ++l) {
            INFO("kappa=" << kappa << " l=" << l);
            const double dev = verify::zero_mode_deviation([=](double r) { return u_minus(r, l, kappa); },
                                                           [=](double r) { return radial_factor_f(r, l, kappa); }, l);
            CHECK(dev < 1e-6);
        }
    }
}

TEST_CASE("property: log-derivative identity")
{
    gen::Source src(21);
    for (int i = 0; i < gen::kCases; ++i) {
        const double kappa = src.kappa();
        const int l = src.integer(0, 3);
        const double rho = src.log_uniform(0.05, 20.0);
        INFO("kappa=" << kappa << " l=" << l << " rho=" << rho);
        auto log_f = [=](double r) { return std::log(radial_factor_f(r, l, kappa)); };
        const double d = numerics::derivative(log_f, rho, 1, 0.2 * rho);
        CHECK(std::abs(superpotential_w(rho, l, kappa) + d) < 1e-8);
    }
}

TEST_CASE("property: U+ - U- = 2 W' and U- = W^2 - W'")
{
    gen::Source src(22);
    for (int i = 0; i < gen::kCases; ++i) {
        const double kappa = src.kappa();
        const int l = src.integer(0, 5);
        const double rho = src.log_uniform(0.01, 100.0);
        INFO("kappa=" << kappa << " l=" << l << " rho=" << rho);
        const double w = superpotential_w(rho, l, kappa);
        const double wp = superpotential_w_prime(rho, l, kappa);
        const double scale = std::max(1.0, w * w + std::abs(wp));
        CHECK(std::abs(u_plus(rho, l, kappa) - u_minus(rho, l, kappa) - 2.0 * wp) <= 1e-12 * scale);
        CHECK(std::abs(u_minus(rho, l, kappa) - (w * w - wp)) <= 1e-12 * scale);
    }
}

TEST_CASE("property: xi is decreasing and bounded")
{
    gen::Source src(23);
    for (int i = 0; i < gen::kCases; ++i) {
        const double kappa = src.uniform(0.1, 3.0);
        const double a = src.log_uniform(1e-3, 1e3);
        const double b = a * src.uniform(1.001, 3.0);
        INFO("kappa=" << kappa << " a=" << a << " b=" << b);
        CHECK(xi_of_rho(a, kappa) > xi_of_rho(b, kappa));
        CHECK(std::abs(xi_of_rho(a, kappa)) < 1.0);
    }
}

TEST_CASE("property: nodeless radial state is rho^-1 f")
{
    gen::Source src(24);
    for (int i = 0; i < gen::kCases; ++i) {
        const double kappa = src.kappa();
        const int l = src.integer(0, 4);
        const double rho = src.log_uniform(1e-3, 1e3);
        INFO("kappa=" << kappa << " l=" << l << " rho=" << rho);
        const double u = rho * radial_wavefunction(rho, DoParams::nodeless(kappa, l));
        CHECK(u == Approx(radial_factor_f(rho, l, kappa)).epsilon(1e-13));
    }
}

}
