#include "dosusy/errors.hpp"
#include "dosusy/fisheye.hpp"
#include "dosusy/numerics.hpp"
#include "gen.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace dosusy;
using namespace dosusy::fisheye;
using doctest::Approx;

namespace {

double peak_ratio(int l, double lambda, double rho_max)
{
    const FishEyeFamily fe(l, lambda);
    double m = 0.0;
    for (const double rho : numerics::linspace(0.01, rho_max, 300)) m = std::max(m, std::abs(fe.relative_ratio(rho)));
    return m;
}

} // namespace

TEST_SUITE("fisheye") {

TEST_CASE("Maxwell limit of the potential family")
{
    CHECK(FishEyeFamily(0, 1e9).v_family(1.0) == Approx(-0.75).epsilon(1e-8));
    const FishEyeFamily fe(1, 1.0);
    CHECK(fe.v_family(1.0) == Approx(fe.family().u_bosonic(1.0) - 2.0).epsilon(1e-13));
    // Far tail: both potentials decay as rho^-4 and their difference is tiny.
    CHECK(std::abs(fe.v_family(1e3)) < 1e-8);
    CHECK_THROWS_AS(fe.v_family(0.0), DomainError);
    CHECK_THROWS_AS(FishEyeFamily(1, 0.0), DomainError);
    CHECK_THROWS_AS(FishEyeFamily(-1, 1.0), DomainError);
}

TEST_CASE("Maxwell index")
{
    CHECK(index_maxwell(0.0, 0) == Approx(2.0 * std::sqrt(3.0)).epsilon(1e-15));
    CHECK(index_maxwell(1.0, 1) == Approx(std::sqrt(15.0) / 3.0).epsilon(1e-15));
    // n(0) = 2 sqrt((l + 3/2)/(l + 1/2)) decreases toward 2.
    CHECK(index_maxwell(0.0, 50) == Approx(2.0 * std::sqrt(51.5 / 50.5)).epsilon(1e-15));
    CHECK(index_maxwell(0.0, 50) < index_maxwell(0.0, 49));
    CHECK(std::abs(index_maxwell(0.0, 1000) - 2.0) < 1e-3);
    CHECK_THROWS_AS(index_maxwell(-0.1, 0), DomainError);
}

TEST_CASE("relative ratio and isospectral index")
{
    for (int l = 0; l <= 3; ++l) {
        const FishEyeFamily fe(l, 1e9);
        for (const double rho : {0.1, 1.0, 2.5}) {
            CHECK(std::abs(fe.relative_ratio(rho)) < 1e-8);
            CHECK(fe.index_iso(rho) == Approx(fe.index_maxwell(rho)).epsilon(1e-8));
        }
    }
    const FishEyeFamily fe(1, 1.0);
    CHECK(fe.index_iso(1.0) == Approx(index_maxwell(1.0, 1) * (1.0 + fe.relative_ratio(1.0))).epsilon(1e-15));
    CHECK(fe.relative_ratio(2.5) < 0.0);
    CHECK_THROWS_AS(fe.relative_ratio(0.0), DomainError);
}

TEST_CASE("exact and first-order index differ by the Taylor remainder")
{
    const FishEyeFamily fe(1, 1.0);
    // exact = n sqrt(1 + 2r), first order = n (1 + r); Lagrange remainder
    // n r^2 (1 + 2 xi)^{-3/2} / 2 with xi between 0 and r.
    for (const double rho : default_figure_grid()) {
        INFO("rho=" << rho);
        const double r = fe.relative_ratio(rho);
        const double diff = std::abs(fe.index_iso(rho, IndexMode::exact) - fe.index_iso(rho, IndexMode::first_order));
        const double bound = 0.5 * r * r * std::max(1.0, std::pow(1.0 + 2.0 * r, -1.5)) * fe.index_maxwell(rho);
        CHECK(diff <= bound * (1.0 + 1e-12) + 1e-15);
    }
}

TEST_CASE("exact index is undefined where V_1 >= 0")
{
    const FishEyeFamily fe(0, 0.05);
    bool threw = false;
    for (const double rho : numerics::linspace(0.5, 6.0, 200)) {
        if (fe.v_family(rho) >= 0.0) {
            CHECK_THROWS_AS(fe.index_iso(rho, IndexMode::exact), DomainError);
            threw = true;
            break;
        }
    }
    CHECK(threw);
}

TEST_CASE("ratio stays at the percent level inside the lens and damps with l")
{
    for (const double lambda : {1.0, 10.0}) {
        INFO("lambda=" << lambda);
        CHECK(peak_ratio(1, lambda, 1.0) <= 0.10);
        CHECK(peak_ratio(2, lambda, 1.0) <= 0.10);
        CHECK(peak_ratio(2, lambda, 3.0) < peak_ratio(1, lambda, 3.0));
    }
}

TEST_CASE("inflection points")
{
    const auto grid = default_figure_grid();
    const double step = grid[1] - grid[0];
    const auto base = find_inflection(FishEyeFamily(0, 1e9), grid);
    REQUIRE(base.has_value());
    CHECK(std::abs(*base - 1.0 / std::sqrt(3.0)) < 2.0 * step);

    const auto r11 = find_inflection(FishEyeFamily(1, 1.0), grid);
    REQUIRE(r11.has_value());
    CHECK(*r11 > 0.0);
    CHECK(*r11 <= 1.0);

    const auto r0 = find_inflection(FishEyeFamily(0, 10.0), grid);
    REQUIRE(r0.has_value());
    CHECK(*r0 <= 1.0);
    CHECK(std::abs(*r0 - *base) > step);

    CHECK_THROWS_AS(find_inflection(FishEyeFamily(1, 1.0), numerics::linspace(0.01, 3.0, 99)), GridError);
    CHECK_THROWS_AS(find_inflection(FishEyeFamily(1, 1.0), numerics::linspace(0.01, 0.9, 200)), GridError);
}

TEST_CASE("figure tables")
{
    const auto grid = default_figure_grid();
    CHECK(grid.size() == 300);
    CHECK(grid.front() == 0.01);
    CHECK(grid.back() == 3.0);

    const auto t = figure_table(1, 1.0, grid);
    CHECK(t.l == 1);
    CHECK(t.lambda == 1.0);
    REQUIRE(t.n_iso.size() == grid.size());
    CHECK(t.n_maxwell.size() == grid.size());
    CHECK(t.ratio_minus_one.size() == grid.size());
    CHECK(t.f_bos_squared.size() == grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(t.n_maxwell[i] > 0.0);
        CHECK(t.n_iso[i] > 0.0);
        CHECK(t.f_bos_squared[i] > 0.0);
    }
    auto peak = [](const FigureTable& tab) {
        double m = 0.0;
        for (const double r : tab.ratio_minus_one) m = std::max(m, std::abs(r));
        return m;
    };
    CHECK(peak(figure_table(2, 10.0, grid)) < peak(figure_table(2, 1.0, grid)));

    // The first-order l = 0 index crosses zero near rho = 2.1 for lambda = 1.
    CHECK_THROWS_AS(figure_table(0, 1.0, grid), DomainError);
    CHECK_THROWS_AS(figure_table(1, 1.0, {0.5}), GridError);
}

TEST_CASE("f_bos squared peaks near the surface for l >= 1")
{
    const auto grid = default_figure_grid();
    for (int l = 1; l <= 2; ++l) {
        for (const double lambda : {1.0, 10.0}) {
            INFO("l=" << l << " lambda=" << lambda);
            const auto t = figure_table(l, lambda, grid);
            const auto it = std::max_element(t.f_bos_squared.begin(), t.f_bos_squared.end());
            const double argmax = grid[static_cast<std::size_t>(it - t.f_bos_squared.begin())];
            CHECK(argmax >= 0.5);
            CHECK(argmax <= 1.5);
        }
    }
}

TEST_CASE("property: centrifugal subtraction")
{
    gen::Source src(41);
    for (int i = 0; i < gen::kCases; ++i) {
        const int l = src.integer(0, 4);
        const double lambda = src.lambda();
        const double rho = src.log_uniform(0.05, 20.0);
        INFO("l=" << l << " lambda=" << lambda << " rho=" << rho);
        const FishEyeFamily fe(l, lambda);
        const double lhs = fe.v_family(rho) + l * (l + 1.0) / (rho * rho);
        CHECK(std::abs(lhs - fe.family().u_bosonic(rho)) <= 1e-10 * std::max(1.0, std::abs(lhs)));
    }
}

TEST_CASE("property: ratio definition")
{
    gen::Source src(42);
    for (int i = 0; i < gen::kCases; ++i) {
        const int l = src.integer(0, 4);
        const double lambda = src.lambda();
        const double rho = src.log_uniform(0.01, 10.0);
        INFO("l=" << l << " lambda=" << lambda << " rho=" << rho);
        const FishEyeFamily fe(l, lambda);
        CHECK(fe.v_maxwell(rho) + fe.v_lambda(rho) == Approx(-fe.v_family(rho)).epsilon(1e-13).scale(1.0));
        CHECK(fe.relative_ratio(rho) == Approx(0.5 * fe.v_lambda(rho) / fe.v_maxwell(rho)).epsilon(1e-15));
    }
}

TEST_CASE("property: index decreases with rho for large lambda")
{
    gen::Source src(43);
    for (int i = 0; i < 50; ++i) {
        const int l = src.integer(0, 4);
        const double a = src.uniform(0.0, 5.0);
        const double b = a + src.uniform(0.01, 1.0);
        INFO("l=" << l << " a=" << a << " b=" << b);
        CHECK(index_maxwell(a, l) > index_maxwell(b, l));
    }
}

}
