#pragma once

// Full-line picture: the Langer map x = ln rho, phi = e^{-x/2} u, the
// Rosen-Morse (sech^2) problem it produces, its translated one-parameter
// family, and the return to the half line.

#include "dosusy/numerics.hpp"

#include <limits>
#include <vector>

namespace dosusy::fullline {

/// x = ln rho.
double langer_x(double rho);
/// rho = e^x.
double langer_rho(double x);
/// phi = rho^{-1/2} u.
double langer_wavefunction(double u_value, double rho);

/// -n(n+1) / cosh^2 x.
double rm_potential(double x, int n_b);
/// Analytic bound states -k^2, k = n_b..1, ascending.
std::vector<double> rm_spectrum(int n_b);
/// W = n_b tanh x.
double rm_superpotential(double x, int n_b);
/// Superpartner -n_b(n_b-1) / cosh^2 x (energy zero at -n_b^2 shifted out).
double rm_partner_potential(double x, int n_b);

/// True for the strictly isospectral branch lambda0 > 0.
bool is_strict_branch(double lambda0);

/// Shift s(lambda0) = ln(1 + 1/lambda0) / 2 of the translated well.
/// Defined for lambda0 > 0 and for lambda0 < -1 (limit studies);
/// throws DomainError on [-1, 0].
double rm_family_shift(double lambda0);

/// -2 / cosh^2(x + s(lambda0)); one bound state at -1 for every admissible lambda0.
double rm_family_single(double x, double lambda0);

/// R sqrt(lambda0 / (lambda0 + 1)); lambda0 = +inf returns R.
double rescale_radius(double R, double lambda0);
/// rho_lambda0 = sqrt(1 + 1/lambda0) rho_inf; lambda0 = +inf returns rho_inf.
double rescale_coordinate(double rho_inf, double lambda0);

/// Half-line superpartner after the full-line detour:
/// l(l+1)/rho^2 - (2l+1)(2l-1)/(1+rho^2)^2.
double halfline_superpartner(double rho, int l);
/// Its superpotential (1/2 - n) xi(rho), n = l + 1, kappa = 1.
double halfline_superpotential(double rho, int l);

/// -N(N+1) / (4 cosh^2(x/2)) for odd N = 2l+1.
double aufbau_rm_potential(double x, int N);
/// Analytic bound states -k^2/4, k = N..1, ascending.
std::vector<double> aufbau_spectrum(int N);

enum class Variant { fisheye, aufbau };

/// One full-line Rosen-Morse instance with its analytic spectrum and the
/// box used to check it by shooting.
class RmProblem {
public:
    /// Fish-eye image of the nodeless state with principal number n:
    /// n_b = n + 1/2, integer part n used in the well. A finite lambda0
    /// selects the translated single-well family and requires n = 1.
    static RmProblem fisheye(int n, double lambda0 = std::numeric_limits<double>::infinity());
    /// Aufbau image for orbital number l: N = 2l + 1.
    static RmProblem aufbau(int l);

    Variant variant() const noexcept { return variant_; }
    double n_b() const noexcept { return n_b_; }
    int n_b_int() const noexcept { return n_b_int_; }
    int N_aufbau() const noexcept { return N_; }
    double lambda0() const noexcept { return lambda0_; }

    double potential(double x) const;
    std::vector<double> spectrum() const;
    /// Box and bracket suited to this well's width and depth.
    numerics::ShootingConfig shooting_config() const;
    /// Levels found by the shooting oracle.
    std::vector<double> shoot() const;

private:
    RmProblem() = default;
    Variant variant_ = Variant::fisheye;
    double n_b_ = 1.5;
    int n_b_int_ = 1;
    int N_ = 1;
    double lambda0_ = std::numeric_limits<double>::infinity();
};

} // namespace dosusy::fullline
