#include "dosusy/fullline.hpp"

#include "dosusy/do_core.hpp"
#include "dosusy/errors.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace dosusy::fullline {

namespace {

double sech2(double x)
{
    const double c = std::cosh(x);
    return 1.0 / (c * c);
}

void require_positive_rho(double rho, const char* who)
{
    if (!(rho > 0.0)) {
        throw DomainError(std::string(who) + ": rho must be positive");
    }
}

} // namespace

double langer_x(double rho)
{
    require_positive_rho(rho, "langer_x");
    return std::log(rho);
}

double langer_rho(double x)
{
    return std::exp(x);
}

double langer_wavefunction(double u_value, double rho)
{
    require_positive_rho(rho, "langer_wavefunction");
    return u_value / std::sqrt(rho);
}

double rm_potential(double x, int n_b)
{
    if (n_b < 0) {
        throw DomainError("rm_potential: n_b must be non-negative");
    }
    return -static_cast<double>(n_b) * (n_b + 1.0) * sech2(x);
}

std::vector<double> rm_spectrum(int n_b)
{
    if (n_b < 1) {
        throw DomainError("rm_spectrum: n_b must be >= 1");
    }
    std::vector<double> levels;
    for (int k = n_b; k >= 1; --k) {
        levels.push_back(-static_cast<double>(k) * k);
    }
    return levels;
}

double rm_superpotential(double x, int n_b)
{
    return n_b * std::tanh(x);
}

double rm_partner_potential(double x, int n_b)
{
    return -static_cast<double>(n_b) * (n_b - 1.0) * sech2(x);
}

bool is_strict_branch(double lambda0)
{
    return lambda0 > 0.0;
}

double rm_family_shift(double lambda0)
{
    if (std::isnan(lambda0) || (lambda0 >= -1.0 && lambda0 <= 0.0)) {
        throw DomainError("rm_family_shift: lambda0 must be > 0 or < -1");
    }
    if (std::isinf(lambda0)) {
        return 0.0;
    }
    return 0.5 * std::log1p(1.0 / lambda0);
}

double rm_family_single(double x, double lambda0)
{
    return -2.0 * sech2(x + rm_family_shift(lambda0));
}

double rescale_radius(double R, double lambda0)
{
    if (!(R > 0.0) || !(lambda0 > 0.0)) {
        throw DomainError("rescale_radius: R and lambda0 must be positive");
    }
    if (std::isinf(lambda0)) {
        return R;
    }
    return R * std::sqrt(lambda0 / (lambda0 + 1.0));
}

double rescale_coordinate(double rho_inf, double lambda0)
{
    if (!(rho_inf > 0.0) || !(lambda0 > 0.0)) {
        throw DomainError("rescale_coordinate: rho and lambda0 must be positive");
    }
    if (std::isinf(lambda0)) {
        return rho_inf;
    }
    return std::sqrt(1.0 + 1.0 / lambda0) * rho_inf;
}

double halfline_superpartner(double rho, int l)
{
    if (!(rho >= kRhoMin)) {
        throw DomainError("halfline_superpartner: rho must be >= 1e-12");
    }
    if (l < 0) {
        throw DomainError("halfline_superpartner: l must be non-negative");
    }
    const double d = 1.0 + rho * rho;
    return l * (l + 1.0) / (rho * rho) - (2.0 * l + 1.0) * (2.0 * l - 1.0) / (d * d);
}

double halfline_superpotential(double rho, int l)
{
    if (l < 0) {
        throw DomainError("halfline_superpotential: l must be non-negative");
    }
    const int n = l + 1;
    return (0.5 - n) * xi_of_rho(rho, 1.0);
}

double aufbau_rm_potential(double x, int N)
{
    if (N < 1 || N % 2 == 0) {
        throw DomainError("aufbau_rm_potential: N must be a positive odd integer");
    }
    return -static_cast<double>(N) * (N + 1.0) / 4.0 * sech2(0.5 * x);
}

std::vector<double> aufbau_spectrum(int N)
{
    if (N < 1 || N % 2 == 0) {
        throw DomainError("aufbau_spectrum: N must be a positive odd integer");
    }
    std::vector<double> levels;
    for (int k = N; k >= 1; --k) {
        levels.push_back(-0.25 * k * k);
    }
    return levels;
}

RmProblem RmProblem::fisheye(int n, double lambda0)
{
    if (n < 1) {
        throw DomainError("RmProblem::fisheye: n must be >= 1");
    }
    if (!std::isinf(lambda0)) {
        if (n != 1) {
            throw DomainError("RmProblem::fisheye: the lambda0 family is the single-well (n = 1) case");
        }
        rm_family_shift(lambda0);  // validates
    }
    RmProblem p;
    p.variant_ = Variant::fisheye;
    p.n_b_ = n + 0.5;
    p.n_b_int_ = n;
    p.lambda0_ = lambda0;
    return p;
}

RmProblem RmProblem::aufbau(int l)
{
    if (l < 0) {
        throw DomainError("RmProblem::aufbau: l must be non-negative");
    }
    RmProblem p;
    p.variant_ = Variant::aufbau;
    p.N_ = 2 * l + 1;
    return p;
}

double RmProblem::potential(double x) const
{
    if (variant_ == Variant::aufbau) {
        return aufbau_rm_potential(x, N_);
    }
    return rm_potential(x + (std::isinf(lambda0_) ? 0.0 : rm_family_shift(lambda0_)), n_b_int_);
}

std::vector<double> RmProblem::spectrum() const
{
    return variant_ == Variant::aufbau ? aufbau_spectrum(N_) : rm_spectrum(n_b_int_);
}

numerics::ShootingConfig RmProblem::shooting_config() const
{
    numerics::ShootingConfig cfg;
    if (variant_ == Variant::aufbau) {
        // sech^2(x/2) is twice as wide and the shallowest level -1/4 decays
        // only like e^{-|x|/2}.
        cfg.x_min = -48.0;
        cfg.x_max = 48.0;
        cfg.points = 16001;
        cfg.e_lo = -0.25 * N_ * (N_ + 1.0) - 1.0;
    } else {
        const double shift = std::isinf(lambda0_) ? 0.0 : rm_family_shift(lambda0_);
        cfg.x_min = -12.0 - shift;
        cfg.x_max = 12.0 - shift;
        cfg.e_lo = -static_cast<double>(n_b_int_) * (n_b_int_ + 1.0) - 1.0;
    }
    cfg.e_hi = -1e-3;
    cfg.tol = 1e-8;
    return cfg;
}

std::vector<double> RmProblem::shoot() const
{
    return numerics::shooting_bound_states([this](double x) { return potential(x); },
                                           shooting_config(), static_cast<int>(spectrum().size()) + 1);
}

} // namespace dosusy::fullline
