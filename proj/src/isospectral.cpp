#include "dosusy/isospectral.hpp"

#include "dosusy/errors.hpp"
#include "dosusy/kernels.hpp"
#include "dosusy/numerics.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace dosusy {

namespace {

void require_beta(double beta, const char* who)
{
    if (!(beta >= 0.0 && beta < std::numbers::pi / 2)) {
        throw DomainError(std::string(who) + ": beta must lie in [0, pi/2)");
    }
}

} // namespace

double beta_of_rho(double rho, double kappa)
{
    if (!(rho >= kRhoMin)) {
        throw DomainError("beta_of_rho: rho must be >= 1e-12");
    }
    if (!(kappa > 0.0)) {
        throw DomainError("beta_of_rho: kappa must be positive");
    }
    return std::atan(std::pow(rho, kappa));
}

double i0_quadrature(double rho, int l, double kappa, double tol)
{
    if (!(rho >= kRhoMin)) {
        throw DomainError("i0_quadrature: rho must be >= 1e-12");
    }
    if (l < 0 || !(kappa > 0.0)) {
        throw DomainError("i0_quadrature: need l >= 0 and kappa > 0");
    }
    const double exponent = (2.0 * l + 1.0) / kappa;
    auto f2 = [=](double t) {
        if (t <= 0.0) {
            return 0.0;
        }
        return std::pow(t, 2.0 * l + 2.0) * std::pow(1.0 + std::pow(t, 2.0 * kappa), -exponent);
    };
    return numerics::integrate_adaptive(f2, 0.0, rho, tol).value;
}

double i0_closed_half(double beta, int l)
{
    require_beta(beta, "i0_closed_half");
    if (l < 0) {
        throw DomainError("i0_closed_half: l must be non-negative");
    }
    if (beta == 0.0) {
        return 0.0;
    }
    return kernels::i0_half_from_log_cos(std::log(std::cos(beta)), l);
}

double i0_closed_one(double beta, int l)
{
    require_beta(beta, "i0_closed_one");
    if (l < 0) {
        throw DomainError("i0_closed_one: l must be non-negative");
    }
    if (beta == 0.0) {
        return 0.0;
    }
    return kernels::i0_one_from_beta(beta, l);
}

IsoFamily::IsoFamily(const DoParams& params) : params_(params), route_(I0Route::quadrature)
{
    if (!params.is_nodeless()) {
        throw DomainError("IsoFamily: only the radially nodeless sector is supported");
    }
    const double kappa = params.kappa();
    const int l = params.l();
    if (kappa == 0.5) {
        route_ = I0Route::closed_half;
        i0_ = [l](double rho) { return kernels::i0_stable(rho, l, 0.5); };
    } else if (kappa == 1.0) {
        route_ = I0Route::closed_one;
        i0_ = [l](double rho) { return kernels::i0_stable(rho, l, 1.0); };
    } else {
        i0_ = [l, kappa](double rho) { return i0_quadrature(rho, l, kappa, 1e-11); };
    }
}

double IsoFamily::i0(double rho) const
{
    if (!(rho >= kRhoMin)) {
        throw DomainError("IsoFamily::i0: rho must be >= 1e-12");
    }
    return i0_(rho);
}

double IsoFamily::v_general(double rho) const
{
    const double f = radial_factor_f(rho, params_.l(), params_.kappa());
    return (params_.lambda() + i0(rho)) / (f * f);
}

double IsoFamily::superpotential_general(double rho) const
{
    const double f = radial_factor_f(rho, params_.l(), params_.kappa());
    return superpotential_w(rho, params_.l(), params_.kappa()) + f * f / (i0(rho) + params_.lambda());
}

double IsoFamily::u_bosonic_correction(double rho) const
{
    const int l = params_.l();
    const double kappa = params_.kappa();
    const double f = radial_factor_f(rho, l, kappa);
    const double fp = radial_factor_f_prime(rho, l, kappa);
    const double g = f / (i0(rho) + params_.lambda());
    // -4 f f'/(I+lambda) + 2 f^4/(I+lambda)^2, grouped through g = f/(I+lambda)
    return -4.0 * fp * g + 2.0 * (f * g) * (f * g);
}

double IsoFamily::u_bosonic(double rho) const
{
    return u_minus(rho, params_.l(), params_.kappa()) + u_bosonic_correction(rho);
}

double IsoFamily::radial_factor_bosonic(double rho) const
{
    return radial_factor_f(rho, params_.l(), params_.kappa()) / (i0(rho) + params_.lambda());
}

} // namespace dosusy
