#pragma once

// One-parameter strictly isospectral bosonic family on the half line, built
// from the general solution of the fermionic Riccati equation.

#include "dosusy/do_core.hpp"

#include <functional>

namespace dosusy {

/// beta = arctan(rho^kappa), the trigonometric variable of the I0 integral.
double beta_of_rho(double rho, double kappa);

/// I0(rho) = int_0^rho f^2 by adaptive quadrature to absolute `tol`.
double i0_quadrature(double rho, int l, double kappa, double tol = 1e-13);

/// Closed-form I0 for kappa = 1/2 as a function of beta in [0, pi/2):
///
///   I0 = 2 int_0^beta sin^{4l+5} cos^{4l-3}
///      = 2 sum_k (-1)^{k+1} C(2l+2,k) [cos^{p_k} beta - 1] / p_k,  p_k = 2k+4l-2,
///
/// with the p_k = 0 term (l = 0, k = 1) replaced by 2 ln cos beta.
double i0_closed_half(double beta, int l);

/// Closed-form I0 for kappa = 1 as a function of beta in [0, pi/2):
/// tan beta - beta for l = 0, and for l >= 1 the Fourier integral of
/// sin^{2l+2} cos^{2l-2},  a_0 beta + sum_j a_j sin(2j beta) / (2j).
double i0_closed_one(double beta, int l);

/// The isospectral family for one (kappa, l, lambda) in the nodeless sector.
/// Uses the closed forms for kappa in {1/2, 1} and quadrature otherwise.
class IsoFamily {
public:
    enum class I0Route { closed_half, closed_one, quadrature };

    /// Throws DomainError unless `params` is in the nodeless sector.
    explicit IsoFamily(const DoParams& params);

    const DoParams& params() const noexcept { return params_; }
    I0Route route() const noexcept { return route_; }

    /// I0(rho) by the selected route.
    double i0(double rho) const;

    /// V = f^-2 (lambda + I0): general solution of -V' + 2 W V = -1.
    double v_general(double rho) const;

    /// General superpotential W + f^2 / (I0 + lambda).
    double superpotential_general(double rho) const;

    /// U_bos = U^- - 4 f f' / (I0 + lambda) + 2 f^4 / (I0 + lambda)^2.
    double u_bosonic(double rho) const;

    /// The lambda-dependent part of U_bos alone.
    double u_bosonic_correction(double rho) const;

    /// Damped radial factor f / (I0 + lambda); zero mode of U_bos.
    double radial_factor_bosonic(double rho) const;

private:
    DoParams params_;
    I0Route route_;
    std::function<double(double)> i0_;
};

} // namespace dosusy
