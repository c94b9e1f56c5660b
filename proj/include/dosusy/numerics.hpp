#pragma once

// Independent numerical oracles. Everything here works on plain function
// handles so that any potential or profile in the library can be checked
// without adapters.

#include "dosusy/profile.hpp"

#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace dosusy::numerics {

using RealFunction = std::function<double(double)>;

struct QuadratureResult {
    double value = 0;
    double error_estimate = 0;
    int subdivisions = 0;
};

/// Globally adaptive 7/15-point Gauss-Kronrod quadrature with an absolute
/// error target. Throws ConvergenceError once `max_subdivisions` panels are
/// in use without meeting `tol`.
QuadratureResult integrate_adaptive(const RealFunction& f, double a, double b, double tol,
                                    int max_subdivisions = 2000);

/// Central-difference derivative (order 1 or 2) from a five-point stencil,
/// refined by Richardson extrapolation over successively halved steps.
double derivative(const RealFunction& f, double x, int order, double h0 = 1e-2);

/// March -u'' + U(x) u = 0 across a uniform grid from the seeds u(grid[0]) and
/// u(grid[1]). Zero seeds at a point where U is singular are allowed: the
/// potential is not evaluated where u vanishes exactly.
Profile numerov_zero_energy(const RealFunction& potential, std::span<const double> grid,
                            double u0, double u1);

struct ShootingConfig {
    double x_min = -12.0;
    double x_max = 12.0;
    int points = 4001;          // odd, so that the midpoint is a node
    double e_lo = -50.0;
    double e_hi = -1e-3;
    double tol = 1e-8;
};

/// Bound states of -u'' + V(x) u = E u with Dirichlet walls at the domain
/// edges, ascending. Each level is isolated by node-count bisection and then
/// polished on the Wronskian of left and right Numerov solutions matched at
/// the midpoint. At most `max_states` levels are returned.
std::vector<double> shooting_bound_states(const RealFunction& potential,
                                          const ShootingConfig& config, int max_states);

/// Number of bound states below `energy` (Sturm node count on the box).
int count_states_below(const RealFunction& potential, const ShootingConfig& config,
                       double energy);

/// Uniform grid of `n` points on [a, b].
std::vector<double> linspace(double a, double b, int n);

/// `n` logarithmically spaced points on [a, b], a > 0.
std::vector<double> logspace(double a, double b, int n);

} // namespace dosusy::numerics
