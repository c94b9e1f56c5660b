#pragma once

// kappa = 1: the bosonic family of Maxwell fish-eye potentials and the
// generalized refractive-index profiles derived from it.

#include "dosusy/isospectral.hpp"

#include <optional>
#include <vector>

namespace dosusy::fisheye {

enum class IndexMode {
    first_order,  // n_M (1 + V_lambda / (2 V_M)), the default
    exact,        // n_M sqrt(1 + V_lambda / V_M) = sqrt(-V_1) / (l + 1/2)
};

/// Maxwell index normalized by (l + 1/2): sqrt((2l+1)(2l+3)) / ((l+1/2)(1+rho^2)).
/// Defined for rho >= 0.
double index_maxwell(double rho, int l);

class FishEyeFamily {
public:
    /// Throws DomainError for l < 0 or lambda <= 0.
    FishEyeFamily(int l, double lambda);

    int l() const noexcept { return family_.params().l(); }
    double lambda() const noexcept { return family_.params().lambda(); }
    const IsoFamily& family() const noexcept { return family_; }

    /// V_1 = -(2l+1)(2l+3)/(1+rho^2)^2 - 4 f f'/(I0+lambda) + 2 f^4/(I0+lambda)^2.
    double v_family(double rho) const;

    /// V_M: negative of the Maxwell term, (2l+1)(2l+3)/(1+rho^2)^2 > 0.
    double v_maxwell(double rho) const;

    /// V_lambda: negative of the lambda-dependent part of V_1. May be negative.
    double v_lambda(double rho) const;

    /// V_lambda / (2 V_M), i.e. n_iso/n_M - 1 to first order.
    double relative_ratio(double rho) const;

    double index_maxwell(double rho) const { return fisheye::index_maxwell(rho, l()); }

    /// Throws DomainError in exact mode where V_1 >= 0.
    double index_iso(double rho, IndexMode mode = IndexMode::first_order) const;

    double radial_factor_bosonic(double rho) const { return family_.radial_factor_bosonic(rho); }

private:
    IsoFamily family_;
};

/// Smallest rho* in (0, 1] where the second derivative of index_iso changes
/// sign, located on `grid` (>= 100 strictly increasing points, first point
/// > 0, last point >= 1) with a five-point stencil and linear interpolation
/// of the crossing. Throws GridError on a bad grid.
std::optional<double> find_inflection(const FishEyeFamily& family, const std::vector<double>& grid,
                                      IndexMode mode = IndexMode::first_order);

struct FigureTable {
    std::vector<double> grid;
    std::vector<double> n_maxwell;
    std::vector<double> n_iso;
    std::vector<double> ratio_minus_one;
    std::vector<double> f_bos_squared;
    int l = 0;
    double lambda = 0;
};

/// The four curves of the index figures on `grid` (rho > 0, increasing).
/// Throws DomainError if n_iso is not positive somewhere.
FigureTable figure_table(int l, double lambda, const std::vector<double>& grid,
                         IndexMode mode = IndexMode::first_order);

/// Default figure grid: 300 points on [0.01, 3].
std::vector<double> default_figure_grid();

} // namespace dosusy::fisheye
