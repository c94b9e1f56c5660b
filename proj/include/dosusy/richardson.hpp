#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>
#include <limits>

namespace dosusy::numerics {

/// Five-point central difference of order 1 or 2 at step h.
template <std::floating_point Real, class F>
Real five_point(const F& f, Real x, Real h, int order)
{
    const Real fm2 = f(x - 2 * h);
    const Real fm1 = f(x - h);
    const Real fp1 = f(x + h);
    const Real fp2 = f(x + 2 * h);
    if (order == 1) {
        return (Real(8) * (fp1 - fm1) - (fp2 - fm2)) / (Real(12) * h);
    }
    const Real f0 = f(x);
    return (-fp2 + Real(16) * fp1 - Real(30) * f0 + Real(16) * fm1 - fm2) / (Real(12) * h * h);
}

/// Richardson tableau over halved steps h0, h0/2, ... on the five-point
/// stencil (error series h^4, h^6, ...). Returns the entry with the smallest
/// error estimate; from the fourth level on, stops once round-off makes the
/// diagonal diverge. Returns
/// NaN if h0 is below the step floor 1e-10 max(1, |x|).
template <std::floating_point Real, class F>
Real richardson_derivative(const F& f, Real x, int order, Real h0)
{
    const Real floor = Real(1e-10) * std::max(Real(1), std::abs(x));
    if (!(h0 >= floor)) {
        return std::numeric_limits<Real>::quiet_NaN();
    }
    constexpr int kLevels = 10;
    std::array<std::array<Real, kLevels>, kLevels> table{};
    Real h = h0;
    table[0][0] = five_point(f, x, h, order);
    Real best = table[0][0];
    Real best_err = std::numeric_limits<Real>::infinity();

    for (int k = 1; k < kLevels; ++k) {
        h /= 2;
        if (h < floor) {
            break;
        }
        table[k][0] = five_point(f, x, h, order);
        Real factor = 16;
        for (int j = 1; j <= k; ++j) {
            table[k][j] = table[k][j - 1] + (table[k][j - 1] - table[k - 1][j - 1]) / (factor - 1);
            factor *= 4;
            const Real err = std::max(std::abs(table[k][j] - table[k][j - 1]),
                                      std::abs(table[k][j] - table[k - 1][j - 1]));
            if (err <= best_err) {
                best_err = err;
                best = table[k][j];
            }
        }
        if (k >= 3 && std::abs(table[k][k] - table[k - 1][k - 1]) >= 2 * best_err) {
            break;
        }
    }
    return best;
}

} // namespace dosusy::numerics
