#pragma once

// Formula kernels shared by the double-precision evaluators and by the
// extended-precision oracles in the test suites. No argument validation
// here; the public evaluators validate before calling in.

#include "dosusy/specfun.hpp"

#include <boost/math/special_functions/beta.hpp>

#include <cmath>
#include <concepts>
#include <cstddef>
#include <limits>
#include <vector>

namespace dosusy::kernels {

template <std::floating_point Real>
Real radial_factor_f(Real rho, int l, Real kappa)
{
    using std::pow;
    const Real exponent = Real(2 * l + 1) / (Real(2) * kappa);
    return pow(rho, Real(l + 1)) * pow(Real(1) + pow(rho, Real(2) * kappa), -exponent);
}

// W = (l s - (l+1)) / (rho (1+s)), s = rho^2kappa.
template <std::floating_point Real>
Real superpotential_w(Real rho, int l, Real kappa)
{
    const Real s = std::pow(rho, Real(2) * kappa);
    return (Real(l) * s - Real(l + 1)) / (rho * (Real(1) + s));
}

template <std::floating_point Real>
Real superpotential_w_prime(Real rho, int l, Real kappa)
{
    const Real s = std::pow(rho, Real(2) * kappa);
    const Real rho2 = rho * rho;
    return -Real(l) / rho2 +
           Real(2 * l + 1) * (Real(1) + (Real(1) + Real(2) * kappa) * s) /
               (rho2 * (Real(1) + s) * (Real(1) + s));
}

// kappa = 1/2: 2 sum_k (-1)^{k+1} C(2l+2,k) (c^{p_k} - 1)/p_k, p_k = 2k+4l-2,
// with the p_k = 0 term equal to ln c.
template <std::floating_point Real>
Real i0_half_from_log_cos(Real log_cos, int l)
{
    Real sum = 0;
    for (int k = 0; k <= 2 * l + 2; ++k) {
        const Real sign = (k % 2 == 0) ? Real(-1) : Real(1);
        const Real c = static_cast<Real>(binomial(2 * l + 2, k));
        const int p = 2 * k + 4 * l - 2;
        const Real term = (p == 0) ? log_cos : std::expm1(Real(p) * log_cos) / Real(p);
        sum += sign * c * term;
    }
    return Real(2) * sum;
}

// Cosine coefficients of sin^a cos^c (a, c even, c >= 0):
// sin^a cos^c = sum_{s=0}^{D} coeff[s] cos((2s - D) b),  D = a + c.
// Entries are integers over a power of two, hence exact.
inline std::vector<double> sin_cos_power_coefficients(int a, int c)
{
    const int degree = a + c;
    std::vector<double> coeff(static_cast<std::size_t>(degree + 1), 0.0);
    // (2i)^-a = (-1)^{a/2} 2^-a for even a.
    const double prefactor = ((a / 2) % 2 == 0 ? 1.0 : -1.0) * std::ldexp(1.0, -degree);
    for (int j = 0; j <= a; ++j) {
        const double sj = ((a - j) % 2 == 0 ? 1.0 : -1.0) * static_cast<double>(binomial(a, j));
        for (int m = 0; m <= c; ++m) {
            coeff[static_cast<std::size_t>(j + m)] += prefactor * sj * static_cast<double>(binomial(c, m));
        }
    }
    return coeff;
}

// kappa = 1: int_0^beta sin^{2l+2} cos^{2l-2}.
template <std::floating_point Real>
Real i0_one_from_beta(Real beta, int l)
{
    if (l == 0) {
        return std::tan(beta) - beta;
    }
    const auto coeff = sin_cos_power_coefficients(2 * l + 2, 2 * l - 2);
    const int degree = 4 * l;
    const int half = degree / 2;
    Real result = static_cast<Real>(coeff[static_cast<std::size_t>(half)]) * beta;
    for (int s = half + 1; s <= degree; ++s) {
        const int freq = 2 * s - degree;
        result += Real(2) * static_cast<Real>(coeff[static_cast<std::size_t>(s)]) *
                  std::sin(Real(freq) * beta) / Real(freq);
    }
    return result;
}

// Closed-form I0 from rho for kappa in {1/2, 1}.
template <std::floating_point Real>
Real i0_closed(Real rho, int l, Real kappa)
{
    if (kappa == Real(0.5)) {
        // tan^2 beta = rho, so ln cos beta = -ln(1 + rho)/2.
        return i0_half_from_log_cos(Real(-0.5) * std::log1p(rho), l);
    }
    if (l == 0) {
        return rho - std::atan(rho);
    }
    return i0_one_from_beta(std::atan(rho), l);
}

// I0 for kappa in {1/2, 1} in a form that keeps relative accuracy as
// rho -> 0, where the trigonometric sums above cancel down to rho^{2l+3}.
// With t = sin^2 beta the integrand becomes a beta density:
//   kappa = 1/2: I0 = B(t; 2l+3, 2l-1),      t = rho/(1+rho)
//   kappa = 1:   I0 = B(t; l+3/2, l-1/2)/2,  t = rho^2/(1+rho^2)
// l = 0 has a non-positive second parameter and uses the elementary forms,
// switching to their Taylor series below rho = 1/4.
template <std::floating_point Real>
Real i0_stable(Real rho, int l, Real kappa)
{
    using boost::math::beta;
    const bool half = kappa == Real(0.5);
    if (l >= 1) {
        if (half) {
            return beta(Real(2 * l + 3), Real(2 * l - 1), rho / (Real(1) + rho));
        }
        const Real r2 = rho * rho;
        return beta(Real(l) + Real(1.5), Real(l) - Real(0.5), r2 / (Real(1) + r2)) / Real(2);
    }
    if (rho >= Real(0.25)) {
        return i0_closed(rho, 0, kappa);
    }
    const Real tiny = std::numeric_limits<Real>::epsilon() / 8;
    Real sum = 0;
    if (half) {
        // sum_m (-1)^m (m+1) rho^{m+3} / (m+3)
        Real power = rho * rho * rho;
        for (int m = 0; m < 200; ++m) {
            const Real term = Real(m + 1) * power / Real(m + 3);
            sum += (m % 2 == 0) ? term : -term;
            if (term < tiny * sum) {
                break;
            }
            power *= rho;
        }
        return sum;
    }
    // rho - atan(rho) = sum_{k>=1} (-1)^{k+1} rho^{2k+1} / (2k+1)
    const Real r2 = rho * rho;
    Real power = rho * r2;
    for (int k = 1; k < 200; ++k) {
        const Real term = power / Real(2 * k + 1);
        sum += (k % 2 == 1) ? term : -term;
        if (term < tiny * sum) {
            break;
        }
        power *= r2;
    }
    return sum;
}

// V = (lambda + I0) / f^2.
template <std::floating_point Real>
Real v_general(Real rho, int l, Real kappa, Real lambda)
{
    const Real f = radial_factor_f(rho, l, kappa);
    return (lambda + i0_stable(rho, l, kappa)) / (f * f);
}

} // namespace dosusy::kernels
