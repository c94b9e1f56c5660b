#include "dosusy/do_core.hpp"

#include "dosusy/errors.hpp"
#include "dosusy/kernels.hpp"
#include "dosusy/specfun.hpp"

#include <cmath>
#include <string>

namespace dosusy {

namespace {

constexpr double kIntegralTol = 1e-9;

void require_rho(double rho, const char* who)
{
    if (!(rho >= kRhoMin) || !std::isfinite(rho)) {
        throw DomainError(std::string(who) + ": rho must be >= 1e-12, got " + std::to_string(rho));
    }
}

void require_kappa(double kappa, const char* who)
{
    if (!(kappa > 0.0) || !std::isfinite(kappa)) {
        throw DomainError(std::string(who) + ": kappa must be positive");
    }
}

void require_l(int l, const char* who)
{
    if (l < 0) {
        throw DomainError(std::string(who) + ": l must be non-negative");
    }
}

// Rounds x to an integer if it is one to within kIntegralTol, else throws.
int as_integer(double x, const std::string& what)
{
    const double r = std::round(x);
    if (std::abs(x - r) > kIntegralTol) {
        throw DomainError(what + " must be integral, got " + std::to_string(x));
    }
    return static_cast<int>(r);
}

} // namespace

DoParams::DoParams(double kappa, int l, int N, double lambda, double R)
    : kappa_(kappa), l_(l), N_(N), lambda_(lambda), R_(R), principal_(0), degree_(0)
{
    require_kappa(kappa, "DoParams");
    require_l(l, "DoParams");
    if (N < 1) {
        throw DomainError("DoParams: N must be >= 1");
    }
    if (!(lambda > 0.0)) {
        throw DomainError("DoParams: lambda must be positive (strictly isospectral branch)");
    }
    if (!(R > 0.0)) {
        throw DomainError("DoParams: R must be positive");
    }
    degree_ = as_integer(N - 1.0 - l / kappa, "DoParams: Gegenbauer degree N-1-l/kappa");
    if (degree_ < 0) {
        throw DomainError("DoParams: Gegenbauer degree N-1-l/kappa is negative");
    }
    principal_ = as_integer(N - (1.0 / kappa - 1.0) * l, "DoParams: principal number n");
}

DoParams DoParams::nodeless(double kappa, int l, double lambda, double R)
{
    require_kappa(kappa, "DoParams::nodeless");
    require_l(l, "DoParams::nodeless");
    const int N = as_integer(1.0 + l / kappa, "DoParams::nodeless: N = 1 + l/kappa");
    return {kappa, l, N, lambda, R};
}

double coupling_w(int N, double kappa)
{
    if (N < 1) {
        throw DomainError("coupling_w: N must be >= 1");
    }
    require_kappa(kappa, "coupling_w");
    const double shift = N + 1.0 / (2.0 * kappa);
    return 4.0 * kappa * kappa * shift * (shift - 1.0);
}

double nodeless_coupling(int l, double kappa)
{
    require_l(l, "nodeless_coupling");
    require_kappa(kappa, "nodeless_coupling");
    return (2.0 * l + 1.0) * (2.0 * l + 1.0 + 2.0 * kappa);
}

double potential_v(double rho, double kappa, double w)
{
    require_rho(rho, "potential_v");
    require_kappa(kappa, "potential_v");
    // rho^2 (rho^-k + rho^k)^2 = rho^{2-2k} (1 + rho^2k)^2
    const double s = std::pow(rho, 2.0 * kappa);
    const double denom = std::pow(rho, 2.0 - 2.0 * kappa) * (1.0 + s) * (1.0 + s);
    return -w / denom;
}

double xi_of_rho(double rho, double kappa)
{
    require_rho(rho, "xi_of_rho");
    require_kappa(kappa, "xi_of_rho");
    const double s = std::pow(rho, 2.0 * kappa);
    return (1.0 - s) / (1.0 + s);
}

double radial_wavefunction(double rho, const DoParams& params)
{
    require_rho(rho, "radial_wavefunction");
    const double kappa = params.kappa();
    const int l = params.l();
    const double exponent = (2.0 * l + 1.0) / (2.0 * kappa);
    const double envelope = std::pow(rho, l) * std::pow(1.0 + std::pow(rho, 2.0 * kappa), -exponent);
    const double c = gegenbauer({params.gegenbauer_degree(), exponent + 0.5, xi_of_rho(rho, kappa)});
    return envelope * c;
}

double radial_factor_f(double rho, int l, double kappa)
{
    require_rho(rho, "radial_factor_f");
    require_l(l, "radial_factor_f");
    require_kappa(kappa, "radial_factor_f");
    return kernels::radial_factor_f(rho, l, kappa);
}

double radial_factor_f_prime(double rho, int l, double kappa)
{
    return -superpotential_w(rho, l, kappa) * radial_factor_f(rho, l, kappa);
}

double superpotential_w(double rho, int l, double kappa)
{
    require_rho(rho, "superpotential_w");
    require_l(l, "superpotential_w");
    require_kappa(kappa, "superpotential_w");
    return kernels::superpotential_w(rho, l, kappa);
}

double superpotential_w_prime(double rho, int l, double kappa)
{
    require_rho(rho, "superpotential_w_prime");
    require_l(l, "superpotential_w_prime");
    require_kappa(kappa, "superpotential_w_prime");
    return kernels::superpotential_w_prime(rho, l, kappa);
}

double u_minus(double rho, int l, double kappa)
{
    require_rho(rho, "u_minus");
    return l * (l + 1.0) / (rho * rho) + potential_v(rho, kappa, nodeless_coupling(l, kappa));
}

double u_plus(double rho, int l, double kappa)
{
    const double w = superpotential_w(rho, l, kappa);
    return superpotential_w_prime(rho, l, kappa) + w * w;
}

long long degeneracy(int N)
{
    if (N < 1) {
        throw DomainError("degeneracy: N must be >= 1");
    }
    return static_cast<long long>(N) * N;
}

} // namespace dosusy
