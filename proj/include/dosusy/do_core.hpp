#pragma once

// Demkov-Ostrovsky model on the half line in the scaled radius rho = r/R,
// energy scale E0 = 1.

namespace dosusy {

/// Smallest radius any half-line evaluator accepts.
inline constexpr double kRhoMin = 1e-12;

/// Validated parameter bundle (kappa, l, N, lambda, R). Immutable.
///
/// N is the total quantum number; the Gegenbauer degree N - 1 - l/kappa must
/// be a non-negative integer. The nodeless sector (n_r = 0) is the one with
/// degree zero, i.e. N = 1 + l/kappa.
class DoParams {
public:
    /// Throws DomainError on kappa <= 0, l < 0, N < 1, lambda <= 0, R <= 0 or a
    /// non-integral / negative Gegenbauer degree.
    DoParams(double kappa, int l, int N, double lambda = 1.0, double R = 1.0);

    /// Nodeless-sector parameters: N = 1 + l/kappa (must be integral).
    static DoParams nodeless(double kappa, int l, double lambda = 1.0, double R = 1.0);

    double kappa() const noexcept { return kappa_; }
    int l() const noexcept { return l_; }
    int N() const noexcept { return N_; }
    double lambda() const noexcept { return lambda_; }
    double R() const noexcept { return R_; }

    /// Principal number n = N - (1/kappa - 1) l.
    int principal() const noexcept { return principal_; }
    /// Radial number n_r = n - l - 1.
    int radial() const noexcept { return principal_ - l_ - 1; }
    /// Gegenbauer degree N - 1 - l/kappa.
    int gegenbauer_degree() const noexcept { return degree_; }
    bool is_nodeless() const noexcept { return degree_ == 0; }

    /// Same (kappa, l, N, R) with another family parameter.
    DoParams with_lambda(double lambda) const { return {kappa_, l_, N_, lambda, R_}; }

private:
    double kappa_;
    int l_;
    int N_;
    double lambda_;
    double R_;
    int principal_;
    int degree_;
};

/// Quantized coupling w_{N,kappa} = (2 kappa)^2 [N + 1/(2kappa)] [N + 1/(2kappa) - 1].
double coupling_w(int N, double kappa);

/// Coupling of the nodeless state with orbital number l:
/// (2l+1)(2l+1+2kappa), equal to coupling_w(1 + l/kappa, kappa).
double nodeless_coupling(int l, double kappa);

/// V_kappa(rho) = -w / (rho^2 [rho^-kappa + rho^kappa]^2).
double potential_v(double rho, double kappa, double w);

/// xi = (1 - rho^2kappa) / (1 + rho^2kappa), the Gegenbauer argument.
double xi_of_rho(double rho, double kappa);

/// Unnormalized zero-energy radial state R_Nl(rho).
double radial_wavefunction(double rho, const DoParams& params);

/// Nodeless radial factor f = rho^{l+1} (1 + rho^2kappa)^{-(2l+1)/2kappa}.
double radial_factor_f(double rho, int l, double kappa);

/// Analytic df/drho.
double radial_factor_f_prime(double rho, int l, double kappa);

/// Particular superpotential W = l/rho - (2l+1)/(rho (1 + rho^2kappa)) = -(ln f)'.
double superpotential_w(double rho, int l, double kappa);

/// Analytic dW/drho.
double superpotential_w_prime(double rho, int l, double kappa);

/// Bosonic partner U^- = l(l+1)/rho^2 + V_kappa(rho; nodeless coupling).
/// Equal to W^2 - W' (closed form used, not the derivative route).
double u_minus(double rho, int l, double kappa);

/// Fermionic partner U^+ = W' + W^2.
double u_plus(double rho, int l, double kappa);

/// Zero-energy degeneracy N^2.
long long degeneracy(int N);

} // namespace dosusy
